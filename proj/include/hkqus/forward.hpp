// Analytic forward model: theoretical envelope moments via the confluent
// hypergeometric integral, and the eight theoretical features.
#pragma once

#include "hkqus/features.hpp"
#include "hkqus/params.hpp"

namespace hk {

// Settings of the fixed log-spaced quadrature used for E[A^v].
struct QuadratureConfig {
  int nodes = 4000;
  // Lower grid end; automatically lowered for alpha < 1 so that the omitted
  // mass of the x^{alpha-1} head stays below ~1e-12 relative.
  double x_min_cap = 1e-8;
  // Upper grid end is alpha + tail_sigmas*sqrt(alpha) + tail_pad.
  double tail_sigmas = 60.0;
  double tail_pad = 60.0;
  // Central-difference step on the intensity exponent for E[log I] terms.
  double log_moment_step = 1e-3;
};

// E[A^v] for the HK distribution in native parameters.
// Accepts v in (-0.1, 4], the small negative values being required by the
// finite-difference log-moment path.
double theoretical_moment(double v, const NativeHKParams& p,
                          const QuadratureConfig& cfg = {});

// The eight theoretical features. R/S/K come from amplitude moments at
// {v, 2v, 3v, 4v}; X and U from derivatives of t -> E[I^t] by central
// differences at t = 0 and t = 1.
FeatureVector theoretical_features(const NativeHKParams& p,
                                   const QuadratureConfig& cfg = {});
FeatureVector theoretical_features(const HKParams& p, const QuadratureConfig& cfg = {});

// Shared-grid evaluator; amortizes the x grid, the gamma-density base and the
// 1F1 arguments across the thirteen moments one feature vector needs.
class MomentEvaluator {
 public:
  MomentEvaluator(const NativeHKParams& p, const QuadratureConfig& cfg);

  double moment(double v) const;
  FeatureVector features() const;

 private:
  double moment_scaled(double v, double sigma) const;

  NativeHKParams p_;
  QuadratureConfig cfg_;
  std::vector<double> log_x_;     // node positions, log scale
  std::vector<double> wbase_;     // trapezoid weight * x^{alpha-1} e^{-x} / Gamma(alpha)
  std::vector<double> hyp_arg_;   // -alpha eps^2 / (2 sigma^2 x)
  bool coherent_ = false;         // eps > 0
};

}  // namespace hk
