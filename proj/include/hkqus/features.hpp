// The eight envelope-statistics features and feature normalization.
#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "hkqus/sampler.hpp"

namespace hk {

// Fractional-power exponents of the SNR / skewness / kurtosis statistics.
inline constexpr double kFeatureV1 = 0.72;
inline constexpr double kFeatureV2 = 0.88;
inline constexpr std::size_t kNumFeatures = 8;

inline constexpr std::array<std::string_view, kNumFeatures> kFeatureNames = {
    "r072", "r088", "s072", "s088", "k072", "k088", "x", "u"};

// Canonical order: [R^0.72, R^0.88, S^0.72, S^0.88, K^0.72, K^0.88, X, U].
struct FeatureVector {
  double r072 = 0.0, r088 = 0.0;
  double s072 = 0.0, s088 = 0.0;
  double k072 = 0.0, k088 = 0.0;
  double x_stat = 0.0, u_stat = 0.0;

  double& operator[](std::size_t i) { return (&r072)[i]; }
  const double& operator[](std::size_t i) const { return (&r072)[i]; }

  std::array<double, kNumFeatures> to_array() const {
    return {r072, r088, s072, s088, k072, k088, x_stat, u_stat};
  }
  static FeatureVector from_array(const std::array<double, kNumFeatures>& a) {
    return {a[0], a[1], a[2], a[3], a[4], a[5], a[6], a[7]};
  }
};

// Raw amplitude moments m_j = E[A^{j v}] for one exponent v.
struct AmplitudeMoments {
  double m1 = 0.0, m2 = 0.0, m3 = 0.0, m4 = 0.0;
};

// SNR, skewness and kurtosis from raw moments, population convention.
// Shared by the sample and the analytic pathways.
struct RskTriple {
  double snr, skewness, kurtosis;
};
RskTriple rsk_from_moments(const AmplitudeMoments& m);

// Plug-in estimates of the eight statistics over a sample run.
// Requires at least 16 strictly positive values.
FeatureVector compute_features(const EnvelopeSamples& s);
FeatureVector compute_features(std::span<const double> values);

// Per-coordinate z-scoring parameters.
struct FeatureNorm {
  std::array<double, kNumFeatures> mean{};
  std::array<double, kNumFeatures> std{};
};

// Population mean/std per coordinate over a batch; throws on a degenerate
// (zero-spread) coordinate or a batch smaller than 2.
FeatureNorm fit_norm(const std::vector<FeatureVector>& batch);

FeatureVector apply_norm(const FeatureVector& f, const FeatureNorm& n);
FeatureVector invert_norm(const FeatureVector& f, const FeatureNorm& n);

}  // namespace hk
