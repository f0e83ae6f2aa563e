// Homodyned-K parameter types and the fixed (log10 alpha, k) -> (eps, sigma, alpha) mapping.
#pragma once

#include <cmath>
#include <string>

#include "hkqus/errors.hpp"

namespace hk {

// Supported parameter box, used by samplers, the forward model and estimators.
struct ParamBox {
  static constexpr double log10_alpha_min = -0.3;
  static constexpr double log10_alpha_max = 1.3;
  static constexpr double k_min = 0.0;
  static constexpr double k_max = 1.25;
};

// Target parameter pair: clustering exponent log10(alpha) and coherent-to-diffuse ratio k.
struct HKParams {
  double log10_alpha = 0.0;
  double k = 0.0;

  double alpha() const { return std::pow(10.0, log10_alpha); }

  bool in_box(double slack = 0.0) const {
    return log10_alpha >= ParamBox::log10_alpha_min - slack &&
           log10_alpha <= ParamBox::log10_alpha_max + slack &&
           k >= ParamBox::k_min - slack && k <= ParamBox::k_max + slack;
  }
};

// Native distribution parameters: coherent amplitude eps, diffuse scale sigma, clustering alpha.
// The generator convention is sigma = 1, eps = sqrt(2 k); diffuse power is 2 sigma^2.
struct NativeHKParams {
  double epsilon = 0.0;
  double sigma = 1.0;
  double alpha = 1.0;

  void validate() const {
    if (!(epsilon >= 0.0) || !std::isfinite(epsilon))
      throw invalid_input("NativeHKParams: epsilon must be finite and >= 0");
    if (!(sigma > 0.0) || !std::isfinite(sigma))
      throw invalid_input("NativeHKParams: sigma must be finite and > 0");
    if (!(alpha > 0.0) || !std::isfinite(alpha))
      throw invalid_input("NativeHKParams: alpha must be finite and > 0");
  }
};

inline NativeHKParams to_native(const HKParams& p) {
  if (!std::isfinite(p.log10_alpha) || !std::isfinite(p.k) || p.k < 0.0)
    throw invalid_input("HKParams: log10_alpha must be finite, k must be finite and >= 0");
  return NativeHKParams{std::sqrt(2.0 * p.k), 1.0, std::pow(10.0, p.log10_alpha)};
}

inline HKParams clamp_to_box(HKParams p) {
  p.log10_alpha = std::fmin(std::fmax(p.log10_alpha, ParamBox::log10_alpha_min),
                            ParamBox::log10_alpha_max);
  p.k = std::fmin(std::fmax(p.k, ParamBox::k_min), ParamBox::k_max);
  return p;
}

}  // namespace hk
