// Homodyned-K density by quadrature of the oscillatory Bessel integral.
#pragma once

#include "hkqus/params.hpp"

namespace hk {

struct PdfOptions {
  double abs_tol = 1e-7;
  int max_intervals = 600000;
};

struct PdfResult {
  double value = 0.0;
  double err_estimate = 0.0;
  int intervals = 0;
};

// P_HK(a | eps, sigma, alpha) = a * int_0^inf u J0(u eps) J0(u a) gamma(u) du
// with the kernel gamma(u) = (1 + u^2 sigma^2 / (2 alpha))^{-alpha}. The
// kernel scale matches the sample generator (diffuse power 2 sigma^2), so the
// density, the analytic moments and the samplers describe the same
// distribution. The Bessel-zero-paced Gauss-Kronrod panels cover the head of
// the integral; the oscillatory tail is finished analytically.
//
// Requires alpha > 0.5 (the tail decays like u^{-2 alpha}); the supported
// parameter box starts at alpha = 10^-0.3 ~ 0.501.
PdfResult hk_pdf_detailed(double a, const NativeHKParams& p, const PdfOptions& opt = {});
double hk_pdf(double a, const NativeHKParams& p, const PdfOptions& opt = {});

}  // namespace hk
