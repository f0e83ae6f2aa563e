// Special functions used by the density and the analytic forward model.
#pragma once

namespace hk {

// Bessel function of the first kind, order zero. Absolute error below 1e-13
// on |x| <= 50 (rational approximations in the style of Cephes).
double bessel_j0(double x);

// Bessel function of the first kind, order one.
double bessel_j1(double x);

// Confluent hypergeometric function 1F1(-v/2; 1; z) for z <= 0.
// Valid for v in (-0.1, 4]; relative accuracy ~1e-10 over z in [-1e9, 0].
// Ascending (Kummer-transformed) series for |z| <= 40, large-|z| asymptotic
// expansion beyond.
double hyp1f1_half(double v, double z);

}  // namespace hk
