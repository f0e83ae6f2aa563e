#include "hkqus/sampler.hpp"

#include <cmath>

#include "hkqus/rng.hpp"

namespace hk {

EnvelopeSamples sample_correlated(const HKParams& p, std::size_t n, double rho,
                                  std::uint64_t seed) {
  if (n == 0) throw invalid_input("sample_correlated: n must be >= 1");
  if (!(rho >= 0.0 && rho < 1.0)) throw invalid_input("sample_correlated: rho must be in [0, 1)");
  const NativeHKParams q = to_native(p);

  Rng rng(seed);
  const double innov = std::sqrt(1.0 - rho * rho);
  EnvelopeSamples out;
  out.rho = rho;
  out.values.resize(n);

  // Per-sample draw order is fixed: Z, then the X and Y innovations. Keeping
  // the order independent of rho makes rho = 0 coincide with the i.i.d. path.
  double x = 0.0, y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double z = rng.gamma(q.alpha);
    const double nx = rng.normal();
    const double ny = rng.normal();
    if (i == 0) {
      x = nx;
      y = ny;
    } else {
      x = rho * x + innov * nx;
      y = rho * y + innov * ny;
    }
    const double s = q.sigma * std::sqrt(z / q.alpha);
    const double re = q.epsilon + x * s;
    const double im = y * s;
    out.values[i] = std::sqrt(re * re + im * im);
  }
  return out;
}

EnvelopeSamples sample_iid(const HKParams& p, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw invalid_input("sample_iid: n must be >= 1");
  return sample_correlated(p, n, 0.0, seed);
}

double lag_correlation(const EnvelopeSamples& s, std::size_t lag) {
  const std::size_t n = s.size();
  if (lag >= n) throw invalid_input("lag_correlation: lag must be < sample count");
  const std::size_t m = n - lag;

  double mean_a = 0.0, mean_b = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    mean_a += s.values[i];
    mean_b += s.values[i + lag];
  }
  mean_a /= static_cast<double>(m);
  mean_b /= static_cast<double>(m);

  double saa = 0.0, sbb = 0.0, sab = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double da = s.values[i] - mean_a;
    const double db = s.values[i + lag] - mean_b;
    saa += da * da;
    sbb += db * db;
    sab += da * db;
  }
  if (saa <= 0.0 || sbb <= 0.0)
    throw invalid_input("lag_correlation: series is constant");
  return sab / std::sqrt(saa * sbb);
}

}  // namespace hk
