// Homodyned-K envelope sample generation (i.i.d. and lag-correlated).
#pragma once

#include <cstdint>
#include <vector>

#include "hkqus/params.hpp"

namespace hk {

// A 1-D run of envelope amplitudes. rho records the generator correlation
// knob used to produce the run (0 when unknown or external data).
struct EnvelopeSamples {
  std::vector<double> values;
  double rho = 0.0;

  std::size_t size() const { return values.size(); }
};

// n independent draws a_i = sqrt((sqrt(2k) + X sqrt(Z/alpha))^2 + (Y sqrt(Z/alpha))^2),
// X, Y standard normal, Z ~ Gamma(alpha, 1). Deterministic for a fixed seed.
EnvelopeSamples sample_iid(const HKParams& p, std::size_t n, std::uint64_t seed);

// Same construction but X and Y follow the AR(1) recurrence
// X_i = rho X_{i-1} + sqrt(1-rho^2) N(0,1); Z is drawn fresh for every sample.
// rho = 0 reproduces sample_iid bit-exactly under the same seed.
EnvelopeSamples sample_correlated(const HKParams& p, std::size_t n, double rho,
                                  std::uint64_t seed);

// Pearson correlation between values[0..n-lag) and values[lag..n).
double lag_correlation(const EnvelopeSamples& s, std::size_t lag);

}  // namespace hk
