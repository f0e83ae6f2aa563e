// Counter-based random number generation: Philox4x32-10 core with Box-Muller
// normals and Marsaglia-Tsang gamma variates. All draws are reproducible from
// (seed, draw order); parallel work derives per-task seeds with derive_seed().
#pragma once

#include <array>
#include <cmath>
#include <cstdint>

#include "hkqus/errors.hpp"

namespace hk {

// Version tag written into sample fixture sidecars. Bump when the stream
// layout of any sampler changes.
inline constexpr const char* kGeneratorVersion = "philox4x32-10/bm-gamma/1";

// Philox4x32-10 block cipher (Salmon et al.), 128-bit counter, 64-bit key.
class Philox4x32 {
 public:
  explicit Philox4x32(std::uint64_t seed) : key_{static_cast<std::uint32_t>(seed),
                                                 static_cast<std::uint32_t>(seed >> 32)} {}

  std::uint32_t next_u32() {
    if (buf_pos_ == 4) {
      block();
      buf_pos_ = 0;
    }
    return buf_[buf_pos_++];
  }

  std::uint64_t next_u64() {
    const std::uint64_t lo = next_u32();
    const std::uint64_t hi = next_u32();
    return (hi << 32) | lo;
  }

 private:
  static void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
    const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
  }

  void block() {
    std::uint32_t c0 = ctr_[0], c1 = ctr_[1], c2 = ctr_[2], c3 = ctr_[3];
    std::uint32_t k0 = key_[0], k1 = key_[1];
    for (int round = 0; round < 10; ++round) {
      std::uint32_t hi0, lo0, hi1, lo1;
      mulhilo(0xD2511F53u, c0, hi0, lo0);
      mulhilo(0xCD9E8D57u, c2, hi1, lo1);
      const std::uint32_t n0 = hi1 ^ c1 ^ k0;
      const std::uint32_t n1 = lo1;
      const std::uint32_t n2 = hi0 ^ c3 ^ k1;
      const std::uint32_t n3 = lo0;
      c0 = n0; c1 = n1; c2 = n2; c3 = n3;
      k0 += 0x9E3779B9u;
      k1 += 0xBB67AE85u;
    }
    buf_ = {c0, c1, c2, c3};
    // 128-bit counter increment
    if (++ctr_[0] == 0 && ++ctr_[1] == 0 && ++ctr_[2] == 0) ++ctr_[3];
  }

  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 4> ctr_{0, 0, 0, 0};
  std::array<std::uint32_t, 4> buf_{};
  int buf_pos_ = 4;
};

// splitmix64 mixing, used to derive independent child seeds.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return mix_seed(mix_seed(seed) ^ mix_seed(stream + 0x632BE59BD9B4E019ull));
}

// Draw-level interface on top of the Philox core.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform on [0, 1).
  double uniform() {
    return static_cast<double>(gen_.next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform on (0, 1); never returns 0, safe under log().
  double uniform_pos() {
    return (static_cast<double>(gen_.next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller; pairs are cached.
  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    const double r = std::sqrt(-2.0 * std::log(uniform_pos()));
    const double t = 2.0 * M_PI * uniform();
    cached_ = r * std::sin(t);
    have_cached_ = true;
    return r * std::cos(t);
  }

  // Gamma(shape, scale=1), Marsaglia-Tsang squeeze with the shape<1 boost.
  double gamma(double shape) {
    if (!(shape > 0.0)) throw invalid_input("Rng::gamma: shape must be > 0");
    if (shape < 1.0) {
      const double g = gamma(shape + 1.0);
      return g * std::pow(uniform_pos(), 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / (3.0 * std::sqrt(d));
    for (;;) {
      const double x = normal();
      const double t = 1.0 + c * x;
      if (t <= 0.0) continue;
      const double v = t * t * t;
      const double u = uniform_pos();
      const double x2 = x * x;
      if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
      if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
    }
  }

 private:
  Philox4x32 gen_;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

}  // namespace hk
