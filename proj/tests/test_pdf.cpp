#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "hkqus/errors.hpp"
#include "hkqus/pdf.hpp"
#include "hkqus/sampler.hpp"

namespace {

// Scaled modified Bessel I0(y) e^{-y}, oracle-side helper.
double i0_scaled(double y) {
  if (y < 7.0) {
    double term = 1.0, sum = 1.0;
    const double q = 0.25 * y * y;
    for (int j = 1; j < 60; ++j) {
      term *= q / (static_cast<double>(j) * j);
      sum += term;
      if (term < 1e-18 * sum) break;
    }
    return sum * std::exp(-y);
  }
  // asymptotic series
  double sum = 1.0, term = 1.0;
  for (int j = 1; j < 12; ++j) {
    term *= (2.0 * j - 1.0) * (2.0 * j - 1.0) / (8.0 * j * y);
    sum += term;
  }
  return sum / std::sqrt(2.0 * M_PI * y);
}

// Independent oracle: the HK density as a Gamma mixture of Rician densities,
// integrated on a fine log-spaced grid. Entirely separate from the Bessel
// integral pathway in the library.
double mixture_pdf(double a, const hk::NativeHKParams& p, int nodes = 20000) {
  const double alpha = p.alpha;
  const double x_min = std::min(1e-10, std::pow(1e-14, 1.0 / alpha));
  const double x_max = alpha + 80.0 * std::sqrt(alpha) + 80.0;
  const double l0 = std::log(x_min), l1 = std::log(x_max);
  const double lg = std::lgamma(alpha);
  double sum = 0.0;
  double x_prev = x_min;
  for (int i = 0; i < nodes; ++i) {
    const double lx = l0 + (l1 - l0) * i / (nodes - 1.0);
    const double x = std::exp(lx);
    const double x_next = (i + 1 < nodes) ? std::exp(lx + (l1 - l0) / (nodes - 1.0)) : x;
    const double w = 0.5 * ((x - x_prev) + (x_next - x));
    x_prev = x;
    const double s2 = p.sigma * p.sigma * x / alpha;
    const double y = a * p.epsilon / s2;
    const double rice = (a / s2) * std::exp(-(a - p.epsilon) * (a - p.epsilon) / (2.0 * s2)) *
                        i0_scaled(y);
    sum += w * rice * std::exp((alpha - 1.0) * lx - x - lg);
  }
  return sum;
}

}  // namespace

TEST_CASE("hk_pdf input validation") {
  const hk::NativeHKParams p{0.5, 1.0, 2.0};
  CHECK_THROWS_AS(hk::hk_pdf(-1.0, p), hk::invalid_input);
  CHECK_THROWS_AS(hk::hk_pdf(1.0, hk::NativeHKParams{0.5, 1.0, 0.4}), hk::numeric_error);
  CHECK(hk::hk_pdf(0.0, p) == 0.0);
}

TEST_CASE("hk_pdf integrates to one") {
  struct Case {
    double eps, alpha;
  };
  const Case cases[] = {{0.0, 0.7}, {0.8, 2.0}, {1.5811388300841898, 20.0}, {0.6325, 0.55}};
  for (const auto& c : cases) {
    const hk::NativeHKParams p{c.eps, 1.0, c.alpha};
    // trapezoid over a dense a-grid with refinement near a = eps
    std::vector<double> grid;
    for (int i = 0; i <= 1500; ++i) grid.push_back(1e-4 + (12.0 - 1e-4) * i / 1500.0);
    if (c.eps > 0.0)
      for (int i = 1; i <= 60; ++i) {
        grid.push_back(c.eps + 0.08 * i / 60.0 * 0.5);
        grid.push_back(std::max(1e-4, c.eps - 0.08 * i / 60.0 * 0.5));
      }
    std::sort(grid.begin(), grid.end());
    double mass = 0.0;
    double prev_a = 0.0, prev_f = 0.0;
    for (double a : grid) {
      const double f = hk::hk_pdf(a, p);
      mass += 0.5 * (f + prev_f) * (a - prev_a);
      prev_a = a;
      prev_f = f;
    }
    CHECK_MESSAGE(std::fabs(mass - 1.0) < 1e-3, "eps=", c.eps, " alpha=", c.alpha,
                  " mass=", mass);
  }
}

TEST_CASE("fully developed speckle limit approaches Rayleigh") {
  // eps = 0, alpha = 50: close to Rayleigh with unit per-component variance
  const hk::NativeHKParams p{0.0, 1.0, 50.0};
  const double at_mode = hk::hk_pdf(1.0, p);
  const double rayleigh_mode = std::exp(-0.5);
  CHECK(std::fabs(at_mode / rayleigh_mode - 1.0) < 1e-2);
  for (double a : {0.4, 0.9, 1.7, 2.6}) {
    const double want = a * std::exp(-0.5 * a * a);
    CHECK(std::fabs(hk::hk_pdf(a, p) / want - 1.0) < 0.05);
  }
}

TEST_CASE("K-distribution special case alpha = 1 has a closed form") {
  // eps = 0, alpha = 1, sigma = 1: P(a) = 2 a K0(a sqrt(2))
  const hk::NativeHKParams p{0.0, 1.0, 1.0};
  for (double a : {0.3, 0.8, 1.0, 2.5, 4.0}) {
    const double want = 2.0 * a * std::cyl_bessel_k(0.0, a * std::sqrt(2.0));
    const double got = hk::hk_pdf(a, p);
    CHECK_MESSAGE(std::fabs(got / want - 1.0) < 1e-3, "a=", a, " got=", got, " want=", want);
  }
}

TEST_CASE("hk_pdf agrees with the Gamma-Rician mixture oracle") {
  struct Case {
    double la, k;
  };
  const Case cases[] = {{0.26, 0.77}, {-0.26, 0.2}, {0.9, 1.1}, {0.5, 0.0}};
  for (const auto& c : cases) {
    const auto p = hk::to_native(hk::HKParams{c.la, c.k});
    for (double a : {0.35, 0.8, 1.3, 1.9, 3.0}) {
      const double want = mixture_pdf(a, p);
      if (want < 1e-4) continue;
      const double got = hk::hk_pdf(a, p);
      CHECK_MESSAGE(std::fabs(got / want - 1.0) < 2e-3, "la=", c.la, " k=", c.k, " a=", a,
                    " got=", got, " want=", want);
    }
  }
}

TEST_CASE("pdf evaluation near the coherent amplitude") {
  // a ~ eps exercises the slow-beat tail handling
  const auto p = hk::to_native(hk::HKParams{-0.29, 0.5});  // alpha ~ 0.513
  const double eps = p.epsilon;
  for (double a : {eps - 0.01, eps - 1e-5, eps, eps + 1e-5, eps + 0.01}) {
    const double got = hk::hk_pdf(a, p);
    const double want = mixture_pdf(a, p, 60000);
    CHECK_MESSAGE(std::fabs(got / want - 1.0) < 5e-3, "a=", a, " got=", got, " want=", want);
  }
}

TEST_CASE("sampler and pdf describe the same distribution (KS)") {
  // five parameter points spread over the box
  struct Case {
    double la, k;
  };
  const Case cases[] = {{-0.2, 0.15}, {0.1, 0.9}, {0.45, 0.45}, {0.8, 1.2}, {1.2, 0.05}};
  int idx = 0;
  for (const auto& c : cases) {
    const hk::HKParams hp{c.la, c.k};
    const auto p = hk::to_native(hp);
    const std::size_t n = 10000;
    auto samples = hk::sample_iid(hp, n, 515 + idx++).values;
    std::sort(samples.begin(), samples.end());

    // CDF by cumulative trapezoid of the pdf over a dense grid
    const double hi = samples.back() * 1.05;
    std::vector<double> grid;
    for (int i = 0; i <= 1200; ++i) grid.push_back(1e-4 + (hi - 1e-4) * i / 1200.0);
    if (p.epsilon > 0.0)
      for (int i = 1; i <= 40; ++i) {
        grid.push_back(p.epsilon * (1.0 + 0.002 * i));
        grid.push_back(std::max(1e-4, p.epsilon * (1.0 - 0.002 * i)));
      }
    std::sort(grid.begin(), grid.end());
    std::vector<double> cdf(grid.size(), 0.0);
    double prev_a = 0.0, prev_f = 0.0, acc = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double f = hk::hk_pdf(grid[i], p);
      acc += 0.5 * (f + prev_f) * (grid[i] - prev_a);
      cdf[i] = acc;
      prev_a = grid[i];
      prev_f = f;
    }

    auto cdf_at = [&](double a) {
      auto it = std::lower_bound(grid.begin(), grid.end(), a);
      if (it == grid.begin()) return 0.0;
      if (it == grid.end()) return cdf.back();
      const std::size_t j = static_cast<std::size_t>(it - grid.begin());
      const double t = (a - grid[j - 1]) / (grid[j] - grid[j - 1]);
      return cdf[j - 1] + t * (cdf[j] - cdf[j - 1]);
    };

    double d = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double F = cdf_at(samples[i]);
      d = std::max(d, std::fabs(F - static_cast<double>(i) / n));
      d = std::max(d, std::fabs(F - static_cast<double>(i + 1) / n));
    }
    // 1% critical value for the one-sample KS statistic
    const double crit = 1.628 / std::sqrt(static_cast<double>(n));
    CHECK_MESSAGE(d < crit, "la=", c.la, " k=", c.k, " D=", d, " crit=", crit);
  }
}
