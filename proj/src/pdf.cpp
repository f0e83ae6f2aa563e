#include "hkqus/pdf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hkqus/errors.hpp"
#include "hkqus/special.hpp"

namespace hk {
namespace {

// 15-point Gauss-Kronrod pair on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Kernel {
  double c = 1.0;  // sigma^2 / (2 alpha)
  double alpha = 1.0;
  double operator()(double u) const { return std::pow(1.0 + c * u * u, -alpha); }
  double deriv(double u) const {
    return -2.0 * alpha * c * u * std::pow(1.0 + c * u * u, -alpha - 1.0);
  }
};

template <typename F>
void gk15(const F& f, double lo, double hi, double& value, double& err) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  double resk = 0.0, resg = 0.0;
  for (int i = 0; i < 7; ++i) {
    const double x = half * kXgk[i];
    const double f1 = f(mid - x);
    const double f2 = f(mid + x);
    resk += kWgk[i] * (f1 + f2);
    if (i % 2 == 1) resg += kWg[i / 2] * (f1 + f2);
  }
  const double fmid = f(mid);
  resk += kWgk[7] * fmid;
  resg += kWg[3] * fmid;
  value = resk * half;
  err = std::fabs((resk - resg) * half);
}

// int_w^inf (1 + c u^2)^{-alpha} du by the large-argument binomial series;
// requires c w^2 >> alpha (guaranteed by the split-point choice).
double kernel_power_tail(const Kernel& k, double w, double& err) {
  const double x2 = k.c * w * w;
  double sum = 0.0, coef = 1.0, last = 0.0;
  for (int m = 0; m <= 12; ++m) {
    last = coef / ((2.0 * k.alpha + 2.0 * m - 1.0) * std::pow(x2, k.alpha + m));
    sum += last;
    coef *= -(k.alpha + m) / (m + 1.0);
  }
  err = std::fabs(w * last);
  return w * sum;
}

struct TailAmplitude {
  virtual ~TailAmplitude() = default;
  virtual double g(double u) const = 0;
  virtual double dg(double u) const = 0;
};

// int_W^inf g(u) cos(omega u + phase) du by three integrations by parts;
// caller guarantees omega * W is a few units and |dg|/omega << g.
double ibp_tail(const TailAmplitude& amp, double omega, double phase, double w, double& err) {
  const double s = std::sin(omega * w + phase);
  const double c = std::cos(omega * w + phase);
  const double g = amp.g(w);
  const double dg = amp.dg(w);
  const double delta = 1e-3 * w;
  const double ddg = (amp.dg(w + delta) - amp.dg(w - delta)) / (2.0 * delta);
  const double t1 = -g * s / omega;
  const double t2 = -dg * c / (omega * omega);
  const double t3 = ddg * s / (omega * omega * omega);
  err = std::fabs(t3) * 12.0 / (omega * w) + 1e-18;
  return t1 + t2 + t3;
}

// int_W^inf g(u) cos(omega u + phase) du for any omega >= 0: log-spaced smooth
// panels until omega u ~ 6, then integration by parts. flat_tail supplies the
// omega == 0 limit.
template <typename FlatTail>
double osc_tail(const TailAmplitude& amp, double omega, double phase, double w,
                const FlatTail& flat_tail, double& err) {
  err = 0.0;
  if (omega <= 0.0) {
    double e = 0.0;
    const double t = std::cos(phase) * flat_tail(w, e);
    err = e;
    return t;
  }
  double total = 0.0;
  if (omega * w < 6.0) {
    const double w2 = 6.0 / omega;
    const int panels = 32;
    const double ratio = std::pow(w2 / w, 1.0 / panels);
    double lo = w;
    for (int i = 0; i < panels; ++i) {
      const double hi = lo * ratio;
      double v, e;
      gk15([&](double u) { return amp.g(u) * std::cos(omega * u + phase); }, lo, hi, v, e);
      total += v;
      err += e;
      lo = hi;
    }
    w = w2;
  }
  double e2;
  total += ibp_tail(amp, omega, phase, w, e2);
  err += e2;
  return total;
}

// Hankel product split: J0(u eps) J0(u a) ~ (1/(pi u sqrt(a eps))) *
// [cos((a - eps) u) + sin((a + eps) u)]; amplitude u * gamma(u) * 1/u.
struct ProductAmp final : TailAmplitude {
  Kernel k;
  double scale = 1.0;
  double g(double u) const override { return scale * k(u); }
  double dg(double u) const override { return scale * k.deriv(u); }
};

// Single-oscillator split: the much slower Bessel factor stays in the
// amplitude, g(u) = gamma(u) J0(u slow) sqrt(2 u / (pi fast)).
struct ModulatedAmp final : TailAmplitude {
  Kernel k;
  double slow = 0.0;
  double fast = 1.0;
  double g(double u) const override {
    return k(u) * bessel_j0(u * slow) * std::sqrt(2.0 * u / (M_PI * fast));
  }
  double dg(double u) const override {
    const double root = std::sqrt(2.0 * u / (M_PI * fast));
    const double j0 = bessel_j0(u * slow);
    return (k.deriv(u) * j0 - k(u) * slow * bessel_j1(u * slow) + k(u) * j0 / (2.0 * u)) * root;
  }
};

}  // namespace

PdfResult hk_pdf_detailed(double a, const NativeHKParams& p, const PdfOptions& opt) {
  p.validate();
  if (!(a >= 0.0) || !std::isfinite(a)) throw invalid_input("hk_pdf: a must be finite and >= 0");
  if (p.alpha <= 0.5)
    throw numeric_error("hk_pdf: tail of the Bessel integral requires alpha > 0.5");
  if (a == 0.0) return {0.0, 0.0, 0};

  const double eps = p.epsilon;
  const Kernel kern{p.sigma * p.sigma / (2.0 * p.alpha), p.alpha};

  const double fast = std::max(a, eps);
  const double slow = std::min(a, eps);
  // Both Bessel factors go through their asymptotic form when the frequencies
  // are comparable; a much slower factor stays as a smooth modulation.
  const bool product_split = slow > 1e-8 && slow >= 0.15 * fast;

  const double kernel_floor = std::sqrt(30.0 * std::max(p.alpha, 1.0) / kern.c);
  double u_split = std::max({40.0 / fast, kernel_floor, 60.0});
  if (product_split) u_split = std::max(u_split, 40.0 / slow);
  if (u_split > 1.2e6) throw numeric_error("hk_pdf: oscillation too slow to truncate");

  const double panel = M_PI / (a + eps + 1.0);
  const int n_panels = static_cast<int>(std::ceil(u_split / panel));
  if (n_panels > opt.max_intervals) throw numeric_error("hk_pdf: panel budget exceeded");

  const auto integrand = [&](double u) {
    return u * bessel_j0(u * eps) * bessel_j0(u * a) * kern(u);
  };

  double head = 0.0, err = 0.0;
  double lo = 0.0;
  for (int i = 0; i < n_panels; ++i) {
    const double hi = std::min(lo + panel, u_split);
    double v, e;
    gk15(integrand, lo, hi, v, e);
    head += v;
    err += e;
    lo = hi;
  }

  double tail = 0.0;
  if (product_split) {
    ProductAmp amp;
    amp.k = kern;
    amp.scale = 1.0 / (M_PI * std::sqrt(a * eps));
    const auto flat = [&](double w, double& e) { return amp.scale * kernel_power_tail(kern, w, e); };
    double e1, e2;
    tail += osc_tail(amp, std::fabs(a - eps), 0.0, lo, flat, e1);
    tail += osc_tail(amp, a + eps, -0.5 * M_PI, lo, flat, e2);  // sin x = cos(x - pi/2)
    err += e1 + e2;
  } else {
    ModulatedAmp amp;
    amp.k = kern;
    amp.slow = slow;
    amp.fast = fast;
    const auto flat = [](double, double& e) {
      e = 0.0;
      return 0.0;  // unreachable: fast > 0
    };
    double e1;
    tail += osc_tail(amp, fast, -0.25 * M_PI, lo, flat, e1);
    err += e1;
  }
  // allowance for the dropped 1/(8x) Hankel correction of each Bessel factor
  err += 0.005 * std::fabs(tail);

  PdfResult res;
  res.value = a * (head + tail);
  res.err_estimate = a * err;
  res.intervals = n_panels;
  if (!std::isfinite(res.value))
    throw numeric_error("hk_pdf: quadrature produced a non-finite value");
  if (res.err_estimate > 50.0 * std::max(opt.abs_tol, 1e-6 * std::fabs(res.value)))
    throw numeric_error("hk_pdf: error estimate " + std::to_string(res.err_estimate) +
                        " exceeds tolerance");
  res.value = std::max(res.value, 0.0);
  return res;
}

double hk_pdf(double a, const NativeHKParams& p, const PdfOptions& opt) {
  return hk_pdf_detailed(a, p, opt).value;
}

}  // namespace hk
