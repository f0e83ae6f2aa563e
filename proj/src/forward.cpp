#include "hkqus/forward.hpp"

#include <cmath>

#include "hkqus/errors.hpp"
#include "hkqus/special.hpp"

namespace hk {

MomentEvaluator::MomentEvaluator(const NativeHKParams& p, const QuadratureConfig& cfg)
    : p_(p), cfg_(cfg) {
  p.validate();
  if (cfg.nodes < 16) throw invalid_input("MomentEvaluator: too few quadrature nodes");

  const double alpha = p.alpha;
  // Keep the omitted head integral of x^{alpha-1} under ~1e-12 of Gamma(alpha).
  double x_min = cfg.x_min_cap;
  const double head = std::pow(1e-12 * alpha * std::tgamma(alpha), 1.0 / alpha);
  if (head < x_min) x_min = std::max(head, 1e-280);
  const double x_max = alpha + cfg.tail_sigmas * std::sqrt(alpha) + cfg.tail_pad;

  const int n = cfg.nodes;
  log_x_.resize(n);
  wbase_.resize(n);
  hyp_arg_.resize(n);

  const double l0 = std::log(x_min);
  const double l1 = std::log(x_max);
  const double dl = (l1 - l0) / (n - 1);
  const double lg_alpha = std::lgamma(alpha);
  coherent_ = p.epsilon > 0.0;
  const double hyp_scale = -alpha * p.epsilon * p.epsilon / (2.0 * p.sigma * p.sigma);

  for (int i = 0; i < n; ++i) {
    const double lx = l0 + dl * i;
    const double x = std::exp(lx);
    log_x_[i] = lx;
    // uniform trapezoid in t = log x: dx = x dt, so the weight carries an
    // extra factor x; both ends decay to ~0, making the rule spectrally
    // accurate on this integrand
    const double w = (i == 0 || i == n - 1) ? 0.5 * dl : dl;
    wbase_[i] = w * x * std::exp((alpha - 1.0) * lx - x - lg_alpha);
    hyp_arg_[i] = coherent_ ? hyp_scale / x : 0.0;
  }
}

double MomentEvaluator::moment_scaled(double v, double sigma) const {
  if (v == 0.0) return 1.0;
  if (!(v > -0.1 && v <= 4.0)) throw invalid_input("theoretical_moment: v out of range (-0.1, 4]");

  const double half_v = 0.5 * v;
  double sum = 0.0;
  const std::size_t n = log_x_.size();
  for (std::size_t i = 0; i < n; ++i) {
    double f = wbase_[i] * std::exp(half_v * log_x_[i]);
    if (coherent_) f *= hyp1f1_half(v, hyp_arg_[i]);
    sum += f;
  }
  const double scale =
      std::pow(2.0 * sigma * sigma / p_.alpha, half_v) * std::tgamma(1.0 + half_v);
  const double result = scale * sum;
  if (!std::isfinite(result))
    throw numeric_error("theoretical_moment: quadrature produced a non-finite value");
  return result;
}

double MomentEvaluator::moment(double v) const { return moment_scaled(v, p_.sigma); }

FeatureVector MomentEvaluator::features() const {
  FeatureVector f;
  constexpr double vs[2] = {kFeatureV1, kFeatureV2};
  for (int j = 0; j < 2; ++j) {
    const AmplitudeMoments m{moment(vs[j]), moment(2.0 * vs[j]), moment(3.0 * vs[j]),
                             moment(4.0 * vs[j])};
    const RskTriple t = rsk_from_moments(m);
    f[static_cast<std::size_t>(j)] = t.snr;
    f[static_cast<std::size_t>(2 + j)] = t.skewness;
    f[static_cast<std::size_t>(4 + j)] = t.kurtosis;
  }

  // g(t) = E[I^t] = moment(2t); E[log I] = g'(0), E[I log I] = g'(1).
  // X and U are scale invariant, so the derivatives are taken on the
  // sigma = 1 moments; this keeps the result exactly independent of the
  // internal sigma choice despite the finite differencing.
  const double h = cfg_.log_moment_step;
  const auto g = [this](double t) { return moment_scaled(2.0 * t, 1.0); };
  const double g1 = g(1.0);
  const double d0 = (g(h) - g(-h)) / (2.0 * h);
  const double d1 = (g(1.0 + h) - g(1.0 - h)) / (2.0 * h);
  f.u_stat = d0 - std::log(g1);
  f.x_stat = d1 / g1 - d0;
  return f;
}

double theoretical_moment(double v, const NativeHKParams& p, const QuadratureConfig& cfg) {
  return MomentEvaluator(p, cfg).moment(v);
}

FeatureVector theoretical_features(const NativeHKParams& p, const QuadratureConfig& cfg) {
  return MomentEvaluator(p, cfg).features();
}

FeatureVector theoretical_features(const HKParams& p, const QuadratureConfig& cfg) {
  return theoretical_features(to_native(p), cfg);
}

}  // namespace hk
