#include "hkqus/features.hpp"

#include <cmath>

#include "hkqus/errors.hpp"

namespace hk {

RskTriple rsk_from_moments(const AmplitudeMoments& m) {
  const double var = m.m2 - m.m1 * m.m1;
  if (!(var > 0.0)) throw numeric_error("rsk_from_moments: non-positive variance of A^v");
  const double snr = m.m1 / std::sqrt(var);
  const double skew = (m.m3 - 3.0 * m.m2 * m.m1 + 2.0 * m.m1 * m.m1 * m.m1) / std::pow(var, 1.5);
  const double kurt =
      (m.m4 - 4.0 * m.m1 * m.m3 + 6.0 * m.m2 * m.m1 * m.m1 - 3.0 * std::pow(m.m1, 4)) /
      (var * var);
  return {snr, skew, kurt};
}

FeatureVector compute_features(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n < 16) throw invalid_input("compute_features: need at least 16 samples");

  // One log pass per sample; every fractional power is exp(j*v*log a).
  double p1[2] = {0, 0}, p2[2] = {0, 0}, p3[2] = {0, 0}, p4[2] = {0, 0};
  double sum_i = 0.0, sum_li = 0.0, sum_ili = 0.0;
  constexpr double vs[2] = {kFeatureV1, kFeatureV2};
  for (std::size_t idx = 0; idx < n; ++idx) {
    const double a = values[idx];
    if (!(a > 0.0) || !std::isfinite(a))
      throw invalid_input("compute_features: samples must be positive and finite");
    const double la = std::log(a);
    for (int j = 0; j < 2; ++j) {
      const double w = vs[j] * la;
      const double e1 = std::exp(w);
      const double e2 = std::exp(2.0 * w);
      p1[j] += e1;
      p2[j] += e2;
      p3[j] += e1 * e2;
      p4[j] += e2 * e2;
    }
    const double i = a * a;
    const double li = 2.0 * la;
    sum_i += i;
    sum_li += li;
    sum_ili += i * li;
  }

  const double inv_n = 1.0 / static_cast<double>(n);
  FeatureVector f;
  for (int j = 0; j < 2; ++j) {
    const AmplitudeMoments m{p1[j] * inv_n, p2[j] * inv_n, p3[j] * inv_n, p4[j] * inv_n};
    const RskTriple t = rsk_from_moments(m);
    f[static_cast<std::size_t>(j)] = t.snr;
    f[static_cast<std::size_t>(2 + j)] = t.skewness;
    f[static_cast<std::size_t>(4 + j)] = t.kurtosis;
  }
  const double mean_i = sum_i * inv_n;
  const double mean_li = sum_li * inv_n;
  f.u_stat = mean_li - std::log(mean_i);
  f.x_stat = (sum_ili * inv_n) / mean_i - mean_li;
  return f;
}

FeatureVector compute_features(const EnvelopeSamples& s) {
  return compute_features(std::span<const double>(s.values));
}

FeatureNorm fit_norm(const std::vector<FeatureVector>& batch) {
  if (batch.size() < 2) throw invalid_input("fit_norm: need at least 2 vectors");
  FeatureNorm norm;
  const double inv_n = 1.0 / static_cast<double>(batch.size());
  for (std::size_t c = 0; c < kNumFeatures; ++c) {
    double mean = 0.0;
    for (const auto& f : batch) mean += f[c];
    mean *= inv_n;
    double var = 0.0;
    for (const auto& f : batch) {
      const double d = f[c] - mean;
      var += d * d;
    }
    var *= inv_n;  // population convention
    if (!(var > 0.0))
      throw invalid_input("fit_norm: degenerate coordinate " + std::string(kFeatureNames[c]));
    norm.mean[c] = mean;
    norm.std[c] = std::sqrt(var);
  }
  return norm;
}

FeatureVector apply_norm(const FeatureVector& f, const FeatureNorm& n) {
  FeatureVector out;
  for (std::size_t c = 0; c < kNumFeatures; ++c) out[c] = (f[c] - n.mean[c]) / n.std[c];
  return out;
}

FeatureVector invert_norm(const FeatureVector& f, const FeatureNorm& n) {
  FeatureVector out;
  for (std::size_t c = 0; c < kNumFeatures; ++c) out[c] = f[c] * n.std[c] + n.mean[c];
  return out;
}

}  // namespace hk
