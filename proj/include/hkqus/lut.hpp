// Dense lookup table of theoretical features over the (log10 alpha, k) plane.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hkqus/features.hpp"
#include "hkqus/forward.hpp"
#include "hkqus/params.hpp"

namespace hk {

class FeatureLUT {
 public:
  FeatureLUT() = default;
  FeatureLUT(std::vector<double> grid_log10_alpha, std::vector<double> grid_k,
             std::vector<FeatureVector> table, std::string meta_json);

  std::size_t res_alpha() const { return grid_log10_alpha_.size(); }
  std::size_t res_k() const { return grid_k_.size(); }
  const std::vector<double>& grid_log10_alpha() const { return grid_log10_alpha_; }
  const std::vector<double>& grid_k() const { return grid_k_; }
  const std::string& meta_json() const { return meta_json_; }

  const FeatureVector& node(std::size_t ia, std::size_t ik) const {
    return table_[ia * grid_k_.size() + ik];
  }

  // Bilinear interpolation per feature coordinate; throws outside the hull.
  FeatureVector lookup(const HKParams& p) const;

  // Interpolated single coordinates along the k axis at fixed, continuous
  // log10 alpha; used by the XU bisection.
  double interp_coord(double log10_alpha, double k, std::size_t coord) const;

  double k_min() const { return grid_k_.front(); }
  double k_max() const { return grid_k_.back(); }
  double la_min() const { return grid_log10_alpha_.front(); }
  double la_max() const { return grid_log10_alpha_.back(); }

 private:
  std::vector<double> grid_log10_alpha_;
  std::vector<double> grid_k_;
  std::vector<FeatureVector> table_;  // row-major, k fastest
  std::string meta_json_;
};

// Default grid: step 0.01 on both axes.
inline constexpr std::size_t kDefaultLutResAlpha = 161;
inline constexpr std::size_t kDefaultLutResK = 126;

// Dense evaluation of theoretical_features over an evenly spaced grid
// covering the parameter box. Aborts with the failing grid coordinates if any
// point does not evaluate.
FeatureLUT build_lut(std::size_t res_alpha, std::size_t res_k,
                     const QuadratureConfig& cfg = {}, unsigned threads = 1);

void save_lut(const FeatureLUT& lut, const std::string& path);
FeatureLUT load_lut(const std::string& path);

}  // namespace hk
