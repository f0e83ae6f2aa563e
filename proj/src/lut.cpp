#include "hkqus/lut.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstring>
#include <fstream>

#include <json.hpp>

#include "hkqus/errors.hpp"
#include "hkqus/parallel.hpp"

namespace hk {
namespace {

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i)
    g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return g;
}

std::uint64_t fnv1a(const void* data, std::size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001B3ull;
  }
  return h;
}

// index of the cell containing x, clamped to the last cell
std::size_t cell_index(const std::vector<double>& grid, double x) {
  auto it = std::upper_bound(grid.begin(), grid.end(), x);
  std::size_t i = static_cast<std::size_t>(it - grid.begin());
  if (i == 0) return 0;
  if (i >= grid.size()) return grid.size() - 2;
  return i - 1;
}

constexpr char kLutMagic[8] = {'H', 'K', 'L', 'U', 'T', '0', '0', '1'};

}  // namespace

FeatureLUT::FeatureLUT(std::vector<double> grid_log10_alpha, std::vector<double> grid_k,
                       std::vector<FeatureVector> table, std::string meta_json)
    : grid_log10_alpha_(std::move(grid_log10_alpha)),
      grid_k_(std::move(grid_k)),
      table_(std::move(table)),
      meta_json_(std::move(meta_json)) {
  if (grid_log10_alpha_.size() < 2 || grid_k_.size() < 2)
    throw invalid_input("FeatureLUT: each axis needs at least 2 nodes");
  if (table_.size() != grid_log10_alpha_.size() * grid_k_.size())
    throw invalid_input("FeatureLUT: table size does not match axes");
}

FeatureVector FeatureLUT::lookup(const HKParams& p) const {
  const double slack = 1e-12;
  if (p.log10_alpha < la_min() - slack || p.log10_alpha > la_max() + slack ||
      p.k < k_min() - slack || p.k > k_max() + slack)
    throw invalid_input("FeatureLUT::lookup: query outside the grid hull");

  const std::size_t ia = cell_index(grid_log10_alpha_, p.log10_alpha);
  const std::size_t ik = cell_index(grid_k_, p.k);
  const double ta = (p.log10_alpha - grid_log10_alpha_[ia]) /
                    (grid_log10_alpha_[ia + 1] - grid_log10_alpha_[ia]);
  const double tk = (p.k - grid_k_[ik]) / (grid_k_[ik + 1] - grid_k_[ik]);

  const FeatureVector& f00 = node(ia, ik);
  const FeatureVector& f01 = node(ia, ik + 1);
  const FeatureVector& f10 = node(ia + 1, ik);
  const FeatureVector& f11 = node(ia + 1, ik + 1);
  FeatureVector out;
  for (std::size_t c = 0; c < kNumFeatures; ++c) {
    const double lo = f00[c] + (f01[c] - f00[c]) * tk;
    const double hi = f10[c] + (f11[c] - f10[c]) * tk;
    out[c] = lo + (hi - lo) * ta;
  }
  return out;
}

double FeatureLUT::interp_coord(double log10_alpha, double k, std::size_t coord) const {
  const std::size_t ia = cell_index(grid_log10_alpha_, log10_alpha);
  const std::size_t ik = cell_index(grid_k_, k);
  const double ta = (log10_alpha - grid_log10_alpha_[ia]) /
                    (grid_log10_alpha_[ia + 1] - grid_log10_alpha_[ia]);
  const double tk = (k - grid_k_[ik]) / (grid_k_[ik + 1] - grid_k_[ik]);
  const double lo = node(ia, ik)[coord] + (node(ia, ik + 1)[coord] - node(ia, ik)[coord]) * tk;
  const double hi =
      node(ia + 1, ik)[coord] + (node(ia + 1, ik + 1)[coord] - node(ia + 1, ik)[coord]) * tk;
  return lo + (hi - lo) * ta;
}

FeatureLUT build_lut(std::size_t res_alpha, std::size_t res_k, const QuadratureConfig& cfg,
                     unsigned threads) {
  if (res_alpha < 2 || res_k < 2) throw invalid_input("build_lut: resolution must be >= 2");

  const auto grid_a = linspace(ParamBox::log10_alpha_min, ParamBox::log10_alpha_max, res_alpha);
  const auto grid_k = linspace(ParamBox::k_min, ParamBox::k_max, res_k);
  std::vector<FeatureVector> table(res_alpha * res_k);

  std::atomic<bool> failed{false};
  std::string fail_what;
  std::mutex fail_mutex;

  parallel_for(res_alpha, threads, [&](std::size_t ia) {
    if (failed.load(std::memory_order_relaxed)) return;
    try {
      for (std::size_t ik = 0; ik < res_k; ++ik) {
        // One evaluator per (alpha, k): the x grid depends on alpha only but
        // the 1F1 arguments change with k.
        const MomentEvaluator ev(to_native(HKParams{grid_a[ia], grid_k[ik]}), cfg);
        table[ia * res_k + ik] = ev.features();
      }
    } catch (const std::exception& e) {
      std::scoped_lock lock(fail_mutex);
      failed = true;
      fail_what = "build_lut failed at log10_alpha=" + std::to_string(grid_a[ia]) + ": " + e.what();
    }
  });
  if (failed) throw numeric_error(fail_what);

  // Diagnostic only: is u_stat monotone in k at every fixed alpha?
  bool u_monotone = true;
  for (std::size_t ia = 0; ia < res_alpha && u_monotone; ++ia)
    for (std::size_t ik = 0; ik + 1 < res_k; ++ik)
      if (table[ia * res_k + ik + 1].u_stat < table[ia * res_k + ik].u_stat) {
        u_monotone = false;
        break;
      }

  nlohmann::json meta;
  meta["format_version"] = 1;
  meta["res_log10_alpha"] = res_alpha;
  meta["res_k"] = res_k;
  meta["quadrature"] = {{"nodes", cfg.nodes},
                        {"x_min_cap", cfg.x_min_cap},
                        {"tail_sigmas", cfg.tail_sigmas},
                        {"tail_pad", cfg.tail_pad},
                        {"log_moment_step", cfg.log_moment_step}};
  meta["u_stat_monotone_in_k"] = u_monotone;
  char hash_hex[20];
  std::snprintf(hash_hex, sizeof hash_hex, "%016llx",
                static_cast<unsigned long long>(
                    fnv1a(table.data(), table.size() * sizeof(FeatureVector))));
  meta["build_hash"] = hash_hex;

  return FeatureLUT(grid_a, grid_k, std::move(table), meta.dump());
}

void save_lut(const FeatureLUT& lut, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("save_lut: cannot open " + path);
  out.write(kLutMagic, sizeof kLutMagic);
  const std::uint32_t ra = static_cast<std::uint32_t>(lut.res_alpha());
  const std::uint32_t rk = static_cast<std::uint32_t>(lut.res_k());
  out.write(reinterpret_cast<const char*>(&ra), sizeof ra);
  out.write(reinterpret_cast<const char*>(&rk), sizeof rk);
  out.write(reinterpret_cast<const char*>(lut.grid_log10_alpha().data()), ra * sizeof(double));
  out.write(reinterpret_cast<const char*>(lut.grid_k().data()), rk * sizeof(double));
  for (std::size_t ia = 0; ia < ra; ++ia)
    for (std::size_t ik = 0; ik < rk; ++ik) {
      const auto arr = lut.node(ia, ik).to_array();
      out.write(reinterpret_cast<const char*>(arr.data()), sizeof arr);
    }
  if (!out) throw io_error("save_lut: write failed for " + path);

  std::ofstream meta(path + ".json");
  if (!meta) throw io_error("save_lut: cannot open " + path + ".json");
  meta << lut.meta_json() << "\n";
}

FeatureLUT load_lut(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("load_lut: cannot open " + path);
  char magic[8];
  in.read(magic, sizeof magic);
  if (!in || std::memcmp(magic, kLutMagic, sizeof magic) != 0)
    throw io_error("load_lut: bad magic in " + path);
  std::uint32_t ra = 0, rk = 0;
  in.read(reinterpret_cast<char*>(&ra), sizeof ra);
  in.read(reinterpret_cast<char*>(&rk), sizeof rk);
  if (!in || ra < 2 || rk < 2 || ra > 100000 || rk > 100000)
    throw io_error("load_lut: corrupt header in " + path);
  std::vector<double> ga(ra), gk(rk);
  in.read(reinterpret_cast<char*>(ga.data()), ra * sizeof(double));
  in.read(reinterpret_cast<char*>(gk.data()), rk * sizeof(double));
  std::vector<FeatureVector> table(static_cast<std::size_t>(ra) * rk);
  for (auto& f : table) {
    std::array<double, kNumFeatures> arr;
    in.read(reinterpret_cast<char*>(arr.data()), sizeof arr);
    f = FeatureVector::from_array(arr);
  }
  if (!in) throw io_error("load_lut: truncated payload in " + path);

  std::string meta;
  std::ifstream meta_in(path + ".json");
  if (meta_in) meta.assign(std::istreambuf_iterator<char>(meta_in), {});
  return FeatureLUT(std::move(ga), std::move(gk), std::move(table), std::move(meta));
}

}  // namespace hk
