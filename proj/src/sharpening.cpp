#include "dsharp/sharpening.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "dsharp/lp_basis.hpp"
#include "dsharp/quadrature.hpp"
#include "dsharp/rng.hpp"

namespace dsharp {

namespace {
constexpr int kCdfGridN = 4096;
}

std::vector<double> estimate_raw(const Sample& data, const Distribution& base,
                                 int m_max) {
  if (data.n() < 2) throw std::invalid_argument("estimate_raw: n must be >= 2");
  if (m_max < 1 || m_max > LPBasis::kMaxOrder) {
    throw std::domain_error("estimate_raw: m_max out of range");
  }
  const LPBasis& basis = LPBasis::shared();
  std::vector<double> sums(m_max, 0.0);
  for (double x : data.values) {
    // cdf values of exactly 0 or 1 are admitted; T_j is defined there
    const double u = std::clamp(base.cdf(x), 0.0, 1.0);
    for (int j = 1; j <= m_max; ++j) sums[j - 1] += basis.eval(j, u);
  }
  for (double& s : sums) s /= static_cast<double>(data.n());
  return sums;
}

OpenSelection open_select(std::span<const double> raw, std::size_t n,
                          double gamma) {
  if (raw.empty()) throw std::invalid_argument("open_select: empty input");
  if (n < 2) throw std::invalid_argument("open_select: n must be >= 2");
  const std::size_t m_max = raw.size();
  std::vector<std::size_t> order(m_max);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::fabs(raw[a]) > std::fabs(raw[b]);
  });

  OpenSelection sel;
  sel.scores.resize(m_max);
  double cum = 0.0;
  double best = -std::numeric_limits<double>::infinity();
  std::size_t best_m = 0;  // 0 = keep nothing
  for (std::size_t m = 1; m <= m_max; ++m) {
    cum += raw[order[m - 1]] * raw[order[m - 1]];
    sel.scores[m - 1] = cum - gamma / static_cast<double>(n) * m;
    if (sel.scores[m - 1] > best) {
      best = sel.scores[m - 1];
      best_m = m;
    }
  }
  if (best <= 0.0) return sel;  // nothing survives the charge
  for (std::size_t k = 0; k < best_m; ++k) {
    const int j = static_cast<int>(order[k]) + 1;
    sel.selected.push_back(j);
    sel.smooth[j] = raw[order[k]];
  }
  std::sort(sel.selected.begin(), sel.selected.end());
  return sel;
}

double pipeline_gamma(std::size_t n) {
  return std::log(static_cast<double>(n));
}

SharpeningFit fit_sharpening(const Sample& data,
                             std::shared_ptr<const Distribution> base,
                             int m_max, std::optional<double> gamma) {
  SharpeningFit fit;
  fit.base = std::move(base);
  fit.n = data.n();
  fit.gamma = gamma.value_or(pipeline_gamma(fit.n));
  fit.raw_coeffs = estimate_raw(data, *fit.base, m_max);
  OpenSelection sel = open_select(fit.raw_coeffs, fit.n, fit.gamma);
  fit.selected = std::move(sel.selected);
  fit.smooth_coeffs = std::move(sel.smooth);
  fit.open_scores = std::move(sel.scores);
  return fit;
}

SharpeningFit fit_sharpening(const Sample& data, const BaseModel& base,
                             int m_max, std::optional<double> gamma) {
  return fit_sharpening(data, std::make_shared<BaseModel>(base), m_max, gamma);
}

double eval_d(const SharpeningFit& fit, double u) {
  if (!(u >= 0.0 && u <= 1.0)) {
    throw std::domain_error("eval_d: u must be in [0,1]");
  }
  const LPBasis& basis = LPBasis::shared();
  double v = 1.0;
  for (const auto& [j, c] : fit.smooth_coeffs) v += c * basis.eval(j, u);
  return v;
}

DSharpModel::DSharpModel(std::shared_ptr<const Distribution> base,
                         std::map<int, double> coeffs)
    : base_(std::move(base)),
      coeffs_(std::move(coeffs)),
      grid_(std::make_shared<CdfGrid>()) {
  if (!base_) throw std::invalid_argument("DSharpModel: null base");
  for (const auto& [j, c] : coeffs_) {
    if (j < 1 || j > LPBasis::kMaxOrder) {
      throw std::domain_error("DSharpModel: coefficient order out of range");
    }
    if (!std::isfinite(c)) {
      throw std::invalid_argument("DSharpModel: non-finite coefficient");
    }
  }
  if (coeffs_.empty()) {
    normalizer_ = 1.0;
  } else {
    normalizer_ = quad::integrate(
        [this](double u) { return std::max(0.0, series(u)); }, 2048);
    if (normalizer_ <= 1e-12) {
      throw std::runtime_error("DSharpModel: degenerate model (mass ~ 0)");
    }
  }
}

double DSharpModel::series(double u) const {
  const LPBasis& basis = LPBasis::shared();
  double v = 1.0;
  for (const auto& [j, c] : coeffs_) v += c * basis.eval(j, u);
  return v;
}

double DSharpModel::u_weight(double u) const {
  return std::max(0.0, series(u)) / normalizer_;
}

double DSharpModel::pdf(double x) const {
  return base_->pdf(x) * u_weight(base_->cdf(x));
}

double DSharpModel::pdf_raw(double x) const {
  return base_->pdf(x) * series(base_->cdf(x));
}

const DSharpModel::CdfGrid& DSharpModel::grid() const {
  std::call_once(grid_->once, [this] {
    auto& cum = grid_->cum;
    cum.resize(kCdfGridN);
    cum[0] = 0.0;
    const double h = 1.0 / (kCdfGridN - 1);
    double prev = std::max(0.0, series(0.0));
    for (int k = 1; k < kCdfGridN; ++k) {
      const double u = k * h;
      const double cur = std::max(0.0, series(u));
      const double mid = std::max(0.0, series(u - 0.5 * h));
      cum[k] = cum[k - 1] + h / 6.0 * (prev + 4.0 * mid + cur);  // Simpson
      prev = cur;
    }
    const double total = cum.back();
    if (total > 0.0) {
      for (double& v : cum) v /= total;
    }
    cum.back() = 1.0;
  });
  return *grid_;
}

double DSharpModel::cdf(double x) const {
  if (coeffs_.empty()) return base_->cdf(x);
  const double u = std::clamp(base_->cdf(x), 0.0, 1.0);
  const auto& cum = grid().cum;
  const double pos = u * (kCdfGridN - 1);
  const int i = std::min(static_cast<int>(pos), kCdfGridN - 2);
  const double frac = pos - i;
  return cum[i] + frac * (cum[i + 1] - cum[i]);
}

double DSharpModel::quantile(double p) const {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("quantile: u must be in (0,1)");
  }
  if (coeffs_.empty()) return base_->quantile(p);
  const auto& cum = grid().cum;
  const auto it = std::upper_bound(cum.begin(), cum.end(), p);
  const int i = std::clamp(static_cast<int>(it - cum.begin()) - 1, 0,
                           kCdfGridN - 2);
  const double span = cum[i + 1] - cum[i];
  const double frac = span > 0.0 ? (p - cum[i]) / span : 0.0;
  const double u = (i + frac) / (kCdfGridN - 1);
  return base_->quantile(std::clamp(u, 1e-14, 1.0 - 1e-14));
}

double DSharpModel::envelope() const {
  double env = 1.0;
  for (const auto& [j, c] : coeffs_) {
    env += std::fabs(c) * std::sqrt(2.0 * j + 1.0);
  }
  return env;
}

Sample DSharpModel::sample(std::size_t n, std::uint64_t seed) const {
  if (n < 1) throw std::invalid_argument("sample: n must be >= 1");
  const double env = envelope();
  if (env <= 1e-12) throw std::runtime_error("sample: degenerate envelope");
  Rng rng(seed);
  const auto* bm = dynamic_cast<const BaseModel*>(base_.get());
  std::vector<double> out;
  out.reserve(n);
  while (out.size() < n) {
    double x, u;
    if (bm) {
      x = bm->draw(rng);
      u = bm->cdf(x);
    } else {
      u = rng.uniform();
      x = base_->quantile(u);
    }
    if (coeffs_.empty()) {  // acceptance probability is exactly 1
      out.push_back(x);
      continue;
    }
    if (rng.uniform() * env <= std::max(0.0, series(u))) out.push_back(x);
  }
  return Sample(std::move(out));
}

DSharpModel make_dsharp(std::shared_ptr<const Distribution> base,
                        std::map<int, double> coeffs) {
  return DSharpModel(std::move(base), std::move(coeffs));
}

DSharpModel make_dsharp(const BaseModel& base,
                        const std::map<int, double>& coeffs) {
  return DSharpModel(std::make_shared<BaseModel>(base), coeffs);
}

DSharpModel make_dsharp(const SharpeningFit& fit) {
  return DSharpModel(fit.base, fit.smooth_coeffs);
}

Sample sample_dsharp(const DSharpModel& model, std::size_t n,
                     std::uint64_t seed) {
  return model.sample(n, seed);
}

DSharpModel resharpen(const DSharpModel& model, const Sample& data, int m_max,
                      std::optional<double> gamma) {
  auto base = std::make_shared<DSharpModel>(model);
  SharpeningFit fit = fit_sharpening(data, base, m_max, gamma);
  return make_dsharp(fit);
}

}  // namespace dsharp
