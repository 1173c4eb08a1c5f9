#include "spindex/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "spindex/format.hpp"
#include "spindex/means.hpp"
#include "spindex/random_models.hpp"

namespace spindex {
namespace {

// Column lookup accepting the equivalent label pair (Table 2 identities).
std::optional<std::size_t> find_column(const EnsembleResult& result, const IndexKind& primary,
                                       const std::optional<IndexKind>& fallback = {}) {
  for (std::size_t k = 0; k < result.spec.indices.size(); ++k)
    if (result.spec.indices[k] == primary) return k;
  if (fallback)
    for (std::size_t k = 0; k < result.spec.indices.size(); ++k)
      if (result.spec.indices[k] == *fallback) return k;
  return std::nullopt;
}

std::size_t require_column(const EnsembleResult& result, const IndexKind& primary,
                           const std::optional<IndexKind>& fallback = {}) {
  if (auto col = find_column(result, primary, fallback)) return *col;
  throw std::invalid_argument("ensemble is missing required index column " + primary.label());
}

}  // namespace

InequalityReport make_chain_report(std::string chain_id, std::vector<ChainTerm> terms) {
  InequalityReport report{std::move(chain_id), std::move(terms), true, 0.0};
  bool first = true;
  for (std::size_t i = 0; i + 1 < report.terms.size(); ++i) {
    const double a = report.terms[i].value;
    const double b = report.terms[i + 1].value;
    const double excess = a - b - kChainRelTol * std::abs(b);
    if (first || excess > report.max_violation) report.max_violation = excess;
    first = false;
  }
  report.holds = report.terms.size() < 2 || report.max_violation <= 0.0;
  return report;
}

bool chain_equality(const InequalityReport& report) {
  for (std::size_t i = 0; i + 1 < report.terms.size(); ++i) {
    const double a = report.terms[i].value;
    const double b = report.terms[i + 1].value;
    if (std::abs(a - b) > kChainRelTol * std::max(std::abs(a), std::abs(b))) return false;
  }
  return true;
}

InequalityReport check_scalar_chain(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0))
    throw std::domain_error("chain arguments must be positive");
  return make_chain_report(
      "scalar-mean-chain",
      {{"s:-1", std::sqrt(x * y)},
       {"s:lim0", logarithmic_mean(x, y)},
       {"pm:1/3", power_mean(x, y, AlphaParam::finite(1.0 / 3.0))},
       {"s:2", (x + y) / 2.0}});
}

InequalityReport check_graph_chain(const Graph& g) {
  return make_chain_report(
      "index-chain",
      {{"rr", evaluate_index(g, IndexKind::reciprocal_randic())},
       {"sp:lim0", evaluate_index(g, IndexKind::sp(AlphaParam::limit_zero()))},
       {"mso:1/3", evaluate_index(g, IndexKind::mso(AlphaParam::finite(1.0 / 3.0)))},
       {"sp:2", evaluate_index(g, IndexKind::zagreb_m1()) / 2.0}});
}

std::vector<GridChainReport> check_average_chain(const EnsembleResult& result) {
  const std::size_t c_geo = require_column(result, IndexKind::sp(AlphaParam::finite(-1.0)),
                                           IndexKind::reciprocal_randic());
  const std::size_t c_log = require_column(result, IndexKind::sp(AlphaParam::limit_zero()),
                                           IndexKind::log_mean_index());
  const std::size_t c_pm = require_column(result, IndexKind::mso(AlphaParam::finite(1.0 / 3.0)));
  const std::size_t c_am = require_column(result, IndexKind::sp(AlphaParam::finite(2.0)));

  std::vector<GridChainReport> reports;
  reports.reserve(result.rows.size());
  for (const GridPointStats& row : result.rows) {
    reports.push_back(
        {row.param, row.mean_degree,
         make_chain_report("mean-index-chain",
                           {{"sp:-1", row.index_stats[c_geo].mean},
                            {"sp:lim0", row.index_stats[c_log].mean},
                            {"mso:1/3", row.index_stats[c_pm].mean},
                            {"sp:2", row.index_stats[c_am].mean}})});
  }
  return reports;
}

std::vector<GridChainReport> check_idlog_bound(const EnsembleResult& result) {
  const std::size_t c_idlog = require_column(result, IndexKind::sp(AlphaParam::limit_one()),
                                             IndexKind::idlog_mean_index());
  std::vector<std::size_t> others;
  for (std::size_t k = 0; k < result.spec.indices.size(); ++k) {
    const IndexKind& kind = result.spec.indices[k];
    if (kind.family() == IndexKind::Family::sp && k != c_idlog &&
        kind.alpha().kind() != AlphaParam::Kind::limit_one)
      others.push_back(k);
  }
  if (others.empty())
    throw std::invalid_argument("idlog bound needs at least one sp column with alpha != lim1");

  std::vector<GridChainReport> reports;
  reports.reserve(result.rows.size() * others.size());
  for (const GridPointStats& row : result.rows) {
    for (const std::size_t k : others) {
      reports.push_back(
          {row.param, row.mean_degree,
           make_chain_report("idlog-bound:" + result.spec.indices[k].label(),
                             {{"sp:lim1", row.index_stats[c_idlog].mean},
                              {result.spec.indices[k].label(), row.index_stats[k].mean}})});
    }
  }
  return reports;
}

CollapseReport collapse_metric(std::span<const ScalingCurve> curves, const IndexKind& kind,
                               double threshold) {
  if (curves.size() < 2)
    throw std::invalid_argument("collapse metric needs at least two network sizes");

  CollapseReport report{kind.label(), threshold, 0.0, 0.0, 0, false};

  for (const ScalingCurve& curve : curves) {
    for (const ScalingPoint& pt : curve.points) {
      if (pt.mean_degree < threshold || pt.prediction <= 0.0) continue;
      ++report.points_evaluated;
      report.worst_rel_deviation =
          std::max(report.worst_rel_deviation,
                   std::abs(pt.normalized_mean - pt.prediction) / pt.prediction);
    }
  }

  // Cross-size spread: every qualifying point of one curve against the linear
  // interpolation of every other curve covering that mean degree.
  auto interpolate = [](const ScalingCurve& curve, double d) -> std::optional<double> {
    const auto& pts = curve.points;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      const double d0 = pts[i].mean_degree;
      const double d1 = pts[i + 1].mean_degree;
      if ((d >= d0 && d <= d1) || (d >= d1 && d <= d0)) {
        if (d1 == d0) return pts[i].normalized_mean;
        const double w = (d - d0) / (d1 - d0);
        return pts[i].normalized_mean * (1.0 - w) + pts[i + 1].normalized_mean * w;
      }
    }
    return std::nullopt;
  };

  for (const ScalingCurve& a : curves) {
    for (const ScalingCurve& b : curves) {
      if (&a == &b) continue;
      for (const ScalingPoint& pt : a.points) {
        if (pt.mean_degree < threshold) continue;
        const auto other = interpolate(b, pt.mean_degree);
        if (!other) continue;
        const double scale = (std::abs(pt.normalized_mean) + std::abs(*other)) / 2.0;
        if (scale <= 0.0) continue;
        report.worst_cross_size_spread = std::max(
            report.worst_cross_size_spread, std::abs(pt.normalized_mean - *other) / scale);
      }
    }
  }

  report.empty_domain = report.points_evaluated == 0;
  return report;
}

LimitConsistencyReport limit_consistency_suite(std::int32_t max_value, std::int32_t stride) {
  if (max_value < 1 || stride < 1)
    throw std::invalid_argument("limit suite needs max_value >= 1 and stride >= 1");

  const AlphaParam big_pos = AlphaParam::finite(1e6);
  const AlphaParam big_neg = AlphaParam::finite(-1e6);
  const AlphaParam near0_pos = AlphaParam::finite(1e-5);
  const AlphaParam near0_neg = AlphaParam::finite(-1e-5);
  const AlphaParam near1_above = AlphaParam::finite(1.0 + 1e-5);
  const AlphaParam near1_below = AlphaParam::finite(1.0 - 1e-5);

  LimitConsistencyReport report{0, 0, {}, true};
  auto check = [&](double x, double y, const char* name, double got, double want) {
    ++report.checks_run;
    const double rel = std::abs(got - want) / std::abs(want);
    if (!(rel <= 1e-3)) report.failures.push_back({x, y, name, got, want, rel});
  };

  for (std::int32_t xi = 1; xi <= max_value; xi += stride) {
    for (std::int32_t yi = xi; yi <= max_value; yi += stride) {
      const double x = xi;
      const double y = yi;
      ++report.pairs_checked;
      check(x, y, "alpha=+1e6 vs max", stolarsky_mean(x, y, big_pos), std::max(x, y));
      check(x, y, "alpha=-1e6 vs min", stolarsky_mean(x, y, big_neg), std::min(x, y));
      const double lm = logarithmic_mean(x, y);
      check(x, y, "alpha=+1e-5 vs logmean", stolarsky_mean(x, y, near0_pos), lm);
      check(x, y, "alpha=-1e-5 vs logmean", stolarsky_mean(x, y, near0_neg), lm);
      const double identric = identric_mean(x, y);
      check(x, y, "alpha=1+1e-5 vs identric", stolarsky_mean(x, y, near1_above), identric);
      check(x, y, "alpha=1-1e-5 vs identric", stolarsky_mean(x, y, near1_below), identric);
    }
  }
  report.passed = report.failures.empty();
  return report;
}

std::vector<GofrOracleRow> gofr_oracle(std::span<const double> radii, std::int64_t pairs,
                                       std::uint64_t master_seed) {
  if (pairs < 1) throw std::invalid_argument("need at least one Monte Carlo pair");
  std::vector<GofrOracleRow> rows;
  rows.reserve(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const double r = radii[i];
    const double r2 = r * r;
    Xoshiro256pp rng(SeededStream{master_seed, i}.substream_seed());
    std::int64_t hits = 0;
    for (std::int64_t k = 0; k < pairs; ++k) {
      const double dx = rng.uniform01() - rng.uniform01();
      const double dy = rng.uniform01() - rng.uniform01();
      if (dx * dx + dy * dy <= r2) ++hits;
    }
    const double estimate = static_cast<double>(hits) / static_cast<double>(pairs);
    const double sigma =
        std::sqrt(std::max(estimate * (1.0 - estimate), 1e-300) / static_cast<double>(pairs));
    const double analytic = g_of_r(r);
    rows.push_back({r, analytic, estimate, sigma, (estimate - analytic) / sigma});
  }
  return rows;
}

}  // namespace spindex
