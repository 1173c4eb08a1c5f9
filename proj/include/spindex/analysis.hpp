#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "spindex/ensemble.hpp"
#include "spindex/graph.hpp"

namespace spindex {

// Relative slack on adjacent chain terms: the chains are non-strict and
// floating-point ties at the equality cases must pass.
inline constexpr double kChainRelTol = 1e-12;

struct ChainTerm {
  std::string label;
  double value;
};

// Ordered-terms inequality check. holds <=> every adjacent pair satisfies
// term_i <= term_{i+1} + kChainRelTol * |term_{i+1}|; max_violation is the
// largest tolerance-adjusted excess (<= 0 when the chain holds).
struct InequalityReport {
  std::string chain_id;
  std::vector<ChainTerm> terms;
  bool holds;
  double max_violation;
};

InequalityReport make_chain_report(std::string chain_id, std::vector<ChainTerm> terms);

// True when all terms agree pairwise within kChainRelTol relative.
bool chain_equality(const InequalityReport& report);

// sqrt(xy) <= LogMean <= PM_{1/3} <= (x+y)/2 on one positive pair.
InequalityReport check_scalar_chain(double x, double y);

// Graph version on edge sums: rr <= logmean index <= mso:1/3 <= m1/2.
InequalityReport check_graph_chain(const Graph& g);

// Chain or bound evaluated at one grid point of an ensemble.
struct GridChainReport {
  double param;
  double mean_degree;
  InequalityReport report;
};

// Same chain on ensemble means, one report per grid point. Requires columns
// sp:-1 (or rr), sp:lim0 (or logmean), mso:1/3, sp:2 in the result.
std::vector<GridChainReport> check_average_chain(const EnsembleResult& result);

// <sp:lim1> <= <sp:alpha> for every other sp column of the result, one
// two-term report per (grid point, alpha). Requires an sp:lim1 (or idlogmean)
// column plus at least one other sp column.
std::vector<GridChainReport> check_idlog_bound(const EnsembleResult& result);

struct ScalingCurve {
  std::int32_t n;
  std::vector<ScalingPoint> points;
};

struct CollapseReport {
  std::string index_label;
  double threshold;
  double worst_rel_deviation;      // vs d^2/2, over points with <d> >= threshold
  double worst_cross_size_spread;  // curves compared by linear interpolation in <d>
  std::size_t points_evaluated;
  bool empty_domain;
};

// Requires >= 2 curves (std::invalid_argument otherwise). An empty qualifying
// domain is flagged, not an error.
CollapseReport collapse_metric(std::span<const ScalingCurve> curves, const IndexKind& kind,
                               double threshold);

struct LimitFailure {
  double x;
  double y;
  std::string check;
  double got;
  double want;
  double rel_err;
};

struct LimitConsistencyReport {
  std::int64_t pairs_checked;
  std::int64_t checks_run;
  std::vector<LimitFailure> failures;
  bool passed;
};

// On integer pairs 1 <= x <= y <= max_value (step `stride`), asserts within
// 1e-3 relative: Finite(+-1e6) vs max/min, Finite(+-1e-5) vs LogMean, and
// Finite(1 +- 1e-5) vs the analytic identric mean.
LimitConsistencyReport limit_consistency_suite(std::int32_t max_value, std::int32_t stride = 1);

struct GofrOracleRow {
  double r;
  double analytic;
  double estimate;
  double std_dev;  // binomial sigma of the estimate
  double z;
};

// Monte Carlo pair-distance oracle for g(r): `pairs` uniform point pairs per
// radius, one substream per radius.
std::vector<GofrOracleRow> gofr_oracle(std::span<const double> radii, std::int64_t pairs,
                                       std::uint64_t master_seed);

}  // namespace spindex
