#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "spindex/alpha.hpp"
#include "spindex/graph.hpp"
#include "spindex/kernels.hpp"

namespace spindex {

// Degree-based index selector. Labels (used in CLI arguments and output
// files): sp:<alpha>, mso:<alpha>, rr, m1, ka:<a>:<b>, logmean, idlogmean.
class IndexKind {
 public:
  enum class Family { sp, mso, reciprocal_randic, zagreb_m1, ka1, log_mean, idlog_mean };

  static IndexKind sp(const AlphaParam& alpha) { return IndexKind(Family::sp, alpha); }
  static IndexKind mso(const AlphaParam& alpha) { return IndexKind(Family::mso, alpha); }
  static IndexKind reciprocal_randic() { return IndexKind(Family::reciprocal_randic); }
  static IndexKind zagreb_m1() { return IndexKind(Family::zagreb_m1); }
  static IndexKind ka1(double a, double b);
  static IndexKind log_mean_index() { return IndexKind(Family::log_mean); }
  static IndexKind idlog_mean_index() { return IndexKind(Family::idlog_mean); }

  // Inverse of label(); throws std::invalid_argument on unknown syntax.
  static IndexKind parse(std::string_view label);

  Family family() const { return family_; }
  const AlphaParam& alpha() const { return alpha_; }  // sp/mso only
  double ka_a() const { return ka_a_; }
  double ka_b() const { return ka_b_; }
  std::string label() const;

  friend bool operator==(const IndexKind&, const IndexKind&) = default;

 private:
  explicit IndexKind(Family f, const AlphaParam& a = AlphaParam::limit_zero())
      : family_(f), alpha_(a) {}

  Family family_;
  AlphaParam alpha_;
  double ka_a_ = 0.0;
  double ka_b_ = 0.0;
};

// Generic edge-sum driver: compensated sum of f(d_u, d_v) over all edges.
double edge_sum(const Graph& g, const std::function<double(double, double)>& f);

double sp_index(const Graph& g, const AlphaParam& alpha);
double mso_index(const Graph& g, const AlphaParam& alpha);
double reciprocal_randic(const Graph& g);
double zagreb_m1(const Graph& g);
double ka1_index(const Graph& g, double a, double b);
double evaluate_index(const Graph& g, const IndexKind& kind);

// Endpoint-degree arrays for one graph plus a value buffer, reusable across
// evaluations to keep ensemble loops allocation-free.
struct EdgeScratch {
  std::vector<std::int32_t> du;
  std::vector<std::int32_t> dv;
  std::vector<double> vals;

  void load(const Graph& g);
};

// One index bound to a maximum degree. Construction picks the evaluation
// strategy: a dedicated edge kernel where one exists, otherwise a per-degree-
// pair lookup table (SIMD gather) or, for very large degree ranges, direct
// scalar evaluation. All strategies produce identical values; sums always go
// through the shared compensated reduction.
class IndexEvaluator {
 public:
  // tabulate=false skips pair-table construction in favor of the direct
  // route, which is cheaper for one-shot evaluations on sparse graphs.
  IndexEvaluator(const IndexKind& kind, std::int32_t max_degree, bool tabulate = true);

  const IndexKind& kind() const { return kind_; }
  double value(EdgeScratch& scratch) const;

 private:
  enum class Strategy { edge_func, pair_table, direct };

  IndexKind kind_;
  Strategy strategy_;
  kernels::EdgeFunc func_ = kernels::EdgeFunc::min_degree;
  std::unique_ptr<kernels::DegreeLogTables> tables_;
  std::vector<double> pair_table_;
  std::int32_t stride_ = 0;
  std::function<double(double, double)> direct_;
};

}  // namespace spindex
