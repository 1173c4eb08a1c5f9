#include "spindex/indices.hpp"

#include <cmath>
#include <stdexcept>

#include "spindex/format.hpp"
#include "spindex/means.hpp"

namespace spindex {
namespace {

// Pair tables above this degree bound would cost more memory than the direct
// route is worth; 2048^2 doubles is 32 MiB.
constexpr std::int32_t kMaxTabulatedDegree = 2048;

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  while (true) {
    const auto pos = s.find(sep);
    parts.push_back(s.substr(0, pos));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return parts;
}

}  // namespace

IndexKind IndexKind::ka1(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b))
    throw std::invalid_argument("ka exponents must be finite");
  IndexKind kind(Family::ka1);
  kind.ka_a_ = a;
  kind.ka_b_ = b;
  return kind;
}

IndexKind IndexKind::parse(std::string_view label) {
  const auto parts = split(label, ':');
  if (parts.size() == 1) {
    if (parts[0] == "rr") return reciprocal_randic();
    if (parts[0] == "m1") return zagreb_m1();
    if (parts[0] == "logmean") return log_mean_index();
    if (parts[0] == "idlogmean") return idlog_mean_index();
  } else if (parts.size() == 2 && parts[0] == "sp") {
    return sp(AlphaParam::parse(parts[1]));
  } else if (parts.size() == 2 && parts[0] == "mso") {
    return mso(AlphaParam::parse(parts[1]));
  } else if (parts.size() == 3 && parts[0] == "ka") {
    return ka1(parse_double(parts[1]), parse_double(parts[2]));
  }
  throw std::invalid_argument("unknown index label '" + std::string(label) + "'");
}

std::string IndexKind::label() const {
  switch (family_) {
    case Family::sp: return "sp:" + alpha_.label();
    case Family::mso: return "mso:" + alpha_.label();
    case Family::reciprocal_randic: return "rr";
    case Family::zagreb_m1: return "m1";
    case Family::ka1: return "ka:" + format_shortest(ka_a_) + ":" + format_shortest(ka_b_);
    case Family::log_mean: return "logmean";
    case Family::idlog_mean: return "idlogmean";
  }
  return {};
}

double edge_sum(const Graph& g, const std::function<double(double, double)>& f) {
  const auto degrees = g.degrees();
  std::vector<double> vals;
  vals.reserve(g.edges().size());
  for (const Edge& e : g.edges())
    vals.push_back(f(static_cast<double>(degrees[e.u]), static_cast<double>(degrees[e.v])));
  return kernels::compensated_sum(vals.data(), vals.size());
}

void EdgeScratch::load(const Graph& g) {
  const auto degrees = g.degrees();
  const auto edges = g.edges();
  du.resize(edges.size());
  dv.resize(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    du[i] = degrees[edges[i].u];
    dv[i] = degrees[edges[i].v];
  }
}

IndexEvaluator::IndexEvaluator(const IndexKind& kind, std::int32_t max_degree, bool tabulate)
    : kind_(kind), strategy_(Strategy::edge_func) {
  if (max_degree < 0) throw std::invalid_argument("max_degree must be non-negative");

  // Validate alpha admissibility up front so ensemble runs fail at spec time,
  // not mid-sweep. The probe pair is arbitrary.
  std::function<double(double, double)> direct;
  switch (kind_.family()) {
    case IndexKind::Family::sp:
      switch (kind_.alpha().kind()) {
        case AlphaParam::Kind::neg_infinity: func_ = kernels::EdgeFunc::min_degree; return;
        case AlphaParam::Kind::pos_infinity: func_ = kernels::EdgeFunc::max_degree; return;
        case AlphaParam::Kind::limit_zero: func_ = kernels::EdgeFunc::log_mean; break;
        case AlphaParam::Kind::limit_one: func_ = kernels::EdgeFunc::idlog_mean; break;
        case AlphaParam::Kind::finite: {
          const AlphaParam alpha = kind_.alpha();
          stolarsky_mean(1.0, 2.0, alpha);
          direct = [alpha](double x, double y) { return stolarsky_mean(x, y, alpha); };
          break;
        }
      }
      break;
    case IndexKind::Family::mso:
      switch (kind_.alpha().kind()) {
        case AlphaParam::Kind::neg_infinity: func_ = kernels::EdgeFunc::min_degree; return;
        case AlphaParam::Kind::pos_infinity: func_ = kernels::EdgeFunc::max_degree; return;
        case AlphaParam::Kind::limit_zero: func_ = kernels::EdgeFunc::sqrt_product; return;
        default: {
          const AlphaParam alpha = kind_.alpha();
          power_mean(1.0, 2.0, alpha);
          direct = [alpha](double x, double y) { return power_mean(x, y, alpha); };
          break;
        }
      }
      break;
    case IndexKind::Family::reciprocal_randic: func_ = kernels::EdgeFunc::sqrt_product; return;
    case IndexKind::Family::zagreb_m1: func_ = kernels::EdgeFunc::degree_sum; return;
    case IndexKind::Family::ka1: {
      const double a = kind_.ka_a();
      const double b = kind_.ka_b();
      direct = [a, b](double x, double y) { return std::pow(std::pow(x, a) + std::pow(y, a), b); };
      break;
    }
    case IndexKind::Family::log_mean: func_ = kernels::EdgeFunc::log_mean; break;
    case IndexKind::Family::idlog_mean: func_ = kernels::EdgeFunc::idlog_mean; break;
  }

  if (!direct) {
    // log_mean / idlog_mean kernels need the degree log tables.
    tables_ = std::make_unique<kernels::DegreeLogTables>(max_degree);
    return;
  }

  if (tabulate && max_degree <= kMaxTabulatedDegree) {
    strategy_ = Strategy::pair_table;
    stride_ = max_degree + 1;
    pair_table_.assign(static_cast<std::size_t>(stride_) * stride_, 0.0);
    for (std::int32_t a = 1; a <= max_degree; ++a)
      for (std::int32_t b = a; b <= max_degree; ++b) {
        const double v = direct(static_cast<double>(a), static_cast<double>(b));
        pair_table_[static_cast<std::size_t>(a) * stride_ + b] = v;
        pair_table_[static_cast<std::size_t>(b) * stride_ + a] = v;
      }
  } else {
    strategy_ = Strategy::direct;
    direct_ = std::move(direct);
  }
}

double IndexEvaluator::value(EdgeScratch& scratch) const {
  const std::size_t m = scratch.du.size();
  scratch.vals.resize(m);
  switch (strategy_) {
    case Strategy::edge_func:
      kernels::active_backend().eval(func_, tables_.get(), scratch.du.data(), scratch.dv.data(),
                                     m, scratch.vals.data());
      break;
    case Strategy::pair_table:
      kernels::active_backend().gather(pair_table_.data(), stride_, scratch.du.data(),
                                       scratch.dv.data(), m, scratch.vals.data());
      break;
    case Strategy::direct:
      for (std::size_t i = 0; i < m; ++i)
        scratch.vals[i] = direct_(static_cast<double>(scratch.du[i]),
                                  static_cast<double>(scratch.dv[i]));
      break;
  }
  return kernels::compensated_sum(scratch.vals.data(), m);
}

double sp_index(const Graph& g, const AlphaParam& alpha) {
  return evaluate_index(g, IndexKind::sp(alpha));
}

double mso_index(const Graph& g, const AlphaParam& alpha) {
  return evaluate_index(g, IndexKind::mso(alpha));
}

double reciprocal_randic(const Graph& g) {
  return evaluate_index(g, IndexKind::reciprocal_randic());
}

double zagreb_m1(const Graph& g) {
  // Vertex route: exact integer arithmetic in double.
  double sum = 0.0;
  for (const std::int32_t d : g.degrees()) sum += static_cast<double>(d) * d;
  return sum;
}

double ka1_index(const Graph& g, double a, double b) {
  return evaluate_index(g, IndexKind::ka1(a, b));
}

double evaluate_index(const Graph& g, const IndexKind& kind) {
  // Tables only pay off when the edge count dwarfs the degree range.
  const std::int64_t dmax = g.max_degree();
  const bool tabulate = static_cast<std::int64_t>(g.edges().size()) > (dmax + 1) * (dmax + 1) / 4;
  IndexEvaluator eval(kind, g.max_degree(), tabulate);
  EdgeScratch scratch;
  scratch.load(g);
  return eval.value(scratch);
}

}  // namespace spindex
