#include "spindex/random_models.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spindex {
namespace {

const double kSqrt2 = std::sqrt(2.0);

void validate(const ErParams& params) {
  if (params.n <= 0) throw std::invalid_argument("n must be positive");
  if (!(params.p >= 0.0 && params.p <= 1.0))
    throw std::invalid_argument("p must lie in [0, 1]");
}

void validate(const RgParams& params) {
  if (params.n <= 0) throw std::invalid_argument("n must be positive");
  if (!(params.r >= 0.0 && params.r <= kSqrt2))
    throw std::invalid_argument("r must lie in [0, sqrt(2)]");
}

inline bool within(const Point2& a, const Point2& b, double r2) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy <= r2;
}

Graph rg_cell_grid(std::span<const Point2> points, double r) {
  const auto n = static_cast<std::int32_t>(points.size());
  // Cell width >= r keeps the 9-cell neighborhood exhaustive; the side count
  // is clamped so tiny radii cannot blow up the grid allocation.
  const double cell = std::max(r, 1.0 / std::ceil(1.0 / r));
  const std::int32_t max_side = static_cast<std::int32_t>(std::ceil(std::sqrt(double(n)))) + 1;
  const std::int32_t nside = std::clamp(static_cast<std::int32_t>(1.0 / cell), 1, max_side);

  auto cell_of = [&](double coord) {
    const auto c = static_cast<std::int32_t>(coord * nside);
    return std::min(std::max(c, 0), nside - 1);
  };

  // Counting sort of point ids by cell.
  const std::size_t cells = static_cast<std::size_t>(nside) * nside;
  std::vector<std::int32_t> counts(cells + 1, 0);
  std::vector<std::int32_t> cell_id(n);
  for (std::int32_t i = 0; i < n; ++i) {
    cell_id[i] = cell_of(points[i].x) * nside + cell_of(points[i].y);
    ++counts[cell_id[i] + 1];
  }
  for (std::size_t c = 1; c <= cells; ++c) counts[c] += counts[c - 1];
  std::vector<std::int32_t> order(n);
  {
    std::vector<std::int32_t> cursor(counts.begin(), counts.end() - 1);
    for (std::int32_t i = 0; i < n; ++i) order[cursor[cell_id[i]]++] = i;
  }

  const double r2 = r * r;
  std::vector<Edge> edges;
  for (std::int32_t u = 0; u < n; ++u) {
    const std::int32_t cx = cell_id[u] / nside;
    const std::int32_t cy = cell_id[u] % nside;
    for (std::int32_t dx = -1; dx <= 1; ++dx) {
      const std::int32_t x = cx + dx;
      if (x < 0 || x >= nside) continue;
      for (std::int32_t dy = -1; dy <= 1; ++dy) {
        const std::int32_t y = cy + dy;
        if (y < 0 || y >= nside) continue;
        const std::int32_t c = x * nside + y;
        for (std::int32_t k = counts[c]; k < counts[c + 1]; ++k) {
          const std::int32_t v = order[k];
          if (v > u && within(points[u], points[v], r2))
            edges.push_back({static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v)});
        }
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  return Graph::from_sorted_edges(n, std::move(edges));
}

}  // namespace

Graph gen_er(const ErParams& params, const SeededStream& stream) {
  validate(params);
  Xoshiro256pp rng(stream.substream_seed());
  const auto n = static_cast<std::uint32_t>(params.n);
  std::vector<Edge> edges;
  if (params.p > 0.0)
    edges.reserve(static_cast<std::size_t>(0.5 * params.p * params.n * (params.n - 1) * 1.1) + 16);
  for (std::uint32_t u = 0; u + 1 < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v)
      if (rng.uniform01() < params.p) edges.push_back({u, v});
  return Graph::from_sorted_edges(params.n, std::move(edges));
}

std::vector<Point2> sample_unit_square(std::int32_t n, const SeededStream& stream) {
  if (n <= 0) throw std::invalid_argument("n must be positive");
  Xoshiro256pp rng(stream.substream_seed());
  std::vector<Point2> points(static_cast<std::size_t>(n));
  for (auto& pt : points) {
    pt.x = rng.uniform01();
    pt.y = rng.uniform01();
  }
  return points;
}

Graph rg_from_points_bruteforce(std::span<const Point2> points, double r) {
  const auto n = static_cast<std::int32_t>(points.size());
  const double r2 = r * r;
  std::vector<Edge> edges;
  for (std::int32_t u = 0; u + 1 < n; ++u)
    for (std::int32_t v = u + 1; v < n; ++v)
      if (within(points[u], points[v], r2))
        edges.push_back({static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v)});
  return Graph::from_sorted_edges(n, std::move(edges));
}

Graph rg_from_points(std::span<const Point2> points, double r) {
  if (points.empty()) throw std::invalid_argument("need at least one point");
  if (r > 0.0 && r <= 0.25) return rg_cell_grid(points, r);
  return rg_from_points_bruteforce(points, r);
}

Graph gen_rg(const RgParams& params, const SeededStream& stream) {
  validate(params);
  const auto points = sample_unit_square(params.n, stream);
  return rg_from_points(points, params.r);
}

double g_of_r_low(double r) {
  return r * r * (std::numbers::pi - (8.0 / 3.0) * r + r * r / 2.0);
}

double g_of_r_high(double r) {
  const double r2 = r * r;
  const double inv = 1.0 / r;
  return 1.0 / 3.0 - 2.0 * r2 * (1.0 - std::asin(inv) + std::acos(inv)) +
         (4.0 / 3.0) * (2.0 * r2 + 1.0) * std::sqrt(r2 - 1.0) - r2 * r2 / 2.0;
}

double g_of_r(double r) {
  if (!(r >= 0.0 && r <= kSqrt2))
    throw std::domain_error("r must lie in [0, sqrt(2)]");
  return r < 1.0 ? g_of_r_low(r) : g_of_r_high(r);
}

double g_inverse(double target) {
  if (!(target >= 0.0 && target <= 1.0))
    throw std::domain_error("g target must lie in [0, 1]");
  if (target == 0.0) return 0.0;
  if (target == 1.0) return kSqrt2;
  double lo = 0.0;
  double hi = kSqrt2;
  // ~60 halvings take the bracket to one ulp; g is strictly increasing.
  for (int iter = 0; iter < 80 && hi - lo > 1e-16 * kSqrt2; ++iter) {
    const double mid = 0.5 * (lo + hi);
    (g_of_r(mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double mean_degree(const ErParams& params) {
  validate(params);
  return (params.n - 1) * params.p;
}

double mean_degree(const RgParams& params) {
  validate(params);
  return (params.n - 1) * g_of_r(params.r);
}

}  // namespace spindex
