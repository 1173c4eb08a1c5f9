#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "spindex/graph.hpp"
#include "spindex/rng.hpp"

namespace spindex {

struct ErParams {
  std::int32_t n;
  double p;
};

struct RgParams {
  std::int32_t n;
  double r;
};

// Replicate-addressed RNG stream. The derivation below is part of the output
// contract: changing it changes every generated graph.
struct SeededStream {
  std::uint64_t master_seed;
  std::uint64_t replicate_index;

  // mix64(master_seed + kGolden * (replicate_index + 1)); injective in the
  // index for fixed master seed.
  std::uint64_t substream_seed() const {
    return mix64(master_seed + kGolden * (replicate_index + 1));
  }
};

// G(n, p): one uniform draw per unordered pair, lexicographic (u, v) order
// with u < v; the pair is an edge iff draw < p.
Graph gen_er(const ErParams& params, const SeededStream& stream);

// G(n, r): n points uniform on the unit square (coordinates drawn x then y,
// vertex 0..n-1), edge iff Euclidean distance <= r.
Graph gen_rg(const RgParams& params, const SeededStream& stream);

struct Point2 {
  double x;
  double y;
};

std::vector<Point2> sample_unit_square(std::int32_t n, const SeededStream& stream);

// Geometric edge construction from fixed points. The cell-grid path is used
// for r <= 0.25 and must emit exactly the edges of the quadratic scan; the
// brute-force variant is exposed for equivalence tests.
Graph rg_from_points(std::span<const Point2> points, double r);
Graph rg_from_points_bruteforce(std::span<const Point2> points, double r);

// Probability that two uniform points of the unit square lie within distance
// r. Piecewise: branch boundary at r=1, domain [0, sqrt(2)].
double g_of_r(double r);

// The two branch expressions individually, exposed for the continuity check.
double g_of_r_low(double r);   // valid on [0, 1]
double g_of_r_high(double r);  // valid on [1, sqrt(2)]

// Monotone inverse of g_of_r on [0, sqrt(2)] by bisection; target in [0, 1].
double g_inverse(double target);

double mean_degree(const ErParams& params);
double mean_degree(const RgParams& params);

}  // namespace spindex
