#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "spindex/graph.hpp"
#include "spindex/random_models.hpp"
#include "spindex/rng.hpp"

using namespace spindex;

namespace {

bool same_edges(const Graph& a, const Graph& b) {
  return std::ranges::equal(a.edges(), b.edges());
}

}  // namespace

TEST_CASE("substream seeds are frozen") {
  CHECK(SeededStream{42, 0}.substream_seed() == 0xBDD732262FEB6E95ull);
  CHECK(SeededStream{42, 1}.substream_seed() == 0x28EFE333B266F103ull);
  CHECK(SeededStream{42, 7}.substream_seed() == 0xCCF635EE9E9E2FA4ull);
  CHECK(SeededStream{12345, 3}.substream_seed() == 0x2D160E7E5C3F42CAull);
  // mix64(0 + golden*1) equals the splitmix64 reference sequence head for seed 0
  CHECK(SeededStream{0, 0}.substream_seed() == 0xE220A8397B1DCDAFull);
}

TEST_CASE("xoshiro outputs are frozen") {
  Xoshiro256pp rng(SeededStream{42, 0}.substream_seed());
  CHECK(rng.next() == 0xAB4C4ADFBB450230ull);
  CHECK(rng.next() == 0x16C758048460B512ull);
  CHECK(rng.next() == 0xDEFF27396F8EB5C7ull);
  CHECK(rng.next() == 0x8B9350CEC7B7BC0Eull);

  Xoshiro256pp u(SeededStream{42, 0}.substream_seed());
  CHECK(u.uniform01() == 0.6691328808040176);
  CHECK(u.uniform01() == 0.08897924528389711);
  CHECK(u.uniform01() == 0.8710808291648913);
  CHECK(u.uniform01() == 0.5452166085085243);
}

TEST_CASE("uniform01 stays in the half-open unit interval") {
  Xoshiro256pp rng(777);
  for (int i = 0; i < 100000; ++i) {
    const double v = rng.uniform01();
    CHECK(v >= 0.0);
    CHECK(v < 1.0);
  }
}

TEST_CASE("er endpoints") {
  const Graph empty = gen_er(ErParams{10, 0.0}, SeededStream{1, 0});
  CHECK(empty.edge_count() == 0);
  const Graph full = gen_er(ErParams{10, 1.0}, SeededStream{1, 0});
  CHECK(full.edge_count() == 45);
  CHECK(full.max_degree() == 9);
  CHECK_THROWS_AS(gen_er(ErParams{0, 0.5}, SeededStream{1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(gen_er(ErParams{5, 1.5}, SeededStream{1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(gen_er(ErParams{5, -0.1}, SeededStream{1, 0}), std::invalid_argument);
}

TEST_CASE("er determinism and substream independence") {
  const Graph a = gen_er(ErParams{50, 0.2}, SeededStream{9, 4});
  const Graph b = gen_er(ErParams{50, 0.2}, SeededStream{9, 4});
  CHECK(same_edges(a, b));
  const Graph c = gen_er(ErParams{50, 0.2}, SeededStream{9, 5});
  CHECK(!same_edges(a, c));
}

TEST_CASE("rg endpoints") {
  const Graph empty = gen_rg(RgParams{10, 0.0}, SeededStream{1, 0});
  CHECK(empty.edge_count() == 0);
  const double sqrt2 = 1.4142135623730951;
  const Graph full = gen_rg(RgParams{10, sqrt2}, SeededStream{1, 0});
  CHECK(full.edge_count() == 45);
  CHECK_THROWS_AS(gen_rg(RgParams{0, 0.5}, SeededStream{1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(gen_rg(RgParams{5, 1.5}, SeededStream{1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(gen_rg(RgParams{5, -0.1}, SeededStream{1, 0}), std::invalid_argument);
}

TEST_CASE("rg connection boundary is inclusive") {
  // horizontal separation exactly 0.25; both grid and brute paths must agree
  const std::vector<Point2> points = {{0.25, 0.5}, {0.5, 0.5}};
  CHECK(rg_from_points(points, 0.25).edge_count() == 1);
  CHECK(rg_from_points_bruteforce(points, 0.25).edge_count() == 1);
  CHECK(rg_from_points(points, 0.24999999999999997).edge_count() == 0);
}

TEST_CASE("cell grid matches brute force exactly") {
  for (double r : {0.03, 0.07, 0.12, 0.2, 0.25}) {
    for (std::uint64_t seed : {100ull, 101ull}) {
      const auto points = sample_unit_square(300, SeededStream{seed, 0});
      const Graph fast = rg_from_points(points, r);
      const Graph slow = rg_from_points_bruteforce(points, r);
      CHECK(same_edges(fast, slow));
    }
  }
  // tiny radius with large n exercises the grid-side clamp
  const auto points = sample_unit_square(2000, SeededStream{55, 0});
  const Graph fast = rg_from_points(points, 0.01);
  const Graph slow = rg_from_points_bruteforce(points, 0.01);
  CHECK(same_edges(fast, slow));
}

TEST_CASE("rg determinism") {
  const Graph a = gen_rg(RgParams{80, 0.15}, SeededStream{31, 2});
  const Graph b = gen_rg(RgParams{80, 0.15}, SeededStream{31, 2});
  CHECK(same_edges(a, b));
}

TEST_CASE("connection probability values") {
  CHECK(std::abs(g_of_r(0.1) - 0.028799259869231266) <= 1e-15);
  CHECK(std::abs(g_of_r(0.3) - 0.21479333882308139) <= 1e-15);
  CHECK(std::abs(g_of_r(0.5) - 0.48331483006411498) <= 1e-15);
  CHECK(std::abs(g_of_r(0.9) - 0.92874004940773252) <= 1e-15);
  CHECK(std::abs(g_of_r(1.1) - 0.99251857690395153) <= 1e-14);
  CHECK(std::abs(g_of_r(1.3) - 0.99988227862538384) <= 1e-14);
  CHECK(std::abs(g_of_r(1.4142135623730951) - 1.0) <= 1e-12);
  CHECK(g_of_r(0.0) == 0.0);
}

TEST_CASE("connection probability branches join smoothly") {
  const double low = g_of_r_low(1.0);
  const double high = g_of_r_high(1.0);
  CHECK(std::abs(low - high) <= 1e-12);
  CHECK(std::abs(low - 0.97492598692312657) <= 1e-14);
}

TEST_CASE("connection probability is monotone") {
  double prev = 0.0;
  for (int i = 1; i <= 200; ++i) {
    const double r = 1.4142135623730951 * i / 200.0;
    const double v = g_of_r(r);
    CHECK(v >= prev);
    prev = v;
  }
  CHECK_THROWS_AS(g_of_r(-0.1), std::domain_error);
  CHECK_THROWS_AS(g_of_r(1.5), std::domain_error);
}

TEST_CASE("g_inverse round-trips") {
  CHECK(g_inverse(0.0) == 0.0);
  CHECK(g_inverse(1.0) == 1.4142135623730951);
  for (double q : {0.01, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99}) {
    const double r = g_inverse(q);
    CHECK(std::abs(g_of_r(r) - q) <= 1e-12);
  }
  CHECK_THROWS_AS(g_inverse(-0.1), std::domain_error);
  CHECK_THROWS_AS(g_inverse(1.1), std::domain_error);
}

TEST_CASE("mean degree formulas") {
  CHECK(std::abs(mean_degree(ErParams{1000, 0.01}) - 9.99) <= 1e-12);
  CHECK(std::abs(mean_degree(ErParams{101, 1.0}) - 100.0) <= 1e-12);
  CHECK(std::abs(mean_degree(RgParams{2, 1.4142135623730951}) - 1.0) <= 1e-12);
}

TEST_CASE("er edge count is statistically sane") {
  // n=1000, p=0.01: mean 4995, sd ~70.3; 4 sigma band
  const Graph g = gen_er(ErParams{1000, 0.01}, SeededStream{2026, 0});
  const double mean = 499500.0 * 0.01;
  const double sd = std::sqrt(499500.0 * 0.01 * 0.99);
  CHECK(double(g.edge_count()) >= mean - 4 * sd);
  CHECK(double(g.edge_count()) <= mean + 4 * sd);
}

TEST_CASE("rg mean degree is statistically sane") {
  // n=500, r=0.1: E[deg] = 499*g(0.1) ~ 14.37; average over vertices
  const Graph g = gen_rg(RgParams{500, 0.1}, SeededStream{2027, 0});
  const double expected = 499.0 * g_of_r(0.1);
  const double mean_deg = 2.0 * double(g.edge_count()) / 500.0;
  // sd of the mean degree is roughly sqrt(2*E[deg])/sqrt(n); generous 4 sigma
  const double sd = std::sqrt(2.0 * expected / 500.0);
  CHECK(mean_deg >= expected - 4 * sd);
  CHECK(mean_deg <= expected + 4 * sd);
}
