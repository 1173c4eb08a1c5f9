#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "spindex/ensemble.hpp"
#include "spindex/indices.hpp"
#include "spindex/kernels.hpp"
#include "spindex/random_models.hpp"

using namespace spindex;

namespace {

EnsembleSpec small_spec() {
  EnsembleSpec spec;
  spec.model = Model::er;
  spec.n = 40;
  spec.param_grid = {0.1, 0.5};
  spec.replicates = 20;
  spec.master_seed = 7;
  spec.indices = {IndexKind::parse("sp:lim0"), IndexKind::parse("sp:2")};
  return spec;
}

}  // namespace

TEST_CASE("replicate budget defaults to ceil(1e7 / n)") {
  EnsembleSpec spec;
  spec.n = 1000;
  CHECK(spec.resolved_replicates() == 10000);
  spec.n = 3;
  CHECK(spec.resolved_replicates() == 3333334);
  spec.n = 125;
  CHECK(spec.resolved_replicates() == 80000);
  spec.replicates = 77;
  CHECK(spec.resolved_replicates() == 77);
}

TEST_CASE("spec validation") {
  EnsembleSpec spec = small_spec();
  spec.replicates = 1;
  CHECK_THROWS_AS(run_ensemble(spec), std::invalid_argument);

  spec = small_spec();
  spec.param_grid = {1.5};
  CHECK_THROWS_AS(run_ensemble(spec), std::invalid_argument);

  spec = small_spec();
  spec.model = Model::rg;
  spec.param_grid = {1.5};
  CHECK_THROWS_AS(run_ensemble(spec), std::invalid_argument);

  spec = small_spec();
  spec.param_grid.clear();
  CHECK_THROWS_AS(run_ensemble(spec), std::invalid_argument);

  spec = small_spec();
  spec.indices.clear();
  CHECK_THROWS_AS(run_ensemble(spec), std::invalid_argument);

  spec = small_spec();
  spec.replicates = (std::int64_t{1} << 28) + 1;  // cell guard
  CHECK_THROWS_AS(run_ensemble(spec), std::invalid_argument);

  spec = small_spec();
  spec.indices = {IndexKind::mso(AlphaParam::limit_one())};
  CHECK_THROWS_AS(run_ensemble(spec), std::invalid_argument);
}

TEST_CASE("model helpers") {
  CHECK(model_name(Model::er) == "er");
  CHECK(model_name(Model::rg) == "rg");
  CHECK(parse_model("er") == Model::er);
  CHECK(parse_model("rg") == Model::rg);
  CHECK_THROWS_AS(parse_model("banana"), std::invalid_argument);
}

TEST_CASE("complete-graph column is exact with zero spread") {
  EnsembleSpec spec;
  spec.model = Model::er;
  spec.n = 100;
  spec.param_grid = {1.0};
  spec.replicates = 2;
  spec.indices = {IndexKind::parse("sp:lim0")};
  const EnsembleResult result = run_ensemble(spec);
  REQUIRE(result.rows.size() == 1);
  CHECK(result.rows[0].index_stats[0].mean == 490050.0);
  CHECK(result.rows[0].index_stats[0].std_err == 0.0);
  CHECK(result.rows[0].mean_degree == 99.0);
  CHECK(result.rows[0].replicates == 2);
}

TEST_CASE("all alpha variants coincide on complete graphs") {
  EnsembleSpec spec;
  spec.model = Model::er;
  spec.n = 30;
  spec.param_grid = {1.0};
  spec.replicates = 2;
  for (const char* label :
       {"sp:-inf", "sp:-1", "sp:lim0", "sp:lim1", "sp:2", "sp:+inf", "mso:1", "mso:0.5"})
    spec.indices.push_back(IndexKind::parse(label));
  const EnsembleResult result = run_ensemble(spec);
  const double want = 30.0 * 29.0 * 29.0 / 2.0;
  for (const IndexStats& stats : result.rows[0].index_stats) {
    CHECK(stats.mean == want);
    CHECK(stats.std_err == 0.0);
  }
}

TEST_CASE("result is independent of worker count") {
  const EnsembleSpec spec = small_spec();
  const EnsembleResult one = run_ensemble(spec, 1);
  const EnsembleResult two = run_ensemble(spec, 2);
  const EnsembleResult five = run_ensemble(spec, 5);
  REQUIRE(one.rows.size() == 2);
  for (std::size_t i = 0; i < one.rows.size(); ++i) {
    for (std::size_t k = 0; k < spec.indices.size(); ++k) {
      CHECK(one.rows[i].index_stats[k].mean == two.rows[i].index_stats[k].mean);
      CHECK(one.rows[i].index_stats[k].mean == five.rows[i].index_stats[k].mean);
      CHECK(one.rows[i].index_stats[k].std_err == two.rows[i].index_stats[k].std_err);
      CHECK(one.rows[i].index_stats[k].std_err == five.rows[i].index_stats[k].std_err);
    }
  }
}

TEST_CASE("replicate j of grid point i uses substream i*R + j") {
  const EnsembleSpec spec = small_spec();
  const EnsembleResult result = run_ensemble(spec, 3);
  const std::int64_t reps = spec.replicates;

  IndexEvaluator evaluator(spec.indices[1], spec.n - 1);
  EdgeScratch scratch;
  for (std::size_t i = 0; i < spec.param_grid.size(); ++i) {
    std::vector<double> column;
    for (std::int64_t j = 0; j < reps; ++j) {
      const SeededStream stream{spec.master_seed, std::uint64_t(i) * std::uint64_t(reps) +
                                                      std::uint64_t(j)};
      const Graph g = gen_er(ErParams{spec.n, spec.param_grid[i]}, stream);
      scratch.load(g);
      column.push_back(evaluator.value(scratch));
    }
    const double mean =
        kernels::compensated_sum(column.data(), column.size()) / double(reps);
    CHECK(mean == result.rows[i].index_stats[1].mean);
  }
}

TEST_CASE("column lookup") {
  const EnsembleSpec spec = small_spec();
  const EnsembleResult result = run_ensemble(spec);
  CHECK(result.column_of(IndexKind::parse("sp:2")) == 1);
  CHECK(result.stats_for(0, IndexKind::parse("sp:lim0")).mean ==
        result.rows[0].index_stats[0].mean);
  CHECK_THROWS_AS(result.column_of(IndexKind::parse("rr")), std::invalid_argument);
}

TEST_CASE("scaling transform divides by n and predicts d^2/2") {
  EnsembleSpec spec;
  spec.model = Model::er;
  spec.n = 50;
  spec.param_grid = {0.3, 1.0};
  spec.replicates = 4;
  spec.indices = {IndexKind::parse("sp:0.5")};
  const EnsembleResult result = run_ensemble(spec);
  const auto points = scaling_transform(result, spec.indices[0]);
  REQUIRE(points.size() == 2);
  for (std::size_t i = 0; i < points.size(); ++i) {
    CHECK(points[i].mean_degree == result.rows[i].mean_degree);
    CHECK(points[i].normalized_mean == result.rows[i].index_stats[0].mean / 50.0);
    CHECK(points[i].prediction ==
          result.rows[i].mean_degree * result.rows[i].mean_degree / 2.0);
  }
  // p=1: <index>/n is exactly d^2/2 (complete graph, all degrees n-1)
  CHECK(points[1].normalized_mean == points[1].prediction);
}

TEST_CASE("dense prediction") {
  CHECK(dense_prediction(Model::er, 1000, 0.5) == 124750125.0);
  CHECK(dense_prediction(Model::er, 10, 0.0) == 0.0);
  const double rg_full = dense_prediction(Model::rg, 100, 1.4142135623730951);
  CHECK(std::abs(rg_full - 490050.0) / 490050.0 <= 1e-9);
}

TEST_CASE("rg ensembles run end to end") {
  EnsembleSpec spec;
  spec.model = Model::rg;
  spec.n = 60;
  spec.param_grid = {0.12, 0.4};
  spec.replicates = 8;
  spec.master_seed = 99;
  spec.indices = {IndexKind::parse("sp:lim1"), IndexKind::parse("sp:2")};
  const EnsembleResult result = run_ensemble(spec, 2);
  REQUIRE(result.rows.size() == 2);
  CHECK(result.rows[0].mean_degree == 59.0 * g_of_r(0.12));
  // the identric-limit column sits far below the arithmetic-mean column
  CHECK(result.rows[1].index_stats[0].mean < result.rows[1].index_stats[1].mean);
  CHECK(result.rows[0].index_stats[1].std_err > 0.0);
}
