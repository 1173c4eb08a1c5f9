#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "spindex/random_models.hpp"
#include "spindex/run_config.hpp"

using namespace spindex;

TEST_CASE("defaults") {
  const RunConfig config;
  CHECK(config.subcommand == "sweep");
  CHECK(config.model == Model::er);
  CHECK(config.sizes == std::vector<std::int32_t>{125});
  CHECK(config.grid == "dlog:1:100:16");
  CHECK(config.replicates == 0);
  CHECK(config.seed == 42);
  CHECK(config.indices.size() == 4);
  CHECK(config.indices[0].label() == "sp:-inf");
  CHECK(config.indices[3].label() == "sp:+inf");
  CHECK(config.output == "-");
  CHECK(config.format == "csv");
  CHECK(config.threads == 1);
  CHECK_NOTHROW(config.validate());
}

TEST_CASE("text form round-trips") {
  RunConfig config;
  config.subcommand = "scaling";
  config.model = Model::rg;
  config.sizes = {125, 250};
  config.grid = "dlog:1:100:8";
  config.replicates = 500;
  config.seed = 97;
  config.indices = parse_index_list("sp:2,mso:1/3,rr");
  config.output = "out.csv";
  config.format = "json";
  config.threads = 4;

  const std::string text = config.to_text();
  const RunConfig parsed = RunConfig::parse_text(text);
  CHECK(parsed.to_text() == text);

  // round-trip is idempotent for the default config too
  const RunConfig defaults;
  CHECK(RunConfig::parse_text(defaults.to_text()).to_text() == defaults.to_text());
}

TEST_CASE("text form accepts comments and blanks") {
  const RunConfig parsed = RunConfig::parse_text(
      "# comment\n\nmodel=rg\n  seed = 7  \nthreads=2\n# trailing\n");
  CHECK(parsed.model == Model::rg);
  CHECK(parsed.seed == 7);
  CHECK(parsed.threads == 2);
  CHECK(parsed.grid == "dlog:1:100:16");  // untouched keys keep defaults
}

TEST_CASE("text form rejects bad input") {
  CHECK_THROWS_AS(RunConfig::parse_text("banana=1\n"), std::invalid_argument);
  CHECK_THROWS_AS(RunConfig::parse_text("subcommand=fly\n"), std::invalid_argument);
  CHECK_THROWS_AS(RunConfig::parse_text("format=xml\n"), std::invalid_argument);
  CHECK_THROWS_AS(RunConfig::parse_text("threads=0\n"), std::invalid_argument);
  CHECK_THROWS_AS(RunConfig::parse_text("threads=banana\n"), std::invalid_argument);
  CHECK_THROWS_AS(RunConfig::parse_text("n=0\n"), std::invalid_argument);
  CHECK_THROWS_AS(RunConfig::parse_text("replicates=-1\n"), std::invalid_argument);
  CHECK_THROWS_AS(RunConfig::parse_text("no equals sign\n"), std::invalid_argument);
  CHECK_THROWS_AS(RunConfig::parse_text("indices=\n"), std::invalid_argument);
}

TEST_CASE("index list parsing") {
  const auto indices = parse_index_list("sp:2, rr ,mso:1/3");
  REQUIRE(indices.size() == 3);
  CHECK(indices[0].label() == "sp:2");
  CHECK(indices[1].label() == "rr");
  CHECK(index_list_label(indices) == "sp:2,rr,mso:0.3333333333333333");
  CHECK_THROWS_AS(parse_index_list(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_index_list("sp:2,,rr"), std::invalid_argument);
}

TEST_CASE("explicit grids") {
  RunConfig config;
  config.grid = "0.1,0.25,0.5";
  CHECK(expand_grid(config, 125) == std::vector<double>{0.1, 0.25, 0.5});
  config.grid = "0.5";
  CHECK(expand_grid(config, 125) == std::vector<double>{0.5});
  config.grid = "1.2";
  CHECK_THROWS_AS(expand_grid(config, 125), std::invalid_argument);
  config.model = Model::rg;
  CHECK(expand_grid(config, 125) == std::vector<double>{1.2});
  config.grid = "1.5";
  CHECK_THROWS_AS(expand_grid(config, 125), std::invalid_argument);
}

TEST_CASE("ladder grids pin exact endpoints") {
  RunConfig config;
  config.grid = "lin:0:1:5";
  CHECK(expand_grid(config, 125) == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});

  config.grid = "log:0.01:1:3";
  const auto logs = expand_grid(config, 125);
  REQUIRE(logs.size() == 3);
  CHECK(logs.front() == 0.01);
  CHECK(logs[1] == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(logs.back() == 1.0);

  config.grid = "lin:0.3:0.3:1";
  CHECK(expand_grid(config, 125) == std::vector<double>{0.3});
}

TEST_CASE("degree-space grids map into the model parameter") {
  RunConfig config;
  config.grid = "dlog:1:100:12";
  const auto er = expand_grid(config, 125);
  REQUIRE(er.size() == 12);
  CHECK(er.front() == 1.0 / 124.0);
  CHECK(er.back() == 100.0 / 124.0);
  for (std::size_t i = 1; i < er.size(); ++i) CHECK(er[i] > er[i - 1]);

  config.model = Model::rg;
  config.grid = "dlog:1:100:8";
  const auto rg = expand_grid(config, 125);
  REQUIRE(rg.size() == 8);
  for (std::size_t i = 0; i < rg.size(); ++i) {
    const double d = std::pow(100.0, double(i) / 7.0);
    const double back = 124.0 * g_of_r(rg[i]);
    CHECK(std::abs(back - d) / d <= 1e-9);
  }
}

TEST_CASE("grid errors") {
  RunConfig config;
  config.grid = "dlin:1:200:4";  // d=200 infeasible for n=125
  CHECK_THROWS_AS(expand_grid(config, 125), std::invalid_argument);
  config.grid = "dlog:1:100:16";
  CHECK_NOTHROW(expand_grid(config, 125));
  CHECK_THROWS_AS(expand_grid(config, 1), std::invalid_argument);
  config.grid = "lin:0:1";
  CHECK_THROWS_AS(expand_grid(config, 125), std::invalid_argument);
  config.grid = "log:0:1:4";
  CHECK_THROWS_AS(expand_grid(config, 125), std::invalid_argument);
  config.grid = "banana";
  CHECK_THROWS_AS(expand_grid(config, 125), std::invalid_argument);
  config.grid = "lin:0:1:0";
  CHECK_THROWS_AS(expand_grid(config, 125), std::invalid_argument);
  config.grid = "";
  CHECK_THROWS_AS(expand_grid(config, 125), std::invalid_argument);

  RunConfig bad;
  bad.grid = "2.5";
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
