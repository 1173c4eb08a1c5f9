#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spindex/indices.hpp"

namespace spindex {

enum class Model { er, rg };

std::string model_name(Model model);
Model parse_model(std::string_view name);

// One sweep: a parameter grid for a single network size, a replicate budget,
// and the indices to average. Grid values are p for ER and r for RG.
struct EnsembleSpec {
  Model model = Model::er;
  std::int32_t n = 0;
  std::vector<double> param_grid;
  std::int64_t replicates = 0;  // 0 selects the default ceil(1e7 / n)
  std::uint64_t master_seed = 42;
  std::vector<IndexKind> indices;

  std::int64_t resolved_replicates() const;
};

struct IndexStats {
  double mean;
  double std_err;  // sample standard deviation / sqrt(replicates)
};

struct GridPointStats {
  double param;
  double mean_degree;  // analytic (n-1)p or (n-1)g(r), not the empirical mean
  std::int64_t replicates;
  std::vector<IndexStats> index_stats;  // parallel to EnsembleSpec::indices
};

struct EnsembleResult {
  EnsembleSpec spec;
  std::vector<GridPointStats> rows;

  // Column lookup by index kind; throws std::invalid_argument when the kind
  // was not part of the spec.
  std::size_t column_of(const IndexKind& kind) const;
  const IndexStats& stats_for(std::size_t row, const IndexKind& kind) const;
};

struct ScalingPoint {
  double mean_degree;
  double normalized_mean;  // <index> / n
  double prediction;       // <d>^2 / 2
};

// Deterministic parallel sweep. Replicate j of grid point i draws substream
// replicate_index = i * replicates + j regardless of worker count; per-
// replicate values land in indexed slots and are reduced in replicate order,
// so the result is identical for any `threads`. Index-evaluation failures
// abort the run with the offending (param, replicate, index) in the message.
EnsembleResult run_ensemble(const EnsembleSpec& spec, int threads = 1);

std::vector<ScalingPoint> scaling_transform(const EnsembleResult& result, const IndexKind& kind);

double model_mean_degree(Model model, std::int32_t n, double param);

// Dense-limit approximation n * <d>^2 / 2; independent of the index exponent.
double dense_prediction(Model model, std::int32_t n, double param);

}  // namespace spindex
