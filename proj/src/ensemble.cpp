#include "spindex/ensemble.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

#include "spindex/format.hpp"
#include "spindex/random_models.hpp"

namespace spindex {
namespace {

struct Failure {
  double param;
  std::int64_t replicate;
  std::string index_label;
  std::string what;
};

void validate(const EnsembleSpec& spec) {
  if (spec.n <= 0) throw std::invalid_argument("ensemble n must be positive");
  if (spec.param_grid.empty()) throw std::invalid_argument("ensemble grid is empty");
  if (spec.indices.empty()) throw std::invalid_argument("ensemble index list is empty");
  if (spec.replicates < 0) throw std::invalid_argument("replicates must be non-negative");
  if (spec.resolved_replicates() < 2)
    throw std::invalid_argument("need at least 2 replicates for a standard error");
  for (const double v : spec.param_grid) {
    if (spec.model == Model::er) {
      if (!(v >= 0.0 && v <= 1.0))
        throw std::invalid_argument("grid value " + format_shortest(v) + " outside [0, 1]");
    } else {
      if (!(v >= 0.0 && v <= std::sqrt(2.0)))
        throw std::invalid_argument("grid value " + format_shortest(v) + " outside [0, sqrt(2)]");
    }
  }
}

// Streaming Neumaier accumulator for the reduction passes.
struct CompensatedAcc {
  double sum = 0.0;
  double comp = 0.0;

  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

}  // namespace

std::string model_name(Model model) { return model == Model::er ? "er" : "rg"; }

Model parse_model(std::string_view name) {
  if (name == "er") return Model::er;
  if (name == "rg") return Model::rg;
  throw std::invalid_argument("unknown model '" + std::string(name) + "' (expected er or rg)");
}

std::int64_t EnsembleSpec::resolved_replicates() const {
  if (replicates > 0) return replicates;
  if (n <= 0) throw std::invalid_argument("ensemble n must be positive");
  return (10'000'000 + n - 1) / n;
}

std::size_t EnsembleResult::column_of(const IndexKind& kind) const {
  for (std::size_t k = 0; k < spec.indices.size(); ++k)
    if (spec.indices[k] == kind) return k;
  throw std::invalid_argument("index " + kind.label() + " was not part of this ensemble");
}

const IndexStats& EnsembleResult::stats_for(std::size_t row, const IndexKind& kind) const {
  return rows.at(row).index_stats[column_of(kind)];
}

double model_mean_degree(Model model, std::int32_t n, double param) {
  return model == Model::er ? mean_degree(ErParams{n, param}) : mean_degree(RgParams{n, param});
}

double dense_prediction(Model model, std::int32_t n, double param) {
  const double d = model_mean_degree(model, n, param);
  return 0.5 * n * d * d;
}

EnsembleResult run_ensemble(const EnsembleSpec& spec, int threads) {
  validate(spec);
  const std::int64_t reps = spec.resolved_replicates();
  const std::size_t grid_size = spec.param_grid.size();
  const std::size_t index_count = spec.indices.size();
  const std::int64_t total = static_cast<std::int64_t>(grid_size) * reps;

  const std::int64_t cells = static_cast<std::int64_t>(grid_size) * index_count * reps;
  if (cells > (std::int64_t{1} << 28))
    throw std::invalid_argument("ensemble too large: grid*indices*replicates exceeds 2^28 values");

  // Evaluators are shared read-only across workers; max degree is n-1.
  std::vector<IndexEvaluator> evaluators;
  evaluators.reserve(index_count);
  for (const IndexKind& kind : spec.indices) evaluators.emplace_back(kind, spec.n - 1);

  // values[(i*K + k)*R + j]: per-(grid point, index) columns contiguous in j.
  std::vector<double> values(static_cast<std::size_t>(cells));

  std::atomic<std::int64_t> next{0};
  std::atomic<bool> failed{false};
  std::mutex failure_mutex;
  std::optional<Failure> failure;

  auto worker = [&] {
    EdgeScratch scratch;
    constexpr std::int64_t chunk = 16;
    while (!failed.load(std::memory_order_relaxed)) {
      const std::int64_t begin = next.fetch_add(chunk, std::memory_order_relaxed);
      if (begin >= total) break;
      const std::int64_t end = std::min(begin + chunk, total);
      for (std::int64_t t = begin; t < end; ++t) {
        const std::size_t i = static_cast<std::size_t>(t / reps);
        const std::int64_t j = t % reps;
        const double param = spec.param_grid[i];
        std::size_t k = index_count;  // sentinel: failure before index loop
        try {
          const SeededStream stream{spec.master_seed, static_cast<std::uint64_t>(t)};
          const Graph g = spec.model == Model::er
                              ? gen_er(ErParams{spec.n, param}, stream)
                              : gen_rg(RgParams{spec.n, param}, stream);
          scratch.load(g);
          for (k = 0; k < index_count; ++k)
            values[(i * index_count + k) * reps + j] = evaluators[k].value(scratch);
        } catch (const std::exception& e) {
          std::lock_guard lock(failure_mutex);
          if (!failure)
            failure = Failure{param, j, k < index_count ? spec.indices[k].label() : "",
                              e.what()};
          failed.store(true, std::memory_order_relaxed);
          return;
        }
      }
    }
  };

  const int worker_count = static_cast<int>(
      std::min<std::int64_t>(std::max(threads, 1), std::max<std::int64_t>(total, 1)));
  if (worker_count <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(worker_count));
    for (int w = 0; w < worker_count; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  if (failure)
    throw std::runtime_error("ensemble aborted at param=" + format_shortest(failure->param) +
                             " replicate=" + std::to_string(failure->replicate) +
                             (failure->index_label.empty() ? "" : " index=" + failure->index_label) +
                             ": " + failure->what);

  EnsembleResult result;
  result.spec = spec;
  result.rows.resize(grid_size);
  for (std::size_t i = 0; i < grid_size; ++i) {
    GridPointStats& row = result.rows[i];
    row.param = spec.param_grid[i];
    row.mean_degree = model_mean_degree(spec.model, spec.n, row.param);
    row.replicates = reps;
    row.index_stats.resize(index_count);
    for (std::size_t k = 0; k < index_count; ++k) {
      const double* col = &values[(i * index_count + k) * reps];
      const double mean =
          kernels::compensated_sum(col, static_cast<std::size_t>(reps)) / static_cast<double>(reps);
      CompensatedAcc m2;
      for (std::int64_t j = 0; j < reps; ++j) {
        const double dev = col[j] - mean;
        m2.add(dev * dev);
      }
      const double sd = std::sqrt(std::max(m2.value(), 0.0) / static_cast<double>(reps - 1));
      row.index_stats[k] = {mean, sd / std::sqrt(static_cast<double>(reps))};
    }
  }
  return result;
}

std::vector<ScalingPoint> scaling_transform(const EnsembleResult& result, const IndexKind& kind) {
  const std::size_t k = result.column_of(kind);
  std::vector<ScalingPoint> points;
  points.reserve(result.rows.size());
  for (const GridPointStats& row : result.rows) {
    const double d = row.mean_degree;
    points.push_back({d, row.index_stats[k].mean / result.spec.n, d * d / 2.0});
  }
  return points;
}

}  // namespace spindex
