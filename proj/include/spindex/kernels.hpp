#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace spindex::kernels {

// Per-edge functionals with dedicated batch kernels. Index families without a
// row here are evaluated through a precomputed degree-pair table (see the
// gather entry point below).
enum class EdgeFunc : int {
  min_degree,    // min(du, dv)
  max_degree,    // max(du, dv)
  half_sum,      // (du + dv) / 2
  degree_sum,    // du + dv
  sqrt_product,  // sqrt(du * dv)
  log_mean,      // (du - dv) / (log du - log dv); du when equal
  idlog_mean,    // (du - dv) / (du log du - dv log dv); du when equal
};

// log(d) and d*log(d) indexed by degree. Both backends read these tables, so
// the log-based kernels are gathers over identical values and stay bit-exact
// across backends. Index 0 is present but never read (edge endpoints have
// degree >= 1).
struct DegreeLogTables {
  explicit DegreeLogTables(std::int32_t max_degree);
  std::vector<double> log_d;
  std::vector<double> d_log_d;
};

// eval writes f(du[i], dv[i]) to out[i]; gather writes table[du[i]*stride + dv[i]].
// Every backend produces bit-identical out buffers for the same inputs; the
// vector paths use only correctly-rounded operations and the same tables as
// the scalar path.
struct Backend {
  std::string_view name;
  void (*eval)(EdgeFunc f, const DegreeLogTables* tables, const std::int32_t* du,
               const std::int32_t* dv, std::size_t m, double* out);
  void (*gather)(const double* table, std::int32_t stride, const std::int32_t* du,
                 const std::int32_t* dv, std::size_t m, double* out);
};

const Backend& scalar_backend();

// Best SIMD backend supported by this CPU, or nullptr when only scalar is
// available.
const Backend* simd_backend();

// Currently selected backend; defaults to simd_backend() when present.
const Backend& active_backend();

// "auto", "scalar", or a SIMD backend name ("avx2", "neon"). Throws
// std::invalid_argument for unknown names and std::runtime_error for backends
// this machine cannot run.
void select_backend(std::string_view name);

// Names accepted by select_backend on this machine.
std::vector<std::string> available_backends();

// Neumaier-compensated serial sum. This is the single reduction used for
// every index evaluation, shared by all backends.
double compensated_sum(const double* v, std::size_t m);

}  // namespace spindex::kernels
