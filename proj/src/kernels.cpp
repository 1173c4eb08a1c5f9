#include "spindex/kernels.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>

#include "kernels_backends.hpp"

namespace spindex::kernels {

DegreeLogTables::DegreeLogTables(std::int32_t max_degree) {
  if (max_degree < 0) throw std::invalid_argument("max_degree must be non-negative");
  const std::size_t size = static_cast<std::size_t>(max_degree) + 1;
  log_d.resize(size, 0.0);
  d_log_d.resize(size, 0.0);
  for (std::size_t d = 1; d < size; ++d) {
    log_d[d] = std::log(static_cast<double>(d));
    d_log_d[d] = static_cast<double>(d) * log_d[d];
  }
}

const Backend* simd_backend() {
#if defined(SPINDEX_HAVE_AVX2)
  if (avx2_supported()) return &avx2_backend();
#endif
#if defined(SPINDEX_HAVE_NEON)
  return &neon_backend();
#endif
  return nullptr;
}

namespace {
std::atomic<const Backend*> g_active{nullptr};
}

const Backend& active_backend() {
  const Backend* b = g_active.load(std::memory_order_acquire);
  if (!b) {
    b = simd_backend();
    if (!b) b = &scalar_backend();
    g_active.store(b, std::memory_order_release);
  }
  return *b;
}

void select_backend(std::string_view name) {
  if (name == "auto") {
    const Backend* b = simd_backend();
    g_active.store(b ? b : &scalar_backend(), std::memory_order_release);
    return;
  }
  if (name == "scalar") {
    g_active.store(&scalar_backend(), std::memory_order_release);
    return;
  }
  if (name == "avx2" || name == "neon") {
    const Backend* b = simd_backend();
    if (b && b->name == name) {
      g_active.store(b, std::memory_order_release);
      return;
    }
    throw std::runtime_error("kernel backend '" + std::string(name) +
                             "' is not supported on this machine");
  }
  throw std::invalid_argument("unknown kernel backend '" + std::string(name) +
                              "' (expected auto, scalar, avx2, or neon)");
}

std::vector<std::string> available_backends() {
  std::vector<std::string> names{"auto", "scalar"};
  if (const Backend* b = simd_backend()) names.emplace_back(b->name);
  return names;
}

double compensated_sum(const double* v, std::size_t m) {
  double sum = 0.0;
  double comp = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double t = sum + v[i];
    if (std::abs(sum) >= std::abs(v[i]))
      comp += (sum - t) + v[i];
    else
      comp += (v[i] - t) + sum;
    sum = t;
  }
  return sum + comp;
}

}  // namespace spindex::kernels
