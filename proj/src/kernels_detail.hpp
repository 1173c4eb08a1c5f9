#pragma once

#include <algorithm>
#include <cmath>

#include "spindex/kernels.hpp"

// Reference element-wise loops, shared by the scalar backend and by the SIMD
// backends' tail handling so there is exactly one definition of each
// functional. All operations here are correctly rounded, which is what makes
// the vector variants bit-exact.

namespace spindex::kernels::detail {

inline void eval_range(EdgeFunc f, const DegreeLogTables* tables, const std::int32_t* du,
                       const std::int32_t* dv, std::size_t from, std::size_t to, double* out) {
  switch (f) {
    case EdgeFunc::min_degree:
      for (std::size_t i = from; i < to; ++i)
        out[i] = static_cast<double>(std::min(du[i], dv[i]));
      break;
    case EdgeFunc::max_degree:
      for (std::size_t i = from; i < to; ++i)
        out[i] = static_cast<double>(std::max(du[i], dv[i]));
      break;
    case EdgeFunc::half_sum:
      for (std::size_t i = from; i < to; ++i)
        out[i] = (static_cast<double>(du[i]) + static_cast<double>(dv[i])) * 0.5;
      break;
    case EdgeFunc::degree_sum:
      for (std::size_t i = from; i < to; ++i)
        out[i] = static_cast<double>(du[i]) + static_cast<double>(dv[i]);
      break;
    case EdgeFunc::sqrt_product:
      for (std::size_t i = from; i < to; ++i)
        out[i] = std::sqrt(static_cast<double>(du[i]) * static_cast<double>(dv[i]));
      break;
    case EdgeFunc::log_mean: {
      const double* ld = tables->log_d.data();
      for (std::size_t i = from; i < to; ++i) {
        const std::int32_t a = du[i];
        const std::int32_t b = dv[i];
        out[i] = a == b ? static_cast<double>(a)
                        : (static_cast<double>(a) - static_cast<double>(b)) / (ld[a] - ld[b]);
      }
      break;
    }
    case EdgeFunc::idlog_mean: {
      const double* dld = tables->d_log_d.data();
      for (std::size_t i = from; i < to; ++i) {
        const std::int32_t a = du[i];
        const std::int32_t b = dv[i];
        out[i] = a == b ? static_cast<double>(a)
                        : (static_cast<double>(a) - static_cast<double>(b)) / (dld[a] - dld[b]);
      }
      break;
    }
  }
}

inline void gather_range(const double* table, std::int32_t stride, const std::int32_t* du,
                         const std::int32_t* dv, std::size_t from, std::size_t to, double* out) {
  for (std::size_t i = from; i < to; ++i)
    out[i] = table[static_cast<std::size_t>(du[i]) * stride + dv[i]];
}

}  // namespace spindex::kernels::detail
