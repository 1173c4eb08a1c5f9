#if defined(SPINDEX_HAVE_NEON)

#include <arm_neon.h>

#include "kernels_backends.hpp"
#include "kernels_detail.hpp"

// 2-wide NEON variants for the arithmetic kernels. NEON has no gather, so the
// table-driven kernels (log_mean, idlog_mean, pair-table gathers) run the
// shared scalar range; the vectorized ops are all correctly rounded, keeping
// lanes bit-exact with the scalar backend.

namespace spindex::kernels {
namespace {

inline float64x2_t load_f64x2(const std::int32_t* p) {
  const int32x2_t i32 = vld1_s32(p);
  return vcvtq_f64_s64(vmovl_s32(i32));
}

void eval_neon(EdgeFunc f, const DegreeLogTables* tables, const std::int32_t* du,
               const std::int32_t* dv, std::size_t m, double* out) {
  std::size_t i = 0;
  switch (f) {
    case EdgeFunc::min_degree:
      for (; i + 2 <= m; i += 2)
        vst1q_f64(out + i, vminq_f64(load_f64x2(du + i), load_f64x2(dv + i)));
      break;
    case EdgeFunc::max_degree:
      for (; i + 2 <= m; i += 2)
        vst1q_f64(out + i, vmaxq_f64(load_f64x2(du + i), load_f64x2(dv + i)));
      break;
    case EdgeFunc::half_sum: {
      const float64x2_t half = vdupq_n_f64(0.5);
      for (; i + 2 <= m; i += 2)
        vst1q_f64(out + i, vmulq_f64(vaddq_f64(load_f64x2(du + i), load_f64x2(dv + i)), half));
      break;
    }
    case EdgeFunc::degree_sum:
      for (; i + 2 <= m; i += 2)
        vst1q_f64(out + i, vaddq_f64(load_f64x2(du + i), load_f64x2(dv + i)));
      break;
    case EdgeFunc::sqrt_product:
      for (; i + 2 <= m; i += 2)
        vst1q_f64(out + i, vsqrtq_f64(vmulq_f64(load_f64x2(du + i), load_f64x2(dv + i))));
      break;
    case EdgeFunc::log_mean:
    case EdgeFunc::idlog_mean:
      break;  // scalar range below handles the whole buffer
  }
  detail::eval_range(f, tables, du, dv, i, m, out);
}

void gather_neon(const double* table, std::int32_t stride, const std::int32_t* du,
                 const std::int32_t* dv, std::size_t m, double* out) {
  detail::gather_range(table, stride, du, dv, 0, m, out);
}

}  // namespace

const Backend& neon_backend() {
  static const Backend backend{"neon", eval_neon, gather_neon};
  return backend;
}

}  // namespace spindex::kernels

#endif  // SPINDEX_HAVE_NEON
