#if defined(SPINDEX_HAVE_AVX2)

#include <immintrin.h>

#include "kernels_backends.hpp"
#include "kernels_detail.hpp"

// 4-wide AVX2 variants. Everything here is add/sub/mul/div/sqrt/min/max,
// table gathers, and blends, all correctly rounded or exact, so each lane
// matches the scalar loop bit-for-bit. Tails run the shared scalar range.

namespace spindex::kernels {
namespace {

inline __m128i load_i32x4(const std::int32_t* p) {
  return _mm_loadu_si128(reinterpret_cast<const __m128i*>(p));
}

void eval_avx2(EdgeFunc f, const DegreeLogTables* tables, const std::int32_t* du,
               const std::int32_t* dv, std::size_t m, double* out) {
  std::size_t i = 0;
  switch (f) {
    case EdgeFunc::min_degree:
      for (; i + 4 <= m; i += 4) {
        const __m256d x = _mm256_cvtepi32_pd(load_i32x4(du + i));
        const __m256d y = _mm256_cvtepi32_pd(load_i32x4(dv + i));
        _mm256_storeu_pd(out + i, _mm256_min_pd(x, y));
      }
      break;
    case EdgeFunc::max_degree:
      for (; i + 4 <= m; i += 4) {
        const __m256d x = _mm256_cvtepi32_pd(load_i32x4(du + i));
        const __m256d y = _mm256_cvtepi32_pd(load_i32x4(dv + i));
        _mm256_storeu_pd(out + i, _mm256_max_pd(x, y));
      }
      break;
    case EdgeFunc::half_sum: {
      const __m256d half = _mm256_set1_pd(0.5);
      for (; i + 4 <= m; i += 4) {
        const __m256d x = _mm256_cvtepi32_pd(load_i32x4(du + i));
        const __m256d y = _mm256_cvtepi32_pd(load_i32x4(dv + i));
        _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_add_pd(x, y), half));
      }
      break;
    }
    case EdgeFunc::degree_sum:
      for (; i + 4 <= m; i += 4) {
        const __m256d x = _mm256_cvtepi32_pd(load_i32x4(du + i));
        const __m256d y = _mm256_cvtepi32_pd(load_i32x4(dv + i));
        _mm256_storeu_pd(out + i, _mm256_add_pd(x, y));
      }
      break;
    case EdgeFunc::sqrt_product:
      for (; i + 4 <= m; i += 4) {
        const __m256d x = _mm256_cvtepi32_pd(load_i32x4(du + i));
        const __m256d y = _mm256_cvtepi32_pd(load_i32x4(dv + i));
        _mm256_storeu_pd(out + i, _mm256_sqrt_pd(_mm256_mul_pd(x, y)));
      }
      break;
    case EdgeFunc::log_mean: {
      const double* ld = tables->log_d.data();
      for (; i + 4 <= m; i += 4) {
        const __m128i ia = load_i32x4(du + i);
        const __m128i ib = load_i32x4(dv + i);
        const __m256d x = _mm256_cvtepi32_pd(ia);
        const __m256d y = _mm256_cvtepi32_pd(ib);
        const __m256d la = _mm256_i32gather_pd(ld, ia, 8);
        const __m256d lb = _mm256_i32gather_pd(ld, ib, 8);
        const __m256d q = _mm256_div_pd(_mm256_sub_pd(x, y), _mm256_sub_pd(la, lb));
        const __m256d eq = _mm256_cmp_pd(x, y, _CMP_EQ_OQ);
        _mm256_storeu_pd(out + i, _mm256_blendv_pd(q, x, eq));
      }
      break;
    }
    case EdgeFunc::idlog_mean: {
      const double* dld = tables->d_log_d.data();
      for (; i + 4 <= m; i += 4) {
        const __m128i ia = load_i32x4(du + i);
        const __m128i ib = load_i32x4(dv + i);
        const __m256d x = _mm256_cvtepi32_pd(ia);
        const __m256d y = _mm256_cvtepi32_pd(ib);
        const __m256d la = _mm256_i32gather_pd(dld, ia, 8);
        const __m256d lb = _mm256_i32gather_pd(dld, ib, 8);
        const __m256d q = _mm256_div_pd(_mm256_sub_pd(x, y), _mm256_sub_pd(la, lb));
        const __m256d eq = _mm256_cmp_pd(x, y, _CMP_EQ_OQ);
        _mm256_storeu_pd(out + i, _mm256_blendv_pd(q, x, eq));
      }
      break;
    }
  }
  detail::eval_range(f, tables, du, dv, i, m, out);
}

void gather_avx2(const double* table, std::int32_t stride, const std::int32_t* du,
                 const std::int32_t* dv, std::size_t m, double* out) {
  std::size_t i = 0;
  const __m128i vstride = _mm_set1_epi32(stride);
  for (; i + 4 <= m; i += 4) {
    const __m128i ia = load_i32x4(du + i);
    const __m128i ib = load_i32x4(dv + i);
    const __m128i idx = _mm_add_epi32(_mm_mullo_epi32(ia, vstride), ib);
    _mm256_storeu_pd(out + i, _mm256_i32gather_pd(table, idx, 8));
  }
  detail::gather_range(table, stride, du, dv, i, m, out);
}

}  // namespace

const Backend& avx2_backend() {
  static const Backend backend{"avx2", eval_avx2, gather_avx2};
  return backend;
}

bool avx2_supported() { return __builtin_cpu_supports("avx2") != 0; }

}  // namespace spindex::kernels

#endif  // SPINDEX_HAVE_AVX2
