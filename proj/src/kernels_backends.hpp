#pragma once

#include "spindex/kernels.hpp"

// SIMD backend accessors, defined only in the translation units that CMake
// compiles for the matching architecture (SPINDEX_HAVE_* is set alongside).

namespace spindex::kernels {

#if defined(SPINDEX_HAVE_AVX2)
const Backend& avx2_backend();
bool avx2_supported();
#endif

#if defined(SPINDEX_HAVE_NEON)
const Backend& neon_backend();
#endif

}  // namespace spindex::kernels
