#include "kernels_detail.hpp"
#include "spindex/kernels.hpp"

namespace spindex::kernels {
namespace {

void eval_scalar(EdgeFunc f, const DegreeLogTables* tables, const std::int32_t* du,
                 const std::int32_t* dv, std::size_t m, double* out) {
  detail::eval_range(f, tables, du, dv, 0, m, out);
}

void gather_scalar(const double* table, std::int32_t stride, const std::int32_t* du,
                   const std::int32_t* dv, std::size_t m, double* out) {
  detail::gather_range(table, stride, du, dv, 0, m, out);
}

}  // namespace

const Backend& scalar_backend() {
  static const Backend backend{"scalar", eval_scalar, gather_scalar};
  return backend;
}

}  // namespace spindex::kernels
