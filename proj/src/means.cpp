#include "spindex/means.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spindex {
namespace {

void require_positive(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0) || !std::isfinite(x) || !std::isfinite(y))
    throw std::domain_error("mean arguments must be positive finite reals");
}

// log(1 - e^u) for u < 0, switching forms at -ln 2 to keep full precision on
// both sides.
double log1mexp(double u) {
  return u > -0.6931471805599453 ? std::log(-std::expm1(u)) : std::log1p(-std::exp(u));
}

double stolarsky_finite(double x, double y, double alpha) {
  if (std::abs(alpha - 1.0) < kAlphaBand)
    throw std::invalid_argument("alpha too close to 1 (|alpha - 1| < 1e-6); use lim1");
  if (x < y) std::swap(x, y);
  const double lx = std::log(x);
  const double ly = std::log(y);
  double logs;
  if (alpha > 0.0) {
    logs = alpha * lx + log1mexp(alpha * (ly - lx)) - std::log(alpha) - std::log(x - y);
  } else {
    logs = alpha * ly + log1mexp(alpha * (lx - ly)) - std::log(-alpha) - std::log(x - y);
  }
  return std::exp(logs / (alpha - 1.0));
}

}  // namespace

double stolarsky_mean(double x, double y, const AlphaParam& alpha) {
  require_positive(x, y);
  if (x == y) return x;
  switch (alpha.kind()) {
    case AlphaParam::Kind::neg_infinity: return std::min(x, y);
    case AlphaParam::Kind::pos_infinity: return std::max(x, y);
    case AlphaParam::Kind::limit_zero: return (x - y) / (std::log(x) - std::log(y));
    case AlphaParam::Kind::limit_one: return (x - y) / (x * std::log(x) - y * std::log(y));
    case AlphaParam::Kind::finite: return stolarsky_finite(x, y, alpha.value());
  }
  throw std::logic_error("unreachable alpha kind");
}

double power_mean(double x, double y, const AlphaParam& alpha) {
  require_positive(x, y);
  switch (alpha.kind()) {
    case AlphaParam::Kind::neg_infinity: return std::min(x, y);
    case AlphaParam::Kind::pos_infinity: return std::max(x, y);
    case AlphaParam::Kind::limit_zero: return std::sqrt(x * y);
    case AlphaParam::Kind::limit_one:
      throw std::invalid_argument("power mean has no lim1 variant; use alpha = 1");
    case AlphaParam::Kind::finite: break;
  }
  if (x == y) return x;
  const double a = alpha.value();
  const double t = (std::pow(x, a) + std::pow(y, a)) / 2.0;
  if (std::isfinite(t) && t > 0.0) return std::pow(t, 1.0 / a);
  // Direct form over/underflowed; same value via logs.
  const double u = a * std::log(x);
  const double v = a * std::log(y);
  const double m = std::max(u, v);
  const double logt = m + std::log1p(std::exp(std::min(u, v) - m)) - 0.6931471805599453;
  return std::exp(logt / a);
}

double logarithmic_mean(double x, double y) {
  require_positive(x, y);
  if (x == y) return x;
  return (x - y) / (std::log(x) - std::log(y));
}

double idlog_mean(double x, double y) {
  require_positive(x, y);
  if (x == y) return x;
  return (x - y) / (x * std::log(x) - y * std::log(y));
}

double identric_mean(double x, double y) {
  require_positive(x, y);
  if (x == y) return x;
  return std::exp((x * std::log(x) - y * std::log(y)) / (x - y) - 1.0);
}

double closed_form_stolarsky(double x, double y, double alpha) {
  require_positive(x, y);
  if (x == y) return x;
  if (alpha == -4.0) {
    const double num = x * x * x + x * x * y + x * y * y + y * y * y;
    const double den = 4.0 * (x * x * x * x) * (y * y * y * y);
    return std::pow(num / den, -0.2);
  }
  if (alpha == -3.0) {
    const double num = x * x + x * y + y * y;
    const double den = 3.0 * (x * x * x) * (y * y * y);
    return std::pow(num / den, -0.25);
  }
  if (alpha == -2.0) {
    const double num = x + y;
    const double den = 2.0 * (x * x) * (y * y);
    return std::pow(num / den, -1.0 / 3.0);
  }
  if (alpha == -1.0) return std::sqrt(x * y);
  if (alpha == 0.5) {
    const double h = (std::sqrt(x) + std::sqrt(y)) / 2.0;
    return h * h;
  }
  if (alpha == 2.0) return (x + y) / 2.0;
  if (alpha == 3.0) return std::sqrt((x * x + x * y + y * y) / 3.0);
  if (alpha == 4.0) return std::cbrt((x * x * x + x * x * y + x * y * y + y * y * y) / 4.0);
  throw std::invalid_argument("no tabulated closed form for this alpha row");
}

}  // namespace spindex
