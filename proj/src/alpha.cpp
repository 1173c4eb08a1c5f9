#include "spindex/alpha.hpp"

#include <cmath>
#include <stdexcept>

#include "spindex/format.hpp"

namespace spindex {

AlphaParam AlphaParam::finite(double value) {
  if (!std::isfinite(value))
    throw std::invalid_argument("alpha must be finite; use the -inf/+inf variants");
  if (std::abs(value) < kAlphaBand)
    throw std::invalid_argument("alpha too close to 0 (|alpha| < 1e-6); use lim0");
  return AlphaParam(Kind::finite, value);
}

AlphaParam AlphaParam::parse(std::string_view label) {
  if (label == "-inf") return neg_infinity();
  if (label == "inf" || label == "+inf") return pos_infinity();
  if (label == "lim0") return limit_zero();
  if (label == "lim1") return limit_one();
  if (auto slash = label.find('/'); slash != std::string_view::npos) {
    const double num = parse_double(label.substr(0, slash));
    const double den = parse_double(label.substr(slash + 1));
    if (den == 0.0) throw std::invalid_argument("alpha denominator is zero");
    return finite(num / den);
  }
  return finite(parse_double(label));
}

double AlphaParam::value() const {
  if (kind_ != Kind::finite) throw std::logic_error("alpha has no finite value");
  return value_;
}

std::string AlphaParam::label() const {
  switch (kind_) {
    case Kind::neg_infinity: return "-inf";
    case Kind::limit_zero: return "lim0";
    case Kind::limit_one: return "lim1";
    case Kind::pos_infinity: return "+inf";
    case Kind::finite: return format_shortest(value_);
  }
  return {};
}

}  // namespace spindex
