#pragma once

#include <string>
#include <string_view>

namespace spindex {

// Width of the ill-conditioned neighborhoods around the removable
// singularities of the Stolarsky family. Finite exponents inside the alpha=0
// band are rejected at construction (invalid for both mean families); the
// alpha=1 band is rejected by the Stolarsky evaluator only, so that power-mean
// uses of Finite(1) stay representable.
inline constexpr double kAlphaBand = 1e-6;

// Exponent parameter for the Stolarsky / power mean families. The two
// removable singularities are explicit variants (LimitZero, LimitOne) instead
// of magic finite values, and the directed limits are variants of their own.
class AlphaParam {
 public:
  enum class Kind { neg_infinity, limit_zero, limit_one, pos_infinity, finite };

  static AlphaParam neg_infinity() { return AlphaParam(Kind::neg_infinity, 0.0); }
  static AlphaParam limit_zero() { return AlphaParam(Kind::limit_zero, 0.0); }
  static AlphaParam limit_one() { return AlphaParam(Kind::limit_one, 1.0); }
  static AlphaParam pos_infinity() { return AlphaParam(Kind::pos_infinity, 0.0); }

  // Throws std::invalid_argument for non-finite values and |value| < kAlphaBand.
  static AlphaParam finite(double value);

  // Accepts "-inf", "inf"/"+inf", "lim0", "lim1", a decimal literal, or a
  // rational "p/q". Throws std::invalid_argument on anything else.
  static AlphaParam parse(std::string_view label);

  Kind kind() const { return kind_; }

  // Finite variant only; throws std::logic_error otherwise.
  double value() const;

  // Canonical text form; finite values use the shortest round-trip decimal,
  // so parse(label()) reproduces the parameter exactly.
  std::string label() const;

  friend bool operator==(const AlphaParam&, const AlphaParam&) = default;

 private:
  AlphaParam(Kind k, double v) : kind_(k), value_(v) {}

  Kind kind_;
  double value_;
};

}  // namespace spindex
