#pragma once

#include "spindex/alpha.hpp"

namespace spindex {

// Stolarsky mean of two positive reals. Equal arguments return x exactly for
// every variant. Finite exponents are evaluated in the log domain, which
// stays fully conditioned out to |alpha| ~ 1e6 and down to the edges of the
// rejection bands; exponents with |alpha - 1| < kAlphaBand throw.
// The value is exactly symmetric in (x, y).
double stolarsky_mean(double x, double y, const AlphaParam& alpha);

// Power mean ((x^a + y^a)/2)^(1/a). LimitZero maps to sqrt(x*y); LimitOne is
// invalid (the family has no removable singularity at 1; alpha = 1 itself is
// fine). Falls back to a log-domain form when the direct pow over/underflows.
double power_mean(double x, double y, const AlphaParam& alpha);

// (x - y) / (ln x - ln y); x when equal.
double logarithmic_mean(double x, double y);

// (x - y) / (x ln x - y ln y); x when equal (the equal-argument branch takes
// precedence over the formula's own diagonal limit). This is the alpha->1
// evaluator used throughout; for x != y it is not bounded below by min(x, y).
double idlog_mean(double x, double y);

// e^(-1) * (x^x / y^y)^(1/(x - y)); x when equal. Diagnostic companion for
// the limit-consistency suite only.
double identric_mean(double x, double y);

// Independent elementary closed forms for alpha in {-4,-3,-2,-1,1/2,2,3,4},
// written without the generic log-domain route so the two paths can be
// cross-checked. Throws std::invalid_argument for any other row.
double closed_form_stolarsky(double x, double y, double alpha);

}  // namespace spindex
