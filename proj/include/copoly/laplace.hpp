#pragma once

#include "copoly/copolynomial.hpp"
#include "copoly/diff_operator.hpp"
#include "copoly/series.hpp"

namespace copoly {

// Formal Laplace transform: coefficients (T, x^alpha)/alpha! for
// |alpha| <= truncation. Requires a ring containing the rationals.
TruncatedSeries laplace(const Copolynomial& t, unsigned truncation);

// Laplace transform of a polynomial: coefficient alpha! c_alpha at Laurent
// exponent -alpha - (1,...,1).
LaurentPoly laplace_poly(const Polynomial& p);

// Formal residue of the product; equals (T, p) by the Parseval identity.
// Throws TruncationTooLow when the series does not reach the degrees the
// Laurent factor needs.
RingElement residue_pairing(const TruncatedSeries& ts, const LaurentPoly& ps);

// Truncated Cauchy product (same n, same truncation degree).
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

// Checks  L(FT) = phi(-z) L(T)  up to the truncation degree, where phi is
// the symbol of F.
bool check_symbol_relation(const DiffOperator& op, const Copolynomial& t, unsigned truncation);

} // namespace copoly
