#pragma once

#include <posmon/int_polynomial.hpp>
#include <posmon/rational.hpp>

#include <utility>
#include <vector>

namespace posmon {

// Number of sign changes over consecutive nonzero coefficients (the Descartes
// statistic). Defined as 0 for the zero polynomial.
unsigned poly_sign_variations(const IntPolynomial& p);

// Sturm chain of the squarefree part of p, primitive integer representatives.
std::vector<IntPolynomial> sturm_chain(const IntPolynomial& p);

// Number of distinct real roots in the open interval (lo, hi), exact.
// Requires p nonzero; endpoints may or may not be roots.
unsigned count_roots_in_open_interval(const IntPolynomial& p, const Rational& lo,
                                      const Rational& hi);

// Distinct real roots in (0, +inf).
unsigned poly_positive_root_count(const IntPolynomial& p);

// Roots in (0, +inf) counted with multiplicity.
unsigned poly_positive_root_count_with_multiplicity(const IntPolynomial& p);

// Shrinks (lo, hi), assumed to isolate exactly one root of the squarefree p
// with no rational roots inside, by one bisection step.
std::pair<Rational, Rational> bisect_root_interval(const IntPolynomial& p, const Rational& lo,
                                                   const Rational& hi);

}  // namespace posmon
