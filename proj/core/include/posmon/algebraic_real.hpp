#pragma once

#include <posmon/int_polynomial.hpp>
#include <posmon/rational.hpp>

#include <functional>
#include <string>
#include <utility>

namespace posmon {

enum class AlgebraicKind { Rational, Algebraic, Transcendental };

enum class Irreducibility { Verified, Asserted };

enum class Comparison { Less, Equal, Greater };

// Given the current enclosure, returns a strictly tighter one that still
// contains the value. Supplied by the caller for transcendental constants.
using EnclosureRefiner =
    std::function<std::pair<Rational, Rational>(const Rational&, const Rational&)>;

// A strictly positive real number, represented exactly: a rational, an
// algebraic number given by its primitive integer minimal polynomial plus a
// rational isolating interval, or a declared-transcendental constant with a
// refinable enclosure.
class AlgebraicReal {
public:
    static AlgebraicReal from_rational(const Rational& value);
    static AlgebraicReal transcendental(std::string label, const Rational& lo, const Rational& hi,
                                        EnclosureRefiner refiner = nullptr);

    AlgebraicKind kind() const { return kind_; }
    bool is_rational() const { return kind_ == AlgebraicKind::Rational; }
    bool is_algebraic() const { return kind_ == AlgebraicKind::Algebraic; }
    bool is_transcendental() const { return kind_ == AlgebraicKind::Transcendental; }

    // Rational kind only.
    const Rational& rational_value() const;
    // Algebraic kind only.
    const IntPolynomial& minpoly() const;
    Irreducibility irreducibility() const;
    // Transcendental kind only.
    const std::string& label() const;

    // Primitive integer minimal polynomial; for the rational a/b this is
    // b*x - a. Rational and Algebraic kinds only.
    IntPolynomial minimal_polynomial() const;
    // Degree of the minimal polynomial (1 for rationals).
    unsigned algebraic_degree() const;

    // Rational enclosure lo <= value <= hi; a point interval for rationals,
    // open and strict for the other kinds.
    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }

    // One refinement step; returns an equal value with a tighter enclosure.
    // No-op for rationals and for transcendentals without a refiner.
    AlgebraicReal refined() const;
    // Refines until hi - lo <= width or max_steps refinements were made.
    AlgebraicReal refined_to_width(const Rational& width, int max_steps) const;

    // Exact sign of value - q. Equal is only possible for the Rational kind.
    // For the Transcendental kind, refines up to refine_budget steps and
    // throws Error{EnclosureBudgetExhausted} if q stays inside the enclosure.
    Comparison compare(const Rational& q, int refine_budget = 64) const;
    bool operator>(const Rational& q) const { return compare(q) == Comparison::Greater; }
    bool operator<(const Rational& q) const { return compare(q) == Comparison::Less; }

    std::string describe() const;

    friend bool operator==(const AlgebraicReal& a, const AlgebraicReal& b);

private:
    AlgebraicReal() = default;
    friend AlgebraicReal alg_make(const IntPolynomial& minpoly, const Rational& lo,
                                  const Rational& hi);

    AlgebraicKind kind_ = AlgebraicKind::Rational;
    Rational rational_;
    IntPolynomial minpoly_;
    Irreducibility irreducibility_ = Irreducibility::Verified;
    std::string label_;
    Rational lo_;
    Rational hi_;
    EnclosureRefiner refiner_;
};

// Validates and builds an algebraic real from a minimal polynomial and an
// isolating interval. Degree-1 input collapses to the Rational kind. For
// degree >= 2 the polynomial is normalized to its primitive form, checked for
// rational roots and repeated factors, checked to have exactly one root in
// (lo, hi) by Sturm counts, and checked irreducible by bounded factor search
// for degree <= 4 (degree >= 5 is recorded as asserted).
// Errors: NoRootInInterval, MultipleRootsInInterval, ReducibleByRationalRoot,
// NonPositiveEnclosure.
AlgebraicReal alg_make(const IntPolynomial& minpoly, const Rational& lo, const Rational& hi);

// Sign split of the content-normalized minimal polynomial:
// scale * m(x) = plus_part - minus_part with disjoint supports and
// nonnegative coefficients on both sides.
struct MinimalPair {
    Int scale;
    IntPolynomial plus_part;
    IntPolynomial minus_part;
};

// Rational and Algebraic kinds only; errors TranscendentalInput otherwise.
MinimalPair minimal_pair(const AlgebraicReal& a);

// Rigorous enclosure of pi with about `digits` correct decimal digits,
// computed by a Machin arctangent series in integer arithmetic.
std::pair<Rational, Rational> pi_enclosure(unsigned digits);

// Refinement rule backed by pi_enclosure.
EnclosureRefiner pi_refiner();

// pi as a declared-transcendental constant with a working refiner.
AlgebraicReal make_pi();

}  // namespace posmon
