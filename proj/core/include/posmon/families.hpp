#pragma once

#include <posmon/factorization.hpp>
#include <posmon/rational.hpp>
#include <posmon/report.hpp>

#include <optional>
#include <string>
#include <vector>

namespace posmon {

// Monoid generated by unit fractions 1/d_1, 1/d_2, ... with d_1 < d_2 < ...,
// d_1 >= 2 and pairwise coprime moduli. Either an explicit finite list or the
// primes, materialized on demand.
class UnitFractionScheme {
public:
    static UnitFractionScheme primes();
    // Errors: InvalidArgument when the list is not strictly increasing with
    // d_1 >= 2 and pairwise coprime.
    static UnitFractionScheme explicit_list(std::vector<Int> moduli);

    bool is_primes() const { return primes_; }
    // Number of moduli available (unbounded for the primes rule).
    bool has_index(std::size_t i) const;
    // d_i, 1-based. Materializes prime prefixes as needed.
    Int modulus(std::size_t i) const;
    // Smallest k with den | d_1 * ... * d_k, if any such prefix exists.
    std::optional<std::size_t> prefix_covering(const Int& den) const;

    std::string describe() const;
    const std::vector<Int>& known_prefix() const { return moduli_; }

    friend bool operator==(const UnitFractionScheme& a, const UnitFractionScheme& b) {
        return a.primes_ == b.primes_ && (a.primes_ || a.moduli_ == b.moduli_);
    }

private:
    UnitFractionScheme() = default;
    void extend_primes(std::size_t count) const;

    bool primes_ = false;
    mutable std::vector<Int> moduli_;
};

// q = integer_part + sum residues[i] / d_{i+1} with residues[i] in
// [0, d_{i+1} - 1]; unique when it exists. digit_sum = S(q), integer_part =
// N(q): the lexicographic measure that proves the ACCP.
struct CanonicalDecomposition {
    Int integer_part;            // N(q); negative exactly when q is not a member
    std::vector<Int> residues;   // c_1 .. c_k
    Int digit_sum;               // S(q)

    bool in_monoid() const { return integer_part >= 0; }
};

// Errors: DenominatorOutsideScheme when den(q) has a square factor or a
// factor outside the scheme. A negative integer_part signals NotInMonoid.
CanonicalDecomposition uf_canonical(const UnitFractionScheme& scheme, const Rational& q);

// Divisibility a |_M b: the difference must be a member.
bool uf_divides(const UnitFractionScheme& scheme, const Rational& a, const Rational& b);

// (N(q), S(q)); errors NotInMonoid when q is not a member.
std::pair<Int, Int> uf_monotones(const UnitFractionScheme& scheme, const Rational& q);

// {d_1, ..., d_k} as a certified subset of the lengths of 1 (each d_n comes
// with the witness 1 = d_n * (1/d_n)); flagged incomplete.
LengthSet uf_lengths_of_one(const UnitFractionScheme& scheme, std::size_t k);

// Interval monoids: Ms = {0} u [s, inf) for s > 0, and
// Sr = N0 u [r, inf) for r > 1.
struct IntervalMonoidSpec {
    enum class Kind { Ms, Sr };
    Kind kind = Kind::Ms;
    Rational parameter;  // s or r

    static IntervalMonoidSpec ms(const Rational& s);
    static IntervalMonoidSpec sr(const Rational& r);

    bool contains(const Rational& x) const;
    friend bool operator==(const IntervalMonoidSpec&, const IntervalMonoidSpec&) = default;
};

// Atom sets: [s, 2s) for Ms; ({1} u [r, r+1)) minus the ceiling of r for Sr.
bool interval_is_atom(const IntervalMonoidSpec& spec, const Rational& x);

// L(b) for Ms: {0} at b = 0, otherwise all n >= 1 with n*s <= b < 2*n*s.
// Every n in the set has the witness factorization of n copies of b/n.
// Errors: NotAMember (0 < b < s), InvalidArgument (Sr input).
LengthSet interval_length_set(const IntervalMonoidSpec& spec, const Rational& b);

// For Ms: |Z(b)| is infinite exactly when b > 2s (one-parameter family of
// two-atom splits). Errors: NotAMember, InvalidArgument (Sr input).
bool interval_has_infinite_Z(const IntervalMonoidSpec& spec, const Rational& b);

// Property propagation across a direct sum: every part is divisor-closed in
// the sum and lengths add componentwise. Ranks add.
// Errors: EmptyPartList.
ClassificationReport direct_sum_report(const std::vector<ClassificationReport>& parts);

}  // namespace posmon
