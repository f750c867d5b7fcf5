#pragma once

#include <posmon/algebraic_real.hpp>
#include <posmon/budget.hpp>
#include <posmon/factorization.hpp>
#include <posmon/report.hpp>

#include <optional>
#include <string>
#include <vector>

namespace posmon {

// Analysis of the additive monoid generated by the nonnegative powers of a
// positive real alpha.

// A checkable certificate that 1 is not an atom: 1 = sum c_i alpha^i with
// i >= 1 and sum c_i >= 2. Verified exactly on construction.
struct AntimatterWitness {
    std::vector<Int> coefficients;  // c_1 .. c_k

    Int coefficient_sum() const;
    // "1 = 2*a^1 + a^3" style rendering with 'a' for alpha.
    std::string relation() const;
};

// Re-checks the defining identity: divisibility of 1 - sum c_i x^i by the
// minimal polynomial (algebraic), or the exact rational identity (rational).
bool verify_antimatter_witness(const AlgebraicReal& alpha, const AntimatterWitness& w);

// The least n with alpha^n representable from strictly smaller powers.
struct SigmaResult {
    enum class Kind { Finite, AtLeast, Infinite };
    Kind kind = Kind::AtLeast;
    unsigned sigma = 0;          // Finite
    std::vector<Int> witness;    // Finite: c_0 .. c_{sigma-1}
    unsigned bound = 0;          // AtLeast: all n <= bound excluded by search
    std::string justification;   // Infinite: the forcing argument
};

// Errors: InvalidBudget when n_max == 0.
SigmaResult cs_sigma(const AlgebraicReal& alpha, unsigned n_max);

enum class OneAtomStatus { Atom, NotAtom, Unknown };

struct OneAtomResult {
    OneAtomStatus status = OneAtomStatus::Unknown;
    std::optional<AntimatterWitness> witness;  // NotAtom
    std::string provenance;
};

// Decides whether 1 is an atom. Unknown is the honest fallback when the
// sufficient conditions fail and the bounded witness search is exhausted.
OneAtomResult cs_one_is_atom(const AlgebraicReal& alpha, const SearchBudget& budget);

// Tri-state atomicity verdict, equal to cs_one_is_atom on decided inputs.
Verdict cs_is_atomic(const AlgebraicReal& alpha, const SearchBudget& budget);

struct AtomDescription {
    enum class Kind { AllPowers, PowersBelow, AllPowersUpTo, None, Undecided };
    Kind kind = Kind::Undecided;
    unsigned sigma = 0;  // PowersBelow
    unsigned bound = 0;  // AllPowersUpTo
    bool complete = true;
    std::optional<AntimatterWitness> witness;  // None
    std::string note;
};

AtomDescription cs_atoms(const AlgebraicReal& alpha, const SearchBudget& budget);

Verdict cs_finitely_generated(const AlgebraicReal& alpha, const SearchBudget& budget);

// Shift certificate p(x) - x^m q(x) in N0[x] built from the minimal pair;
// its existence yields a strictly ascending chain of principal ideals.
struct AccpObstruction {
    bool found = false;
    unsigned shift = 0;
    IntPolynomial certificate;
};

// Requires a rational or algebraic value in (0, 1).
// Errors: ValueNotInUnitInterval, TranscendentalInput.
AccpObstruction cs_accp_obstruction(const AlgebraicReal& alpha);

// Full seven-property report with rank, provenance and trust flags.
ClassificationReport cs_classify(const AlgebraicReal& alpha, const SearchBudget& budget);

// Z(target) over the atom powers of a rational base. Auto cap (nullopt)
// derives the exponent bound from q^i <= target and is permitted when q >= 1;
// an integer base collapses to the single atom 1.
// Errors: CapRequired (q < 1 with Auto), InvalidArgument.
FactorizationSet cs_factorizations(const Rational& q, const Rational& target,
                                   std::optional<unsigned> exponent_cap);

LengthSet cs_length_set(const Rational& q, const Rational& target,
                        std::optional<unsigned> exponent_cap);

}  // namespace posmon
