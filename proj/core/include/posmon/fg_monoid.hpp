#pragma once

#include <posmon/algebraic_real.hpp>
#include <posmon/factorization.hpp>
#include <posmon/rational.hpp>

#include <optional>
#include <string>
#include <vector>

namespace posmon {

// Ordered list of positive real constants declared linearly independent over
// the rationals. Generators of an FgMonoid are rational coordinate vectors
// over such a basis (e.g. basis (1, pi) for monoids built from pi).
struct BasisContext {
    std::vector<AlgebraicReal> constants;
    // true when independence is structural (a single rational constant);
    // otherwise independence is a caller declaration and is only recorded.
    bool independence_verified = false;

    std::size_t dimension() const { return constants.size(); }
};

// Validated basis. A multi-element all-rational basis is rejected: two
// rationals are never independent.
// Errors: EmptyGeneratorList (no constants), NonPositiveGenerator,
// InvalidArgument.
BasisContext make_basis(std::vector<AlgebraicReal> constants);

using Coordinates = std::vector<Rational>;

struct FgMonoid {
    BasisContext basis;
    std::vector<Coordinates> generators;
    std::vector<Coordinates> atoms;          // minimal generating set, cached
    std::vector<std::size_t> atom_indices;   // positions of atoms among generators
};

// Validates dimensions and strict positivity of every generator value (by
// interval evaluation over the basis enclosures), deduplicates, and computes
// the atom list.
// Errors: NonPositiveGenerator, EmptyGeneratorList, DimensionMismatch.
FgMonoid fg_construct(BasisContext basis, std::vector<Coordinates> generators);

const std::vector<Coordinates>& fg_atoms(const FgMonoid& m);

struct MembershipResult {
    bool member = false;
    std::optional<Factorization> witness;  // over the atom list
};

// Exact membership of the element with the given coordinates, by bounded
// depth-first search over atom multiplicities.
// Errors: DimensionMismatch.
MembershipResult fg_member(const FgMonoid& m, const Coordinates& x);

// Complete enumeration of Z(x) over the atoms (finite: the monoid is
// finitely generated). Always complete; empty when x is not a member.
FactorizationSet fg_factorizations(const FgMonoid& m, const Coordinates& x);

LengthSet fg_length_set(const FgMonoid& m, const Coordinates& x);

struct UfmCertificate {
    bool is_ufm = false;
    // is_ufm: rank equality note; otherwise a primitive integer kernel vector
    // of the atom matrix, normalized so its first nonzero entry is positive.
    std::vector<Int> kernel_vector;
    std::string note;
};

UfmCertificate fg_is_ufm(const FgMonoid& m);

struct HfmCertificate {
    bool is_hfm = false;
    // is_hfm: rational weights w over the basis with <w, atom> = 1 for every
    // atom; otherwise a kernel vector with nonzero coordinate sum.
    std::vector<Rational> functional;
    std::vector<Int> kernel_vector;
    std::string note;
};

HfmCertificate fg_is_hfm(const FgMonoid& m);

// Rank of the atom coordinate matrix over the rationals.
unsigned fg_rank(const FgMonoid& m);

// Exact rational-matrix helpers shared with the classifier.
unsigned matrix_rank(const std::vector<std::vector<Rational>>& rows);
std::vector<std::vector<Rational>> kernel_basis(const std::vector<std::vector<Rational>>& rows);
std::optional<std::vector<Rational>> solve_linear_system(
    const std::vector<std::vector<Rational>>& rows, const std::vector<Rational>& rhs);

}  // namespace posmon
