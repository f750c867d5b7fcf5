#pragma once

#include <posmon/integer.hpp>
#include <posmon/rational.hpp>

#include <iosfwd>
#include <optional>
#include <vector>

namespace posmon {

// Univariate polynomial over the integers, constant term first, trailing
// zeros stripped. The zero polynomial has an empty coefficient vector.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coefficients);
    static IntPolynomial constant(const Int& c);
    // x^k with coefficient c.
    static IntPolynomial monomial(const Int& c, std::size_t k);

    const std::vector<Int>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is reported as -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Int coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Int(0); }
    const Int& leading() const;
    Int constant_term() const { return coeff(0); }

    // Exponents of the nonzero monomials, ascending.
    std::vector<std::size_t> support() const;

    // gcd of all coefficients (0 for the zero polynomial).
    Int content() const;
    // content-1 version with positive leading coefficient.
    IntPolynomial primitive() const;

    IntPolynomial derivative() const;

    Rational evaluate(const Rational& x) const;
    // Sign of the value at x, computed without forming the quotient.
    int sign_at(const Rational& x) const;
    // Sign of the value as x -> +infinity.
    int sign_at_pos_infinity() const;

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    IntPolynomial operator-() const;
    IntPolynomial multiplied_by(const Int& scalar) const;
    // Multiplies by x^k.
    IntPolynomial shifted(std::size_t k) const;

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

    // Quotient when divisor divides *this exactly over Q[x] and the quotient
    // is integral; nullopt otherwise.
    std::optional<IntPolynomial> divide_exact(const IntPolynomial& divisor) const;
    bool divisible_by(const IntPolynomial& divisor) const;

    // Human form, e.g. "x^2 - 4x + 1".
    std::string to_string() const;

private:
    void strip();
    std::vector<Int> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

// Primitive gcd with positive leading coefficient (over Q, returned as the
// primitive integer representative). gcd(0, 0) = 0.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

// Primitive squarefree part: product of the distinct irreducible factors.
IntPolynomial squarefree_part(const IntPolynomial& p);

// Yun decomposition: returns s_1, s_2, ... with p ~ prod s_i^i up to a
// rational constant; each s_i primitive and squarefree.
std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& p);

}  // namespace posmon
