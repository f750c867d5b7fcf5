#pragma once

#include <posmon/error.hpp>
#include <posmon/integer.hpp>

#include <compare>
#include <iosfwd>
#include <string>

namespace posmon {

// Exact rational in lowest terms with positive denominator. The class itself
// is signed so the linear algebra and interval arithmetic inside the library
// can use it freely; monoid elements are constructed through rat_make, which
// enforces the nonnegative domain contract.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(const Int& n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(long long n) : num_(n), den_(1) {}   // NOLINT(google-explicit-constructor)
    Rational(const Int& n, const Int& d);

    // n(q) and d(q): numerator and denominator in lowest terms. num() keeps
    // the sign; for domain values (>= 0) it equals n(q) exactly.
    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_positive() const { return num_ > 0; }
    bool is_negative() const { return num_ < 0; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        Int lhs = a.num_ * b.den_;
        Int rhs = b.num_ * a.den_;
        return lhs < rhs ? std::strong_ordering::less
                         : (lhs > rhs ? std::strong_ordering::greater
                                      : std::strong_ordering::equal);
    }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    // Largest integer <= value / smallest integer >= value.
    Int floor() const;
    Int ceil() const;

    // Power with nonnegative integer exponent.
    Rational pow(unsigned exponent) const;

    // "a/b", or just "a" when the denominator is 1.
    std::string to_string() const;

    // Parses "a/b" or "a". Throws Error{ParseError}.
    static Rational from_string(const std::string& text);

private:
    void normalize();

    Int num_;
    Int den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

// Canonical constructor for monoid elements: value must be >= 0.
// Errors: ZeroDenominator, NegativeValue.
Rational rat_make(const Int& numerator, const Int& denominator);

}  // namespace posmon
