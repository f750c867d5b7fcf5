#include <posmon/rational.hpp>

#include <ostream>

namespace posmon {

Rational::Rational(const Int& n, const Int& d) : num_(n), den_(d) {
    if (den_ == 0) fail(ErrorCode::ZeroDenominator, "denominator is zero");
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    Int g = int_gcd(int_abs(num_), den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) fail(ErrorCode::ZeroDenominator, "division by zero rational");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

Int Rational::floor() const {
    if (num_ >= 0) return num_ / den_;
    Int q = num_ / den_;
    if (q * den_ != num_) --q;
    return q;
}

Int Rational::ceil() const { return -(-*this).floor(); }

Rational Rational::pow(unsigned exponent) const {
    Rational result(1);
    Rational base = *this;
    unsigned e = exponent;
    while (e > 0) {
        if (e & 1u) result *= base;
        base *= base;
        e >>= 1u;
    }
    return result;
}

std::string Rational::to_string() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

Rational Rational::from_string(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(int_from_string(text));
    Int n = int_from_string(text.substr(0, slash));
    std::string den_text = text.substr(slash + 1);
    Int d = int_from_string(den_text);
    if (d == 0) fail(ErrorCode::ZeroDenominator, "zero denominator in '" + text + "'");
    return Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
    return os << q.to_string();
}

Rational rat_make(const Int& numerator, const Int& denominator) {
    if (denominator == 0) fail(ErrorCode::ZeroDenominator, "denominator is zero");
    Rational q(numerator, denominator);
    if (q.is_negative())
        fail(ErrorCode::NegativeValue, "monoid elements are nonnegative, got " + q.to_string());
    return q;
}

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ZeroDenominator: return "ZeroDenominator";
        case ErrorCode::NegativeValue: return "NegativeValue";
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::NoRootInInterval: return "NoRootInInterval";
        case ErrorCode::MultipleRootsInInterval: return "MultipleRootsInInterval";
        case ErrorCode::ReducibleByRationalRoot: return "ReducibleByRationalRoot";
        case ErrorCode::NonPositiveEnclosure: return "NonPositiveEnclosure";
        case ErrorCode::TranscendentalInput: return "TranscendentalInput";
        case ErrorCode::EnclosureBudgetExhausted: return "EnclosureBudgetExhausted";
        case ErrorCode::InvalidBudget: return "InvalidBudget";
        case ErrorCode::ValueNotInUnitInterval: return "ValueNotInUnitInterval";
        case ErrorCode::CapRequired: return "CapRequired";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NonPositiveGenerator: return "NonPositiveGenerator";
        case ErrorCode::EmptyGeneratorList: return "EmptyGeneratorList";
        case ErrorCode::DenominatorOutsideScheme: return "DenominatorOutsideScheme";
        case ErrorCode::NotInMonoid: return "NotInMonoid";
        case ErrorCode::NotAMember: return "NotAMember";
        case ErrorCode::EmptyPartList: return "EmptyPartList";
        case ErrorCode::ContradictoryVerdicts: return "ContradictoryVerdicts";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::UnsupportedOperation: return "UnsupportedOperation";
    }
    return "UnknownError";
}

}  // namespace posmon
