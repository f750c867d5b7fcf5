#include <posmon/int_polynomial.hpp>

#include <posmon/error.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace posmon {

IntPolynomial::IntPolynomial(std::vector<Int> coefficients) : coeffs_(std::move(coefficients)) {
    strip();
}

IntPolynomial IntPolynomial::constant(const Int& c) {
    return IntPolynomial(std::vector<Int>{c});
}

IntPolynomial IntPolynomial::monomial(const Int& c, std::size_t k) {
    std::vector<Int> v(k + 1, Int(0));
    v[k] = c;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::strip() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Int& IntPolynomial::leading() const {
    if (coeffs_.empty()) fail(ErrorCode::ZeroPolynomial, "leading coefficient of zero polynomial");
    return coeffs_.back();
}

std::vector<std::size_t> IntPolynomial::support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) s.push_back(i);
    return s;
}

Int IntPolynomial::content() const {
    Int g = 0;
    for (const auto& c : coeffs_) g = int_gcd(g, int_abs(c));
    return g;
}

IntPolynomial IntPolynomial::primitive() const {
    if (is_zero()) return *this;
    Int g = content();
    if (leading() < 0) g = -g;
    std::vector<Int> v = coeffs_;
    for (auto& c : v) c /= g;
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return IntPolynomial();
    std::vector<Int> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * Int(i);
    return IntPolynomial(std::move(v));
}

Rational IntPolynomial::evaluate(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

int IntPolynomial::sign_at(const Rational& x) const {
    // sum c_i a^i b^(n-i) has the sign of p(a/b) since b > 0.
    if (is_zero()) return 0;
    const Int& a = x.num();
    const Int& b = x.den();
    Int acc = 0;
    Int bpow = 1;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * a + *it * bpow;
        bpow *= b;
    }
    return acc > 0 ? 1 : (acc < 0 ? -1 : 0);
}

int IntPolynomial::sign_at_pos_infinity() const {
    if (is_zero()) return 0;
    return leading() > 0 ? 1 : -1;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Int> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Int> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
    return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial();
    std::vector<Int> v(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<Int> v = coeffs_;
    for (auto& c : v) c = -c;
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::multiplied_by(const Int& scalar) const {
    std::vector<Int> v = coeffs_;
    for (auto& c : v) c *= scalar;
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Int> v(coeffs_.size() + k, Int(0));
    std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + static_cast<long>(k));
    return IntPolynomial(std::move(v));
}

namespace {

// Division over Q[x]: returns {quotient, remainder} as rational coefficient
// vectors, constant first.
struct QPoly {
    std::vector<Rational> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    void strip() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
};

QPoly to_qpoly(const IntPolynomial& p) {
    QPoly q;
    q.c.reserve(p.coefficients().size());
    for (const auto& ci : p.coefficients()) q.c.emplace_back(ci);
    return q;
}

std::pair<QPoly, QPoly> q_divmod(QPoly a, const QPoly& b) {
    QPoly quot;
    if (b.is_zero()) fail(ErrorCode::ZeroPolynomial, "division by zero polynomial");
    if (a.degree() < b.degree()) return {quot, a};
    quot.c.assign(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational(0));
    const Rational& lead = b.c.back();
    while (!a.is_zero() && a.degree() >= b.degree()) {
        std::size_t shift = static_cast<std::size_t>(a.degree() - b.degree());
        Rational factor = a.c.back() / lead;
        quot.c[shift] = factor;
        for (std::size_t i = 0; i < b.c.size(); ++i) a.c[shift + i] -= factor * b.c[i];
        a.strip();
    }
    return {quot, a};
}

}  // namespace

std::optional<IntPolynomial> IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
    if (divisor.is_zero()) fail(ErrorCode::ZeroPolynomial, "division by zero polynomial");
    if (is_zero()) return IntPolynomial();
    if (degree() < divisor.degree()) return std::nullopt;
    auto [quot, rem] = q_divmod(to_qpoly(*this), to_qpoly(divisor));
    if (!rem.is_zero()) return std::nullopt;
    std::vector<Int> v;
    v.reserve(quot.c.size());
    for (const auto& q : quot.c) {
        if (!q.is_integer()) return std::nullopt;
        v.push_back(q.num());
    }
    return IntPolynomial(std::move(v));
}

bool IntPolynomial::divisible_by(const IntPolynomial& divisor) const {
    if (is_zero()) return true;
    auto [quot, rem] = q_divmod(to_qpoly(*this), to_qpoly(divisor));
    (void)quot;
    return rem.is_zero();
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int c = coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        Int a = int_abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0 || a != 1) os << a.str();
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) {
    return os << p.to_string();
}

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero()) return b.is_zero() ? b : b.primitive();
    if (b.is_zero()) return a.primitive();
    QPoly x = to_qpoly(a);
    QPoly y = to_qpoly(b);
    while (!y.is_zero()) {
        auto [quot, rem] = q_divmod(x, y);
        (void)quot;
        x = y;
        y = rem;
    }
    // Clear denominators and normalize.
    Int lcm_den = 1;
    for (const auto& c : x.c) lcm_den = int_lcm(lcm_den, c.den());
    std::vector<Int> v;
    v.reserve(x.c.size());
    for (const auto& c : x.c) v.push_back(c.num() * (lcm_den / c.den()));
    return IntPolynomial(std::move(v)).primitive();
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
    if (p.is_zero()) return p;
    IntPolynomial g = poly_gcd(p, p.derivative());
    if (g.degree() == 0) return p.primitive();
    auto q = p.divide_exact(g);
    if (!q) {
        // g is primitive, so it divides the primitive part of p.
        q = p.primitive().divide_exact(g);
    }
    return q->primitive();
}

std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& p) {
    std::vector<IntPolynomial> out;
    if (p.is_zero() || p.degree() == 0) return out;
    // Yun's algorithm on the primitive part.
    IntPolynomial f = p.primitive();
    IntPolynomial fp = f.derivative();
    IntPolynomial a = poly_gcd(f, fp);
    IntPolynomial b = *f.divide_exact(a);
    IntPolynomial c = *fp.divide_exact(a);
    IntPolynomial d = c - b.derivative();
    while (true) {
        IntPolynomial s = poly_gcd(b, d);
        out.push_back(s.primitive());
        if (b.degree() == s.degree()) break;
        b = *b.divide_exact(s);
        c = *d.divide_exact(s);
        d = c - b.derivative();
        if (b.degree() == 0) break;
    }
    return out;
}

}  // namespace posmon
