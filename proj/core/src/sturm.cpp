#include <posmon/sturm.hpp>

#include <posmon/error.hpp>

namespace posmon {

unsigned poly_sign_variations(const IntPolynomial& p) {
    unsigned changes = 0;
    int last = 0;
    for (const auto& c : p.coefficients()) {
        if (c == 0) continue;
        int s = c > 0 ? 1 : -1;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

namespace {

// Negated remainder chain over Q[x], stored as primitive integer polynomials
// (sign preserved: each element is a positive rational multiple of the exact
// chain member, which keeps all sign evaluations correct).
IntPolynomial primitive_signed(const IntPolynomial& p) {
    if (p.is_zero()) return p;
    Int g = p.content();
    std::vector<Int> v = p.coefficients();
    for (auto& c : v) c /= g;
    return IntPolynomial(std::move(v));
}

IntPolynomial neg_pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
    // Computes -(a mod b) up to a positive rational factor, via fraction-free
    // elimination: multiply a by lc(b)^2 each step so signs never flip.
    IntPolynomial r = a;
    const Int lead = b.leading();
    const Int lead2 = lead * lead;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
        Int factor = r.leading() * lead;
        r = r.multiplied_by(lead2) - b.multiplied_by(factor).shifted(shift);
    }
    return primitive_signed(-r);
}

int sign_at_point(const IntPolynomial& p, const Rational& x) { return p.sign_at(x); }

unsigned variations_at(const std::vector<IntPolynomial>& chain, const Rational& x) {
    unsigned changes = 0;
    int last = 0;
    for (const auto& p : chain) {
        int s = sign_at_point(p, x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

unsigned variations_at_pos_infinity(const std::vector<IntPolynomial>& chain) {
    unsigned changes = 0;
    int last = 0;
    for (const auto& p : chain) {
        int s = p.sign_at_pos_infinity();
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace

std::vector<IntPolynomial> sturm_chain(const IntPolynomial& p) {
    if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "Sturm chain of zero polynomial");
    std::vector<IntPolynomial> chain;
    IntPolynomial f = squarefree_part(p);
    chain.push_back(f);
    if (f.degree() == 0) return chain;
    chain.push_back(primitive_signed(f.derivative()));
    while (chain.back().degree() > 0) {
        IntPolynomial next = neg_pseudo_remainder(chain[chain.size() - 2], chain.back());
        if (next.is_zero()) break;
        chain.push_back(std::move(next));
    }
    return chain;
}

unsigned count_roots_in_open_interval(const IntPolynomial& p, const Rational& lo,
                                      const Rational& hi) {
    if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "root count of zero polynomial");
    if (lo >= hi) return 0;
    auto chain = sturm_chain(p);
    const IntPolynomial& f = chain.front();
    // V(lo) - V(hi) counts roots in (lo, hi]; drop hi if it is a root.
    unsigned count = variations_at(chain, lo) - variations_at(chain, hi);
    if (f.sign_at(hi) == 0 && count > 0) --count;
    return count;
}

unsigned poly_positive_root_count(const IntPolynomial& p) {
    if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "root count of zero polynomial");
    auto chain = sturm_chain(p);
    // Roots in (0, +inf): V(0) - V(+inf); no root at infinity to adjust for,
    // and a root at 0 is excluded by the half-open convention of Sturm counts.
    return variations_at(chain, Rational(0)) - variations_at_pos_infinity(chain);
}

unsigned poly_positive_root_count_with_multiplicity(const IntPolynomial& p) {
    if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "root count of zero polynomial");
    unsigned total = 0;
    auto factors = squarefree_decomposition(p);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].degree() <= 0) continue;
        total += static_cast<unsigned>(i + 1) * poly_positive_root_count(factors[i]);
    }
    return total;
}

std::pair<Rational, Rational> bisect_root_interval(const IntPolynomial& p, const Rational& lo,
                                                   const Rational& hi) {
    // With one root inside and none at the endpoints, the endpoint signs
    // differ, so one midpoint sign decides the half.
    Rational mid = (lo + hi) / Rational(2);
    int sm = p.sign_at(mid);
    if (sm == 0) fail(ErrorCode::InvalidArgument, "bisection hit a rational root");
    int sl = p.sign_at(lo);
    if (sl == 0) fail(ErrorCode::InvalidArgument, "bisection endpoint is a root");
    if (sl == sm) return {mid, hi};
    return {lo, mid};
}

}  // namespace posmon
