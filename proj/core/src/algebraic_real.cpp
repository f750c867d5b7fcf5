#include <posmon/algebraic_real.hpp>

#include <posmon/error.hpp>
#include <posmon/sturm.hpp>

#include <sstream>

namespace posmon {

namespace {

bool has_rational_root(const IntPolynomial& p, Rational* root_out) {
    // Candidates r/s with r | constant term, s | leading coefficient.
    if (p.constant_term() == 0) {
        if (root_out) *root_out = Rational(0);
        return true;
    }
    auto nums = positive_divisors(p.constant_term());
    auto dens = positive_divisors(p.leading());
    for (const auto& r : nums) {
        for (const auto& s : dens) {
            Rational candidate(r, s);
            if (p.sign_at(candidate) == 0) {
                if (root_out) *root_out = candidate;
                return true;
            }
            if (p.sign_at(-candidate) == 0) {
                if (root_out) *root_out = -candidate;
                return true;
            }
        }
    }
    return false;
}

// Exhaustive search for a factorization of a primitive quartic into two
// integer quadratics. Rational roots are assumed already excluded.
bool quartic_splits_into_quadratics(const IntPolynomial& p) {
    const Int e4 = p.coeff(4), e3 = p.coeff(3), e2 = p.coeff(2), e1 = p.coeff(1),
              e0 = p.coeff(0);
    auto lead_divs = positive_divisors(e4);
    auto const_divs = positive_divisors(e0);
    for (const auto& a : lead_divs) {
        Int c = e4 / a;
        for (const auto& babs : const_divs) {
            for (int bsign : {1, -1}) {
                Int b = bsign > 0 ? babs : Int(-babs);
                Int d = e0 / b;
                // (a x^2 + f x + b)(c x^2 + g x + d): solve for f, g from the
                // x^3 and x^1 coefficients, then verify the x^2 coefficient.
                Int det = c * b - a * d;
                if (det != 0) {
                    Int fnum = b * e3 - a * e1;
                    Int gnum = c * e1 - d * e3;
                    if (fnum % det != 0 || gnum % det != 0) continue;
                    Int f = fnum / det;
                    Int g = gnum / det;
                    if (b * c + f * g + a * d == e2) return true;
                } else {
                    // Degenerate system: consistent only when a*e1 == b*e3,
                    // with f constrained by the x^2 coefficient through
                    // c*f^2 - e3*f + a*(e2 - b*c - a*d) = 0.
                    if (a * e1 != b * e3) continue;
                    Int A = c;
                    Int B = -e3;
                    Int C = a * (e2 - b * c - a * d);
                    Int disc = B * B - 4 * A * C;
                    if (disc < 0 || !is_perfect_square(disc)) continue;
                    Int sq = int_isqrt(disc);
                    for (const Int& root2 : {Int(-B + sq), Int(-B - sq)}) {
                        if (root2 % (2 * A) != 0) continue;
                        Int f = root2 / (2 * A);
                        Int grem = e3 - f * c;
                        if (grem % a != 0) continue;
                        Int g = grem / a;
                        if (b * c + f * g + a * d == e2 && f * d + b * g == e1) return true;
                    }
                }
            }
        }
    }
    return false;
}

}  // namespace

AlgebraicReal AlgebraicReal::from_rational(const Rational& value) {
    if (!value.is_positive())
        fail(ErrorCode::NonPositiveEnclosure,
             "represented real must be strictly positive, got " + value.to_string());
    AlgebraicReal a;
    a.kind_ = AlgebraicKind::Rational;
    a.rational_ = value;
    a.lo_ = value;
    a.hi_ = value;
    return a;
}

AlgebraicReal AlgebraicReal::transcendental(std::string label, const Rational& lo,
                                            const Rational& hi, EnclosureRefiner refiner) {
    if (!(Rational(0) < lo && lo < hi))
        fail(ErrorCode::NonPositiveEnclosure,
             "transcendental enclosure must satisfy 0 < lo < hi, got (" + lo.to_string() + ", " +
                 hi.to_string() + ")");
    AlgebraicReal a;
    a.kind_ = AlgebraicKind::Transcendental;
    a.label_ = std::move(label);
    a.lo_ = lo;
    a.hi_ = hi;
    a.refiner_ = std::move(refiner);
    return a;
}

const Rational& AlgebraicReal::rational_value() const {
    if (kind_ != AlgebraicKind::Rational)
        fail(ErrorCode::InvalidArgument, "not a rational value");
    return rational_;
}

const IntPolynomial& AlgebraicReal::minpoly() const {
    if (kind_ != AlgebraicKind::Algebraic)
        fail(ErrorCode::InvalidArgument, "no stored minimal polynomial for this kind");
    return minpoly_;
}

Irreducibility AlgebraicReal::irreducibility() const {
    if (kind_ != AlgebraicKind::Algebraic)
        fail(ErrorCode::InvalidArgument, "irreducibility applies to the Algebraic kind");
    return irreducibility_;
}

const std::string& AlgebraicReal::label() const {
    if (kind_ != AlgebraicKind::Transcendental)
        fail(ErrorCode::InvalidArgument, "label applies to the Transcendental kind");
    return label_;
}

IntPolynomial AlgebraicReal::minimal_polynomial() const {
    switch (kind_) {
        case AlgebraicKind::Rational:
            return IntPolynomial({-rational_.num(), rational_.den()});
        case AlgebraicKind::Algebraic:
            return minpoly_;
        case AlgebraicKind::Transcendental:
            fail(ErrorCode::TranscendentalInput, "transcendental values have no minimal polynomial");
    }
    fail(ErrorCode::InvalidArgument, "unreachable");
}

unsigned AlgebraicReal::algebraic_degree() const {
    return kind_ == AlgebraicKind::Rational
               ? 1u
               : static_cast<unsigned>(minimal_polynomial().degree());
}

AlgebraicReal AlgebraicReal::refined() const {
    switch (kind_) {
        case AlgebraicKind::Rational:
            return *this;
        case AlgebraicKind::Algebraic: {
            AlgebraicReal a = *this;
            auto [lo, hi] = bisect_root_interval(minpoly_, lo_, hi_);
            a.lo_ = lo;
            a.hi_ = hi;
            return a;
        }
        case AlgebraicKind::Transcendental: {
            if (!refiner_) return *this;
            auto [lo, hi] = refiner_(lo_, hi_);
            if (!(lo_ <= lo && hi <= hi_ && lo < hi))
                fail(ErrorCode::InvalidArgument,
                     "refiner for '" + label_ + "' returned a non-nested enclosure");
            AlgebraicReal a = *this;
            a.lo_ = lo;
            a.hi_ = hi;
            return a;
        }
    }
    fail(ErrorCode::InvalidArgument, "unreachable");
}

AlgebraicReal AlgebraicReal::refined_to_width(const Rational& width, int max_steps) const {
    AlgebraicReal a = *this;
    for (int i = 0; i < max_steps && a.hi_ - a.lo_ > width; ++i) {
        AlgebraicReal next = a.refined();
        if (next.lo_ == a.lo_ && next.hi_ == a.hi_) break;
        a = next;
    }
    return a;
}

Comparison AlgebraicReal::compare(const Rational& q, int refine_budget) const {
    switch (kind_) {
        case AlgebraicKind::Rational: {
            if (rational_ < q) return Comparison::Less;
            if (rational_ > q) return Comparison::Greater;
            return Comparison::Equal;
        }
        case AlgebraicKind::Algebraic: {
            if (q <= lo_) return Comparison::Greater;
            if (q >= hi_) return Comparison::Less;
            // Exactly one simple root inside (lo, hi), so the endpoint signs
            // differ and one sign evaluation at q locates the root.
            int sq = minpoly_.sign_at(q);
            int slo = minpoly_.sign_at(lo_);
            return sq == slo ? Comparison::Greater : Comparison::Less;
        }
        case AlgebraicKind::Transcendental: {
            AlgebraicReal cur = *this;
            for (int i = 0; i <= refine_budget; ++i) {
                if (q <= cur.lo_) return Comparison::Greater;
                if (q >= cur.hi_) return Comparison::Less;
                if (i == refine_budget || !refiner_) break;
                cur = cur.refined();
            }
            fail(ErrorCode::EnclosureBudgetExhausted,
                 "cannot separate " + (label_.empty() ? std::string("value") : label_) + " from " +
                     q.to_string() + " within the refinement budget");
        }
    }
    fail(ErrorCode::InvalidArgument, "unreachable");
}

std::string AlgebraicReal::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case AlgebraicKind::Rational:
            os << rational_.to_string();
            break;
        case AlgebraicKind::Algebraic:
            os << "root of " << minpoly_.to_string() << " in (" << lo_.to_string() << ", "
               << hi_.to_string() << ")";
            if (irreducibility_ == Irreducibility::Asserted) os << " [irreducibility asserted]";
            break;
        case AlgebraicKind::Transcendental:
            os << label_ << " (transcendental, enclosure (" << lo_.to_string() << ", "
               << hi_.to_string() << "))";
            break;
    }
    return os.str();
}

bool operator==(const AlgebraicReal& a, const AlgebraicReal& b) {
    if (a.kind_ != b.kind_) return false;
    switch (a.kind_) {
        case AlgebraicKind::Rational:
            return a.rational_ == b.rational_;
        case AlgebraicKind::Algebraic:
            return a.minpoly_ == b.minpoly_ && a.lo_ == b.lo_ && a.hi_ == b.hi_ &&
                   a.irreducibility_ == b.irreducibility_;
        case AlgebraicKind::Transcendental:
            return a.label_ == b.label_ && a.lo_ == b.lo_ && a.hi_ == b.hi_;
    }
    return false;
}

AlgebraicReal alg_make(const IntPolynomial& minpoly, const Rational& lo, const Rational& hi) {
    if (minpoly.is_zero()) fail(ErrorCode::ZeroPolynomial, "minimal polynomial is zero");
    if (minpoly.degree() < 1)
        fail(ErrorCode::InvalidArgument, "minimal polynomial must have degree >= 1");
    IntPolynomial p = minpoly.primitive();

    if (p.degree() == 1) {
        // c1 x + c0 = 0  =>  x = -c0/c1.
        Rational root(-p.coeff(0), p.coeff(1));
        if (!root.is_positive())
            fail(ErrorCode::NonPositiveEnclosure,
                 "degree-1 polynomial has nonpositive root " + root.to_string());
        if (!(lo < root && root < hi))
            fail(ErrorCode::NoRootInInterval,
                 "root " + root.to_string() + " is not inside (" + lo.to_string() + ", " +
                     hi.to_string() + ")");
        return AlgebraicReal::from_rational(root);
    }

    if (!(Rational(0) < lo))
        fail(ErrorCode::NonPositiveEnclosure, "isolating interval must satisfy 0 < lo");
    if (!(lo < hi))
        fail(ErrorCode::NoRootInInterval, "empty isolating interval");

    Rational rat_root;
    if (has_rational_root(p, &rat_root))
        fail(ErrorCode::ReducibleByRationalRoot,
             "rational root " + rat_root.to_string() + " found");
    if (poly_gcd(p, p.derivative()).degree() >= 1)
        fail(ErrorCode::ReducibleByRationalRoot, "repeated factor found");

    unsigned roots = count_roots_in_open_interval(p, lo, hi);
    if (roots == 0) fail(ErrorCode::NoRootInInterval, "no root in the given interval");
    if (roots > 1) fail(ErrorCode::MultipleRootsInInterval, "interval isolates more than one root");

    Irreducibility irr = Irreducibility::Asserted;
    if (p.degree() <= 3) {
        irr = Irreducibility::Verified;  // no rational root excludes every split
    } else if (p.degree() == 4) {
        if (quartic_splits_into_quadratics(p))
            fail(ErrorCode::ReducibleByRationalRoot, "splits into two integer quadratics");
        irr = Irreducibility::Verified;
    }

    AlgebraicReal a;
    a.kind_ = AlgebraicKind::Algebraic;
    a.minpoly_ = std::move(p);
    a.irreducibility_ = irr;
    a.lo_ = lo;
    a.hi_ = hi;
    return a;
}

MinimalPair minimal_pair(const AlgebraicReal& a) {
    if (a.is_transcendental())
        fail(ErrorCode::TranscendentalInput, "minimal pair needs an algebraic value");
    IntPolynomial p = a.minimal_polynomial();
    std::vector<Int> plus(p.coefficients().size(), Int(0));
    std::vector<Int> minus(p.coefficients().size(), Int(0));
    for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
        const Int& c = p.coefficients()[i];
        if (c > 0) plus[i] = c;
        if (c < 0) minus[i] = -c;
    }
    return MinimalPair{p.leading(), IntPolynomial(std::move(plus)), IntPolynomial(std::move(minus))};
}

std::pair<Rational, Rational> pi_enclosure(unsigned digits) {
    // Machin: pi = 16 atan(1/5) - 4 atan(1/239), in integer arithmetic scaled
    // by 10^(digits + guard). Each series is alternating, so the tail is
    // bounded by the first omitted term; each floor division loses < 1.
    const unsigned guard = 10;
    Int scale = 1;
    for (unsigned i = 0; i < digits + guard; ++i) scale *= 10;

    auto atan_inv = [&](unsigned inv, Int* err) {
        Int x = inv;
        Int x2 = x * x;
        Int term = scale / x;
        Int sum = term;
        Int terms = 1;
        Int k = 1;
        while (term > 0) {
            x = x * x2;
            term = scale / ((2 * k + 1) * x);
            if (term == 0) break;
            if (k % 2 == 1)
                sum -= term;
            else
                sum += term;
            ++k;
            ++terms;
        }
        *err = terms + 1;
        return sum;
    };

    Int err5 = 0, err239 = 0;
    Int a5 = atan_inv(5, &err5);
    Int a239 = atan_inv(239, &err239);
    Int s = 16 * a5 - 4 * a239;
    Int err = 16 * err5 + 4 * err239;
    return {Rational(s - err, scale), Rational(s + err, scale)};
}

EnclosureRefiner pi_refiner() {
    return [](const Rational& lo, const Rational& hi) {
        Rational width = hi - lo;
        unsigned digits = 8;
        while (digits < 100000) {
            auto [plo, phi] = pi_enclosure(digits);
            Rational nlo = plo > lo ? plo : lo;
            Rational nhi = phi < hi ? phi : hi;
            if (nlo < nhi && nhi - nlo < width / Rational(2)) return std::make_pair(nlo, nhi);
            digits *= 2;
        }
        fail(ErrorCode::EnclosureBudgetExhausted, "pi refiner precision limit reached");
    };
}

AlgebraicReal make_pi() {
    return AlgebraicReal::transcendental("pi", Rational(157, 50), Rational(22, 7), pi_refiner());
}

}  // namespace posmon
