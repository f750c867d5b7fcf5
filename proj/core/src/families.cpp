#include <posmon/families.hpp>

#include <posmon/error.hpp>

#include <algorithm>
#include <sstream>

namespace posmon {

UnitFractionScheme UnitFractionScheme::primes() {
    UnitFractionScheme s;
    s.primes_ = true;
    s.moduli_ = {Int(2), Int(3), Int(5), Int(7), Int(11)};
    return s;
}

UnitFractionScheme UnitFractionScheme::explicit_list(std::vector<Int> moduli) {
    if (moduli.empty()) fail(ErrorCode::InvalidArgument, "empty modulus list");
    if (moduli.front() < 2) fail(ErrorCode::InvalidArgument, "moduli must start at 2 or above");
    for (std::size_t i = 1; i < moduli.size(); ++i)
        if (moduli[i] <= moduli[i - 1])
            fail(ErrorCode::InvalidArgument, "moduli must be strictly increasing");
    for (std::size_t i = 0; i < moduli.size(); ++i)
        for (std::size_t j = i + 1; j < moduli.size(); ++j)
            if (int_gcd(moduli[i], moduli[j]) != 1)
                fail(ErrorCode::InvalidArgument,
                     "moduli must be pairwise coprime; gcd(" + moduli[i].str() + ", " +
                         moduli[j].str() + ") > 1");
    UnitFractionScheme s;
    s.moduli_ = std::move(moduli);
    return s;
}

void UnitFractionScheme::extend_primes(std::size_t count) const {
    Int candidate = moduli_.empty() ? Int(2) : moduli_.back() + 1;
    while (moduli_.size() < count) {
        bool prime = true;
        for (Int d = 2; d * d <= candidate; ++d)
            if (candidate % d == 0) {
                prime = false;
                break;
            }
        if (prime) moduli_.push_back(candidate);
        ++candidate;
    }
}

bool UnitFractionScheme::has_index(std::size_t i) const {
    if (primes_) return i >= 1;
    return i >= 1 && i <= moduli_.size();
}

Int UnitFractionScheme::modulus(std::size_t i) const {
    if (i == 0) fail(ErrorCode::InvalidArgument, "modulus indices are 1-based");
    if (primes_ && i > moduli_.size()) extend_primes(i);
    if (i > moduli_.size()) fail(ErrorCode::InvalidArgument, "modulus index beyond the scheme");
    return moduli_[i - 1];
}

std::optional<std::size_t> UnitFractionScheme::prefix_covering(const Int& den) const {
    if (den == 1) return 0;
    Int rest = den;
    std::size_t k = 0;
    while (rest > 1) {
        ++k;
        if (!primes_ && k > moduli_.size()) return std::nullopt;
        if (primes_ && modulus(k) > rest && rest > 1) return std::nullopt;
        Int d = modulus(k);
        Int g = int_gcd(rest, d);
        if (g > 1) {
            rest /= g;
            if (int_gcd(rest, d) > 1) return std::nullopt;  // square-ish factor
        }
    }
    return k;
}

std::string UnitFractionScheme::describe() const {
    if (primes_) return "unit fractions over the primes";
    std::ostringstream os;
    os << "unit fractions over {";
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        if (i) os << ", ";
        os << moduli_[i].str();
    }
    os << "}";
    return os.str();
}

namespace {

Int mod_inverse(const Int& a, const Int& m) {
    // Extended Euclid; gcd(a, m) = 1 assumed.
    Int old_r = a % m, r = m;
    if (old_r < 0) old_r += m;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    Int inv = old_s % m;
    if (inv < 0) inv += m;
    return inv;
}

}  // namespace

CanonicalDecomposition uf_canonical(const UnitFractionScheme& scheme, const Rational& q) {
    if (q.is_negative()) fail(ErrorCode::InvalidArgument, "q must be nonnegative");
    auto prefix = scheme.prefix_covering(q.den());
    if (!prefix)
        fail(ErrorCode::DenominatorOutsideScheme,
             "denominator " + q.den().str() + " is not a product of distinct scheme moduli");
    const std::size_t k = *prefix;
    CanonicalDecomposition out;
    out.residues.assign(k, Int(0));
    out.digit_sum = 0;
    // d = d_1 ... d_k; c_j is the unique residue with c_j * (d / d_j)
    // congruent to q*d modulo d_j.
    Int d = 1;
    for (std::size_t j = 1; j <= k; ++j) d *= scheme.modulus(j);
    // q*d must be integral: den(q) divides d by construction.
    Rational qd = q * Rational(d);
    Int qdnum = qd.num();
    Rational fractional_sum(0);
    for (std::size_t j = 1; j <= k; ++j) {
        Int dj = scheme.modulus(j);
        Int nj = d / dj;
        Int target = qdnum % dj;
        if (target < 0) target += dj;
        Int cj = (target * mod_inverse(nj, dj)) % dj;
        out.residues[j - 1] = cj;
        out.digit_sum += cj;
        fractional_sum += Rational(cj, dj);
    }
    Rational leftover = q - fractional_sum;
    if (!leftover.is_integer())
        fail(ErrorCode::InvalidArgument, "internal: canonical residues do not clear denominators");
    out.integer_part = leftover.num();
    return out;
}

bool uf_divides(const UnitFractionScheme& scheme, const Rational& a, const Rational& b) {
    if (a.is_negative() || b.is_negative())
        fail(ErrorCode::InvalidArgument, "arguments must be nonnegative");
    if (a > b) return false;
    return uf_canonical(scheme, b - a).in_monoid();
}

std::pair<Int, Int> uf_monotones(const UnitFractionScheme& scheme, const Rational& q) {
    CanonicalDecomposition dec = uf_canonical(scheme, q);
    if (!dec.in_monoid())
        fail(ErrorCode::NotInMonoid, q.to_string() + " is not an element of the monoid");
    return {dec.integer_part, dec.digit_sum};
}

LengthSet uf_lengths_of_one(const UnitFractionScheme& scheme, std::size_t k) {
    if (!scheme.is_primes() && k > scheme.known_prefix().size())
        fail(ErrorCode::InvalidArgument, "prefix request exceeds the explicit scheme");
    LengthSet out;
    out.complete = false;  // a certified subset of L(1), not all of it
    for (std::size_t j = 1; j <= k; ++j) out.lengths.push_back(scheme.modulus(j));
    std::sort(out.lengths.begin(), out.lengths.end());
    return out;
}

IntervalMonoidSpec IntervalMonoidSpec::ms(const Rational& s) {
    if (!s.is_positive()) fail(ErrorCode::InvalidArgument, "Ms requires s > 0");
    return IntervalMonoidSpec{Kind::Ms, s};
}

IntervalMonoidSpec IntervalMonoidSpec::sr(const Rational& r) {
    if (r <= Rational(1)) fail(ErrorCode::InvalidArgument, "Sr requires r > 1");
    return IntervalMonoidSpec{Kind::Sr, r};
}

bool IntervalMonoidSpec::contains(const Rational& x) const {
    if (x.is_negative()) return false;
    if (kind == Kind::Ms) return x.is_zero() || x >= parameter;
    return x.is_integer() || x >= parameter;
}

bool interval_is_atom(const IntervalMonoidSpec& spec, const Rational& x) {
    if (!x.is_positive()) return false;
    if (spec.kind == IntervalMonoidSpec::Kind::Ms) {
        const Rational& s = spec.parameter;
        return s <= x && x < Rational(2) * s;
    }
    const Rational& r = spec.parameter;
    Rational ceil_r(r.ceil());
    if (x == ceil_r) return false;
    if (x == Rational(1)) return true;
    return r <= x && x < r + Rational(1);
}

LengthSet interval_length_set(const IntervalMonoidSpec& spec, const Rational& b) {
    if (spec.kind != IntervalMonoidSpec::Kind::Ms)
        fail(ErrorCode::InvalidArgument, "length sets are implemented for the Ms family");
    const Rational& s = spec.parameter;
    LengthSet out;
    out.complete = true;
    if (b.is_zero()) {
        out.lengths.push_back(0);
        return out;
    }
    if (b < s) fail(ErrorCode::NotAMember, b.to_string() + " is below the threshold " + s.to_string());
    // A sum of n atoms covers exactly [n*s, 2*n*s); n copies of b/n witness n.
    Int n_min = (b / (Rational(2) * s)).floor() + 1;  // smallest n with 2ns > b
    Int n_max = (b / s).floor();                      // largest n with ns <= b
    for (Int n = n_min; n <= n_max; ++n) out.lengths.push_back(n);
    return out;
}

bool interval_has_infinite_Z(const IntervalMonoidSpec& spec, const Rational& b) {
    if (spec.kind != IntervalMonoidSpec::Kind::Ms)
        fail(ErrorCode::InvalidArgument, "implemented for the Ms family");
    if (!spec.contains(b)) fail(ErrorCode::NotAMember, b.to_string() + " is not a member");
    // (s + s/n) + (b - s - s/n) realizes infinitely many two-atom splits as
    // soon as b - 2s > 0; at b = 2s the slack vanishes.
    return b > Rational(2) * spec.parameter;
}

ClassificationReport direct_sum_report(const std::vector<ClassificationReport>& parts) {
    if (parts.empty()) fail(ErrorCode::EmptyPartList, "direct sum needs at least one part");
    if (parts.size() == 1) return parts.front();
    ClassificationReport out;
    out.rank = Rank::finite(0);
    for (const auto& part : parts) {
        out.rank = out.rank + part.rank;
        out.trust = out.trust.merged(part.trust);
        if (!part.budget_note.empty()) out.budget_note = part.budget_note;
    }
    // The sum is built from declared-independent parts.
    out.trust.declared_independence = true;

    for (Property p : kAllProperties) {
        bool all_yes = true, any_no = false;
        std::size_t no_index = 0;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            TruthValue v = parts[i].value(p);
            if (v != TruthValue::Yes) all_yes = false;
            if (v == TruthValue::No && !any_no) {
                any_no = true;
                no_index = i;
            }
        }
        // Each part is divisor-closed in the sum and factorizations combine
        // componentwise, so a property holds iff it holds in every part --
        // for the antimatter flag the same componentwise argument applies to
        // the atom set being empty.
        const char* rule = p == Property::Hfm
                               ? "derived rule: lengths add componentwise across the sum"
                               : "each part is divisor-closed in the sum";
        if (all_yes) {
            out.set(p, TruthValue::Yes,
                    std::string("holds in every part (") + rule + ")");
        } else if (any_no) {
            out.set(p, TruthValue::No,
                    std::string(property_name(p)) + " fails in part " + std::to_string(no_index) +
                        " (" + rule + ")",
                    parts[no_index].verdict(p).witness);
        }
    }
    return propagate(out);
}

}  // namespace posmon
