#include <posmon/cyclic_semiring.hpp>

#include <posmon/error.hpp>
#include <posmon/sturm.hpp>

#include <algorithm>
#include <functional>
#include <sstream>

namespace posmon {

namespace {

std::string join_ints(const std::vector<Int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i].str();
    }
    return os.str();
}

// Tightens the enclosure of an algebraic value; used before bound
// computations so the rational bounds are usable.
AlgebraicReal tighten(const AlgebraicReal& a, int extra_steps = 8) {
    if (!a.is_algebraic()) return a;
    AlgebraicReal r = a.refined_to_width(Rational(1, 4), 64);
    for (int i = 0; i < extra_steps; ++i) r = r.refined();
    return r;
}

}  // namespace

Int AntimatterWitness::coefficient_sum() const {
    Int s = 0;
    for (const auto& c : coefficients) s += c;
    return s;
}

std::string AntimatterWitness::relation() const {
    std::ostringstream os;
    os << "1 = ";
    bool first = true;
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        if (coefficients[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (coefficients[i] != 1) os << coefficients[i].str() << "*";
        os << "a^" << (i + 1);
    }
    return os.str();
}

bool verify_antimatter_witness(const AlgebraicReal& alpha, const AntimatterWitness& w) {
    if (alpha.is_transcendental()) return false;
    if (w.coefficients.empty() || w.coefficient_sum() < 2) return false;
    // 1 - sum c_i x^i must vanish at alpha: exact rational identity, or
    // divisibility by the minimal polynomial.
    std::vector<Int> coeffs(w.coefficients.size() + 1, Int(0));
    coeffs[0] = 1;
    for (std::size_t i = 0; i < w.coefficients.size(); ++i) {
        if (w.coefficients[i] < 0) return false;
        coeffs[i + 1] = -w.coefficients[i];
    }
    IntPolynomial relation(std::move(coeffs));
    if (alpha.is_rational()) return relation.sign_at(alpha.rational_value()) == 0;
    return relation.divisible_by(alpha.minpoly());
}

namespace {

// ---------------------------------------------------------------------------
// Bounded search for an antimatter witness: a quotient polynomial g with
// P(x) g(x) = 1 - h(x), h in N0[x] with h(0) = 0. Requires |P(0)| = 1. The
// coefficients of h are determined triangularly from g, which keeps the
// search space small; rational enclosure bounds prune branches whose partial
// sums already exceed 1 or can no longer reach it.
// ---------------------------------------------------------------------------
class WitnessSearch {
public:
    WitnessSearch(const IntPolynomial& minpoly, const AlgebraicReal& alpha,
                  const SearchBudget& budget)
        : p_(minpoly), budget_(budget) {
        AlgebraicReal a = alpha;
        // Need hi < 1 for the deficit bound to mean anything.
        for (int i = 0; i < 64 && a.hi() >= Rational(1); ++i) a = a.refined();
        a = tighten(a);
        lo_ = a.lo();
        hi_ = a.hi();
        Int maxp = 0;
        for (const auto& c : p_.coefficients()) maxp = std::max(maxp, int_abs(c));
        hmax_ = Int(p_.degree() + 1) * budget_.witness_height * maxp;
    }

    std::optional<AntimatterWitness> run(bool* aborted) {
        for (unsigned target_degree = 0; target_degree <= budget_.witness_degree;
             ++target_degree) {
            if (search_degree(target_degree)) {
                *aborted = aborted_;
                return found_;
            }
            if (aborted_) break;
        }
        *aborted = aborted_;
        return std::nullopt;
    }

private:
    bool search_degree(unsigned degree) {
        degree_ = degree;
        total_degree_ = degree + static_cast<unsigned>(p_.degree());
        lo_pow_.assign(1, Rational(1));
        hi_pow_.assign(1, Rational(1));
        for (unsigned k = 1; k <= total_degree_; ++k) {
            lo_pow_.push_back(lo_pow_.back() * lo_);
            hi_pow_.push_back(hi_pow_.back() * hi_);
        }
        // tail_max_[k]: largest possible value of the terms beyond index k.
        tail_max_.assign(total_degree_ + 2, Rational(0));
        for (unsigned k = total_degree_; k >= 1; --k)
            tail_max_[k] = tail_max_[k + 1] + Rational(hmax_) * hi_pow_[k];
        g_.assign(degree_ + 1, Int(0));
        g_[0] = p_.constant_term();  // P(0) g(0) = 1 with |P(0)| = 1
        h_.assign(total_degree_ + 1, Int(0));
        return dfs(1, Rational(0), Rational(0));
    }

    Int convolution_rest(unsigned k) const {
        // sum_{i >= 1} P_i g_{k-i} over valid indices.
        Int rest = 0;
        unsigned top = std::min<unsigned>(k, static_cast<unsigned>(p_.degree()));
        for (unsigned i = 1; i <= top; ++i) {
            if (k - i <= degree_) rest += p_.coeff(i) * g_[k - i];
        }
        return rest;
    }

    bool accept_tail_and_record(const Rational& sum_lo) {
        // Coefficients of h beyond the chosen prefix are forced; check signs.
        Rational slo = sum_lo;
        for (unsigned k = degree_ + 1; k <= total_degree_; ++k) {
            Int c = convolution_rest(k);  // P_0 g_k term absent: k > deg g
            if (c > 0) return false;
            h_[k] = -c;
            slo += Rational(h_[k]) * lo_pow_[k];
            if (slo > Rational(1)) return false;
        }
        AntimatterWitness w;
        w.coefficients.assign(h_.begin() + 1, h_.end());
        while (!w.coefficients.empty() && w.coefficients.back() == 0) w.coefficients.pop_back();
        if (w.coefficients.empty() || w.coefficient_sum() < 2) return false;
        found_ = std::move(w);
        return true;
    }

    bool dfs(unsigned k, Rational sum_lo, Rational sum_hi) {
        if (++nodes_ > budget_.node_cap) {
            aborted_ = true;
            return false;
        }
        if (k > degree_) return accept_tail_and_record(sum_lo);
        const Int p0 = p_.constant_term();
        const Int rest = convolution_rest(k);
        // c_k = p0 g_k + rest <= 0 bounds g_k on one side.
        Int from, to;
        if (p0 > 0) {
            from = -budget_.witness_height;
            to = std::min(budget_.witness_height, Int(-rest));
        } else {
            from = std::max(Int(-budget_.witness_height), rest);
            to = budget_.witness_height;
        }
        for (Int gk = from; gk <= to; ++gk) {
            if (k == degree_ && gk == 0 && degree_ > 0) continue;  // exact degree
            Int ck = p0 * gk + rest;
            Int hk_int = -ck;
            Rational hk(hk_int);
            Rational nlo = sum_lo + hk * lo_pow_[k];
            if (nlo > Rational(1)) {
                // h_k shrinks along the scan when p0 > 0 and grows when
                // p0 < 0; in the growing direction nothing further can fit.
                if (p0 > 0) continue;
                break;
            }
            Rational nhi = sum_hi + hk * hi_pow_[k];
            if (nhi + tail_max_[k + 1] < Rational(1)) continue;
            g_[k] = gk;
            h_[k] = hk_int;
            if (dfs(k + 1, nlo, nhi)) return true;
            if (aborted_) return false;
        }
        g_[k] = 0;
        return false;
    }

    const IntPolynomial& p_;
    const SearchBudget& budget_;
    Rational lo_, hi_;
    Int hmax_;
    unsigned degree_ = 0;
    unsigned total_degree_ = 0;
    std::vector<Rational> lo_pow_, hi_pow_, tail_max_;
    std::vector<Int> g_, h_;
    long long nodes_ = 0;
    bool aborted_ = false;
    std::optional<AntimatterWitness> found_;
};

// ---------------------------------------------------------------------------
// Bounded knapsack over integer weights: all c >= 0 with sum c_i w_i = target.
// Enumerates in descending-weight order with suffix-gcd and residual pruning.
// ---------------------------------------------------------------------------
class IntKnapsack {
public:
    IntKnapsack(std::vector<Int> weights, Int target, bool collect_all, long long node_cap)
        : weights_(std::move(weights)),
          target_(std::move(target)),
          collect_all_(collect_all),
          node_cap_(node_cap) {
        order_.resize(weights_.size());
        for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
        std::stable_sort(order_.begin(), order_.end(),
                         [&](std::size_t a, std::size_t b) { return weights_[a] > weights_[b]; });
        suffix_gcd_.assign(order_.size() + 1, Int(0));
        for (std::size_t k = order_.size(); k-- > 0;)
            suffix_gcd_[k] = int_gcd(suffix_gcd_[k + 1], weights_[order_[k]]);
    }

    const std::vector<std::vector<Int>>& solutions() const { return solutions_; }
    bool aborted() const { return aborted_; }

    void run() {
        current_.assign(weights_.size(), Int(0));
        dfs(0, target_);
        std::sort(solutions_.begin(), solutions_.end());
    }

private:
    bool dfs(std::size_t k, const Int& residual) {
        if (++nodes_ > node_cap_) {
            aborted_ = true;
            return true;
        }
        if (k == order_.size()) {
            if (residual == 0) {
                solutions_.push_back(current_);
                return !collect_all_;
            }
            return false;
        }
        if (residual == 0) {
            for (std::size_t j = k; j < order_.size(); ++j) current_[order_[j]] = 0;
            solutions_.push_back(current_);
            return !collect_all_;
        }
        if (suffix_gcd_[k] == 0 || residual % suffix_gcd_[k] != 0) return false;
        const Int& w = weights_[order_[k]];
        Int maxc = residual / w;
        for (Int c = 0; c <= maxc; ++c) {
            current_[order_[k]] = c;
            if (dfs(k + 1, residual - c * w)) return true;
        }
        current_[order_[k]] = 0;
        return false;
    }

    std::vector<Int> weights_;
    Int target_;
    bool collect_all_;
    long long node_cap_;
    std::vector<std::size_t> order_;
    std::vector<Int> suffix_gcd_;
    std::vector<Int> current_;
    std::vector<std::vector<Int>> solutions_;
    long long nodes_ = 0;
    bool aborted_ = false;
};

// Membership of alpha^n in the monoid generated by the strictly smaller
// powers, for rational alpha = a/b > 1: a^n = sum c_j a^j b^(n-j).
std::optional<std::vector<Int>> rational_power_membership(const Rational& q, unsigned n) {
    const Int& a = q.num();
    const Int& b = q.den();
    std::vector<Int> weights(n);
    Int apow = 1;
    for (unsigned j = 0; j < n; ++j) {
        Int bpow = 1;
        for (unsigned t = 0; t < n - j; ++t) bpow *= b;
        weights[j] = apow * bpow;
        apow *= a;
    }
    Int target = apow;  // a^n
    IntKnapsack search(std::move(weights), target, /*collect_all=*/false, 50'000'000);
    search.run();
    if (search.solutions().empty()) return std::nullopt;
    return search.solutions().front();
}

// Same membership for an algebraic alpha > 1 of degree d: reduce x^j mod P;
// the coefficients below the degree are then forced, so only the n-d high
// coefficients are searched, with enclosure-derived bounds.
std::optional<std::vector<Int>> algebraic_power_membership(const AlgebraicReal& alpha,
                                                           unsigned n) {
    const IntPolynomial& p = alpha.minpoly();
    const unsigned d = static_cast<unsigned>(p.degree());
    if (n < d) return std::nullopt;  // would contradict minimality

    AlgebraicReal a = tighten(alpha);
    while (a.lo() <= Rational(1)) a = a.refined();

    // rep[j] = x^j mod P over Q, for j = d .. n.
    std::vector<std::vector<Rational>> rep;
    std::vector<Rational> cur(d, Rational(0));  // x^(d-1) placeholder start
    // Start with x^(d-1), then step: multiply by x and reduce.
    cur.assign(d, Rational(0));
    cur[d - 1] = Rational(1);
    auto step = [&](std::vector<Rational> v) {
        // v(x) * x mod P
        Rational top = v[d - 1];
        std::vector<Rational> next(d, Rational(0));
        for (unsigned t = d - 1; t >= 1; --t) next[t] = v[t - 1];
        next[0] = Rational(0);
        if (!top.is_zero()) {
            // x^d = -(P_{d-1} x^{d-1} + ... + P_0)/P_d
            Rational lead(p.coeff(d));
            for (unsigned t = 0; t < d; ++t)
                next[t] -= top * Rational(p.coeff(t)) / lead;
        }
        return next;
    };
    std::vector<Rational> xj = cur;  // x^(d-1)
    rep.reserve(n - d + 1);
    for (unsigned j = d; j <= n; ++j) {
        xj = step(xj);
        rep.push_back(xj);
    }
    auto rep_of = [&](unsigned j) -> const std::vector<Rational>& { return rep[j - d]; };

    // Bounds: c_j <= alpha^(n-j) <= hi^(n-j).
    std::vector<Rational> hi_pow(n + 1, Rational(1));
    for (unsigned k = 1; k <= n; ++k) hi_pow[k] = hi_pow[k - 1] * a.hi();

    std::vector<Int> high(n - d, Int(0));  // c_j for j = d .. n-1
    std::vector<Rational> residual = rep_of(n);

    std::optional<std::vector<Int>> result;
    auto close_low_part = [&](const std::vector<Rational>& v) -> bool {
        // v must equal sum_{j<d} c_j e_j with c_j nonnegative integers.
        std::vector<Int> full(n, Int(0));
        for (unsigned t = 0; t < d; ++t) {
            if (!v[t].is_integer() || v[t].is_negative()) return false;
            full[t] = v[t].num();
        }
        for (unsigned j = d; j < n; ++j) full[j] = high[j - d];
        // Exact verification: P divides x^n - sum c_j x^j.
        std::vector<Int> fc(n + 1, Int(0));
        fc[n] = 1;
        for (unsigned j = 0; j < n; ++j) fc[j] -= full[j];
        if (!IntPolynomial(std::move(fc)).divisible_by(p)) return false;
        result = std::move(full);
        return true;
    };

    // DFS over the high coefficients, highest power first.
    std::function<bool(unsigned, std::vector<Rational>)> dfs =
        [&](unsigned level, std::vector<Rational> v) -> bool {
        if (level == 0) return close_low_part(v);
        unsigned j = d + level - 1;
        Int maxc = hi_pow[n - j].floor();
        for (Int c = 0; c <= maxc; ++c) {
            std::vector<Rational> next = v;
            if (c != 0) {
                const auto& r = rep_of(j);
                for (unsigned t = 0; t < d; ++t) next[t] -= Rational(c) * r[t];
            }
            if (dfs(level - 1, std::move(next))) return true;
        }
        return false;
    };

    if (dfs(n - d, residual)) return result;
    return std::nullopt;
}

std::optional<std::vector<Int>> power_membership(const AlgebraicReal& alpha, unsigned n) {
    if (alpha.is_rational()) return rational_power_membership(alpha.rational_value(), n);
    return algebraic_power_membership(alpha, n);
}

}  // namespace

SigmaResult cs_sigma(const AlgebraicReal& alpha, unsigned n_max) {
    if (n_max == 0) fail(ErrorCode::InvalidBudget, "n_max must be positive");
    SigmaResult out;
    if (alpha.is_transcendental()) {
        out.kind = SigmaResult::Kind::Infinite;
        out.justification = "powers of a declared-transcendental value satisfy no rational relation";
        return out;
    }
    Comparison cmp = alpha.compare(Rational(1));
    if (cmp == Comparison::Equal) {
        out.kind = SigmaResult::Kind::Finite;
        out.sigma = 1;
        out.witness = {Int(1)};
        return out;
    }
    if (cmp == Comparison::Less) {
        out.kind = SigmaResult::Kind::Infinite;
        out.justification =
            "for alpha in (0,1) every candidate summand alpha^j with j < n exceeds alpha^n";
        return out;
    }
    for (unsigned n = 1; n <= n_max; ++n) {
        auto witness = power_membership(alpha, n);
        if (witness) {
            out.kind = SigmaResult::Kind::Finite;
            out.sigma = n;
            out.witness = std::move(*witness);
            return out;
        }
    }
    out.kind = SigmaResult::Kind::AtLeast;
    out.bound = n_max;
    return out;
}

OneAtomResult cs_one_is_atom(const AlgebraicReal& alpha, const SearchBudget& budget) {
    OneAtomResult out;
    if (alpha.is_transcendental()) {
        out.status = OneAtomStatus::Atom;
        out.provenance = "powers of a declared-transcendental value satisfy no rational relation";
        return out;
    }
    Comparison cmp = alpha.compare(Rational(1));
    if (cmp != Comparison::Less) {
        out.status = OneAtomStatus::Atom;
        out.provenance =
            "every nonzero element is at least 1, so 1 is not a sum of two nonzero elements";
        return out;
    }
    if (alpha.is_rational()) {
        const Rational& q = alpha.rational_value();
        if (q.num() >= 2) {
            out.status = OneAtomStatus::Atom;
            out.provenance =
                "clearing denominators in 1 = sum c_i q^i forces n(q) | d(q)^k; n(q) >= 2 blocks it";
            return out;
        }
        AntimatterWitness w;
        w.coefficients = {q.den()};
        out.status = OneAtomStatus::NotAtom;
        out.provenance = "1 = d(q) * q expresses 1 as a sum of d(q) >= 2 elements";
        out.witness = std::move(w);
        return out;
    }
    const IntPolynomial& p = alpha.minpoly();
    if (int_abs(p.constant_term()) != 1) {
        out.status = OneAtomStatus::Atom;
        out.provenance =
            "condition (1): the primitive minimal polynomial has non-unit constant term, and any "
            "relation 1 = sum c_i alpha^i would force that constant term to divide 1";
        return out;
    }
    if (poly_positive_root_count_with_multiplicity(p) >= 2) {
        out.status = OneAtomStatus::Atom;
        out.provenance =
            "condition (2): the minimal polynomial has at least two positive roots counting "
            "multiplicity, but 1 - sum c_i x^i has exactly one sign variation";
        return out;
    }
    bool aborted = false;
    WitnessSearch search(p, alpha, budget);
    auto witness = search.run(&aborted);
    if (witness) {
        out.status = OneAtomStatus::NotAtom;
        out.provenance = "bounded search found a relation expressing 1 from higher powers";
        out.witness = std::move(witness);
        return out;
    }
    out.status = OneAtomStatus::Unknown;
    out.provenance = std::string(aborted ? "witness search aborted at the node cap ("
                                         : "witness search exhausted (") +
                     budget.describe() + ")";
    return out;
}

Verdict cs_is_atomic(const AlgebraicReal& alpha, const SearchBudget& budget) {
    Verdict v;
    if (alpha.is_transcendental()) {
        v.value = TruthValue::Yes;
        v.provenance =
            "free on the powers: a declared-transcendental value admits no rational relation";
        return v;
    }
    OneAtomResult one = cs_one_is_atom(alpha, budget);
    switch (one.status) {
        case OneAtomStatus::Atom:
            v.value = TruthValue::Yes;
            v.provenance = "1 is an atom: " + one.provenance;
            break;
        case OneAtomStatus::NotAtom:
            v.value = TruthValue::No;
            v.provenance = "1 is not an atom, so every power splits and no atoms remain: " +
                           one.provenance;
            if (one.witness) {
                v.witness["relation"] = one.witness->relation();
                v.witness["coefficients"] = join_ints(one.witness->coefficients);
            }
            break;
        case OneAtomStatus::Unknown:
            v.value = TruthValue::Unknown;
            v.provenance = one.provenance;
            break;
    }
    return v;
}

AtomDescription cs_atoms(const AlgebraicReal& alpha, const SearchBudget& budget) {
    AtomDescription out;
    if (alpha.is_transcendental()) {
        out.kind = AtomDescription::Kind::AllPowers;
        out.complete = true;
        out.note = "free on the powers";
        return out;
    }
    OneAtomResult one = cs_one_is_atom(alpha, budget);
    if (one.status == OneAtomStatus::NotAtom) {
        out.kind = AtomDescription::Kind::None;
        out.complete = true;
        out.witness = one.witness;
        out.note = "antimatter: " + (one.witness ? one.witness->relation() : std::string());
        return out;
    }
    if (one.status == OneAtomStatus::Unknown) {
        out.kind = AtomDescription::Kind::Undecided;
        out.complete = false;
        out.note = one.provenance;
        return out;
    }
    Comparison cmp = alpha.compare(Rational(1));
    if (cmp == Comparison::Less) {
        out.kind = AtomDescription::Kind::AllPowers;
        out.complete = true;
        out.note = "sigma is infinite: every lower power exceeds the target power";
        return out;
    }
    SigmaResult sigma = cs_sigma(alpha, budget.sigma_max);
    if (sigma.kind == SigmaResult::Kind::Finite) {
        out.kind = AtomDescription::Kind::PowersBelow;
        out.sigma = sigma.sigma;
        out.complete = true;
        return out;
    }
    out.kind = AtomDescription::Kind::AllPowersUpTo;
    out.bound = sigma.bound;
    out.complete = false;
    out.note = "no power up to the bound is representable from smaller powers; beyond it unknown";
    return out;
}

Verdict cs_finitely_generated(const AlgebraicReal& alpha, const SearchBudget& budget) {
    Verdict v;
    if (alpha.is_transcendental()) {
        v.value = TruthValue::No;
        v.provenance = "the atom set is all powers, which is infinite";
        return v;
    }
    Comparison cmp = alpha.compare(Rational(1));
    if (cmp == Comparison::Equal) {
        v.value = TruthValue::Yes;
        v.provenance = "alpha = 1 generates the naturals";
        return v;
    }
    if (cmp == Comparison::Less) {
        v.value = TruthValue::No;
        v.provenance =
            "for alpha in (0,1): antimatter rules out finite generation, and in the atomic case "
            "sigma is infinite, so the atoms are all powers";
        return v;
    }
    SigmaResult sigma = cs_sigma(alpha, budget.sigma_max);
    if (sigma.kind == SigmaResult::Kind::Finite) {
        v.value = TruthValue::Yes;
        v.provenance = "the atoms are the powers below sigma = " + std::to_string(sigma.sigma);
        return v;
    }
    v.value = TruthValue::Unknown;
    v.provenance = "sigma exceeds the search bound " + std::to_string(sigma.bound) +
                   "; finite generation is equivalent to sigma being finite";
    return v;
}

AccpObstruction cs_accp_obstruction(const AlgebraicReal& alpha) {
    if (alpha.is_transcendental())
        fail(ErrorCode::TranscendentalInput, "minimal pair needs an algebraic value");
    if (alpha.compare(Rational(1)) != Comparison::Less || !(Rational(0) < alpha.lo()) )
        fail(ErrorCode::ValueNotInUnitInterval, "value must lie in (0,1)");
    MinimalPair mp = minimal_pair(alpha);
    AccpObstruction out;
    int max_shift = mp.plus_part.degree() - mp.minus_part.degree();
    for (int m = 0; m <= max_shift; ++m) {
        IntPolynomial f = mp.plus_part - mp.minus_part.shifted(static_cast<std::size_t>(m));
        bool nonneg = true;
        for (const auto& c : f.coefficients())
            if (c < 0) {
                nonneg = false;
                break;
            }
        if (nonneg) {
            out.found = true;
            out.shift = static_cast<unsigned>(m);
            out.certificate = std::move(f);
            return out;
        }
    }
    return out;
}

namespace {

void classify_rational(ClassificationReport& report, const Rational& q,
                       const SearchBudget& budget) {
    report.rank = Rank::finite(1);
    if (q.is_integer()) {
        report.set(Property::Ufm, TruthValue::Yes,
                   "an integer base generates a scaled copy of the naturals, which factors "
                   "uniquely over the single atom 1");
        return;
    }
    if (q > Rational(1)) {
        report.set(Property::Ffm, TruthValue::Yes,
                   "the powers form a strictly increasing generating sequence, and increasing "
                   "positive monoids have finite factorization sets");
        std::map<std::string, std::string> w;
        w["equal_element"] = (Rational(q.num())).to_string();
        w["factorization_lengths"] = q.den().str() + " and " + q.num().str();
        report.set(Property::Hfm, TruthValue::No,
                   "d(q) copies of the atom q and n(q) copies of the atom 1 factor the same "
                   "element with different lengths",
                   w);
        report.set(Property::Ufm, TruthValue::No,
                   "d(q) copies of the atom q and n(q) copies of the atom 1 are distinct "
                   "factorizations of one element",
                   w);
        return;
    }
    // q in (0,1).
    AlgebraicReal a = AlgebraicReal::from_rational(q);
    Verdict atomic = cs_is_atomic(a, budget);
    report.verdicts[Property::Atomic] = atomic;
    if (atomic.value == TruthValue::No) {
        // Non-atomic is equivalent to antimatter here: the relation for 1
        // pushes every power into strictly higher powers.
        report.set(Property::Antimatter, TruthValue::Yes,
                   "1 is not an atom, and multiplying its relation by a^n splits every power",
                   atomic.witness);
        return;
    }
    AccpObstruction obstruction = cs_accp_obstruction(a);
    if (obstruction.found) {
        std::map<std::string, std::string> w;
        w["shift"] = std::to_string(obstruction.shift);
        w["certificate"] = obstruction.certificate.to_string();
        report.set(Property::Accp, TruthValue::No,
                   "the shifted minimal pair stays coefficient-nonnegative, which yields a "
                   "strictly ascending chain of principal ideals",
                   w);
    }
    std::map<std::string, std::string> w;
    w["unbounded_length_chain"] = "n(q) q^n = d(q) q^(n+1) for every n, so the lengths of n(q) "
                                  "are unbounded";
    report.set(Property::Bfm, TruthValue::No,
               "replacing n(q) copies of q^n by d(q) copies of q^(n+1) raises the length "
               "without bound",
               w);
}

void classify_algebraic(ClassificationReport& report, const AlgebraicReal& alpha,
                        const SearchBudget& budget) {
    const IntPolynomial& p = alpha.minpoly();
    report.rank = Rank::finite(Int(p.degree()));
    report.trust.asserted_irreducibility =
        alpha.irreducibility() == Irreducibility::Asserted;
    Comparison cmp = alpha.compare(Rational(1));
    if (cmp == Comparison::Greater) {
        report.set(Property::Ffm, TruthValue::Yes,
                   "the powers form a strictly increasing generating sequence, and increasing "
                   "positive monoids have finite factorization sets");
        // UFM test: the membership search at n = deg m, decided exactly. A
        // representation alpha^d = sum_{j<d} c_j alpha^j forces the monic
        // integer polynomial x^d - sum c_j x^j to equal the minimal
        // polynomial, so it exists exactly when the minimal polynomial is
        // monic with nonpositive lower coefficients.
        const unsigned d = static_cast<unsigned>(p.degree());
        bool monic = p.leading() == 1;
        bool nonpos_below = true;
        for (unsigned j = 0; j < d; ++j)
            if (p.coeff(j) > 0) nonpos_below = false;
        if (monic && nonpos_below) {
            std::vector<Int> c(d);
            for (unsigned j = 0; j < d; ++j) c[j] = -p.coeff(j);
            std::map<std::string, std::string> w;
            w["relation"] = "a^" + std::to_string(d) + " = sum of lower powers with coefficients [" +
                            join_ints(c) + "]";
            report.set(Property::Ufm, TruthValue::Yes,
                       "sigma equals the degree of the minimal polynomial, so the atom count "
                       "equals the degree and factorizations are unique",
                       w);
        } else {
            report.set(Property::Ufm, TruthValue::No,
                       "the membership search at the degree power finds no nonnegative "
                       "representation, so the atom count exceeds the degree");
        }
        return;
    }
    if (cmp == Comparison::Equal) return;  // cannot happen: 1 is rational
    // alpha in (0,1).
    Verdict atomic = cs_is_atomic(alpha, budget);
    report.verdicts[Property::Atomic] = atomic;
    if (atomic.value == TruthValue::Unknown)
        report.budget_note = "atomicity search budget: " + budget.describe();
    if (atomic.value == TruthValue::No) {
        report.set(Property::Antimatter, TruthValue::Yes,
                   "1 is not an atom, and multiplying its relation by a^n splits every power",
                   atomic.witness);
        return;
    }
    AccpObstruction obstruction = cs_accp_obstruction(alpha);
    if (obstruction.found) {
        std::map<std::string, std::string> w;
        w["shift"] = std::to_string(obstruction.shift);
        w["certificate"] = obstruction.certificate.to_string();
        report.set(Property::Accp, TruthValue::No,
                   "the shifted minimal pair stays coefficient-nonnegative, which yields a "
                   "strictly ascending chain of principal ideals",
                   w);
    }
    // A failed shift test never upgrades ACCP to yes: the condition is only
    // necessary.
}

}  // namespace

ClassificationReport cs_classify(const AlgebraicReal& alpha, const SearchBudget& budget) {
    ClassificationReport report;
    switch (alpha.kind()) {
        case AlgebraicKind::Transcendental:
            report.rank = Rank::countably_infinite();
            report.trust.declared_transcendence = true;
            report.set(Property::Ufm, TruthValue::Yes,
                       "the powers are linearly independent over the rationals, so the monoid is "
                       "free on them");
            break;
        case AlgebraicKind::Rational:
            classify_rational(report, alpha.rational_value(), budget);
            break;
        case AlgebraicKind::Algebraic:
            classify_algebraic(report, alpha, budget);
            break;
    }
    return propagate(report);
}

FactorizationSet cs_factorizations(const Rational& q, const Rational& target,
                                   std::optional<unsigned> exponent_cap) {
    if (!q.is_positive()) fail(ErrorCode::InvalidArgument, "base must be positive");
    if (target.is_negative()) fail(ErrorCode::InvalidArgument, "target must be nonnegative");

    FactorizationSet out;
    if (q.is_integer()) {
        // The single atom is 1 (sigma = 1); Z(b) = {b * 1} for integer b.
        out.complete = true;
        if (target.is_integer()) out.items.push_back(Factorization{{target.num()}});
        return out;
    }

    // Exponents above this cannot appear when q > 1: q^i > target forces
    // the multiplicity to zero.
    unsigned exhaustive_cap = 0;
    if (q > Rational(1)) {
        Rational qpow(1);
        while (qpow * q <= target) {
            qpow *= q;
            ++exhaustive_cap;
        }
    }

    unsigned cap = 0;
    if (exponent_cap) {
        cap = *exponent_cap;
    } else {
        if (q < Rational(1))
            fail(ErrorCode::CapRequired,
                 "for q < 1 the factorization set can be infinite; an explicit cap is required");
        cap = exhaustive_cap;
    }
    out.complete = q > Rational(1) && cap >= exhaustive_cap;

    // Clear denominators: sum c_i a^i b^(cap-i) = target * b^cap.
    const Int& a = q.num();
    const Int& b = q.den();
    Int bcap = 1;
    for (unsigned i = 0; i < cap; ++i) bcap *= b;
    Rational scaled = target * Rational(bcap);
    if (!scaled.is_integer()) return out;  // denominators cannot match under this cap
    std::vector<Int> weights(cap + 1);
    {
        Int apow = 1;
        for (unsigned i = 0; i <= cap; ++i) {
            Int bpow = 1;
            for (unsigned t = 0; t < cap - i; ++t) bpow *= b;
            weights[i] = apow * bpow;
            apow *= a;
        }
    }
    IntKnapsack search(std::move(weights), scaled.num(), /*collect_all=*/true, 50'000'000);
    search.run();
    if (search.aborted()) fail(ErrorCode::InvalidBudget, "factorization enumeration node cap hit");
    for (const auto& sol : search.solutions()) out.items.push_back(Factorization{sol});
    std::sort(out.items.begin(), out.items.end());
    return out;
}

LengthSet cs_length_set(const Rational& q, const Rational& target,
                        std::optional<unsigned> exponent_cap) {
    return lengths_of(cs_factorizations(q, target, exponent_cap));
}

}  // namespace posmon
