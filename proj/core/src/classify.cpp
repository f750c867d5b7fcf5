#include <posmon/classify.hpp>

#include <posmon/cyclic_semiring.hpp>
#include <posmon/error.hpp>

#include <sstream>

namespace posmon {

namespace {

std::string join_rationals(const std::vector<Rational>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i].to_string();
    }
    return os.str();
}

std::string join_ints(const std::vector<Int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i].str();
    }
    return os.str();
}

ClassificationReport classify_fg(const FgSpec& spec, const SearchBudget&) {
    FgMonoid m = fg_construct(make_basis(spec.basis_constants), spec.generators);
    ClassificationReport report;
    report.rank = Rank::finite(Int(fg_rank(m)));
    report.trust.declared_independence = !m.basis.independence_verified;
    for (const auto& c : m.basis.constants)
        if (c.is_transcendental()) report.trust.declared_transcendence = true;
        else if (c.is_algebraic() && c.irreducibility() == Irreducibility::Asserted)
            report.trust.asserted_irreducibility = true;

    report.set(Property::Atomic, TruthValue::Yes,
               "a reduced finitely generated monoid is generated by its atoms");
    report.set(Property::Ffm, TruthValue::Yes,
               "finitely generated monoids have finite factorization sets");
    // Finitely many atoms, all strictly positive: the infimum of the nonzero
    // elements is positive, which bounds every length set.
    report.set(Property::Bfm, TruthValue::Yes,
               "the smallest atom value is positive, so lengths of b are at most b divided by it");

    UfmCertificate ufm = fg_is_ufm(m);
    if (ufm.is_ufm) {
        report.set(Property::Ufm, TruthValue::Yes, ufm.note);
    } else {
        std::map<std::string, std::string> w;
        w["kernel_vector"] = join_ints(ufm.kernel_vector);
        report.set(Property::Ufm, TruthValue::No, ufm.note, w);
    }
    HfmCertificate hfm = fg_is_hfm(m);
    if (hfm.is_hfm) {
        std::map<std::string, std::string> w;
        w["length_functional"] = join_rationals(hfm.functional);
        report.set(Property::Hfm, TruthValue::Yes, hfm.note, w);
    } else {
        std::map<std::string, std::string> w;
        w["kernel_vector"] = join_ints(hfm.kernel_vector);
        report.set(Property::Hfm, TruthValue::No, hfm.note, w);
    }
    return report;
}

ClassificationReport classify_unit_fraction(const UnitFractionSpec& spec) {
    ClassificationReport report;
    report.rank = Rank::finite(1);
    report.set(Property::Atomic, TruthValue::Yes,
               "every unit fraction 1/d_j is an atom: the moduli are pairwise coprime, so no "
               "smaller combination reaches it");
    report.set(Property::Accp, TruthValue::Yes,
               "the (integer part, digit sum) measure of the canonical decomposition strictly "
               "decreases along proper divisibility chains");
    std::map<std::string, std::string> w;
    std::size_t k = spec.scheme.is_primes()
                        ? 5
                        : std::min<std::size_t>(5, spec.scheme.known_prefix().size());
    LengthSet l1 = uf_lengths_of_one(spec.scheme, k);
    w["subset_of_lengths_of_one"] = join_ints(l1.lengths);
    w["witnesses"] = "1 = d_n * (1/d_n) for every scheme modulus d_n";
    report.set(Property::Bfm, TruthValue::No,
               "the scheme moduli form an unbounded subset of the lengths of 1", w);
    return report;
}

ClassificationReport classify_interval(const IntervalSpec& spec) {
    const IntervalMonoidSpec& m = spec.interval;
    ClassificationReport report;
    report.rank = Rank::unknown();  // the difference group is all of the reals
    report.set(Property::Bfm, TruthValue::Yes,
               "the nonzero elements are bounded below by a positive threshold, so lengths of b "
               "are bounded by b over that threshold");
    if (m.kind == IntervalMonoidSpec::Kind::Ms) {
        const Rational& s = m.parameter;
        std::map<std::string, std::string> wf;
        wf["family"] = "(s + s/n) + (b - s - s/n) for every large n, at any member b > 2s";
        report.set(Property::Ffm, TruthValue::No,
                   "members above twice the threshold have a one-parameter family of two-atom "
                   "factorizations",
                   wf);
        std::map<std::string, std::string> wh;
        Rational b = Rational(3) * s;
        wh["element"] = b.to_string();
        wh["factorizations"] = "3 copies of " + s.to_string() + " and 2 copies of " +
                               (b / Rational(2)).to_string();
        wh["lengths"] = "3 and 2";
        report.set(Property::Hfm, TruthValue::No,
                   "three copies of the threshold and two copies of 1.5x the threshold factor "
                   "the same element with different lengths",
                   wh);
    } else {
        const Rational& r = m.parameter;
        // Witness pair for 2r+1 (or the integer variant): two fractional
        // atoms against a longer split through smaller members.
        std::map<std::string, std::string> wh;
        if (r.is_integer()) {
            Rational b = Rational(2) * r + Rational(1);
            wh["element"] = b.to_string();
            wh["factorizations"] = b.num().str() + " copies of 1 and 2 copies of " +
                                   (b / Rational(2)).to_string();
            wh["lengths"] = b.num().str() + " and 2";
        } else {
            // Pick a shift that keeps both fractional atoms away from the
            // excluded ceiling point.
            Rational bad1 = Rational(r.ceil()) - r;
            Rational bad2 = r + Rational(1) - Rational(r.ceil());
            Rational delta(1, 3);
            for (const Rational& cand : {Rational(1, 3), Rational(1, 2), Rational(2, 5)}) {
                if (cand != bad1 && cand != bad2) {
                    delta = cand;
                    break;
                }
            }
            Rational b = Rational(2) * r + Rational(1);
            wh["element"] = b.to_string();
            wh["factorizations"] = "1 + " + r.to_string() + " + " + r.to_string() + " and (" +
                                   (r + delta).to_string() + ") + (" +
                                   (r + Rational(1) - delta).to_string() + ")";
            wh["lengths"] = "3 and 2";
        }
        report.set(Property::Hfm, TruthValue::No,
                   "the witness element splits into factorizations of different lengths", wh);
        std::map<std::string, std::string> wf;
        wf["family"] = "(r + e) + (b - r - e) for all small rational e > 0, at any member b > 2r";
        report.set(Property::Ffm, TruthValue::No,
                   "members above twice the lower threshold have a one-parameter family of "
                   "two-atom factorizations",
                   wf);
    }
    return report;
}

}  // namespace

ClassificationReport classify(const MonoidSpec& spec, const SearchBudget& budget) {
    ClassificationReport report;
    if (const auto* cyclic = std::get_if<CyclicSpec>(&spec.value)) {
        report = cs_classify(cyclic->alpha, budget);
    } else if (const auto* fg = std::get_if<FgSpec>(&spec.value)) {
        report = classify_fg(*fg, budget);
    } else if (const auto* uf = std::get_if<UnitFractionSpec>(&spec.value)) {
        report = classify_unit_fraction(*uf);
    } else if (const auto* interval = std::get_if<IntervalSpec>(&spec.value)) {
        report = classify_interval(*interval);
    } else if (const auto* sum = std::get_if<DirectSumSpec>(&spec.value)) {
        if (sum->parts.empty()) fail(ErrorCode::EmptyPartList, "direct sum needs parts");
        std::vector<ClassificationReport> part_reports;
        part_reports.reserve(sum->parts.size());
        for (const auto& part : sum->parts) part_reports.push_back(classify(part, budget));
        report = direct_sum_report(part_reports);
    }
    return propagate(report);
}

}  // namespace posmon
