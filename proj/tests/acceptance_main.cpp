// Acceptance suite: reproduces the worked examples and property suites
// end-to-end, one pass/fail line per criterion. The first argument is the
// path of the CLI binary (used by the determinism criterion).

#include <posmon/classify.hpp>
#include <posmon/cyclic_semiring.hpp>
#include <posmon/error.hpp>
#include <posmon/spec_io.hpp>
#include <posmon/sturm.hpp>

#include "oracle_helpers.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace posmon;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, const std::function<bool()>& body) {
    bool pass = false;
    std::string note;
    try {
        pass = body();
    } catch (const std::exception& e) {
        note = std::string(" (") + e.what() + ")";
    }
    std::printf("[%s] criterion %2d: %s%s\n", pass ? "PASS" : "FAIL", number, name.c_str(),
                note.c_str());
    if (!pass) ++failures;
}

IntPolynomial poly(std::vector<long long> coeffs) {
    std::vector<Int> c(coeffs.begin(), coeffs.end());
    return IntPolynomial(std::move(c));
}

bool expect(bool condition, const std::string& what) {
    if (!condition) std::printf("       failed: %s\n", what.c_str());
    return condition;
}

struct RunResult {
    std::string output;
    int exit_code = -1;
};

RunResult run_command(const std::string& command) {
    RunResult r;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (!pipe) return r;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) r.output.append(buffer, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

FgMonoid example_m(long long n) {
    return fg_construct(
        make_basis({AlgebraicReal::from_rational(Rational(1)), make_pi()}),
        {{Rational(0), Rational(1)}, {Rational(n), Rational(0)}, {Rational(n, 2), Rational(1, 2)}});
}

const SearchBudget kBudget{};

}  // namespace

int main(int argc, char** argv) {
    std::string cli = argc > 1 ? argv[1] : "";

    criterion(1, "antimatter for the golden-ratio conjugate with a re-verified witness", [] {
        AlgebraicReal a = alg_make(poly({-1, 1, 1}), Rational(1, 2), Rational(1));
        ClassificationReport r = cs_classify(a, kBudget);
        bool ok = expect(r.value(Property::Antimatter) == TruthValue::Yes, "antimatter = yes");
        OneAtomResult one = cs_one_is_atom(a, kBudget);
        ok &= expect(one.status == OneAtomStatus::NotAtom, "1 is not an atom");
        ok &= expect(one.witness.has_value() &&
                         one.witness->coefficients == std::vector<Int>{1, 1},
                     "witness is 1 = a + a^2");
        ok &= expect(verify_antimatter_witness(a, *one.witness),
                     "witness re-verifies by exact divisibility");
        ok &= expect(poly({1, -1, -1}).divisible_by(a.minpoly()),
                     "1 - x - x^2 is divisible by the minimal polynomial");
        return ok;
    });

    criterion(2, "the two sufficient conditions fire independently", [] {
        bool ok = expect(int_abs(poly({-2, 2, 1}).constant_term()) != 1,
                         "condition (1) fires on x^2+2x-2");
        ok &= expect(int_abs(poly({1, -4, 1}).constant_term()) == 1,
                     "condition (1) does not fire on x^2-4x+1");
        ok &= expect(poly_positive_root_count_with_multiplicity(poly({1, -4, 1})) == 2,
                     "condition (2) fires on x^2-4x+1 (count 2)");
        ok &= expect(poly_positive_root_count_with_multiplicity(poly({-2, 2, 1})) == 1,
                     "condition (2) does not fire on x^2+2x-2 (count 1)");
        ok &= expect(poly_positive_root_count(poly({1, -4, 1})) == 2,
                     "two distinct positive roots of x^2-4x+1");
        return ok;
    });

    criterion(3, "unit-interval rational sweep: atomic without ACCP, or antimatter", [] {
        bool ok = true;
        int cases = 0;
        for (int b = 2; b <= 12; ++b) {
            for (int a = 1; a < b; ++a) {
                if (int_gcd(a, b) != 1) continue;
                AlgebraicReal q = AlgebraicReal::from_rational(Rational(a, b));
                ClassificationReport r = cs_classify(q, kBudget);
                if (a == 1) {
                    ok &= expect(r.value(Property::Antimatter) == TruthValue::Yes,
                                 "antimatter at 1/" + std::to_string(b));
                    OneAtomResult one = cs_one_is_atom(q, kBudget);
                    ok &= expect(one.witness && verify_antimatter_witness(q, *one.witness),
                                 "verified witness at 1/" + std::to_string(b));
                } else {
                    ++cases;
                    ok &= expect(r.value(Property::Atomic) == TruthValue::Yes,
                                 "atomic at " + std::to_string(a) + "/" + std::to_string(b));
                    ok &= expect(r.value(Property::Accp) == TruthValue::No,
                                 "ACCP fails at " + std::to_string(a) + "/" + std::to_string(b));
                    AccpObstruction o = cs_accp_obstruction(q);
                    ok &= expect(o.found, "shift certificate exists");
                    MinimalPair mp = minimal_pair(q);
                    IntPolynomial f = mp.plus_part - mp.minus_part.shifted(o.shift);
                    ok &= expect(f == o.certificate, "certificate equals p - x^m q");
                    for (const auto& c : f.coefficients())
                        ok &= expect(c >= 0, "certificate coefficients nonnegative");
                }
            }
        }
        ok &= expect(cases == 34, "exactly 34 coprime pairs with 2 <= a < b <= 12");
        return ok;
    });

    criterion(4, "primes unit-fraction monoid: ACCP without BFM, decompositions exact", [] {
        auto scheme = UnitFractionScheme::primes();
        ClassificationReport r = classify(MonoidSpec{UnitFractionSpec{scheme}}, kBudget);
        bool ok = expect(r.value(Property::Atomic) == TruthValue::Yes, "atomic = yes");
        ok &= expect(r.value(Property::Accp) == TruthValue::Yes, "ACCP = yes");
        ok &= expect(r.value(Property::Bfm) == TruthValue::No, "BFM = no");
        LengthSet l1 = uf_lengths_of_one(scheme, 5);
        ok &= expect(l1.lengths == std::vector<Int>{2, 3, 5, 7, 11},
                     "certified subset {2,3,5,7,11} of L(1)");
        for (std::size_t j = 1; j <= 5; ++j) {
            Int d = scheme.modulus(j);
            ok &= expect(Rational(d) * Rational(1, d) == Rational(1), "witness 1 = d * (1/d)");
        }
        const std::vector<Int> moduli = {Int(2), Int(3), Int(5), Int(7)};
        for (int b : {1, 2, 3, 5, 6, 7, 10, 14, 15, 21, 30, 35, 42, 70, 105, 210}) {
            for (int a = 0; a <= 4 * b; ++a) {
                Rational q(a, b);
                auto brute = oracle::uf_decompositions_brute_force(moduli, q);
                if (brute.size() != 1) return expect(false, "brute-force decomposition not unique");
                CanonicalDecomposition dec = uf_canonical(scheme, q);
                std::vector<Int> res = dec.residues;
                res.resize(4, Int(0));
                if (dec.integer_part != brute[0].integer_part || res != brute[0].residues)
                    return expect(false, "decomposition mismatch at " + q.to_string());
            }
        }
        return ok;
    });

    criterion(5, "direct sum with two independent lines: rank 3, atomic, no ACCP", [] {
        MonoidSpec sum{DirectSumSpec{
            {MonoidSpec{CyclicSpec{AlgebraicReal::from_rational(Rational(2, 3))}},
             MonoidSpec{FgSpec{{AlgebraicReal::transcendental("t1", Rational(2), Rational(3))},
                               {{Rational(1)}}}},
             MonoidSpec{FgSpec{{AlgebraicReal::transcendental("t2", Rational(4), Rational(5))},
                               {{Rational(1)}}}}}}};
        ClassificationReport r = classify(sum, kBudget);
        bool ok = expect(r.rank == Rank::finite(3), "rank 3");
        ok &= expect(r.value(Property::Atomic) == TruthValue::Yes, "atomic = yes");
        ok &= expect(r.value(Property::Accp) == TruthValue::No, "ACCP = no");
        return ok;
    });

    criterion(6, "interval monoids: bounded but not finite factorizations, exact boundaries", [] {
        auto ms = IntervalMonoidSpec::ms(Rational(1));
        ClassificationReport r = classify(MonoidSpec{IntervalSpec{ms}}, kBudget);
        bool ok = expect(r.value(Property::Bfm) == TruthValue::Yes, "BFM = yes");
        ok &= expect(r.value(Property::Ffm) == TruthValue::No, "FFM = no");
        ok &= expect(r.value(Property::Hfm) == TruthValue::No, "HFM = no");
        LengthSet l = interval_length_set(ms, Rational(3));
        ok &= expect(l.lengths == std::vector<Int>{2, 3}, "L(3) = {2, 3}");
        ok &= expect(interval_has_infinite_Z(ms, Rational(5, 2)), "infinitely many Z at 5/2");
        for (int k = -4; k <= 4; ++k) {
            Rational eps(k, 64);
            ok &= expect(interval_is_atom(ms, Rational(1) + eps) == (k >= 0), "Ms boundary at s");
            ok &= expect(interval_is_atom(ms, Rational(2) + eps) == (k < 0), "Ms boundary at 2s");
        }
        auto sr = IntervalMonoidSpec::sr(Rational(5, 2));
        for (int k = -4; k <= 4; ++k) {
            Rational eps(k, 64);
            ok &= expect(interval_is_atom(sr, Rational(1) + eps) == (k == 0), "Sr boundary at 1");
            ok &= expect(interval_is_atom(sr, Rational(3) + eps) == (k != 0),
                         "Sr boundary at the ceiling");
            ok &= expect(interval_is_atom(sr, Rational(5, 2) + eps) == (k >= 0),
                         "Sr boundary at r");
            ok &= expect(interval_is_atom(sr, Rational(7, 2) + eps) == (k < 0),
                         "Sr boundary at r+1");
        }
        return ok;
    });

    criterion(7, "pi-based half-factorial monoids with re-verified certificates", [] {
        bool ok = true;
        for (long long n : {1LL, 2LL, 3LL}) {
            FgMonoid m = example_m(n);
            ok &= expect(fg_atoms(m).size() == 3,
                         "all three generators are atoms at n = " + std::to_string(n));
            HfmCertificate h = fg_is_hfm(m);
            ok &= expect(h.is_hfm, "HFM at n = " + std::to_string(n));
            for (const auto& atom : fg_atoms(m)) {
                Rational v(0);
                for (std::size_t i = 0; i < atom.size(); ++i) v += atom[i] * h.functional[i];
                ok &= expect(v == Rational(1), "functional is 1 on every atom");
            }
            UfmCertificate u = fg_is_ufm(m);
            ok &= expect(!u.is_ufm, "not a UFM at n = " + std::to_string(n));
            ok &= expect(u.kernel_vector == std::vector<Int>{1, 1, -2}, "kernel vector (1,1,-2)");
            Coordinates combo(2, Rational(0));
            for (std::size_t i = 0; i < u.kernel_vector.size(); ++i)
                for (std::size_t t = 0; t < 2; ++t)
                    combo[t] += Rational(u.kernel_vector[i]) * fg_atoms(m)[i][t];
            ok &= expect(combo[0].is_zero() && combo[1].is_zero(), "kernel vector re-verifies");
            FactorizationSet z = fg_factorizations(m, {Rational(n), Rational(1)});
            ok &= expect(z.items.size() == 2,
                         "exactly two factorizations of pi + " + std::to_string(n));
            LengthSet l = lengths_of(z);
            ok &= expect(l.lengths == std::vector<Int>{2}, "length set {2}");
        }
        return ok;
    });

    criterion(8, "x^n - 4x + 2: verified irreducible, finite factorizations, not unique", [] {
        bool ok = true;
        for (int n : {2, 3, 4}) {
            std::vector<Int> c(static_cast<std::size_t>(n) + 1, Int(0));
            c[0] = 2;
            c[1] = -4;
            c[static_cast<std::size_t>(n)] = 1;
            AlgebraicReal a = alg_make(IntPolynomial(std::move(c)), Rational(1), Rational(4));
            ok &= expect(a.is_algebraic() && a.irreducibility() == Irreducibility::Verified,
                         "irreducibility verified at n = " + std::to_string(n));
            ClassificationReport r = cs_classify(a, kBudget);
            ok &= expect(r.value(Property::Ffm) == TruthValue::Yes,
                         "FFM at n = " + std::to_string(n));
            ok &= expect(r.value(Property::Ufm) == TruthValue::No,
                         "not UFM at n = " + std::to_string(n));
            ok &= expect(r.rank == Rank::finite(n), "rank " + std::to_string(n));
        }
        return ok;
    });

    criterion(9, "oracle suites: enumeration, sigma, sign rule, closure", [] {
        bool ok = true;
        // (i) factorization enumeration vs brute force
        auto gen = oracle::rng(4242);
        std::uniform_int_distribution<int> natoms(1, 4);
        std::uniform_int_distribution<int> num(1, 12);
        std::uniform_int_distribution<int> den(1, 4);
        std::uniform_int_distribution<int> tnum(0, 30);
        for (int trial = 0; trial < 200; ++trial) {
            int k = natoms(gen);
            std::vector<Coordinates> gens;
            for (int i = 0; i < k; ++i) gens.push_back({Rational(num(gen), den(gen))});
            FgMonoid m =
                fg_construct(make_basis({AlgebraicReal::from_rational(Rational(1))}), gens);
            Rational target(tnum(gen));
            FactorizationSet z = fg_factorizations(m, {target});
            std::vector<Rational> atom_values;
            for (const auto& a : fg_atoms(m)) atom_values.push_back(a[0]);
            auto brute = oracle::fg_factorizations_brute_force(atom_values, target);
            std::sort(brute.begin(), brute.end());
            if (z.items.size() != brute.size()) return expect(false, "enumeration size mismatch");
            for (std::size_t i = 0; i < brute.size(); ++i)
                if (z.items[i].multiplicities != brute[i])
                    return expect(false, "enumeration content mismatch");
        }
        // (ii) sigma vs the cleared-denominator knapsack oracle
        for (auto& [n, d] : std::vector<std::pair<int, int>>{{5, 2}, {3, 1}, {7, 2}, {4, 1}}) {
            unsigned brute = oracle::sigma_brute_force(n, d, 5);
            SigmaResult s = cs_sigma(AlgebraicReal::from_rational(Rational(n, d)), 5);
            bool agree = brute == 0 ? (s.kind == SigmaResult::Kind::AtLeast && s.bound == 5)
                                    : (s.kind == SigmaResult::Kind::Finite && s.sigma == brute);
            ok &= expect(agree,
                         "sigma agreement at " + std::to_string(n) + "/" + std::to_string(d));
        }
        // (iii) sign-rule bound and parity on 1000 random polynomials
        std::uniform_int_distribution<int> coeff(-9, 9);
        std::uniform_int_distribution<int> deg(1, 6);
        int tested = 0;
        while (tested < 1000) {
            int dd = deg(gen);
            std::vector<Int> cs(static_cast<std::size_t>(dd) + 1);
            for (auto& x : cs) x = coeff(gen);
            IntPolynomial p{std::vector<Int>(cs)};
            if (p.is_zero()) continue;
            ++tested;
            unsigned variations = poly_sign_variations(p);
            unsigned roots = poly_positive_root_count_with_multiplicity(p);
            if (roots > variations || (variations - roots) % 2 != 0)
                return expect(false, "sign rule violated for " + p.to_string());
        }
        // (iv) closure: idempotence, monotonicity, contradiction detection
        ClassificationReport seed;
        seed.set(Property::Ffm, TruthValue::Yes, "seed");
        ClassificationReport closed = propagate(seed);
        ok &= expect(closed.value(Property::Atomic) == TruthValue::Yes, "closure reaches atomic");
        ok &= expect(propagate(closed) == closed, "propagate is idempotent");
        ok &= expect(closed.value(Property::Ffm) == TruthValue::Yes, "closure is monotone");
        for (auto& [p1, v1, p2, v2] :
             std::vector<std::tuple<Property, TruthValue, Property, TruthValue>>{
                 {Property::Ufm, TruthValue::Yes, Property::Atomic, TruthValue::No},
                 {Property::Bfm, TruthValue::Yes, Property::Accp, TruthValue::No},
                 {Property::Antimatter, TruthValue::Yes, Property::Hfm, TruthValue::Yes}}) {
            ClassificationReport bad;
            bad.set(p1, v1, "seed-a");
            bad.set(p2, v2, "seed-b");
            bool threw = false;
            try {
                propagate(bad);
            } catch (const Error& e) {
                threw = e.code() == ErrorCode::ContradictoryVerdicts;
            }
            ok &= expect(threw, "contradiction detected");
        }
        return ok;
    });

    criterion(10, "byte-identical machine reports across repeated runs", [&cli] {
        if (cli.empty()) return expect(false, "no CLI path given");
        char dir_template[] = "/tmp/posmon_accept_XXXXXX";
        if (!mkdtemp(dir_template)) return expect(false, "mkdtemp failed");
        std::string dir = dir_template;
        const std::vector<std::pair<std::string, std::string>> inputs = {
            {"c1.json",
             R"({"monoid": {"kind": "cyclic", "alpha": {"minpoly": [-1, 1, 1], "interval": ["1/2", "1"]}}})"},
            {"c2.json", R"({"monoid": {"kind": "cyclic", "alpha": {"rational": "2/3"}}})"},
            {"c4.json", R"({"monoid": {"kind": "unit_fraction", "rule": "primes"}})"},
            {"c5.json", R"({"monoid": {"kind": "direct_sum", "parts": [
                 {"kind": "cyclic", "alpha": {"rational": "2/3"}},
                 {"kind": "fg", "basis": [{"transcendental": "t1", "enclosure": ["2", "3"]}],
                  "generators": [["1"]]},
                 {"kind": "fg", "basis": [{"transcendental": "t2", "enclosure": ["4", "5"]}],
                  "generators": [["1"]]}]}})"},
            {"c6ms.json", R"({"monoid": {"kind": "interval_ms", "s": "1"}})"},
            {"c6sr.json", R"({"monoid": {"kind": "interval_sr", "r": "5/2"}})"},
            {"c7.json",
             R"({"monoid": {"kind": "fg", "basis": [{"rational": "1"}, {"transcendental": "pi"}],
                 "generators": [["0", "1"], ["2", "0"], ["1", "1/2"]]}})"},
            {"c8.json",
             R"({"monoid": {"kind": "cyclic", "alpha": {"minpoly": [2, -4, 0, 1], "interval": ["1", "4"]}}})"},
        };
        bool ok = true;
        for (const auto& [name, text] : inputs) {
            std::string path = dir + "/" + name;
            std::ofstream(path) << text;
            RunResult first = run_command(cli + " classify --json " + path);
            ok &= expect(first.exit_code == 0 || first.exit_code == 2,
                         name + ": clean exit, got " + std::to_string(first.exit_code));
            ok &= expect(!first.output.empty(), name + ": produced output");
            for (int i = 1; i < 10; ++i) {
                RunResult again = run_command(cli + " classify --json " + path);
                if (again.output != first.output || again.exit_code != first.exit_code)
                    return expect(false, name + ": runs differ");
            }
        }
        // the undecided-sigma example: exit code 2 and stable output
        std::string sig = dir + "/sigma.json";
        std::ofstream(sig) << R"({"monoid": {"kind": "cyclic", "alpha": {"rational": "3/2"}}})";
        RunResult first = run_command(cli + " sigma --max 6 --json " + sig);
        ok &= expect(first.exit_code == 2, "sigma 3/2 exits with 2");
        for (int i = 1; i < 10; ++i) {
            RunResult again = run_command(cli + " sigma --max 6 --json " + sig);
            if (again.output != first.output) return expect(false, "sigma runs differ");
        }
        return ok;
    });

    if (failures == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
