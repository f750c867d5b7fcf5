#include <doctest.h>

#include <posmon/cyclic_semiring.hpp>
#include <posmon/error.hpp>
#include <posmon/sturm.hpp>

#include "oracle_helpers.hpp"

#include <functional>

using namespace posmon;

namespace {

IntPolynomial poly(std::vector<long long> coeffs) {
    std::vector<Int> c(coeffs.begin(), coeffs.end());
    return IntPolynomial(std::move(c));
}

AlgebraicReal golden_conjugate() {  // (sqrt(5)-1)/2 ~ 0.618
    return alg_make(poly({-1, 1, 1}), Rational(1, 2), Rational(1));
}

AlgebraicReal rational_value(long long n, long long d) {
    return AlgebraicReal::from_rational(Rational(n, d));
}

const SearchBudget kBudget{};

}  // namespace

TEST_CASE("one is an atom: worked cases") {
    OneAtomResult r = cs_one_is_atom(golden_conjugate(), kBudget);
    CHECK(r.status == OneAtomStatus::NotAtom);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->coefficients == std::vector<Int>{1, 1});  // 1 = a + a^2
    CHECK(verify_antimatter_witness(golden_conjugate(), *r.witness));

    CHECK(cs_one_is_atom(rational_value(2, 3), kBudget).status == OneAtomStatus::Atom);

    r = cs_one_is_atom(rational_value(1, 5), kBudget);
    CHECK(r.status == OneAtomStatus::NotAtom);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->coefficients == std::vector<Int>{5});  // 1 = 5 * (1/5)
    CHECK(verify_antimatter_witness(rational_value(1, 5), *r.witness));

    CHECK(cs_one_is_atom(rational_value(7, 2), kBudget).status == OneAtomStatus::Atom);
    CHECK(cs_one_is_atom(make_pi(), kBudget).status == OneAtomStatus::Atom);
}

TEST_CASE("sufficient conditions fire independently") {
    // first condition: non-unit constant term; second: two positive roots
    CHECK(int_abs(poly({-2, 2, 1}).constant_term()) == 2);   // fires (1), root sqrt(3)-1
    CHECK(poly_positive_root_count_with_multiplicity(poly({-2, 2, 1})) == 1);  // (2) fails
    CHECK(int_abs(poly({1, -4, 1}).constant_term()) == 1);   // (1) fails
    CHECK(poly_positive_root_count_with_multiplicity(poly({1, -4, 1})) == 2);  // (2) fires

    AlgebraicReal sqrt3m1 = alg_make(poly({-2, 2, 1}), Rational(1, 2), Rational(1));
    Verdict v = cs_is_atomic(sqrt3m1, kBudget);
    CHECK(v.value == TruthValue::Yes);
    CHECK(v.provenance.find("condition (1)") != std::string::npos);

    AlgebraicReal small_root = alg_make(poly({1, -4, 1}), Rational(1, 5), Rational(1, 2));
    v = cs_is_atomic(small_root, kBudget);
    CHECK(v.value == TruthValue::Yes);
    CHECK(v.provenance.find("condition (2)") != std::string::npos);
}

TEST_CASE("witness search finds relations beyond the closed forms") {
    // alpha = (sqrt(13)-1)/6 ~ 0.4343, minimal polynomial 3x^2 + x - 1:
    // both conditions fail, but 1 = a + 3a^2 exactly.
    AlgebraicReal a = alg_make(poly({-1, 1, 3}), Rational(1, 3), Rational(1, 2));
    OneAtomResult r = cs_one_is_atom(a, kBudget);
    CHECK(r.status == OneAtomStatus::NotAtom);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->coefficients == std::vector<Int>{1, 3});
    CHECK(verify_antimatter_witness(a, *r.witness));
}

TEST_CASE("witness search reports unknown honestly") {
    // alpha = (1+sqrt(13))/6 ~ 0.768, minimal polynomial 3x^2 - x - 1: both
    // conditions fail and no bounded witness exists.
    AlgebraicReal a = alg_make(poly({-1, -1, 3}), Rational(3, 5), Rational(1));
    OneAtomResult r = cs_one_is_atom(a, kBudget);
    CHECK(r.status == OneAtomStatus::Unknown);
    CHECK(r.provenance.find("exhausted") != std::string::npos);
    Verdict v = cs_is_atomic(a, kBudget);
    CHECK(v.value == TruthValue::Unknown);
}

TEST_CASE("sigma worked cases") {
    SigmaResult s = cs_sigma(rational_value(2, 1), 5);
    CHECK(s.kind == SigmaResult::Kind::Finite);
    CHECK(s.sigma == 1);
    CHECK(s.witness == std::vector<Int>{2});

    s = cs_sigma(alg_make(poly({2, -4, 1}), Rational(1), Rational(4)), 2);
    CHECK(s.kind == SigmaResult::Kind::AtLeast);
    CHECK(s.bound == 2);

    s = cs_sigma(rational_value(3, 2), 6);
    CHECK(s.kind == SigmaResult::Kind::AtLeast);
    CHECK(s.bound == 6);

    // golden ratio: x^2 = x + 1
    s = cs_sigma(alg_make(poly({-1, -1, 1}), Rational(1), Rational(2)), 5);
    CHECK(s.kind == SigmaResult::Kind::Finite);
    CHECK(s.sigma == 2);
    CHECK(s.witness == std::vector<Int>{1, 1});

    s = cs_sigma(rational_value(1, 1), 3);
    CHECK(s.kind == SigmaResult::Kind::Finite);
    CHECK(s.sigma == 1);

    s = cs_sigma(rational_value(2, 3), 3);
    CHECK(s.kind == SigmaResult::Kind::Infinite);

    s = cs_sigma(make_pi(), 3);
    CHECK(s.kind == SigmaResult::Kind::Infinite);

    CHECK_THROWS_AS(cs_sigma(rational_value(2, 1), 0), Error);
}

TEST_CASE("sigma witnesses re-verify exactly") {
    for (auto& [p, lo, hi] : std::vector<std::tuple<IntPolynomial, Rational, Rational>>{
             {poly({-1, -1, 1}), Rational(1), Rational(2)},      // golden ratio
             {poly({-1, -1, -1, 1}), Rational(1), Rational(2)},  // tribonacci
         }) {
        AlgebraicReal a = alg_make(p, lo, hi);
        SigmaResult s = cs_sigma(a, 6);
        REQUIRE(s.kind == SigmaResult::Kind::Finite);
        std::vector<Int> f(s.sigma + 1, Int(0));
        f[s.sigma] = 1;
        for (unsigned j = 0; j < s.sigma; ++j) f[j] -= s.witness[j];
        CHECK(IntPolynomial(std::move(f)).divisible_by(a.minpoly()));
    }
}

TEST_CASE("sigma agrees with the cleared-denominator oracle") {
    for (auto& [n, d] : std::vector<std::pair<int, int>>{{5, 2}, {3, 1}, {7, 2}, {4, 1}}) {
        unsigned expect = oracle::sigma_brute_force(n, d, 5);
        SigmaResult s = cs_sigma(rational_value(n, d), 5);
        if (expect == 0) {
            CHECK(s.kind == SigmaResult::Kind::AtLeast);
            CHECK(s.bound == 5);
        } else {
            CHECK(s.kind == SigmaResult::Kind::Finite);
            CHECK(s.sigma == expect);
        }
    }
}

TEST_CASE("membership below the degree is impossible") {
    // random verified-irreducible cubics and quartics with a root above 1:
    // the search up to degree-1 finds nothing.
    auto gen = oracle::rng(57);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> degree(3, 4);
    int built = 0, guard = 0;
    while (built < 15 && ++guard < 40000) {
        int d = degree(gen);
        std::vector<Int> c(static_cast<std::size_t>(d) + 1);
        for (auto& x : c) x = coeff(gen);
        IntPolynomial p{std::vector<Int>(c)};
        if (p.degree() != d) continue;
        for (int i = 1; i < 6; ++i) {
            AlgebraicReal a = AlgebraicReal::from_rational(Rational(1));
            try {
                a = alg_make(p, Rational(i), Rational(i + 1));
            } catch (const Error&) {
                continue;
            }
            if (!a.is_algebraic() || a.irreducibility() != Irreducibility::Verified) break;
            SigmaResult s = cs_sigma(a, static_cast<unsigned>(d) - 1);
            CHECK(s.kind == SigmaResult::Kind::AtLeast);
            ++built;
            break;
        }
    }
    CHECK(built == 15);
}

TEST_CASE("atom descriptions") {
    AtomDescription atoms = cs_atoms(make_pi(), kBudget);
    CHECK(atoms.kind == AtomDescription::Kind::AllPowers);
    CHECK(atoms.complete);

    atoms = cs_atoms(rational_value(2, 1), kBudget);
    CHECK(atoms.kind == AtomDescription::Kind::PowersBelow);
    CHECK(atoms.sigma == 1);

    atoms = cs_atoms(rational_value(2, 3), kBudget);
    CHECK(atoms.kind == AtomDescription::Kind::AllPowers);
    CHECK(atoms.complete);

    atoms = cs_atoms(golden_conjugate(), kBudget);
    CHECK(atoms.kind == AtomDescription::Kind::None);
    REQUIRE(atoms.witness.has_value());
    CHECK(verify_antimatter_witness(golden_conjugate(), *atoms.witness));

    atoms = cs_atoms(rational_value(3, 2), kBudget);
    CHECK(atoms.kind == AtomDescription::Kind::AllPowersUpTo);
    CHECK(!atoms.complete);
    CHECK(atoms.bound == kBudget.sigma_max);

    atoms = cs_atoms(alg_make(poly({-1, -1, 1}), Rational(1), Rational(2)), kBudget);
    CHECK(atoms.kind == AtomDescription::Kind::PowersBelow);
    CHECK(atoms.sigma == 2);

    atoms = cs_atoms(alg_make(poly({-1, -1, 3}), Rational(3, 5), Rational(1)), kBudget);
    CHECK(atoms.kind == AtomDescription::Kind::Undecided);
}

TEST_CASE("finite generation") {
    CHECK(cs_finitely_generated(rational_value(2, 1), kBudget).value == TruthValue::Yes);
    CHECK(cs_finitely_generated(rational_value(2, 3), kBudget).value == TruthValue::No);
    CHECK(cs_finitely_generated(make_pi(), kBudget).value == TruthValue::No);
    CHECK(cs_finitely_generated(rational_value(3, 2), kBudget).value == TruthValue::Unknown);
    CHECK(cs_finitely_generated(alg_make(poly({-1, -1, 1}), Rational(1), Rational(2)), kBudget)
              .value == TruthValue::Yes);
    // undecided atomicity in (0,1) still rules out finite generation
    CHECK(cs_finitely_generated(alg_make(poly({-1, -1, 3}), Rational(3, 5), Rational(1)), kBudget)
              .value == TruthValue::No);
}

TEST_CASE("accp obstruction certificates") {
    AccpObstruction o = cs_accp_obstruction(rational_value(2, 3));
    CHECK(o.found);
    CHECK(o.shift == 1);
    CHECK(o.certificate == poly({0, 1}));  // x

    o = cs_accp_obstruction(golden_conjugate());
    CHECK(o.found);
    CHECK(o.shift == 1);
    CHECK(o.certificate == poly({0, 0, 1}));  // x^2

    // x^2 - 3x + 1, root (3-sqrt(5))/2 ~ 0.382: no shift works
    o = cs_accp_obstruction(alg_make(poly({1, -3, 1}), Rational(1, 3), Rational(1, 2)));
    CHECK(!o.found);

    // 5x^2 - 5x + 1, root (5-sqrt(5))/10 ~ 0.276: shift 1 leaves the
    // constant certificate 1
    o = cs_accp_obstruction(alg_make(poly({1, -5, 5}), Rational(1, 5), Rational(1, 2)));
    CHECK(o.found);
    CHECK(o.shift == 1);
    CHECK(o.certificate == poly({1}));

    CHECK_THROWS_AS(cs_accp_obstruction(rational_value(3, 2)), Error);
    CHECK_THROWS_AS(cs_accp_obstruction(make_pi()), Error);
}

TEST_CASE("classification: rational bases") {
    ClassificationReport r = cs_classify(rational_value(2, 3), kBudget);
    CHECK(r.value(Property::Atomic) == TruthValue::Yes);
    CHECK(r.value(Property::Accp) == TruthValue::No);
    CHECK(r.value(Property::Bfm) == TruthValue::No);
    CHECK(r.value(Property::Ffm) == TruthValue::No);
    CHECK(r.value(Property::Ufm) == TruthValue::No);
    CHECK(r.rank == Rank::finite(1));
    CHECK(!r.has_unknown());

    r = cs_classify(rational_value(4, 1), kBudget);
    CHECK(r.value(Property::Ufm) == TruthValue::Yes);
    CHECK(r.value(Property::Hfm) == TruthValue::Yes);
    CHECK(!r.has_unknown());

    r = cs_classify(rational_value(3, 2), kBudget);
    CHECK(r.value(Property::Ffm) == TruthValue::Yes);
    CHECK(r.value(Property::Bfm) == TruthValue::Yes);
    CHECK(r.value(Property::Accp) == TruthValue::Yes);
    CHECK(r.value(Property::Ufm) == TruthValue::No);
    CHECK(r.value(Property::Hfm) == TruthValue::No);
    CHECK(r.rank == Rank::finite(1));
    CHECK(!r.has_unknown());

    r = cs_classify(rational_value(1, 7), kBudget);
    CHECK(r.value(Property::Antimatter) == TruthValue::Yes);
    CHECK(r.value(Property::Atomic) == TruthValue::No);
    CHECK(!r.has_unknown());
}

TEST_CASE("classification sweep over small unit-interval rationals") {
    for (int b = 2; b <= 12; ++b) {
        for (int a = 1; a < b; ++a) {
            if (int_gcd(a, b) != 1) continue;
            ClassificationReport r = cs_classify(rational_value(a, b), kBudget);
            if (a == 1) {
                CHECK(r.value(Property::Antimatter) == TruthValue::Yes);
            } else {
                CHECK(r.value(Property::Atomic) == TruthValue::Yes);
                CHECK(r.value(Property::Accp) == TruthValue::No);
            }
            CHECK(!r.has_unknown());
        }
    }
}

TEST_CASE("classification: algebraic bases above 1") {
    // x^3 - 4x + 2 on (1,4)
    ClassificationReport r =
        cs_classify(alg_make(poly({2, -4, 0, 1}), Rational(1), Rational(4)), kBudget);
    CHECK(r.value(Property::Ffm) == TruthValue::Yes);
    CHECK(r.value(Property::Ufm) == TruthValue::No);
    CHECK(r.value(Property::Bfm) == TruthValue::Yes);
    CHECK(r.rank == Rank::finite(3));
    CHECK(r.value(Property::Hfm) == TruthValue::Unknown);  // left open deliberately

    // golden ratio: monic with nonpositive lower coefficients, so UFM
    r = cs_classify(alg_make(poly({-1, -1, 1}), Rational(1), Rational(2)), kBudget);
    CHECK(r.value(Property::Ufm) == TruthValue::Yes);
    CHECK(r.rank == Rank::finite(2));
    CHECK(!r.has_unknown());
}

TEST_CASE("classification: transcendental base") {
    ClassificationReport r = cs_classify(make_pi(), kBudget);
    CHECK(r.value(Property::Ufm) == TruthValue::Yes);
    CHECK(r.value(Property::Atomic) == TruthValue::Yes);
    CHECK(r.rank.kind == Rank::Kind::CountablyInfinite);
    CHECK(r.trust.declared_transcendence);
    CHECK(!r.has_unknown());
}

TEST_CASE("classification: antimatter algebraic") {
    ClassificationReport r = cs_classify(golden_conjugate(), kBudget);
    CHECK(r.value(Property::Antimatter) == TruthValue::Yes);
    CHECK(r.value(Property::Atomic) == TruthValue::No);
    CHECK(r.value(Property::Accp) == TruthValue::No);
    CHECK(r.rank == Rank::finite(2));
    CHECK(!r.has_unknown());
}

TEST_CASE("classification: atomic with unknown ACCP") {
    ClassificationReport r =
        cs_classify(alg_make(poly({1, -3, 1}), Rational(1, 3), Rational(1, 2)), kBudget);
    CHECK(r.value(Property::Atomic) == TruthValue::Yes);
    CHECK(r.value(Property::Accp) == TruthValue::Unknown);
    CHECK(r.has_unknown());
}

TEST_CASE("factorization enumeration: worked cases") {
    // Z(3) over powers of 3/2: 3 copies of 1, or 2 copies of 3/2; the
    // automatic cap admits exponent 2 since (3/2)^2 <= 3.
    FactorizationSet z = cs_factorizations(Rational(3, 2), Rational(3), std::nullopt);
    REQUIRE(z.items.size() == 2);
    CHECK(z.complete);
    CHECK(z.items[0].multiplicities == std::vector<Int>{0, 2, 0});
    CHECK(z.items[1].multiplicities == std::vector<Int>{3, 0, 0});
    LengthSet l = cs_length_set(Rational(3, 2), Rational(3), std::nullopt);
    CHECK(l.lengths == std::vector<Int>{2, 3});

    z = cs_factorizations(Rational(2), Rational(5), std::nullopt);
    REQUIRE(z.items.size() == 1);
    CHECK(z.items[0].multiplicities == std::vector<Int>{5});
    CHECK(z.complete);

    // under cap 2 the exhaustive search finds three solutions of
    // 9c0 + 6c1 + 4c2 = 18, including the mixed one
    z = cs_factorizations(Rational(2, 3), Rational(2), 2u);
    REQUIRE(z.items.size() == 3);
    CHECK(!z.complete);
    CHECK(z.items[0].multiplicities == std::vector<Int>{0, 1, 3});
    CHECK(z.items[1].multiplicities == std::vector<Int>{0, 3, 0});
    CHECK(z.items[2].multiplicities == std::vector<Int>{2, 0, 0});

    CHECK_THROWS_AS(cs_factorizations(Rational(2, 3), Rational(2), std::nullopt), Error);

    z = cs_factorizations(Rational(1), Rational(4), std::nullopt);
    REQUIRE(z.items.size() == 1);
    CHECK(z.items[0].multiplicities == std::vector<Int>{4});

    z = cs_factorizations(Rational(3, 2), Rational(0), std::nullopt);
    REQUIRE(z.items.size() == 1);
    CHECK(z.items[0].length() == 0);
}

TEST_CASE("factorization enumeration matches the knapsack oracle") {
    auto gen = oracle::rng(3);
    std::uniform_int_distribution<int> tnum(0, 24);
    for (int trial = 0; trial < 60; ++trial) {
        Rational q(3, 2);
        Rational target(tnum(gen));
        FactorizationSet z = cs_factorizations(q, target, std::nullopt);
        // oracle: weights a^i b^(C-i) over the automatic cap
        unsigned cap = 0;
        Rational qpow(1);
        while (qpow * q <= target) {
            qpow *= q;
            ++cap;
        }
        std::vector<Int> weights;
        Int apow = 1;
        for (unsigned i = 0; i <= cap; ++i) {
            Int bpow = 1;
            for (unsigned t = 0; t < cap - i; ++t) bpow *= q.den();
            weights.push_back(apow * bpow);
            apow *= q.num();
        }
        Int scaled_target = target.num();
        for (unsigned t = 0; t < cap; ++t) scaled_target *= q.den();
        auto expect = oracle::knapsack_all(weights, scaled_target);
        std::sort(expect.begin(), expect.end());
        REQUIRE(z.items.size() == expect.size());
        for (std::size_t i = 0; i < expect.size(); ++i)
            CHECK(z.items[i].multiplicities == expect[i]);
    }
}
