#include <doctest.h>

#include <numeric>

#include "qcong/qkit.hpp"
#include "test_support.hpp"

using namespace qcong;
using namespace qcong::testgen;

namespace {

QPoly P(std::initializer_list<long> cs) {
    std::vector<Rat> c;
    for (long x : cs) c.push_back(Rat(x));
    return QPoly(std::move(c));
}

// Euler totient by counting gcd(k, n) = 1, independent of any formula
long totient(long n) {
    long t = 0;
    for (long k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) ++t;
    return t;
}

}  // namespace

TEST_SUITE("qkit") {

TEST_CASE("q_int") {
    CHECK(q_int(1) == P({1}));
    CHECK(q_int(3) == P({1, 1, 1}));
    CHECK(q_int(0).is_zero());
    CHECK_THROWS_AS(q_int(-1), arith_error);
}

TEST_CASE("q_pochhammer examples") {
    // (a;q)_0 = 1
    BiPoly empty = q_pochhammer(Monomial{Rat(1), 1, 0}, 1, 0);
    CHECK(empty == BiPoly(Rat(1)));
    // (q;q^2)_2 = (1-q)(1-q^3)
    BiPoly two = q_pochhammer(Monomial{Rat(1), 0, 1}, 2, 2);
    CHECK(two.a_free());
    CHECK(two.as_qlaurent().to_qpoly() == QPoly::mul(P({1, -1}), P({1, 0, 0, -1})));
    // (q/a;q)_1 = 1 - q a^{-1}
    BiPoly qa = q_pochhammer(Monomial{Rat(1), -1, 1}, 1, 1);
    CHECK(qa.a_lo() == -1);
    CHECK(qa.coeff_a(-1) == -QLaurent(QPoly::one(), 1));
    CHECK(qa.coeff_a(0) == QLaurent(Rat(1)));
}

TEST_CASE("pochhammer recurrence") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        Monomial base{random_nonzero_rat(rng, 3), static_cast<int>(rng() % 3) - 1,
                      static_cast<long>(rng() % 4)};
        const long step = 1 + static_cast<long>(rng() % 3);
        const long k = static_cast<long>(rng() % 5);
        BiPoly lhs = q_pochhammer(base, step, k + 1);
        BiPoly factor =
            BiPoly(QLaurent(Rat(1))) -
            BiPoly::a_monomial(QLaurent(QPoly(base.coeff), base.qexp + k * step), base.aexp);
        CHECK(lhs == BiPoly::mul(q_pochhammer(base, step, k), factor));
    }
}

TEST_CASE("cyclotomic base cases and the derived Phi_12") {
    CHECK(cyclotomic(1) == P({-1, 1}));
    CHECK(cyclotomic(3) == P({1, 1, 1}));
    // divide q^12 - 1 by the five known lower cyclotomics by hand
    QPoly q12m1 = P({-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1});
    QPoly expected = q12m1;
    for (const QPoly& phi :
         {P({-1, 1}), P({1, 1}), P({1, 1, 1}), P({1, 0, 1}), P({1, -1, 1})})
        expected = qpoly_divexact(expected, phi);
    CHECK(expected == P({1, 0, -1, 0, 1}));
    CHECK(cyclotomic(12) == expected);
}

TEST_CASE("product of cyclotomics over divisors is q^n - 1") {
    for (long n = 1; n <= 60; ++n) {
        QPoly prod = QPoly::one();
        for (long d : divisors(n)) prod = QPoly::mul(prod, cyclotomic(d));
        std::vector<Rat> c(static_cast<std::size_t>(n) + 1);
        c[0] = Rat(-1);
        c[static_cast<std::size_t>(n)] = Rat(1);
        CHECK(prod == QPoly(std::move(c)));
    }
}

TEST_CASE("cyclotomic degree is the totient") {
    for (long n = 1; n <= 60; ++n) CHECK(cyclotomic(n).degree() == totient(n));
}

TEST_CASE("q_int factors through the nontrivial cyclotomics") {
    for (long n = 1; n <= 60; ++n) {
        QPoly prod = QPoly::one();
        for (long d : divisors(n))
            if (d > 1) prod = QPoly::mul(prod, cyclotomic(d));
        CHECK(q_int(n) == prod);
    }
}

TEST_CASE("even-step pochhammer stays coprime to Phi_n below n") {
    for (long n : {3L, 5L, 9L, 15L}) {
        for (long k = 0; k <= n - 1; ++k) {
            BiPoly p = q_pochhammer(Monomial{Rat(1), 0, 2}, 2, k);
            QPoly proj = p.as_qlaurent().to_qpoly();
            CHECK(qpoly_gcd(proj, cyclotomic(n)).is_one());
        }
    }
}

TEST_CASE("modulus_factors") {
    auto f9 = modulus_cyclotomic_factors(ModulusSpec{9, 1, 2, {}});
    REQUIRE(f9.size() == 2);
    CHECK(f9[0].d == 3);
    CHECK(f9[0].mult == 1);
    CHECK(f9[1].d == 9);
    CHECK(f9[1].mult == 3);

    auto f15 = modulus_cyclotomic_factors(ModulusSpec{15, 1, 3, {}});
    REQUIRE(f15.size() == 3);
    CHECK(f15[0].d == 3);
    CHECK(f15[1].d == 5);
    CHECK(f15[2].d == 15);
    CHECK(f15[2].mult == 4);

    auto f3 = modulus_cyclotomic_factors(ModulusSpec{3, 0, 2, {}});
    REQUIRE(f3.size() == 1);
    CHECK(f3[0].d == 3);
    CHECK(f3[0].mult == 2);

    CHECK_THROWS_WITH_AS(modulus_cyclotomic_factors(ModulusSpec{1, 1, 0, {}}),
                         "degenerate modulus", arith_error);

    auto polys = modulus_factors(ModulusSpec{9, 1, 2, {}});
    REQUIRE(polys.size() == 2);
    CHECK(polys[0].first == cyclotomic(3));
    CHECK(polys[1].second == 3);
}

TEST_CASE("residue_mod") {
    CHECK(residue_mod(Rat(0), 7) == 0);
    CHECK(residue_mod(Rat(-1, 3), 5) == 3);
    CHECK(residue_mod(Rat(7), 5) == 2);
    CHECK_THROWS_AS(residue_mod(Rat(1, 5), 5), arith_error);
}

TEST_CASE("pochhammer with a vanishing factor is zero") {
    // (q^{1-n};q^2)_k vanishes once k passes (n-1)/2
    const long n = 7;
    Factored f = q_pochhammer_factored(Monomial{Rat(1), 0, 1 - n}, 2, (n + 1) / 2);
    CHECK(f.is_zero());
}

}  // TEST_SUITE
