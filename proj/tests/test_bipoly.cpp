#include <doctest.h>

#include "test_support.hpp"

using namespace qcong;
using namespace qcong::testgen;

namespace {

// remainder of f under division by (a - q^e), a the main variable;
// independent oracle for the substitution route
QLaurent rem_by_a_minus_qe(const BiPoly& f, long e) {
    // write f = a^ashift * sum c_i a^i; a^ashift is a unit in the Laurent ring,
    // so divisibility is decided on the polynomial part via Horner
    QLaurent acc;
    for (long i = f.a_hi(); i >= f.a_lo(); --i) {
        acc = acc.shifted(e) + f.coeff_a(i);  // acc * q^e + c_i
    }
    return acc;
}

}  // namespace

TEST_SUITE("bipoly") {

TEST_CASE("canonical form") {
    std::vector<QLaurent> c{QLaurent(), QLaurent(Rat(2)), QLaurent()};
    BiPoly f(std::move(c), -1);
    CHECK(f.a_lo() == 0);
    CHECK(f.a_hi() == 0);
    CHECK(f.coeff_a(0) == QLaurent(Rat(2)));
    CHECK(BiPoly().is_zero());
}

TEST_CASE("subst_a is evaluation at a = q^e") {
    // 1 - a q^n at e = -n -> 0
    const long n = 7;
    BiPoly f = BiPoly(QLaurent(Rat(1))) - BiPoly::a_monomial(QLaurent(QPoly::one(), n), 1);
    CHECK(f.subst_a(-n).is_zero());
    // a - q^n at e = n -> 0
    BiPoly g = BiPoly::a_monomial(QLaurent(Rat(1)), 1) - BiPoly(QLaurent(QPoly::one(), n));
    CHECK(g.subst_a(n).is_zero());
}

TEST_CASE("coeffs_in_a examples") {
    const long n = 4;
    BiPoly f = BiPoly(QLaurent(Rat(1))) - BiPoly::a_monomial(QLaurent(QPoly::one(), n), 1);
    auto [cs, shift] = coeffs_in_a(f);
    REQUIRE(cs.size() == 2);
    CHECK(shift == 0);
    CHECK(cs[0] == QLaurent(Rat(1)));
    CHECK(cs[1] == -QLaurent(QPoly::one(), n));
    BiPoly g = BiPoly::a_monomial(QLaurent(Rat(1)), 1) - BiPoly(QLaurent(QPoly::one(), n));
    auto [cs2, shift2] = coeffs_in_a(g);
    REQUIRE(cs2.size() == 2);
    CHECK(shift2 == 0);
    CHECK(cs2[0] == -QLaurent(QPoly::one(), n));
    CHECK(cs2[1] == QLaurent(Rat(1)));
    CHECK(coeffs_in_a(BiPoly()).first.empty());
}

TEST_CASE("Kronecker multiplication agrees with the direct reference") {
    std::mt19937_64 rng(555);
    for (int i = 0; i < 40; ++i) {
        BiPoly a = random_bipoly(rng, 4, 6);
        BiPoly b = random_bipoly(rng, 3, 7);
        CHECK(BiPoly::mul(a, b) == BiPoly::mul_reference(a, b));
    }
}

TEST_CASE("ring laws on random instances") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 20; ++i) {
        BiPoly a = random_bipoly(rng), b = random_bipoly(rng), c = random_bipoly(rng);
        CHECK(BiPoly::mul(BiPoly::mul(a, b), c) == BiPoly::mul(a, BiPoly::mul(b, c)));
        CHECK(BiPoly::mul(a, b + c) == BiPoly::mul(a, b) + BiPoly::mul(a, c));
        CHECK(a - a == BiPoly());
    }
}

TEST_CASE("substitution is a homomorphism") {
    std::mt19937_64 rng(303);
    for (int i = 0; i < 25; ++i) {
        BiPoly f = random_bipoly(rng), g = random_bipoly(rng), h = random_bipoly(rng);
        const long e = static_cast<long>(rng() % 7) - 3;
        CHECK((BiPoly::mul(f, g) + h).subst_a(e) == f.subst_a(e) * g.subst_a(e) + h.subst_a(e));
    }
}

TEST_CASE("divisibility by (a - q^e) iff substitution vanishes") {
    std::mt19937_64 rng(404);
    for (int i = 0; i < 30; ++i) {
        const long e = static_cast<long>(rng() % 5) + 1;
        BiPoly f = random_bipoly(rng, 3, 4);
        if (f.is_zero()) continue;
        const bool divisible = rem_by_a_minus_qe(f, e).is_zero();
        CHECK(divisible == f.subst_a(e).is_zero());
        // constructed multiples are always divisible
        BiPoly factor =
            BiPoly::a_monomial(QLaurent(Rat(1)), 1) - BiPoly(QLaurent(QPoly::one(), e));
        BiPoly multiple = BiPoly::mul(f, factor);
        CHECK(rem_by_a_minus_qe(multiple, e).is_zero());
        CHECK(multiple.subst_a(e).is_zero());
    }
}

}  // TEST_SUITE
