#include <doctest.h>

#include "test_support.hpp"

using namespace qcong;
using namespace qcong::testgen;

namespace {

QPoly P(std::initializer_list<long> cs) {
    std::vector<Rat> c;
    for (long x : cs) c.push_back(Rat(x));
    return QPoly(std::move(c));
}

}  // namespace

TEST_SUITE("qpoly") {

TEST_CASE("construction trims and zero has no coefficients") {
    CHECK(QPoly().is_zero());
    CHECK(QPoly().degree() == -1);
    CHECK(P({1, 2, 0, 0}).degree() == 1);
    CHECK(P({0}).is_zero());
}

TEST_CASE("divrem examples") {
    // (q^2-1)/(q-1) = q+1 rem 0
    auto [quo1, rem1] = qpoly_divrem(P({-1, 0, 1}), P({-1, 1}));
    CHECK(quo1 == P({1, 1}));
    CHECK(rem1.is_zero());
    // q^3 = q*(q^2+1) - q
    auto [quo2, rem2] = qpoly_divrem(P({0, 0, 0, 1}), P({1, 0, 1}));
    CHECK(quo2 == P({0, 1}));
    CHECK(rem2 == P({0, -1}));
    // zero dividend
    auto [quo3, rem3] = qpoly_divrem(QPoly(), P({-1, 1}));
    CHECK(quo3.is_zero());
    CHECK(rem3.is_zero());
    CHECK_THROWS_AS(qpoly_divrem(P({1}), QPoly()), arith_error);
}

TEST_CASE("gcd examples") {
    // gcd(q^2-1, q^3-1) = q-1
    CHECK(qpoly_gcd(P({-1, 0, 1}), P({-1, 0, 0, 1})) == P({-1, 1}));
    // gcd(f, 0) = monic f
    CHECK(qpoly_gcd(P({2, 4}), QPoly()) == P({1, 2}).scaled(Rat(1, 2)));
    CHECK(qpoly_gcd(QPoly(), QPoly()).is_zero());
    // Euclid on q^2+q+1 and q^2-q+1: coprime
    const QPoly g = qpoly_gcd(P({1, 1, 1}), P({1, -1, 1}));
    CHECK(g.is_one());
}

TEST_CASE("gcd divides both arguments and is monic") {
    std::mt19937_64 rng(1234);
    for (int i = 0; i < 40; ++i) {
        QPoly common = random_nonzero_qpoly(rng, 3);
        QPoly f = QPoly::mul(common, random_nonzero_qpoly(rng, 4));
        QPoly g = QPoly::mul(common, random_nonzero_qpoly(rng, 4));
        QPoly d = qpoly_gcd(f, g);
        CHECK(d.is_monic());
        CHECK(qpoly_divrem(f, d).second.is_zero());
        CHECK(qpoly_divrem(g, d).second.is_zero());
        CHECK(qpoly_divrem(d, qpoly_gcd(common, d)).second.is_zero());
    }
}

TEST_CASE("divrem round trip") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 60; ++i) {
        QPoly f = random_qpoly(rng, 12);
        QPoly g = random_nonzero_qpoly(rng, 6);
        auto [quo, rem] = qpoly_divrem(f, g);
        CHECK(QPoly::mul(g, quo) + rem == f);
        CHECK(rem.degree() < g.degree());
    }
}

TEST_CASE("ring laws on random instances") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 30; ++i) {
        QPoly a = random_qpoly(rng), b = random_qpoly(rng), c = random_qpoly(rng);
        CHECK(QPoly::mul(QPoly::mul(a, b), c) == QPoly::mul(a, QPoly::mul(b, c)));
        CHECK(QPoly::mul(a, b + c) == QPoly::mul(a, b) + QPoly::mul(a, c));
        CHECK(a + QPoly() == a);
        CHECK(QPoly::mul(a, QPoly::one()) == a);
        CHECK(a - a == QPoly());
    }
}

TEST_CASE("degree is additive for nonzero factors") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 30; ++i) {
        QPoly a = random_nonzero_qpoly(rng), b = random_nonzero_qpoly(rng);
        CHECK(QPoly::mul(a, b).degree() == a.degree() + b.degree());
    }
}

TEST_CASE("multiplication kernels agree with the serial reference") {
    std::mt19937_64 rng(4242);
    const int saved = QPoly::karatsuba_threshold();
    for (int round = 0; round < 6; ++round) {
        QPoly a = random_qpoly(rng, 180, 4);
        QPoly b = random_qpoly(rng, 150, 4);
        QPoly ref = QPoly::mul_reference(a, b);
        QPoly::set_karatsuba_threshold(8);  // force deep Karatsuba recursion
        CHECK(QPoly::mul(a, b) == ref);
        QPoly::set_karatsuba_threshold(1 << 20);  // force schoolbook
        CHECK(QPoly::mul(a, b) == ref);
    }
    QPoly::set_karatsuba_threshold(saved);
}

TEST_CASE("extended gcd Bezout identity") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 30; ++i) {
        QPoly f = random_nonzero_qpoly(rng, 6);
        QPoly g = random_nonzero_qpoly(rng, 6);
        ExtGcd e = qpoly_ext_gcd(f, g);
        CHECK(QPoly::mul(e.u, f) + QPoly::mul(e.v, g) == e.d);
        CHECK(e.d == qpoly_gcd(f, g));
    }
}

TEST_CASE("multiplicity") {
    const QPoly qm1 = P({-1, 1});
    QPoly f = QPoly::mul(QPoly::mul(qm1, qm1), P({1, 1, 7}));
    CHECK(qpoly_multiplicity(f, qm1) == 2);
    CHECK(qpoly_multiplicity(P({1, 1, 7}), qm1) == 0);
}

TEST_CASE("eval") {
    CHECK(P({1, 2, 3}).eval(Rat(2)) == Rat(17));
    CHECK(P({1, 2, 3}).eval_at_one() == Rat(6));
}

}  // TEST_SUITE
