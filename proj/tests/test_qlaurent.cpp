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

TEST_SUITE("qlaurent") {

TEST_CASE("canonical form") {
    // low zero coefficients move into the shift
    QLaurent x(P({0, 0, 3, 1}), -1);
    CHECK(x.shift() == 1);
    CHECK(x.body() == P({3, 1}));
    QLaurent z(QPoly(), 5);
    CHECK(z.is_zero());
    CHECK(z.shift() == 0);
}

TEST_CASE("mul adds shifts: q^-1 * q = 1") {
    QLaurent a(QPoly::one(), -1), b(QPoly::one(), 1);
    QLaurent p = a * b;
    CHECK(p.is_one());
    CHECK(p.shift() == 0);
}

TEST_CASE("add aligns shifts: q^-1 + q = q^-1 (1 + q^2)") {
    QLaurent a(QPoly::one(), -1), b(QPoly::one(), 1);
    QLaurent s = a + b;
    CHECK(s.shift() == -1);
    CHECK(s.body() == P({1, 0, 1}));
}

TEST_CASE("additive identity keeps canonical form") {
    QLaurent f(P({2, 5}), -3);
    CHECK(QLaurent() + f == f);
    CHECK(laurent_arith(QLaurent(), f, LaurentOp::add) == f);
}

TEST_CASE("laurent_arith dispatch") {
    QLaurent a(P({1, 1}), 2), b(P({1}), -1);
    CHECK(laurent_arith(a, b, LaurentOp::mul) == a * b);
    CHECK(laurent_arith(a, b, LaurentOp::sub) == a - b);
}

TEST_CASE("to_qpoly") {
    CHECK(QLaurent(P({1, 1}), 2).to_qpoly() == P({0, 0, 1, 1}));
    CHECK_THROWS_AS(QLaurent(P({1}), -1).to_qpoly(), arith_error);
    CHECK(QLaurent().to_qpoly().is_zero());
}

TEST_CASE("ring laws on random instances") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 30; ++i) {
        QLaurent a = random_qlaurent(rng), b = random_qlaurent(rng), c = random_qlaurent(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a - a == QLaurent());
    }
}

}  // TEST_SUITE
