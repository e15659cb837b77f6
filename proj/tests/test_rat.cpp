#include <doctest.h>

#include "qcong/rat.hpp"

using namespace qcong;

TEST_SUITE("rat") {

TEST_CASE("canonical form") {
    Rat r(2, 4);
    CHECK(r.num() == 1);
    CHECK(r.den() == 2);
    Rat s(3, -6);
    CHECK(s.num() == -1);
    CHECK(s.den() == 2);
    CHECK(Rat(0, 5) == Rat(0));
    CHECK(Rat(0).den() == 1);
    CHECK_THROWS_AS(Rat(1, 0), arith_error);
}

TEST_CASE("arithmetic") {
    CHECK(Rat(1, 3) + Rat(2, 5) == Rat(11, 15));
    CHECK(Rat(1, 2) - Rat(1, 2) == Rat(0));
    CHECK(Rat(2, 3) * Rat(3, 2) == Rat(1));
    CHECK(Rat(7, 3) / Rat(7, 3) == Rat(1));
    CHECK(-Rat(5, 2) == Rat(-5, 2));
    CHECK_THROWS_AS(Rat(1) / Rat(0), arith_error);
    CHECK_THROWS_AS(Rat(0).inv(), arith_error);
}

TEST_CASE("pow") {
    CHECK(Rat(2, 3).pow(3) == Rat(8, 27));
    CHECK(Rat(2, 3).pow(-2) == Rat(9, 4));
    CHECK(Rat(2, 3).pow(0) == Rat(1));
    CHECK(Rat(0).pow(4) == Rat(0));
    CHECK_THROWS_AS(Rat(0).pow(-1), arith_error);
}

TEST_CASE("ordering and sign") {
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(Rat(-1) < Rat(0));
    CHECK(Rat(5, 7).sign() == 1);
    CHECK(Rat(-5, 7).sign() == -1);
    CHECK(Rat(0).sign() == 0);
}

}  // TEST_SUITE
