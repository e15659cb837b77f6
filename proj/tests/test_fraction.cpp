#include <doctest.h>

#include "qcong/qkit.hpp"
#include "test_support.hpp"

using namespace qcong;
using namespace qcong::testgen;

TEST_SUITE("fraction") {

TEST_CASE("atom expansion") {
    CHECK(Atom{Rat(1), 0, 3}.expand_q() == QLaurent(QPoly(std::vector<Rat>{Rat(1), Rat(0), Rat(0), Rat(-1)})));
    // 1 - q^{-2} = q^{-2}(q^2 - 1)
    QLaurent neg = Atom{Rat(1), 0, -2}.expand_q();
    CHECK(neg.shift() == -2);
    CHECK(neg.body() == QPoly(std::vector<Rat>{Rat(-1), Rat(0), Rat(1)}));
    CHECK_THROWS_AS((Atom{Rat(1), 1, 2}.expand_q()), arith_error);
    BiPoly ab = Atom{Rat(1), -1, 2}.expand_ab();  // 1 - q^2/a
    CHECK(ab.a_lo() == -1);
    CHECK(ab.coeff_a(0) == QLaurent(Rat(1)));
    CHECK(ab.coeff_a(-1) == -QLaurent(QPoly::one(), 2));
}

TEST_CASE("factored values and inversion") {
    Factored f;
    f.mul_scalar(Rat(3));
    f.mul_qpow(-2);
    f.mul_atom(Atom{Rat(1), 0, 1}, 2);
    f.mul_atom(Atom{Rat(1), 0, 3}, -1);
    Factored g = f.inverse();
    g.mul(f);
    CHECK(g.scalar == Rat(1));
    CHECK(g.qshift == 0);
    CHECK(g.atoms.empty());
    // constant atoms fold into the scalar; a vanishing one zeroes the value
    Factored z;
    z.mul_atom(Atom{Rat(1), 0, 0}, 1);
    CHECK(z.is_zero());
    Factored two;
    two.mul_atom(Atom{Rat(-1), 0, 0}, 1);
    CHECK(two.scalar == Rat(2));
}

TEST_CASE("QRat equality is cross-multiplication") {
    // (1-q^2)/(1-q) == 1+q
    FactorMap den;
    den.mul_atom(Atom{Rat(1), 0, 1}, 1);
    QRat x(Atom{Rat(1), 0, 2}.expand_q(), den);
    QRat y(QLaurent(QPoly(std::vector<Rat>{Rat(1), Rat(1)})));
    CHECK(x.equals(y));
    CHECK(!x.equals(QRat(Rat(1))));
}

TEST_CASE("(a/b)*(b/a) = 1 for nonzero atom products") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> e(1, 5);
    for (int i = 0; i < 25; ++i) {
        FactorMap am, bm;
        am.mul_atom(Atom{Rat(1), 0, e(rng)}, 1);
        am.mul_atom(Atom{Rat(-1), 0, e(rng)}, 1);
        bm.mul_atom(Atom{Rat(1), 0, e(rng)}, 2);
        QRat x(am.expand_q(), bm);  // a/b
        QRat y(bm.expand_q(), am);  // b/a
        CHECK(mul(x, y).equals(QRat(Rat(1))));
    }
}

TEST_CASE("add/sub/mul against expanded forms") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 25; ++i) {
        QRat x = random_qrat(rng), y = random_qrat(rng);
        QRat s = add(x, y);
        // num_s/den_s == (num_x den_y + num_y den_x)/(den_x den_y)
        QLaurent lhs = s.num() * (x.den() * y.den());
        QLaurent rhs = (x.num() * y.den() + y.num() * x.den()) * s.den();
        CHECK(lhs == rhs);
        QRat p = mul(x, y);
        CHECK(p.num() * (x.den() * y.den()) == (x.num() * y.num()) * p.den());
    }
}

TEST_CASE("eval_limit_q1 examples") {
    // [n] -> n
    for (long n : {1L, 3L, 7L}) CHECK(eval_limit_q1(QRat(QLaurent(q_int(n)))) == Rat(n));
    // (1-q)^3/(1-q^2)^3 -> 1/8
    Factored f;
    f.mul_atom(Atom{Rat(1), 0, 1}, 3);
    f.mul_atom(Atom{Rat(1), 0, 2}, -3);
    CHECK(eval_limit_q1(QRat::from_factored(f)) == Rat(1, 8));
    // pole: 1/(1-q)
    Factored g;
    g.mul_atom(Atom{Rat(1), 0, 1}, -1);
    CHECK_THROWS_AS(eval_limit_q1(QRat::from_factored(g)), pole_at_one_error);
    // shifts evaluate to 1: q^{-5}(1+q)/2 -> 1
    Factored h;
    h.mul_qpow(-5);
    h.mul_atom(Atom{Rat(-1), 0, 1}, 1);
    h.mul_scalar(Rat(1, 2));
    CHECK(eval_limit_q1(QRat::from_factored(h)) == Rat(1));
}

TEST_CASE("bipoly_subst_a examples") {
    const long n = 6;
    // a - q^n with e = n -> 0 (as a factored value with an a-shift)
    Factored f;
    f.mul_apow(1);
    f.mul_atom(Atom{Rat(1), -1, n}, 1);  // a(1 - q^n/a) = a - q^n
    CHECK(bipoly_subst_a(ARat::from_factored(f), n).is_zero());
    // 1 - a q^n with e = -n -> 0
    Factored g;
    g.mul_atom(Atom{Rat(1), 1, n}, 1);
    CHECK(bipoly_subst_a(ARat::from_factored(g), -n).is_zero());
    // (aq;q^2)_1 = 1 - aq at e = 1 -> 1 - q^2
    BiPoly p1 = q_pochhammer(Monomial{Rat(1), 1, 1}, 2, 1);
    QRat r = bipoly_subst_a(ARat(p1), 1);
    CHECK(r.equals(QRat(Atom{Rat(1), 0, 2}.expand_q())));
    // denominator vanishing is an error
    Factored h;
    h.mul_atom(Atom{Rat(1), 1, n}, -1);
    CHECK_THROWS_AS(bipoly_subst_a(ARat::from_factored(h), -n), denominator_vanishes_error);
}

TEST_CASE("substitution is a ring homomorphism on fractions") {
    std::mt19937_64 rng(91);
    for (int i = 0; i < 15; ++i) {
        FactorMap d1, d2;
        d1.mul_atom(Atom{Rat(1), 1, 2}, 1);  // 1 - a q^2, stays nonzero at the e below
        d2.mul_atom(Atom{Rat(1), 0, 3}, 1);
        ARat f(random_bipoly(rng, 2, 3), d1);
        ARat g(random_bipoly(rng, 2, 3), d2);
        ARat h(random_bipoly(rng, 2, 3));
        const long e = 1 + static_cast<long>(rng() % 3);
        QRat lhs = bipoly_subst_a(add(mul(f, g), h), e);
        QRat rhs = add(mul(bipoly_subst_a(f, e), bipoly_subst_a(g, e)), bipoly_subst_a(h, e));
        CHECK(lhs.equals(rhs));
    }
}

TEST_CASE("ARat projection and embedding") {
    QRat x = QRat(QLaurent(q_int(4)));
    ARat e(x);
    CHECK(e.a_free());
    CHECK(e.project_q().equals(x));
    ARat y(BiPoly::a_monomial(QLaurent(Rat(1)), 2));
    CHECK(!y.a_free());
    CHECK_THROWS_AS(y.project_q(), arith_error);
}

TEST_CASE("reducer clears shifts through the inverse of q") {
    QReducer R(cyclotomic(3));
    QLaurent f(QPoly::one(), -1);  // q^{-1}
    QPoly r = R.reduce(f).to_qpoly();
    // q^{-1} = q^2 mod Phi_3
    CHECK(r == QPoly(std::vector<Rat>{Rat(0), Rat(0), Rat(1)}));
    CHECK_THROWS_AS(QReducer(QPoly::monomial(Rat(1), 2)), arith_error);
}

}  // TEST_SUITE
