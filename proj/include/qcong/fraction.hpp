#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcong/bipoly.hpp"

namespace qcong {

struct pole_at_one_error : arith_error {
    pole_at_one_error() : arith_error("pole at q=1") {}
};
struct denominator_vanishes_error : arith_error {
    denominator_vanishes_error() : arith_error("denominator vanishes under substitution") {}
};

/// One q-Pochhammer factor 1 - coeff * a^aexp * q^qexp. Never the zero or a
/// constant polynomial: coeff != 0 and (aexp, qexp) != (0, 0).
struct Atom {
    Rat coeff;
    int aexp = 0;
    long qexp = 0;

    bool a_free() const { return aexp == 0; }
    QLaurent expand_q() const;
    BiPoly expand_ab() const;

    friend bool operator==(const Atom& x, const Atom& y) {
        return x.aexp == y.aexp && x.qexp == y.qexp && x.coeff == y.coeff;
    }
    friend bool operator<(const Atom& x, const Atom& y) {
        if (x.aexp != y.aexp) return x.aexp < y.aexp;
        if (x.qexp != y.qexp) return x.qexp < y.qexp;
        return x.coeff < y.coeff;
    }
    std::string str() const;
};

/// Multiplicity of phi in the atom (0 for a-dependent atoms; phi a-free, nonconstant).
long atom_multiplicity(const Atom& at, const QPoly& phi);

/// Reduces q-coefficients modulo a fixed nonconstant polynomial with nonzero
/// constant term (so q is invertible and Laurent shifts can be cleared).
class QReducer {
public:
    explicit QReducer(QPoly modulus);
    const QPoly& modulus() const { return m_; }
    QPoly reduce(const QPoly& f) const;
    QLaurent reduce(const QLaurent& f) const;  // returns shift-0 form
    BiPoly reduce(const BiPoly& f) const;
    QPoly pow_mod(const QPoly& base, unsigned long e) const;
    QPoly q_pow(long e) const;  // q^e mod modulus, e may be negative

private:
    QPoly m_;
    QPoly qinv_;
};

/// Product of atoms with positive multiplicities, sorted; the implicit
/// denominator representation of QRat/ARat.
class FactorMap {
public:
    FactorMap() = default;

    bool empty() const { return f_.empty(); }
    const std::vector<std::pair<Atom, int>>& factors() const { return f_; }
    void mul_atom(const Atom& at, int mult);

    static FactorMap lcm(const FactorMap& x, const FactorMap& y);
    static FactorMap product(const FactorMap& x, const FactorMap& y);
    /// Atoms (with multiplicities) such that *this * cofactor = target.
    /// Requires target to dominate *this.
    std::vector<std::pair<Atom, int>> cofactor_to(const FactorMap& target) const;

    bool a_free() const;
    long phi_multiplicity(const QPoly& phi) const;
    QLaurent expand_q(const QReducer* R = nullptr) const;
    BiPoly expand_ab(const QReducer* R = nullptr) const;

    friend bool operator==(const FactorMap& x, const FactorMap& y) { return x.f_ == y.f_; }
    std::string str() const;

private:
    std::vector<std::pair<Atom, int>> f_;
};

/// A pure product value: scalar * a^ashift * q^qshift * prod atom^exp,
/// exp in Z (negative exponents form the denominator). Terms of all catalog
/// sums are built in this form.
struct Factored {
    Rat scalar = Rat(1);
    long qshift = 0;
    long ashift = 0;
    std::vector<std::pair<Atom, int>> atoms;  // sorted, exp != 0

    static Factored one() { return Factored{}; }
    static Factored zero() {
        Factored f;
        f.scalar = Rat(0);
        return f;
    }

    bool is_zero() const { return scalar.is_zero(); }
    bool a_free() const;

    Factored& mul_scalar(const Rat& s);
    Factored& mul_qpow(long e) { qshift += e; return *this; }
    Factored& mul_apow(long e) { ashift += e; return *this; }
    Factored& mul_atom(const Atom& at, int exp);
    Factored& mul(const Factored& o);
    Factored& div(const Factored& o);
    Factored inverse() const;

    /// Substitute a := q^e. Throws denominator_vanishes_error when a
    /// denominator atom collapses to zero.
    Factored subst_a(long e) const;

    long phi_multiplicity_num(const QPoly& phi) const;
    long phi_multiplicity_den(const QPoly& phi) const;

    std::string str() const;
};

class ARat;

/// Fraction of Laurent polynomials in q with the denominator kept as a
/// product of q-Pochhammer atoms. Not reduced to lowest terms; equality is
/// cross-multiplication equality.
class QRat {
public:
    QRat() = default;
    explicit QRat(const Rat& r) : num_(r) {}
    explicit QRat(QLaurent num) : num_(std::move(num)) {}
    QRat(QLaurent num, FactorMap den) : num_(std::move(num)), den_(std::move(den)) {
        if (num_.is_zero()) den_ = FactorMap();
    }

    static QRat from_factored(const Factored& f, const QReducer* R = nullptr);

    bool is_zero() const { return num_.is_zero(); }
    const QLaurent& num() const { return num_; }
    const FactorMap& den_factors() const { return den_; }
    QLaurent den() const { return den_.expand_q(); }

    bool equals(const QRat& o) const;
    QRat operator-() const { return QRat(-num_, den_); }

    std::string str() const;

private:
    QLaurent num_;
    FactorMap den_;
};

QRat add(const QRat& x, const QRat& y, const QReducer* R = nullptr);
QRat sub(const QRat& x, const QRat& y, const QReducer* R = nullptr);
QRat mul(const QRat& x, const QRat& y, const QReducer* R = nullptr);
inline QRat operator+(const QRat& x, const QRat& y) { return add(x, y); }
inline QRat operator-(const QRat& x, const QRat& y) { return sub(x, y); }
inline QRat operator*(const QRat& x, const QRat& y) { return mul(x, y); }

/// lim_{q->1}; exact division by (q-1) powers, no derivatives.
Rat eval_limit_q1(const QRat& x);

/// Fraction of bivariate Laurent polynomials in (a, q), denominator factored.
class ARat {
public:
    ARat() = default;
    explicit ARat(const Rat& r) : num_(r) {}
    explicit ARat(BiPoly num) : num_(std::move(num)) {}
    ARat(BiPoly num, FactorMap den) : num_(std::move(num)), den_(std::move(den)) {
        if (num_.is_zero()) den_ = FactorMap();
    }
    explicit ARat(const QRat& q) : num_(BiPoly(q.num())), den_(q.den_factors()) {}

    static ARat from_factored(const Factored& f, const QReducer* R = nullptr);

    bool is_zero() const { return num_.is_zero(); }
    const BiPoly& num() const { return num_; }
    const FactorMap& den_factors() const { return den_; }
    BiPoly den() const { return den_.expand_ab(); }
    bool a_free() const { return num_.a_free() && den_.a_free(); }
    QRat project_q() const;

    bool equals(const ARat& o) const;
    ARat operator-() const { return ARat(-num_, den_); }

    std::string str() const;

private:
    BiPoly num_;
    FactorMap den_;
};

ARat add(const ARat& x, const ARat& y, const QReducer* R = nullptr);
ARat sub(const ARat& x, const ARat& y, const QReducer* R = nullptr);
ARat mul(const ARat& x, const ARat& y, const QReducer* R = nullptr);
inline ARat operator+(const ARat& x, const ARat& y) { return add(x, y); }
inline ARat operator-(const ARat& x, const ARat& y) { return sub(x, y); }
inline ARat operator*(const ARat& x, const ARat& y) { return mul(x, y); }

/// Substitute a := q^e (ring homomorphism). Throws denominator_vanishes_error
/// if the denominator maps to zero.
QRat bipoly_subst_a(const ARat& x, long e);

}  // namespace qcong
