#include "qcong/fraction.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qcong {

QLaurent Atom::expand_q() const {
    if (aexp != 0) throw arith_error("Atom: not a-free");
    if (qexp > 0) {
        std::vector<Rat> c(static_cast<std::size_t>(qexp) + 1);
        c[0] = Rat(1);
        c[static_cast<std::size_t>(qexp)] = -coeff;
        return QLaurent(QPoly(std::move(c)));
    }
    // 1 - c q^{-m} = q^{-m} (q^m - c)
    const std::size_t m = static_cast<std::size_t>(-qexp);
    std::vector<Rat> c(m + 1);
    c[0] = -coeff;
    c[m] = Rat(1);
    return QLaurent(QPoly(std::move(c)), qexp);
}

BiPoly Atom::expand_ab() const {
    if (aexp == 0) return BiPoly(expand_q());
    const QLaurent mono = QLaurent(QPoly(-coeff), qexp);
    if (aexp > 0) {
        std::vector<QLaurent> c(static_cast<std::size_t>(aexp) + 1);
        c[0] = QLaurent(Rat(1));
        c[static_cast<std::size_t>(aexp)] = mono;
        return BiPoly(std::move(c), 0);
    }
    // 1 - c a^{-m} q^e = a^{-m} (a^m - c q^e)
    const std::size_t m = static_cast<std::size_t>(-aexp);
    std::vector<QLaurent> c(m + 1);
    c[0] = mono;
    c[m] = QLaurent(Rat(1));
    return BiPoly(std::move(c), aexp);
}

std::string Atom::str() const {
    std::ostringstream os;
    os << "(1 - " << coeff.str();
    if (aexp != 0) os << "*a^" << aexp;
    if (qexp != 0) os << "*q^" << qexp;
    os << ")";
    return os.str();
}

long atom_multiplicity(const Atom& at, const QPoly& phi) {
    if (at.aexp != 0) return 0;
    return qpoly_multiplicity(at.expand_q().body(), phi);
}

QReducer::QReducer(QPoly modulus) : m_(std::move(modulus)) {
    if (m_.is_constant()) throw arith_error("QReducer: constant modulus");
    if (m_.coeff(0).is_zero()) throw arith_error("QReducer: q not invertible (modulus divisible by q)");
    // inverse of q modulo m_: from u*q + v*m = 1
    QPoly q = QPoly::monomial(Rat(1), 1);
    ExtGcd e = qpoly_ext_gcd(q, m_);
    qinv_ = qpoly_divrem(e.u, m_).second;
}

QPoly QReducer::reduce(const QPoly& f) const { return qpoly_divrem(f, m_).second; }

QPoly QReducer::pow_mod(const QPoly& base, unsigned long e) const {
    QPoly r = QPoly::one();
    QPoly b = reduce(base);
    while (e) {
        if (e & 1) r = reduce(QPoly::mul(r, b));
        e >>= 1;
        if (e) b = reduce(QPoly::mul(b, b));
    }
    return r;
}

QPoly QReducer::q_pow(long e) const {
    if (e >= 0) return pow_mod(QPoly::monomial(Rat(1), 1), static_cast<unsigned long>(e));
    return pow_mod(qinv_, static_cast<unsigned long>(-e));
}

QLaurent QReducer::reduce(const QLaurent& f) const {
    if (f.is_zero()) return QLaurent();
    QPoly r = reduce(f.body());
    if (f.shift() != 0) r = reduce(QPoly::mul(r, q_pow(f.shift())));
    return QLaurent(std::move(r), 0);
}

BiPoly QReducer::reduce(const BiPoly& f) const {
    if (f.is_zero()) return BiPoly();
    std::vector<QLaurent> c(f.acoeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = reduce(f.acoeffs()[i]);
    return BiPoly(std::move(c), f.ashift());
}

void FactorMap::mul_atom(const Atom& at, int mult) {
    if (mult == 0) return;
    auto it = std::lower_bound(f_.begin(), f_.end(), at,
                               [](const auto& p, const Atom& a) { return p.first < a; });
    if (it != f_.end() && it->first == at) {
        it->second += mult;
        if (it->second == 0) f_.erase(it);
        else if (it->second < 0) throw arith_error("FactorMap: negative multiplicity");
    } else {
        if (mult < 0) throw arith_error("FactorMap: negative multiplicity");
        f_.insert(it, {at, mult});
    }
}

FactorMap FactorMap::lcm(const FactorMap& x, const FactorMap& y) {
    FactorMap r;
    std::size_t i = 0, j = 0;
    while (i < x.f_.size() || j < y.f_.size()) {
        if (j >= y.f_.size() || (i < x.f_.size() && x.f_[i].first < y.f_[j].first)) {
            r.f_.push_back(x.f_[i++]);
        } else if (i >= x.f_.size() || y.f_[j].first < x.f_[i].first) {
            r.f_.push_back(y.f_[j++]);
        } else {
            r.f_.push_back({x.f_[i].first, std::max(x.f_[i].second, y.f_[j].second)});
            ++i;
            ++j;
        }
    }
    return r;
}

FactorMap FactorMap::product(const FactorMap& x, const FactorMap& y) {
    FactorMap r = x;
    for (const auto& [at, m] : y.f_) r.mul_atom(at, m);
    return r;
}

std::vector<std::pair<Atom, int>> FactorMap::cofactor_to(const FactorMap& target) const {
    std::vector<std::pair<Atom, int>> out;
    std::size_t i = 0;
    for (const auto& [at, m] : target.f_) {
        while (i < f_.size() && f_[i].first < at) throw arith_error("FactorMap: cofactor underflow");
        int have = 0;
        if (i < f_.size() && f_[i].first == at) {
            have = f_[i].second;
            ++i;
        }
        if (have > m) throw arith_error("FactorMap: cofactor underflow");
        if (m - have > 0) out.push_back({at, m - have});
    }
    if (i != f_.size()) throw arith_error("FactorMap: cofactor underflow");
    return out;
}

bool FactorMap::a_free() const {
    for (const auto& [at, m] : f_)
        if (at.aexp != 0) return false;
    return true;
}

long FactorMap::phi_multiplicity(const QPoly& phi) const {
    long e = 0;
    for (const auto& [at, m] : f_) e += m * atom_multiplicity(at, phi);
    return e;
}

QLaurent FactorMap::expand_q(const QReducer* R) const {
    QLaurent r(Rat(1));
    for (const auto& [at, m] : f_) {
        const QLaurent e = at.expand_q();
        for (int i = 0; i < m; ++i) {
            r = r * e;
            if (R) r = R->reduce(r);
        }
    }
    return r;
}

BiPoly FactorMap::expand_ab(const QReducer* R) const {
    BiPoly r(Rat(1));
    for (const auto& [at, m] : f_) {
        const BiPoly e = at.expand_ab();
        for (int i = 0; i < m; ++i) {
            r = BiPoly::mul(r, e);
            if (R) r = R->reduce(r);
        }
    }
    return r;
}

std::string FactorMap::str() const {
    if (f_.empty()) return "1";
    std::ostringstream os;
    for (const auto& [at, m] : f_) {
        os << at.str();
        if (m != 1) os << "^" << m;
    }
    return os.str();
}

bool Factored::a_free() const {
    if (ashift != 0) return false;
    for (const auto& [at, e] : atoms)
        if (at.aexp != 0) return false;
    return true;
}

Factored& Factored::mul_scalar(const Rat& s) {
    scalar *= s;
    if (scalar.is_zero()) {
        atoms.clear();
        qshift = ashift = 0;
    }
    return *this;
}

Factored& Factored::mul_atom(const Atom& at, int exp) {
    if (is_zero() || exp == 0) return *this;
    if (at.coeff.is_zero()) return *this;  // atom is 1
    if (at.aexp == 0 && at.qexp == 0) {
        // constant 1 - c
        Rat c = Rat(1) - at.coeff;
        if (c.is_zero()) {
            if (exp < 0) throw denominator_vanishes_error();
            return mul_scalar(Rat(0));
        }
        return mul_scalar(c.pow(exp));
    }
    auto it = std::lower_bound(atoms.begin(), atoms.end(), at,
                               [](const auto& p, const Atom& a) { return p.first < a; });
    if (it != atoms.end() && it->first == at) {
        it->second += exp;
        if (it->second == 0) atoms.erase(it);
    } else {
        atoms.insert(it, {at, exp});
    }
    return *this;
}

Factored& Factored::mul(const Factored& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return mul_scalar(Rat(0));
    mul_scalar(o.scalar);
    qshift += o.qshift;
    ashift += o.ashift;
    for (const auto& [at, e] : o.atoms) mul_atom(at, e);
    return *this;
}

Factored& Factored::div(const Factored& o) { return mul(o.inverse()); }

Factored Factored::inverse() const {
    if (is_zero()) throw arith_error("Factored: inverse of zero");
    Factored r;
    r.scalar = scalar.inv();
    r.qshift = -qshift;
    r.ashift = -ashift;
    r.atoms = atoms;
    for (auto& [at, e] : r.atoms) e = -e;
    return r;
}

Factored Factored::subst_a(long e) const {
    if (is_zero()) return *this;
    Factored r;
    r.scalar = scalar;
    r.qshift = qshift + e * ashift;
    // denominator atoms first so a vanishing one throws before the value
    // can collapse to zero through the numerator
    for (const auto& [at, m] : atoms)
        if (m < 0) r.mul_atom(Atom{at.coeff, 0, at.qexp + e * at.aexp}, m);
    for (const auto& [at, m] : atoms) {
        if (m > 0) {
            r.mul_atom(Atom{at.coeff, 0, at.qexp + e * at.aexp}, m);
            if (r.is_zero()) break;
        }
    }
    return r;
}

long Factored::phi_multiplicity_num(const QPoly& phi) const {
    long r = 0;
    for (const auto& [at, e] : atoms)
        if (e > 0) r += e * atom_multiplicity(at, phi);
    return r;
}

long Factored::phi_multiplicity_den(const QPoly& phi) const {
    long r = 0;
    for (const auto& [at, e] : atoms)
        if (e < 0) r += -e * atom_multiplicity(at, phi);
    return r;
}

std::string Factored::str() const {
    std::ostringstream os;
    os << scalar.str();
    if (qshift) os << "*q^" << qshift;
    if (ashift) os << "*a^" << ashift;
    for (const auto& [at, e] : atoms) {
        os << "*" << at.str();
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

QRat QRat::from_factored(const Factored& f, const QReducer* R) {
    if (f.is_zero()) return QRat();
    if (!f.a_free()) throw arith_error("QRat: factored value involves a");
    QLaurent num(QPoly(f.scalar), f.qshift);
    FactorMap den;
    for (const auto& [at, e] : f.atoms) {
        if (e > 0) {
            const QLaurent x = at.expand_q();
            for (int i = 0; i < e; ++i) {
                num = num * x;
                if (R) num = R->reduce(num);
            }
        } else {
            den.mul_atom(at, -e);
        }
    }
    if (R) num = R->reduce(num);
    return QRat(std::move(num), std::move(den));
}

ARat ARat::from_factored(const Factored& f, const QReducer* R) {
    if (f.is_zero()) return ARat();
    BiPoly num = BiPoly::a_monomial(QLaurent(QPoly(f.scalar), f.qshift), f.ashift);
    FactorMap den;
    for (const auto& [at, e] : f.atoms) {
        if (e > 0) {
            const BiPoly x = at.expand_ab();
            for (int i = 0; i < e; ++i) {
                num = BiPoly::mul(num, x);
                if (R) num = R->reduce(num);
            }
        } else {
            den.mul_atom(at, -e);
        }
    }
    if (R) num = R->reduce(num);
    return ARat(std::move(num), std::move(den));
}

namespace {

QLaurent apply_cofactors_q(QLaurent num, const std::vector<std::pair<Atom, int>>& cof,
                           const QReducer* R) {
    for (const auto& [at, m] : cof) {
        const QLaurent x = at.expand_q();
        for (int i = 0; i < m; ++i) {
            num = num * x;
            if (R) num = R->reduce(num);
        }
    }
    return num;
}

BiPoly apply_cofactors_ab(BiPoly num, const std::vector<std::pair<Atom, int>>& cof,
                          const QReducer* R) {
    for (const auto& [at, m] : cof) {
        const BiPoly x = at.expand_ab();
        for (int i = 0; i < m; ++i) {
            num = BiPoly::mul(num, x);
            if (R) num = R->reduce(num);
        }
    }
    return num;
}

}  // namespace

QRat add(const QRat& x, const QRat& y, const QReducer* R) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    FactorMap den = FactorMap::lcm(x.den_factors(), y.den_factors());
    QLaurent nx = apply_cofactors_q(x.num(), x.den_factors().cofactor_to(den), R);
    QLaurent ny = apply_cofactors_q(y.num(), y.den_factors().cofactor_to(den), R);
    QLaurent num = nx + ny;
    if (R) num = R->reduce(num);
    return QRat(std::move(num), std::move(den));
}

QRat sub(const QRat& x, const QRat& y, const QReducer* R) { return add(x, -y, R); }

QRat mul(const QRat& x, const QRat& y, const QReducer* R) {
    if (x.is_zero() || y.is_zero()) return QRat();
    QLaurent num = x.num() * y.num();
    if (R) num = R->reduce(num);
    return QRat(std::move(num), FactorMap::product(x.den_factors(), y.den_factors()));
}

bool QRat::equals(const QRat& o) const {
    if (is_zero()) return o.is_zero();
    if (o.is_zero()) return false;
    return sub(*this, o, nullptr).is_zero();
}

std::string QRat::str() const {
    std::ostringstream os;
    os << "(" << num_.str() << ") / (" << den_.str() << ")";
    return os.str();
}

Rat eval_limit_q1(const QRat& x) {
    if (x.is_zero()) return Rat(0);
    const QPoly qm1(std::vector<Rat>{Rat(-1), Rat(1)});  // q - 1
    long den_mult = 0;
    Rat den_val(1);
    for (const auto& [at, m] : x.den_factors().factors()) {
        if (at.aexp != 0) throw arith_error("eval_limit_q1: parametric denominator");
        if (at.coeff.is_one()) {
            // (1 - q^e)/(q - 1) -> -e at q = 1
            den_mult += m;
            den_val *= Rat(-at.qexp).pow(m);
        } else {
            den_val *= (Rat(1) - at.coeff).pow(m);
        }
    }
    QPoly num = x.num().body();
    const long num_mult = qpoly_multiplicity(num, qm1);
    if (num_mult < den_mult) throw pole_at_one_error();
    for (long i = 0; i < den_mult; ++i) num = qpoly_divexact(num, qm1);
    return num.eval_at_one() / den_val;
}

ARat add(const ARat& x, const ARat& y, const QReducer* R) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    FactorMap den = FactorMap::lcm(x.den_factors(), y.den_factors());
    BiPoly nx = apply_cofactors_ab(x.num(), x.den_factors().cofactor_to(den), R);
    BiPoly ny = apply_cofactors_ab(y.num(), y.den_factors().cofactor_to(den), R);
    BiPoly num = nx + ny;
    if (R) num = R->reduce(num);
    return ARat(std::move(num), std::move(den));
}

ARat sub(const ARat& x, const ARat& y, const QReducer* R) { return add(x, -y, R); }

ARat mul(const ARat& x, const ARat& y, const QReducer* R) {
    if (x.is_zero() || y.is_zero()) return ARat();
    BiPoly num = BiPoly::mul(x.num(), y.num());
    if (R) num = R->reduce(num);
    return ARat(std::move(num), FactorMap::product(x.den_factors(), y.den_factors()));
}

bool ARat::equals(const ARat& o) const {
    if (is_zero()) return o.is_zero();
    if (o.is_zero()) return false;
    return sub(*this, o, nullptr).is_zero();
}

QRat ARat::project_q() const {
    if (is_zero()) return QRat();
    if (!a_free()) throw arith_error("ARat: not a-free");
    return QRat(num_.as_qlaurent(), den_);
}

std::string ARat::str() const {
    std::ostringstream os;
    os << "(" << num_.str() << ") / (" << den_.str() << ")";
    return os.str();
}

QRat bipoly_subst_a(const ARat& x, long e) {
    if (x.is_zero()) {
        // still validate the denominator does not vanish
        for (const auto& [at, m] : x.den_factors().factors())
            if (at.coeff.is_one() && at.qexp + e * at.aexp == 0) throw denominator_vanishes_error();
        return QRat();
    }
    QLaurent num = x.num().subst_a(e);
    FactorMap den;
    Rat const_den(1);
    for (const auto& [at, m] : x.den_factors().factors()) {
        const long le = at.qexp + e * at.aexp;
        if (le == 0) {
            const Rat c = Rat(1) - at.coeff;
            if (c.is_zero()) throw denominator_vanishes_error();
            const_den *= c.pow(m);
        } else {
            den.mul_atom(Atom{at.coeff, 0, le}, m);
        }
    }
    if (!const_den.is_one()) num = num.scaled(const_den.inv());
    return QRat(std::move(num), std::move(den));
}

}  // namespace qcong
