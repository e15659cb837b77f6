#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qcong/qlaurent.hpp"

namespace qcong {

/// Laurent polynomial in a second variable a with QLaurent coefficients:
/// a^ashift * sum_i acoeffs[i] * a^i. Canonical: acoeffs.front() and
/// acoeffs.back() nonzero, or the zero polynomial (empty, ashift = 0).
class BiPoly {
public:
    BiPoly() = default;
    BiPoly(std::vector<QLaurent> acoeffs, long ashift) : c_(std::move(acoeffs)), ashift_(ashift) {
        canon();
    }
    explicit BiPoly(const QLaurent& q) {
        if (!q.is_zero()) c_.push_back(q);
    }
    explicit BiPoly(const Rat& r) : BiPoly(QLaurent(r)) {}

    static BiPoly a_monomial(const QLaurent& coeff, long aexp) {
        BiPoly r(coeff);
        if (!r.is_zero()) r.ashift_ = aexp;
        return r;
    }

    bool is_zero() const { return c_.empty(); }
    bool a_free() const { return c_.size() <= 1 && ashift_ == 0; }
    long a_lo() const { return ashift_; }
    long a_hi() const { return ashift_ + static_cast<long>(c_.size()) - 1; }
    const std::vector<QLaurent>& acoeffs() const { return c_; }
    long ashift() const { return ashift_; }

    QLaurent coeff_a(long e) const {  // coefficient of a^e
        if (is_zero() || e < a_lo() || e > a_hi()) return QLaurent();
        return c_[static_cast<std::size_t>(e - ashift_)];
    }
    /// The unique QLaurent value of an a-free polynomial.
    QLaurent as_qlaurent() const {
        if (is_zero()) return QLaurent();
        if (!a_free()) throw arith_error("BiPoly: not a-free");
        return c_[0];
    }

    long q_lo() const;
    long q_hi() const;

    BiPoly operator-() const;
    friend BiPoly operator+(const BiPoly& x, const BiPoly& y);
    friend BiPoly operator-(const BiPoly& x, const BiPoly& y);
    friend BiPoly operator*(const BiPoly& x, const BiPoly& y) { return mul(x, y); }
    BiPoly& operator+=(const BiPoly& o) { *this = *this + o; return *this; }
    BiPoly& operator-=(const BiPoly& o) { *this = *this - o; return *this; }
    BiPoly& operator*=(const BiPoly& o) { *this = mul(*this, o); return *this; }

    BiPoly scaled(const Rat& s) const;
    BiPoly scaled_q(const QLaurent& s) const;
    BiPoly shifted_a(long k) const {
        BiPoly r = *this;
        if (!r.is_zero()) r.ashift_ += k;
        return r;
    }
    BiPoly shifted_q(long k) const;

    /// Substitute a := q^e (ring homomorphism into QLaurent).
    QLaurent subst_a(long e) const;

    friend bool operator==(const BiPoly& x, const BiPoly& y) {
        return x.ashift_ == y.ashift_ && x.c_ == y.c_;
    }
    friend bool operator!=(const BiPoly& x, const BiPoly& y) { return !(x == y); }

    /// Kronecker-packed multiplication through the dense q kernel; the direct
    /// double loop is kept as the testing reference.
    static BiPoly mul(const BiPoly& x, const BiPoly& y);
    static BiPoly mul_reference(const BiPoly& x, const BiPoly& y);

    std::string str() const;

private:
    void canon();
    std::vector<QLaurent> c_;
    long ashift_ = 0;
};

/// a-coefficients in ascending exponent order together with the a-shift.
std::pair<std::vector<QLaurent>, long> coeffs_in_a(const BiPoly& x);

}  // namespace qcong
