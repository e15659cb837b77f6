#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qcong/rat.hpp"

namespace qcong {

/// Dense univariate polynomial in q over Rat, ascending coefficients.
/// Invariant: highest coefficient nonzero; the zero polynomial has no coefficients.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(const Rat& constant) {
        if (!constant.is_zero()) c_.push_back(constant);
    }
    explicit QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static QPoly one() { return QPoly(Rat(1)); }
    static QPoly monomial(const Rat& coeff, std::size_t deg);

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
    std::size_t size() const { return c_.size(); }
    const std::vector<Rat>& coeffs() const { return c_; }

    const Rat& coeff(std::size_t i) const {
        static const Rat kZero(0);
        return i < c_.size() ? c_[i] : kZero;
    }
    const Rat& lead() const { return c_.back(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    friend QPoly operator+(QPoly a, const QPoly& b) { a += b; return a; }
    friend QPoly operator-(QPoly a, const QPoly& b) { a -= b; return a; }
    QPoly operator-() const;

    friend QPoly operator*(const QPoly& a, const QPoly& b) { return mul(a, b); }
    QPoly& operator*=(const QPoly& o) { *this = mul(*this, o); return *this; }

    QPoly scaled(const Rat& s) const;
    QPoly shifted(std::size_t k) const;  // * q^k

    Rat eval(const Rat& x) const;
    Rat eval_at_one() const;

    QPoly monic() const;
    QPoly pow(unsigned long e) const;

    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }
    friend bool operator<(const QPoly& a, const QPoly& b);  // lexicographic key order

    std::string str() const;

    /// Multiplication kernels. mul() dispatches: schoolbook below the Karatsuba
    /// threshold (OpenMP over output coefficients when large), Karatsuba above.
    /// mul_reference() is the plain serial schoolbook kept for testing.
    static QPoly mul(const QPoly& a, const QPoly& b);
    static QPoly mul_reference(const QPoly& a, const QPoly& b);

    static int karatsuba_threshold();
    static void set_karatsuba_threshold(int t);
    static long parallel_cutoff();           // min output size for OpenMP schoolbook
    static void set_parallel_cutoff(long c);

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rat> c_;
};

/// f = g*quotient + remainder with deg(remainder) < deg(g). Throws on g = 0.
std::pair<QPoly, QPoly> qpoly_divrem(const QPoly& f, const QPoly& g);

/// Monic gcd; gcd(f, 0) = monic(f), gcd(0, 0) = 0.
QPoly qpoly_gcd(const QPoly& f, const QPoly& g);

/// Exact division; throws if the remainder is nonzero.
QPoly qpoly_divexact(const QPoly& f, const QPoly& g);

/// Largest e with g^e | f (f != 0, g nonconstant).
long qpoly_multiplicity(const QPoly& f, const QPoly& g);

/// Extended Euclid: returns (d, u, v) with u*f + v*g = d, d the monic gcd.
struct ExtGcd {
    QPoly d, u, v;
};
ExtGcd qpoly_ext_gcd(const QPoly& f, const QPoly& g);

}  // namespace qcong
