#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace qcong {

struct arith_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact rational scalar. Canonical: den > 0, gcd(|num|, den) = 1, zero is 0/1.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}
    Rat(long n) : v_(static_cast<signed long>(n)) {}
    Rat(long num, long den) : v_(static_cast<signed long>(num), static_cast<signed long>(den)) {
        if (den == 0) throw arith_error("Rat: zero denominator");
        v_.canonicalize();
    }
    explicit Rat(const mpz_class& z) : v_(z) {}
    Rat(const mpz_class& num, const mpz_class& den) : v_(num, den) {
        if (den == 0) throw arith_error("Rat: zero denominator");
        v_.canonicalize();
    }
    explicit Rat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }
    const mpq_class& mpq() const { return v_; }
    mpq_class& mpq() { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rat inv() const {
        if (is_zero()) throw arith_error("Rat: inverse of zero");
        return Rat(mpq_class(1 / v_));
    }

    Rat pow(long e) const {
        if (e == 0) return Rat(1);
        if (is_zero()) {
            if (e < 0) throw arith_error("Rat: inverse of zero");
            return Rat(0);
        }
        mpq_class base = e >= 0 ? v_ : mpq_class(1 / v_);
        unsigned long m = static_cast<unsigned long>(e >= 0 ? e : -e);
        mpq_class r;
        mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), m);
        mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), m);
        return Rat(std::move(r));
    }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw arith_error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }
    Rat operator-() const { return Rat(mpq_class(-v_)); }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    std::string str() const { return v_.get_str(); }

private:
    mpq_class v_;
};

inline Rat binomial2(long m) {  // C(m, 2) as a Rat-friendly integer
    mpz_class v = mpz_class(m) * (m - 1) / 2;
    return Rat(v);
}

}  // namespace qcong
