#pragma once

#include <string>
#include <vector>

#include "qcong/congruence.hpp"

namespace qcong {

/// Residue arithmetic modulo a fixed prime power (fits in long for every
/// modulus this engine needs).
class ModInt {
public:
    ModInt(long residue, long modulus) : m_(modulus) {
        if (modulus <= 0) throw arith_error("ModInt: modulus must be positive");
        r_ = residue % modulus;
        if (r_ < 0) r_ += modulus;
    }
    long residue() const { return r_; }
    long modulus() const { return m_; }

    ModInt operator+(const ModInt& o) const { return {r_ + o.r_, check(o)}; }
    ModInt operator-(const ModInt& o) const { return {r_ - o.r_, check(o)}; }
    ModInt operator*(const ModInt& o) const { return {r_ * o.r_, check(o)}; }
    ModInt inv() const;
    ModInt pow(long e) const;
    friend bool operator==(const ModInt& x, const ModInt& y) {
        return x.m_ == y.m_ && x.r_ == y.r_;
    }

private:
    long check(const ModInt& o) const {
        if (m_ != o.m_) throw arith_error("ModInt: modulus mismatch");
        return m_;
    }
    long r_, m_;
};

/// Jacobi symbol via binary reciprocity; n odd positive.
int jacobi(const mpz_class& a, const mpz_class& n);
inline int jacobi(long a, long n) { return jacobi(mpz_class(a), mpz_class(n)); }

/// binom(2k, k), exact.
mpz_class central_binomial(long k);

/// Morita's p-adic Gamma at a rational argument with denominator coprime to
/// p, evaluated mod p^e through the integer representative in [1, p^e].
ModInt gamma_p(const Rat& x, long p, int e);

bool is_probable_prime(long p);

std::vector<std::string> integer_entry_ids();
bool is_integer_entry(const std::string& id);
bool integer_entry_is_conjecture(const std::string& id);
std::string integer_entry_statement(const std::string& id);

/// Runs one integer-side congruence at (p, r).
Verdict check_integer_task(const std::string& id, long p, long r);

}  // namespace qcong
