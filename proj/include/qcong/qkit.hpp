#pragma once

#include <vector>

#include "qcong/fraction.hpp"

namespace qcong {

/// coeff * a^aexp * q^qexp; the single entry point for all Pochhammer bases.
struct Monomial {
    Rat coeff = Rat(1);
    int aexp = 0;
    long qexp = 0;
};

/// [n] = 1 + q + ... + q^{n-1}; q_int(0) = 0. Throws for negative n.
QPoly q_int(long n);

/// [m] as a factored value (1 - q^m)/(1 - q); m = 0 gives zero.
Factored q_int_factored(long m);

/// prod_{j=0}^{k-1} (1 - base * q^{j*step}).
Factored q_pochhammer_factored(const Monomial& base, long step, long k);
BiPoly q_pochhammer(const Monomial& base, long step, long k);

/// Memoized cyclotomic polynomial Phi_n(q), monic, degree phi(n).
const QPoly& cyclotomic(long n);

/// Install a precomputed cyclotomic (cache preload); validated against q^n - 1.
void seed_cyclotomic(long n, const QPoly& phi);

std::vector<long> divisors(long n);

/// Factors of the modulus [n]^bracket * Phi_n^phi * prod(param): the two
/// parameter-linear kinds carry their own q-exponent (normally n) and may sit
/// on the second statement parameter b instead of a.
struct ParamFactor {
    enum class Kind { one_minus_aq, a_minus_q };
    Kind kind;
    long exponent;
    bool on_b = false;
};

struct ModulusSpec {
    long n = 0;
    int bracket_power = 0;
    int phi_power = 0;
    std::vector<ParamFactor> param;
};

struct CycFactor {
    long d;
    int mult;
};

/// Pairwise-coprime cyclotomic factorization over Q[q]: Phi_d with
/// multiplicity bracket for d | n, 1 < d < n, and Phi_n with multiplicity
/// bracket + phi. Throws "degenerate modulus" for n = 1.
std::vector<CycFactor> modulus_cyclotomic_factors(const ModulusSpec& spec);
std::vector<std::pair<QPoly, int>> modulus_factors(const ModulusSpec& spec);

/// Least nonnegative residue of x modulo m; denominator must be coprime to m.
long residue_mod(const Rat& x, long m);

}  // namespace qcong
