#pragma once

#include <string>
#include <vector>

#include "qcong/qkit.hpp"

namespace qcong {

struct meets_denominator_error : arith_error {
    meets_denominator_error() : arith_error("modulus meets denominator") {}
};
struct not_invertible_error : arith_error {
    not_invertible_error() : arith_error("not invertible") {}
};
struct hypothesis_error : arith_error {
    using arith_error::arith_error;
};

enum class Status { pass, fail, inapplicable, error };
enum class Strategy { exact, modular, both };

const char* to_string(Status s);
const char* to_string(Strategy s);

struct Verdict {
    Status status = Status::error;
    std::string detail;
    long lhs_degree = 0;
    Strategy strategy = Strategy::exact;
    long elapsed_ms = 0;
};

enum class SumShape { single, convolution };

/// Canonical representative of f in Q[q]/M, degree < deg M; negative Laurent
/// shifts go through the modular inverse of q.
QPoly reduce_mod(const QLaurent& f, const QPoly& M);

/// g with f*g == 1 (mod M) via extended Euclid; throws not_invertible_error.
QPoly inv_mod(const QPoly& f, const QPoly& M);

/// sum_{k=0}^{n-1} sum_{j=0}^{k} c(j) c(k-j) where n = terms.size().
QRat conv_sum(const std::vector<QRat>& terms, const QReducer* R = nullptr);
ARat conv_sum(const std::vector<ARat>& terms, const QReducer* R = nullptr);
QRat sum_terms(const std::vector<QRat>& terms, const QReducer* R = nullptr);
ARat sum_terms(const std::vector<ARat>& terms, const QReducer* R = nullptr);

/// One prime-power cyclotomic factor Phi_d^mult with its quotient-ring reducer.
struct ModRing {
    long d;
    int mult;
    QPoly phi;
    QReducer red;
    ModRing(long d_, int mult_);
};

/// Residue of a factored term / fraction in the quotient ring; a-free
/// denominators are inverted, the cyclotomic content of each factor is
/// cancelled structurally first. Throws meets_denominator_error when the
/// value has a genuine pole at the factor.
QRat residue_q(const Factored& t, const ModRing& ring);
QRat residue_q(const QRat& v, const ModRing& ring);
ARat residue_a(const Factored& t, const ModRing& ring);
ARat residue_a(const ARat& v, const ModRing& ring);

struct FactorResult {
    Status status;
    std::string detail;
};

/// Exact divisibility check of a raw difference by Phi_d^mult (content of the
/// factored denominator counted structurally; the a-parametric overload checks
/// every a-coefficient of the numerator).
FactorResult factor_check_exact(const QRat& diff, long d, int mult);
FactorResult factor_check_exact(const ARat& diff, long d, int mult);

/// A == B (mod M) in the rational-function sense: with A-B = u/v, gcd(v, M)=1
/// and M | u; u/v is reduced by gcd(u, v) only if the raw v fails coprimality.
Verdict check_rat_congruence(const QRat& lhs, const QRat& rhs, const QPoly& modulus);

struct CongruenceTask {
    bool parametric = false;
    QRat lhs_q, rhs_q;
    ARat lhs_a, rhs_a;
    ModulusSpec modulus;
};

/// Value-level check against every prime-power factor of the modulus;
/// strategy both requires agreement of the exact and modular pipelines.
Verdict check_task(const CongruenceTask& task, Strategy strategy);

/// Parametric check: substitutions at a = q^{+-e} for the a-linear factors,
/// coefficientwise divisibility for the cyclotomic part.
Verdict check_param_congruence(const ARat& lhs, const ARat& rhs, const ModulusSpec& modulus);

/// Lemma: a sequence antisymmetric around (n-1)/2 (and around (3n-1)/2 on the
/// upper half) has vanishing convolution square. Verifies the hypotheses and
/// returns whether the double sum is exactly zero.
bool zero_lemma_check(const std::vector<QRat>& seq, long n);

bool check_identity(const QRat& lhs, const QRat& rhs);
bool check_identity(const ARat& lhs, const ARat& rhs);

}  // namespace qcong
