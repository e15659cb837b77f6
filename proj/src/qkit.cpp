#include "qcong/qkit.hpp"

#include <map>
#include <mutex>

namespace qcong {

QPoly q_int(long n) {
    if (n < 0) throw arith_error("q_int: negative argument");
    std::vector<Rat> c(static_cast<std::size_t>(n), Rat(1));
    return QPoly(std::move(c));
}

Factored q_int_factored(long m) {
    if (m < 0) throw arith_error("q_int_factored: negative argument");
    if (m == 0) return Factored::zero();
    Factored f;
    f.mul_atom(Atom{Rat(1), 0, m}, 1);
    f.mul_atom(Atom{Rat(1), 0, 1}, -1);
    return f;
}

Factored q_pochhammer_factored(const Monomial& base, long step, long k) {
    if (k < 0) throw arith_error("q_pochhammer: negative length");
    Factored f;
    for (long j = 0; j < k; ++j) {
        f.mul_atom(Atom{base.coeff, base.aexp, base.qexp + j * step}, 1);
        if (f.is_zero()) break;
    }
    return f;
}

BiPoly q_pochhammer(const Monomial& base, long step, long k) {
    return ARat::from_factored(q_pochhammer_factored(base, step, k)).num();
}

namespace {

std::mutex g_cyclo_mu;
std::map<long, QPoly> g_cyclo;

QPoly q_pow_minus_one(long n) {
    std::vector<Rat> c(static_cast<std::size_t>(n) + 1);
    c[0] = Rat(-1);
    c[static_cast<std::size_t>(n)] = Rat(1);
    return QPoly(std::move(c));
}

const QPoly& cyclo_locked(long n) {
    auto it = g_cyclo.find(n);
    if (it != g_cyclo.end()) return it->second;
    QPoly result;
    if (n == 1) {
        result = QPoly(std::vector<Rat>{Rat(-1), Rat(1)});
    } else {
        QPoly num = q_pow_minus_one(n);
        for (long d : divisors(n)) {
            if (d == n) continue;
            num = qpoly_divexact(num, cyclo_locked(d));
        }
        result = std::move(num);
    }
    return g_cyclo.emplace(n, std::move(result)).first->second;
}

}  // namespace

const QPoly& cyclotomic(long n) {
    if (n < 1) throw arith_error("cyclotomic: n must be positive");
    std::lock_guard<std::mutex> lk(g_cyclo_mu);
    return cyclo_locked(n);
}

void seed_cyclotomic(long n, const QPoly& phi) {
    if (n < 1) throw arith_error("seed_cyclotomic: n must be positive");
    if (!qpoly_divrem(q_pow_minus_one(n), phi).second.is_zero())
        throw arith_error("seed_cyclotomic: candidate does not divide q^n - 1");
    std::lock_guard<std::mutex> lk(g_cyclo_mu);
    g_cyclo.emplace(n, phi);
}

std::vector<long> divisors(long n) {
    std::vector<long> small, big;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) big.push_back(n / d);
        }
    }
    for (auto it = big.rbegin(); it != big.rend(); ++it) small.push_back(*it);
    return small;
}

std::vector<CycFactor> modulus_cyclotomic_factors(const ModulusSpec& spec) {
    if (spec.n == 1) throw arith_error("degenerate modulus");
    if (spec.n < 3 || spec.n % 2 == 0) throw arith_error("modulus_factors: n must be odd, >= 3");
    std::vector<CycFactor> out;
    if (spec.bracket_power > 0) {
        for (long d : divisors(spec.n)) {
            if (d == 1 || d == spec.n) continue;
            out.push_back({d, spec.bracket_power});
        }
    }
    const int top = spec.bracket_power + spec.phi_power;
    if (top > 0) out.push_back({spec.n, top});
    return out;
}

std::vector<std::pair<QPoly, int>> modulus_factors(const ModulusSpec& spec) {
    std::vector<std::pair<QPoly, int>> out;
    for (const CycFactor& f : modulus_cyclotomic_factors(spec))
        out.emplace_back(cyclotomic(f.d), f.mult);
    return out;
}

long residue_mod(const Rat& x, long m) {
    if (m <= 0) throw arith_error("residue_mod: modulus must be positive");
    mpz_class mm(m);
    mpz_class dinv;
    if (!mpz_invert(dinv.get_mpz_t(), x.den().get_mpz_t(), mm.get_mpz_t()))
        throw arith_error("residue_mod: denominator not coprime to modulus");
    mpz_class t = x.num() * dinv;
    mpz_class r = t % mm;
    if (r < 0) r += mm;
    return r.get_si();
}

}  // namespace qcong
