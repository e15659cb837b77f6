#include "qcong/padic.hpp"

#include <chrono>

#include <sstream>

namespace qcong {

ModInt ModInt::inv() const {
    mpz_class g;
    mpz_class out;
    if (!mpz_invert(out.get_mpz_t(), mpz_class(r_).get_mpz_t(), mpz_class(m_).get_mpz_t()))
        throw arith_error("ModInt: not invertible");
    return {out.get_si(), m_};
}

ModInt ModInt::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    ModInt r(1, m_), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

int jacobi(const mpz_class& a_in, const mpz_class& n_in) {
    if (n_in <= 0 || mpz_even_p(n_in.get_mpz_t())) throw arith_error("jacobi: n must be odd positive");
    mpz_class a = a_in % n_in;
    if (a < 0) a += n_in;
    mpz_class n = n_in;
    int result = 1;
    while (a != 0) {
        while (mpz_even_p(a.get_mpz_t())) {
            a >>= 1;
            const unsigned long nm8 = mpz_fdiv_ui(n.get_mpz_t(), 8);
            if (nm8 == 3 || nm8 == 5) result = -result;
        }
        std::swap(a, n);
        if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3)
            result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

mpz_class central_binomial(long k) {
    if (k < 0) throw arith_error("central_binomial: negative argument");
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(2 * k), static_cast<unsigned long>(k));
    return r;
}

ModInt gamma_p(const Rat& x, long p, int e) {
    if (p < 3 || p % 2 == 0) throw arith_error("gamma_p: p must be an odd prime");
    if (mpz_divisible_ui_p(x.den().get_mpz_t(), static_cast<unsigned long>(p)))
        throw arith_error("gamma_p: denominator divisible by p");
    long m = 1;
    for (int i = 0; i < e; ++i) m *= p;
    long rep = residue_mod(x, m);
    if (rep == 0) rep = m;  // keep the integer-product formula applicable
    long prod = 1;
    for (long j = 1; j < rep; ++j) {
        if (j % p == 0) continue;
        prod = (prod * j) % m;
    }
    if (rep % 2 != 0) prod = (m - prod) % m;  // sign (-1)^rep
    return {prod, m};
}

bool is_probable_prime(long p) {
    return mpz_probab_prime_p(mpz_class(p).get_mpz_t(), 30) > 0;
}

namespace {

long pow_long(long b, long e) {
    long r = 1;
    while (e--) r *= b;
    return r;
}

// sum_{k=0}^{N-1} w^{-k} sum_j binom(2j,j)^3 binom(2k-2j,k-j)^3 * extra(j,k) mod m
ModInt double_binomial_sum(long N, long w, long m, bool with_linear_factors) {
    std::vector<long> cb3(static_cast<std::size_t>(N));
    const mpz_class mm(m);
    for (long j = 0; j < N; ++j) {
        mpz_class c = central_binomial(j);
        mpz_class c3 = c * c * c % mm;
        cb3[static_cast<std::size_t>(j)] = c3.get_si();
    }
    ModInt winv = ModInt(w, m).inv();
    ModInt total(0, m);
    ModInt wk(1, m);
    for (long k = 0; k < N; ++k) {
        ModInt inner(0, m);
        for (long j = 0; j <= k; ++j) {
            ModInt t(cb3[static_cast<std::size_t>(j)] * cb3[static_cast<std::size_t>(k - j)] % m, m);
            if (with_linear_factors) t = t * ModInt((3 * j + 1) * (3 * (k - j) + 1), m);
            inner = inner + t;
        }
        total = total + wk * inner;
        wk = wk * winv;
    }
    return total;
}

struct IntEntry {
    std::string id;
    bool conjecture;
    std::string statement;
};

const std::vector<IntEntry>& int_entries() {
    static const std::vector<IntEntry> t = {
        {"COR-16", false,
         "sum_{k<p^r} 16^{-k} sum_j C(2j,j)^3 C(2k-2j,k-j)^3 (3j+1)(3k-3j+1) == p^{2r} (mod p^{r+2})"},
        {"COR-NEG8", false,
         "sum_{k<p^r} (-8)^{-k} sum_j C(2j,j)^3 C(2k-2j,k-j)^3 (3j+1)(3k-3j+1) == p^{2r} (mod p^{r+2})"},
        {"ICONJ1", true,
         "sum_{k<p^r} (16^{-k} - (-8)^{-k}) sum_j C(2j,j)^3 C(2k-2j,k-j)^3 (3j+1)(3k-3j+1) == 0 (mod p^{2r+2})"},
        {"HCASES", false,
         "sum_{k<p} 64^{-k} sum_j C(2j,j)^3 C(2k-2j,k-j)^3 == Gamma_p(1/4)^8 (p=1 mod 4) or 0 (p=3 mod 4), mod p^3"},
        {"ICONJ6", true,
         "sum_{k<p^r} 64^{-k} sum_j C(2j,j)^3 C(2k-2j,k-j)^3 == 0 (mod p^4), p=3 mod 4, p>3"},
    };
    return t;
}

}  // namespace

std::vector<std::string> integer_entry_ids() {
    std::vector<std::string> r;
    for (const auto& e : int_entries()) r.push_back(e.id);
    return r;
}

bool is_integer_entry(const std::string& id) {
    for (const auto& e : int_entries())
        if (e.id == id) return true;
    return false;
}

bool integer_entry_is_conjecture(const std::string& id) {
    for (const auto& e : int_entries())
        if (e.id == id) return e.conjecture;
    throw arith_error("unknown integer id: " + id);
}

std::string integer_entry_statement(const std::string& id) {
    for (const auto& e : int_entries())
        if (e.id == id) return e.statement;
    throw arith_error("unknown integer id: " + id);
}

Verdict check_integer_task(const std::string& id, long p, long r) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    v.strategy = Strategy::exact;
    auto finish = [&](Status s, const std::string& detail) {
        v.status = s;
        v.detail = detail;
        v.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
        return v;
    };
    if (!is_integer_entry(id)) return finish(Status::error, "unknown id: " + id);
    if (p < 3 || p % 2 == 0 || !is_probable_prime(p))
        return finish(Status::inapplicable, "p must be an odd prime");
    if (r < 1) return finish(Status::inapplicable, "r must be positive");

    try {
        if (id == "COR-16" || id == "COR-NEG8") {
            const long m = pow_long(p, r + 2);
            const long N = pow_long(p, r);
            ModInt s = double_binomial_sum(N, id == "COR-16" ? 16 : -8, m, true);
            ModInt expect(pow_long(p, 2 * r) % m, m);
            std::ostringstream os;
            os << "sum=" << s.residue() << " expected=" << expect.residue() << " mod " << m;
            return finish(s == expect ? Status::pass : Status::fail, os.str());
        }
        if (id == "ICONJ1") {
            const long m = pow_long(p, 2 * r + 2);
            const long N = pow_long(p, r);
            ModInt s16 = double_binomial_sum(N, 16, m, true);
            ModInt sm8 = double_binomial_sum(N, -8, m, true);
            ModInt diff = s16 - sm8;
            std::ostringstream os;
            os << "difference=" << diff.residue() << " mod " << m;
            return finish(diff.residue() == 0 ? Status::pass : Status::fail, os.str());
        }
        if (id == "HCASES") {
            if (r != 1) return finish(Status::inapplicable, "stated for the sum over k < p");
            const long m = pow_long(p, 3);
            ModInt s = double_binomial_sum(p, 64, m, false);
            ModInt expect = p % 4 == 1 ? gamma_p(Rat(1, 4), p, 3).pow(8) : ModInt(0, m);
            std::ostringstream os;
            os << "sum=" << s.residue() << " expected=" << expect.residue() << " mod " << m
               << (p % 4 == 1 ? " (Gamma_p(1/4)^8 branch)" : " (zero branch)");
            return finish(s == expect ? Status::pass : Status::fail, os.str());
        }
        if (id == "ICONJ6") {
            if (p % 4 != 3 || p <= 3) return finish(Status::inapplicable, "p = 3 mod 4, p > 3");
            const long m = pow_long(p, 4);
            const long N = pow_long(p, r);
            ModInt s = double_binomial_sum(N, 64, m, false);
            std::ostringstream os;
            os << "sum=" << s.residue() << " mod " << m;
            return finish(s.residue() == 0 ? Status::pass : Status::fail, os.str());
        }
    } catch (const arith_error& ex) {
        return finish(Status::error, ex.what());
    }
    return finish(Status::error, "unhandled id");
}

}  // namespace qcong
