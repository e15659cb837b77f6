#include "qcong/qpoly.hpp"

#include <atomic>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qcong {

namespace {

std::atomic<int> g_kara_threshold{64};
std::atomic<long> g_parallel_cutoff{4096};

// r[i+j] += a[i]*b[j], raw mpq kernel with a reused scratch.
void schoolbook_range(const std::vector<Rat>& a, const std::vector<Rat>& b,
                      std::vector<Rat>& r, std::size_t out_lo, std::size_t out_hi) {
    mpq_class t;
    const std::size_t na = a.size(), nb = b.size();
    for (std::size_t k = out_lo; k < out_hi; ++k) {
        const std::size_t ilo = k >= nb ? k - nb + 1 : 0;
        const std::size_t ihi = std::min(na - 1, k);
        mpq_class& acc = r[k].mpq();
        for (std::size_t i = ilo; i <= ihi; ++i) {
            mpq_mul(t.get_mpq_t(), a[i].mpq().get_mpq_t(), b[k - i].mpq().get_mpq_t());
            mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), t.get_mpq_t());
        }
    }
}

std::vector<Rat> schoolbook(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> r(a.size() + b.size() - 1);
    const long out = static_cast<long>(r.size());
#ifdef _OPENMP
    if (out >= g_parallel_cutoff.load(std::memory_order_relaxed) && omp_get_max_threads() > 1) {
#pragma omp parallel for schedule(dynamic, 64)
        for (long k = 0; k < out; ++k)
            schoolbook_range(a, b, r, static_cast<std::size_t>(k), static_cast<std::size_t>(k) + 1);
        return r;
    }
#endif
    schoolbook_range(a, b, r, 0, r.size());
    return r;
}

void vec_add_into(std::vector<Rat>& dst, std::size_t at, const std::vector<Rat>& src) {
    if (dst.size() < at + src.size()) dst.resize(at + src.size());
    for (std::size_t i = 0; i < src.size(); ++i) dst[at + i] += src[i];
}

void vec_sub_into(std::vector<Rat>& dst, std::size_t at, const std::vector<Rat>& src) {
    if (dst.size() < at + src.size()) dst.resize(at + src.size());
    for (std::size_t i = 0; i < src.size(); ++i) dst[at + i] -= src[i];
}

std::vector<Rat> kara(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    const std::size_t na = a.size(), nb = b.size();
    const std::size_t th = static_cast<std::size_t>(g_kara_threshold.load(std::memory_order_relaxed));
    if (na < th || nb < th) return schoolbook(a, b);
    const std::size_t h = (std::max(na, nb) + 1) / 2;
    std::vector<Rat> a0(a.begin(), a.begin() + std::min(h, na));
    std::vector<Rat> a1(a.begin() + std::min(h, na), a.end());
    std::vector<Rat> b0(b.begin(), b.begin() + std::min(h, nb));
    std::vector<Rat> b1(b.begin() + std::min(h, nb), b.end());
    if (a1.empty() || b1.empty()) {
        // unbalanced split, fall back to block products
        std::vector<Rat> r(na + nb - 1);
        std::vector<Rat> p00 = kara(a0, b0);
        vec_add_into(r, 0, p00);
        if (!a1.empty()) vec_add_into(r, h, kara(a1, b0));
        if (!b1.empty()) vec_add_into(r, h, kara(a0, b1));
        r.resize(na + nb - 1);
        return r;
    }
    std::vector<Rat> p0 = kara(a0, b0);
    std::vector<Rat> p2 = kara(a1, b1);
    std::vector<Rat> sa = a0;
    vec_add_into(sa, 0, a1);
    std::vector<Rat> sb = b0;
    vec_add_into(sb, 0, b1);
    std::vector<Rat> p1 = kara(sa, sb);
    // p1 -= p0 + p2
    vec_sub_into(p1, 0, p0);
    vec_sub_into(p1, 0, p2);
    std::vector<Rat> r(na + nb - 1);
    vec_add_into(r, 0, p0);
    vec_add_into(r, h, p1);
    vec_add_into(r, 2 * h, p2);
    r.resize(na + nb - 1);
    return r;
}

}  // namespace

QPoly QPoly::monomial(const Rat& coeff, std::size_t deg) {
    if (coeff.is_zero()) return QPoly();
    std::vector<Rat> c(deg + 1);
    c[deg] = coeff;
    return QPoly(std::move(c));
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

QPoly QPoly::operator-() const {
    std::vector<Rat> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    QPoly r;
    r.c_ = std::move(c);
    return r;
}

QPoly QPoly::scaled(const Rat& s) const {
    if (s.is_zero() || is_zero()) return QPoly();
    std::vector<Rat> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * s;
    QPoly r;
    r.c_ = std::move(c);
    return r;
}

QPoly QPoly::shifted(std::size_t k) const {
    if (is_zero() || k == 0) {
        QPoly r = *this;
        return r;
    }
    std::vector<Rat> c(c_.size() + k);
    for (std::size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
    QPoly r;
    r.c_ = std::move(c);
    return r;
}

Rat QPoly::eval(const Rat& x) const {
    Rat r(0);
    for (std::size_t i = c_.size(); i-- > 0;) {
        r *= x;
        r += c_[i];
    }
    return r;
}

Rat QPoly::eval_at_one() const {
    Rat r(0);
    for (const Rat& c : c_) r += c;
    return r;
}

QPoly QPoly::monic() const {
    if (is_zero()) return QPoly();
    return scaled(lead().inv());
}

QPoly QPoly::pow(unsigned long e) const {
    QPoly r = one();
    QPoly base = *this;
    while (e) {
        if (e & 1) r = mul(r, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return r;
}

bool operator<(const QPoly& a, const QPoly& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    }
    return false;
}

std::string QPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << c_[i].str();
        if (i > 0) os << "*q^" << i;
        first = false;
    }
    return os.str();
}

QPoly QPoly::mul(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    const int th = karatsuba_threshold();
    std::vector<Rat> r;
    if (a.size() >= static_cast<std::size_t>(th) && b.size() >= static_cast<std::size_t>(th))
        r = kara(a.c_, b.c_);
    else
        r = schoolbook(a.c_, b.c_);
    return QPoly(std::move(r));
}

QPoly QPoly::mul_reference(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    std::vector<Rat> r(a.size() + b.size() - 1);
    schoolbook_range(a.c_, b.c_, r, 0, r.size());
    return QPoly(std::move(r));
}

int QPoly::karatsuba_threshold() { return g_kara_threshold.load(std::memory_order_relaxed); }
void QPoly::set_karatsuba_threshold(int t) { g_kara_threshold.store(t < 2 ? 2 : t, std::memory_order_relaxed); }
long QPoly::parallel_cutoff() { return g_parallel_cutoff.load(std::memory_order_relaxed); }
void QPoly::set_parallel_cutoff(long c) { g_parallel_cutoff.store(c < 1 ? 1 : c, std::memory_order_relaxed); }

std::pair<QPoly, QPoly> qpoly_divrem(const QPoly& f, const QPoly& g) {
    if (g.is_zero()) throw arith_error("qpoly_divrem: zero divisor");
    if (f.is_zero() || f.degree() < g.degree()) return {QPoly(), f};
    std::vector<Rat> rem(f.coeffs());
    const std::vector<Rat>& gc = g.coeffs();
    const std::size_t dg = gc.size() - 1;
    const Rat lginv = g.lead().inv();
    std::vector<Rat> quo(rem.size() - dg);
    mpq_class t;
    for (std::size_t k = rem.size(); k-- > dg;) {
        Rat qc = rem[k] * lginv;
        if (!qc.is_zero()) {
            quo[k - dg] = qc;
            for (std::size_t j = 0; j < dg; ++j) {
                mpq_mul(t.get_mpq_t(), qc.mpq().get_mpq_t(), gc[j].mpq().get_mpq_t());
                mpq_sub(rem[k - dg + j].mpq().get_mpq_t(), rem[k - dg + j].mpq().get_mpq_t(),
                        t.get_mpq_t());
            }
        }
        rem[k] = Rat(0);
    }
    return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly qpoly_gcd(const QPoly& f, const QPoly& g) {
    QPoly a = f, b = g;
    while (!b.is_zero()) {
        QPoly r = qpoly_divrem(a, b).second;
        a = std::move(b);
        b = r.is_zero() ? QPoly() : r.monic();  // monic remainders tame coefficient growth
    }
    return a.is_zero() ? QPoly() : a.monic();
}

QPoly qpoly_divexact(const QPoly& f, const QPoly& g) {
    auto [q, r] = qpoly_divrem(f, g);
    if (!r.is_zero()) throw arith_error("qpoly_divexact: inexact division");
    return q;
}

ExtGcd qpoly_ext_gcd(const QPoly& f, const QPoly& g) {
    QPoly r0 = f, r1 = g;
    QPoly u0 = QPoly::one(), u1;
    QPoly v0, v1 = QPoly::one();
    while (!r1.is_zero()) {
        auto [q, r] = qpoly_divrem(r0, r1);
        QPoly u2 = u0 - QPoly::mul(q, u1);
        QPoly v2 = v0 - QPoly::mul(q, v1);
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (r0.is_zero()) return {QPoly(), QPoly(), QPoly()};
    const Rat s = r0.lead().inv();
    return {r0.scaled(s), u0.scaled(s), v0.scaled(s)};
}

long qpoly_multiplicity(const QPoly& f, const QPoly& g) {
    if (f.is_zero()) throw arith_error("qpoly_multiplicity: zero argument");
    if (g.is_constant()) throw arith_error("qpoly_multiplicity: constant divisor");
    long e = 0;
    QPoly cur = f;
    while (cur.degree() >= g.degree()) {
        auto [q, r] = qpoly_divrem(cur, g);
        if (!r.is_zero()) break;
        cur = std::move(q);
        ++e;
    }
    return e;
}

}  // namespace qcong
