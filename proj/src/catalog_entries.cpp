#include <numeric>
#include <sstream>

#include "qcong/catalog.hpp"
#include "qcong/padic.hpp"

// Registry of every congruence, identity and conjecture the engine checks.
// Terms are data: descriptor lists of Pochhammer factors, q-integer
// prefactors and exponent functions of k, interpreted by one builder (TB).

namespace qcong {

namespace {

using Mode = ParamPlan::Mode;

// coeff * a^ae * b^be * q^qe resolved under the plan (at most one symbolic).
Monomial mono(const ParamPlan& p, const Rat& coeff, int ae, int be, long qe) {
    int vexp = 0;
    long q = qe;
    switch (p.a) {
        case Mode::one: break;
        case Mode::qpow: q += static_cast<long>(ae) * p.a_exp; break;
        case Mode::symbolic: vexp += ae; break;
    }
    switch (p.b) {
        case Mode::one: break;
        case Mode::qpow: q += static_cast<long>(be) * p.b_exp; break;
        case Mode::symbolic: vexp += be; break;
    }
    return Monomial{coeff, vexp, q};
}

// generalized [m] = (1 - q^m)/(1 - q), defined for any m != 0; [0] = 0
Factored qint_gen(long m) {
    if (m == 0) return Factored::zero();
    Factored f;
    f.mul_atom(Atom{Rat(1), 0, m}, 1);
    f.mul_atom(Atom{Rat(1), 0, 1}, -1);
    return f;
}

// fluent term builder
struct TB {
    const ParamPlan& p;
    Factored f = Factored::one();
    explicit TB(const ParamPlan& plan) : p(plan) {}

    TB& qint(long m) {
        f.mul(q_int_factored(m));
        return *this;
    }
    TB& alt(long k) {
        if (k & 1) f.mul_scalar(Rat(-1));
        return *this;
    }
    TB& scl(const Rat& s) {
        f.mul_scalar(s);
        return *this;
    }
    TB& qpow(long e) {
        f.mul_qpow(e);
        return *this;
    }
    // (a^ae b^be)^e
    TB& vpow(int ae, int be, long e) {
        if (e == 0) return *this;
        switch (p.a) {
            case Mode::one: break;
            case Mode::qpow: f.mul_qpow(static_cast<long>(ae) * e * p.a_exp); break;
            case Mode::symbolic: f.mul_apow(static_cast<long>(ae) * e); break;
        }
        switch (p.b) {
            case Mode::one: break;
            case Mode::qpow: f.mul_qpow(static_cast<long>(be) * e * p.b_exp); break;
            case Mode::symbolic: f.mul_apow(static_cast<long>(be) * e); break;
        }
        return *this;
    }
    TB& num(const Rat& c, int ae, int be, long qe, long step, long count, int pw = 1) {
        const Factored x = q_pochhammer_factored(mono(p, c, ae, be, qe), step, count);
        for (int i = 0; i < pw; ++i) f.mul(x);
        return *this;
    }
    TB& den(const Rat& c, int ae, int be, long qe, long step, long count, int pw = 1) {
        Factored x = q_pochhammer_factored(mono(p, c, ae, be, qe), step, count);
        if (x.is_zero()) throw denominator_vanishes_error();
        x = x.inverse();
        for (int i = 0; i < pw; ++i) f.mul(x);
        return *this;
    }
    Factored done() { return f; }
};

ARat arat(const Factored& f) { return ARat::from_factored(f); }

Factored scalar_qint(const Rat& s, long qexp, long n, int qint_pow) {
    Factored f;
    f.mul_scalar(s);
    f.mul_qpow(qexp);
    for (int i = 0; i < qint_pow; ++i) f.mul(q_int_factored(n));
    return f;
}

bool odd_ge3(const Inst& i) { return i.n >= 3 && i.n % 2 == 1; }
bool one_mod4(const Inst& i) { return i.n >= 5 && i.n % 4 == 1; }
bool coprime6(const Inst& i) { return i.n >= 5 && std::gcd(i.n, 6L) == 1; }
bool odd_prime(const Inst& i) { return odd_ge3(i) && is_probable_prime(i.n); }
bool dr_pred(const Inst& i) {
    return odd_ge3(i) && i.d >= 2 && i.r >= 1 && i.r < i.d && std::gcd(i.d, i.n) == 1;
}

ModulusSpec mod_bp(long n, int bracket, int phi) { return ModulusSpec{n, bracket, phi, {}}; }
ModulusSpec mod_param(long n, int bracket, int phi) {
    return ModulusSpec{n,
                       bracket,
                       phi,
                       {{ParamFactor::Kind::one_minus_aq, n}, {ParamFactor::Kind::a_minus_q, n}}};
}

// ---- shared term generators ----

Factored thm1_term(const Inst&, long k, const ParamPlan& p) {
    return TB{p}
        .qint(3 * k + 1)
        .num(Rat(1), 0, 0, 1, 2, k, 3)
        .qpow(-k * (k + 1) / 2)
        .den(Rat(1), 0, 0, 1, 1, k, 2)
        .den(Rat(1), 0, 0, 2, 2, k)
        .done();
}

Factored thm2_term(const Inst&, long k, const ParamPlan& p) {
    return TB{p}
        .alt(k)
        .qint(3 * k + 1)
        .num(Rat(1), 0, 0, 1, 2, k, 3)
        .den(Rat(1), 0, 0, 1, 1, k, 3)
        .done();
}

Factored thm3_term(const Inst&, long k, const ParamPlan& p) {
    return TB{p}
        .alt(k)
        .qpow(k * k)
        .qint(4 * k + 1)
        .num(Rat(1), 0, 0, 1, 2, k, 3)
        .den(Rat(1), 0, 0, 2, 2, k, 3)
        .done();
}

Factored thm4_term(const Inst&, long k, const ParamPlan& p) {
    return TB{p}
        .qint(4 * k + 1)
        .num(Rat(1), 0, 0, 1, 2, k, 4)
        .den(Rat(1), 0, 0, 2, 2, k, 4)
        .done();
}

Factored thm5_term(const Inst&, long k, const ParamPlan& p) {
    return TB{p}
        .scl(Rat(2))
        .num(Rat(1), 0, 0, 1, 2, k, 2)
        .qpow(2 * k)
        .den(Rat(1), 0, 0, 2, 2, k, 2)
        .den(Rat(-1), 0, 0, 2 * k, 1, 1)
        .done();
}

Factored thm6_term(const Inst&, long k, const ParamPlan& p) {
    return TB{p}
        .num(Rat(1), 0, 0, 1, 2, k, 2)
        .num(Rat(1), 0, 0, 2, 4, k)
        .qpow(2 * k)
        .den(Rat(1), 0, 0, 2, 2, k, 2)
        .den(Rat(1), 0, 0, 4, 4, k)
        .done();
}

Factored thm7_term(const Inst&, long k, const ParamPlan& p) {
    return TB{p}
        .alt(k)
        .qint(4 * k + 1)
        .num(Rat(1), 0, 0, 1, 2, k, 4)
        .num(Rat(1), 0, 0, 2, 4, k)
        .qpow(k)
        .den(Rat(1), 0, 0, 2, 2, k, 4)
        .den(Rat(1), 0, 0, 4, 4, k)
        .done();
}

Factored thm8_term(const Inst&, long k, const ParamPlan& p) {
    return TB{p}
        .qint(4 * k + 1)
        .num(Rat(1), 0, 0, 1, 2, k, 6)
        .qpow(k)
        .den(Rat(1), 0, 0, 2, 2, k, 6)
        .done();
}

Factored a1_term(const Inst&, long k, const ParamPlan& p) {
    return TB{p}
        .qint(3 * k + 1)
        .num(Rat(1), 1, 0, 1, 2, k)
        .num(Rat(1), -1, 0, 1, 2, k)
        .num(Rat(1), 0, 0, 1, 2, k)
        .qpow(-k * (k + 1) / 2)
        .den(Rat(1), 1, 0, 1, 1, k)
        .den(Rat(1), -1, 0, 1, 1, k)
        .den(Rat(1), 0, 0, 2, 2, k)
        .done();
}

Factored a2_term(const Inst&, long k, const ParamPlan& p) {
    return TB{p}
        .alt(k)
        .qint(3 * k + 1)
        .num(Rat(1), 1, 0, 1, 2, k)
        .num(Rat(1), -1, 0, 1, 2, k)
        .num(Rat(1), 0, 0, 1, 2, k)
        .den(Rat(1), 1, 0, 1, 1, k)
        .den(Rat(1), -1, 0, 1, 1, k)
        .den(Rat(1), 0, 0, 1, 1, k)
        .done();
}

Factored a3_term(const Inst&, long k, const ParamPlan& p) {
    return TB{p}
        .alt(k)
        .qpow(k * k)
        .qint(4 * k + 1)
        .num(Rat(1), 1, 0, 1, 2, k)
        .num(Rat(1), -1, 0, 1, 2, k)
        .num(Rat(1), 0, 0, 1, 2, k)
        .den(Rat(1), 1, 0, 2, 2, k)
        .den(Rat(1), -1, 0, 2, 2, k)
        .den(Rat(1), 0, 0, 2, 2, k)
        .done();
}

Factored a4_term(const Inst&, long k, const ParamPlan& p) {
    return TB{p}
        .qint(4 * k + 1)
        .num(Rat(1), 1, 0, 1, 2, k)
        .num(Rat(1), -1, 0, 1, 2, k)
        .num(Rat(1), 0, 0, 1, 2, k, 2)
        .den(Rat(1), 1, 0, 2, 2, k)
        .den(Rat(1), -1, 0, 2, 2, k)
        .den(Rat(1), 0, 0, 2, 2, k, 2)
        .done();
}

Factored q4b_term(const Inst&, long k, const ParamPlan& p) {
    return TB{p}
        .qint(8 * k + 1)
        .num(Rat(1), 0, 0, 1, 2, k, 2)
        .num(Rat(1), 0, 0, 1, 2, 2 * k)
        .qpow(2 * k * k)
        .den(Rat(1), 0, 0, 2, 2, 2 * k)
        .den(Rat(1), 0, 0, 6, 6, k, 2)
        .done();
}

Factored more1_term(const Inst&, long k, const ParamPlan& p) {
    return TB{p}
        .scl(Rat(2))
        .num(Rat(1), 1, 0, 1, 2, k)
        .num(Rat(1), -1, 0, 1, 2, k)
        .qpow(2 * k)
        .den(Rat(1), 0, 0, 2, 2, k, 2)
        .den(Rat(-1), 0, 0, 2 * k, 1, 1)
        .done();
}

Factored a2input_term(const Inst&, long k, const ParamPlan& p) {
    return TB{p}
        .alt(k)
        .qint(4 * k + 1)
        .num(Rat(1), 1, 0, 1, 2, k)
        .num(Rat(1), -1, 0, 1, 2, k)
        .num(Rat(1), 0, 0, 1, 2, k, 2)
        .num(Rat(1), 0, 0, 2, 4, k)
        .qpow(k)
        .den(Rat(1), 1, 0, 2, 2, k)
        .den(Rat(1), -1, 0, 2, 2, k)
        .den(Rat(1), 0, 0, 2, 2, k, 2)
        .den(Rat(1), 0, 0, 4, 4, k)
        .done();
}

Factored false_z_term(const Inst&, long k, const ParamPlan& p) {
    return TB{p}
        .alt(k)
        .qint(4 * k + 1)
        .num(Rat(1), 1, 0, 1, 2, k)
        .num(Rat(1), -1, 0, 1, 2, k)
        .num(Rat(1), 0, -1, 1, 2, k)
        .vpow(0, 1, k)
        .qpow(k * k)
        .den(Rat(1), 1, 0, 2, 2, k)
        .den(Rat(1), -1, 0, 2, 2, k)
        .den(Rat(1), 0, 1, 2, 2, k)
        .done();
}

Factored qlong_z_term(const Inst&, long k, const ParamPlan& p) {
    return TB{p}
        .qint(4 * k + 1)
        .num(Rat(1), 1, 0, 1, 2, k)
        .num(Rat(1), -1, 0, 1, 2, k)
        .num(Rat(1), 0, -1, 1, 2, k)
        .num(Rat(1), 0, 0, 1, 2, k)
        .vpow(0, 1, k)
        .den(Rat(1), 1, 0, 2, 2, k)
        .den(Rat(1), -1, 0, 2, 2, k)
        .den(Rat(1), 0, 1, 2, 2, k)
        .den(Rat(1), 0, 0, 2, 2, k)
        .done();
}

Factored aj_z_term(const Inst&, long k, const ParamPlan& p) {
    return TB{p}
        .num(Rat(1), 1, 0, 1, 2, k)
        .num(Rat(1), -1, 0, 1, 2, k)
        .num(Rat(1), 0, -1, 1, 2, k)
        .num(Rat(-1), 0, -1, 1, 2, k)
        .qpow(2 * k)
        .den(Rat(1), 0, 0, 2, 2, k, 2)
        .den(Rat(-1), 0, 0, 2, 2, k)
        .den(Rat(1), 0, -2, 2, 2, k)
        .done();
}

Factored conj5_term(const Inst& i, long k, const ParamPlan& p) {
    return TB{p}
        .scl(Rat(2))
        .num(Rat(1), 0, 0, i.r, i.d, k)
        .num(Rat(1), 0, 0, i.d - i.r, i.d, k)
        .qpow(i.d * k)
        .den(Rat(1), 0, 0, i.d, i.d, k, 2)
        .den(Rat(-1), 0, 0, i.d * k, 1, 1)
        .done();
}

Factored conj5p_term(const Inst& i, long k, const ParamPlan& p) {
    return TB{p}
        .scl(Rat(2))
        .num(Rat(1), 1, 0, i.r, i.d, k)
        .num(Rat(1), -1, 0, i.d - i.r, i.d, k)
        .qpow(i.d * k)
        .den(Rat(1), 0, 0, i.d, i.d, k, 2)
        .den(Rat(-1), 0, 0, i.d * k, 1, 1)
        .done();
}

// ---- shared right-hand-side pieces ----

// sum_{k=s}^{(n-1)/4} q^{4k-2}/[4k-2]^2; start index frozen at 1, the k = 0
// variant with [-2] = (1-q^{-2})/(1-q) stays available behind the flag.
QRat h_correction_sum(long n, const CheckOptions& o) {
    const long m = (n - 1) / 4;
    QRat inner;
    for (long k = o.h_sum_from_zero ? 0 : 1; k <= m; ++k) {
        Factored t;
        t.mul_qpow(4 * k - 2);
        t.mul(qint_gen(4 * k - 2).inverse());
        t.mul(qint_gen(4 * k - 2).inverse());
        inner = add(inner, QRat::from_factored(t));
    }
    return inner;
}

// (q^2;q^4)_m^pw / (q^4;q^4)_m^pw
Factored even_odd_poch_ratio(long m, int pw) {
    Factored f;
    const Factored num = q_pochhammer_factored(Monomial{Rat(1), 0, 2}, 4, m);
    const Factored den = q_pochhammer_factored(Monomial{Rat(1), 0, 4}, 4, m);
    for (int i = 0; i < pw; ++i) {
        f.mul(num);
        f.div(den);
    }
    return f;
}

// sum_{k=0}^{(n-1)/2} (q;q^2)_k^4/(q^2;q^2)_k^4 q^{2k}
QRat fourth_power_tail_sum(long n) {
    QRat s;
    const ParamPlan g = ParamPlan::ground();
    for (long k = 0; k <= (n - 1) / 2; ++k) {
        TB b{g};
        b.num(Rat(1), 0, 0, 1, 2, k, 4).den(Rat(1), 0, 0, 2, 2, k, 4).qpow(2 * k);
        s = add(s, QRat::from_factored(b.f));
    }
    return s;
}

ARat false1_rhs(const Inst& i, const ParamPlan& p) {
    const long n = i.n;
    std::vector<ARat> parts;
    for (long k = 0; k <= (n - 1) / 2; ++k) {
        TB b{p};
        b.num(Rat(1), 0, 1, 0, 1, 1)    // (1 - b)
            .num(Rat(1), 1, 0, 1, 2, k)
            .num(Rat(1), -1, 0, 1, 2, k)
            .qpow(k)
            .den(Rat(1), 0, 1, 2 * k, 1, 1)  // (1 - b q^{2k})
            .den(Rat(1), 0, 0, 1, 2, k)
            .den(Rat(1), 0, 0, 2, 2, k);
        parts.push_back(arat(b.f));
    }
    ARat s = sum_terms(parts);
    const long ex = (n - 1) * (n - 1) / 4;
    return mul(arat(scalar_qint(ex % 2 ? Rat(-1) : Rat(1), ex, n, 1)), s);
}

ARat false2_rhs(const Inst& i, const ParamPlan& p) {
    std::vector<ARat> parts;
    for (long k = 0; k <= (i.n - 1) / 2; ++k) {
        TB b{p};
        b.num(Rat(1), 0, 0, 1, 2, k)
            .num(Rat(1), 0, -1, 1, 2, k)
            .vpow(0, 1, k)
            .den(Rat(1), 1, 0, 2, 2, k)
            .den(Rat(1), -1, 0, 2, 2, k);
        parts.push_back(arat(b.f));
    }
    return mul(arat(scalar_qint(Rat(1), 0, i.n, 1)), sum_terms(parts));
}

ARat qlong1_rhs(const Inst& i, const ParamPlan& p) {
    const long M = (i.n - 1) / 2;
    TB b{p};
    b.vpow(0, 1, M)
        .qpow(-M)
        .num(Rat(1), 0, -1, 2, 2, M)
        .den(Rat(1), 0, 1, 2, 2, M)
        .qint(i.n);
    return arat(b.f);
}

ARat qlong2_rhs(const Inst& i, const ParamPlan& p) {
    const long M = (i.n - 1) / 2;
    TB b{p};
    b.num(Rat(1), 0, 0, 1, 2, M, 2)
        .qint(i.n)
        .den(Rat(1), 1, 0, 2, 2, M)
        .den(Rat(1), -1, 0, 2, 2, M);
    return arat(b.f);
}

ARat aj_rhs1(const Inst& i, const ParamPlan& p) {
    const long m = (i.n - 1) / 4, M = (i.n - 1) / 2;
    TB b{p};
    b.num(Rat(1), 0, 0, 2, 4, m)
        .num(Rat(1), 0, 2, 2, 4, m)
        .den(Rat(1), 0, 0, 4, 4, m)
        .den(Rat(1), 0, -2, 4, 4, m)
        .qpow(M)
        .vpow(0, -1, M);
    return arat(b.f);
}

ARat aj_rhs2(const Inst& i, const ParamPlan& p) {
    const long m = (i.n - 1) / 4, M = (i.n - 1) / 2;
    TB b{p};
    b.num(Rat(1), 1, 1, 2, 4, m)
        .num(Rat(1), -1, 1, 2, 4, m)
        .num(Rat(1), 1, -1, 2, 4, m)
        .num(Rat(1), -1, -1, 2, 4, m)
        .den(Rat(1), 0, 0, 2, 4, m)
        .den(Rat(1), 0, 0, 4, 4, m)
        .den(Rat(1), 0, -2, 2, 4, m)
        .den(Rat(1), 0, -2, 4, 4, m)
        .qpow(M)
        .vpow(0, -1, M);
    return arat(b.f);
}

// ---- custom runners ----

QRat mutate_qrat(const QRat& r) {
    if (r.is_zero()) return QRat(QLaurent(QPoly::one(), 1));
    return QRat(r.num().shifted(1), r.den_factors());
}

Verdict identity_run(const Entry& e, const Inst& inst, Strategy st, const CheckOptions& o) {
    Verdict v;
    v.strategy = st;
    std::vector<QRat> ts;
    const long kmax = e.upper == Upper::half ? (inst.n - 1) / 2 : inst.n - 1;
    for (long k = 0; k <= kmax; ++k)
        ts.push_back(QRat::from_factored(e.term(inst, k, ParamPlan::ground(), o)));
    QRat lhs = e.shape == SumShape::convolution ? conv_sum(ts) : sum_terms(ts);
    QRat r = e.rhs(inst, ParamPlan::ground(), o).project_q();
    if (o.mutate_rhs) r = mutate_qrat(r);
    QRat diff = sub(lhs, r);
    v.status = diff.is_zero() ? Status::pass : Status::fail;
    if (!diff.is_zero()) {
        v.detail = "identity fails";
        v.lhs_degree = diff.num().body().degree();
    }
    return v;
}

// Pochhammer-quotient symmetry: for 0 <= k <= M = (n-1)/2,
//   (aq;q^2)_{M-k}/(q^2/a;q^2)_{M-k}
//   == (-a)^{M-2k} (aq;q^2)_k/(q^2/a;q^2)_k q^{(n-1)^2/4+k}   (mod Phi_n),
// coefficientwise in a.
Verdict gs_sym_run(const Entry&, const Inst& inst, Strategy st, const CheckOptions& o) {
    const long n = inst.n;
    const long M = (n - 1) / 2;
    const ParamPlan plan = ParamPlan::symbolic_a();
    auto make = [&](long k) {
        TB lb{plan};
        lb.num(Rat(1), 1, 0, 1, 2, M - k).den(Rat(1), -1, 0, 2, 2, M - k);
        TB rb{plan};
        if ((M - 2 * k) % 2 != 0) rb.scl(Rat(-1));
        rb.vpow(1, 0, M - 2 * k)
            .num(Rat(1), 1, 0, 1, 2, k)
            .den(Rat(1), -1, 0, 2, 2, k)
            .qpow((n - 1) * (n - 1) / 4 + k);
        if (o.mutate_rhs) rb.qpow(1);
        return std::make_pair(lb.f, rb.f);
    };
    auto run_mode = [&](bool modular) {
        std::vector<FactorResult> rs;
        for (long k = 0; k <= M; ++k) {
            auto [lf, rf] = make(k);
            try {
                if (modular) {
                    ModRing ring(n, 1);
                    ARat diff = sub(residue_a(lf, ring), residue_a(rf, ring), &ring.red);
                    rs.push_back(diff.is_zero() ? FactorResult{Status::pass, ""}
                                                : FactorResult{Status::fail, "nonzero residue"});
                } else {
                    ARat diff = sub(arat(lf), arat(rf));
                    rs.push_back(factor_check_exact(diff, n, 1));
                }
            } catch (const arith_error& ex) {
                rs.push_back({Status::error, ex.what()});
            }
        }
        return rs;
    };
    auto fold = [&](const std::vector<FactorResult>& rs) {
        Verdict v;
        v.strategy = st;
        v.status = Status::pass;
        for (std::size_t k = 0; k < rs.size(); ++k) {
            if (rs[k].status != Status::pass && v.status == Status::pass) {
                v.status = rs[k].status;
                std::ostringstream os;
                os << "k=" << k << ": " << rs[k].detail;
                v.detail = os.str();
            }
        }
        return v;
    };
    if (st == Strategy::exact) return fold(run_mode(false));
    if (st == Strategy::modular) return fold(run_mode(true));
    auto re = run_mode(false), rm = run_mode(true);
    for (std::size_t i = 0; i < re.size(); ++i)
        if (re[i].status != rm[i].status) {
            Verdict v;
            v.strategy = st;
            v.status = Status::error;
            v.detail = "strategy mismatch";
            return v;
        }
    return fold(re);
}

// (b-q^n)(ab-1-a^2+aq^n)/((a-b)(1-ab)) == 1 (mod (1-aq^n)(a-q^n)),
// checked by substituting a := q^{+-n} with b symbolic.
Verdict crt_ab1_run(const Entry&, const Inst& inst, Strategy st, const CheckOptions& o) {
    const long n = inst.n;
    Verdict v;
    v.strategy = st;
    v.status = Status::pass;
    for (long e : {n, -n}) {
        Factored bmqn;  // b - q^n = -q^n (1 - q^{-n} b)
        bmqn.mul_scalar(Rat(-1));
        bmqn.mul_qpow(n);
        bmqn.mul_atom(Atom{Rat(1), 1, -n}, 1);
        // a b - 1 - a^2 + a q^n at a = q^e
        BiPoly quad = BiPoly::a_monomial(QLaurent(QPoly::one(), e), 1) -
                      BiPoly(QLaurent(Rat(1))) - BiPoly(QLaurent(QPoly::one(), 2 * e)) +
                      BiPoly(QLaurent(QPoly::one(), e + n));
        ARat numer = mul(arat(bmqn), ARat(quad));
        Factored den;  // (q^e - b)(1 - q^e b)
        den.mul_qpow(e);
        den.mul_atom(Atom{Rat(1), 1, -e}, 1);
        den.mul_atom(Atom{Rat(1), 1, e}, 1);
        ARat expr = mul(numer, arat(den.inverse()));
        ARat one(Rat(1));
        if (o.mutate_rhs) one = ARat(BiPoly(QLaurent(QPoly::one(), 1)));
        if (!expr.equals(one)) {
            v.status = Status::fail;
            std::ostringstream os;
            os << "not 1 at a=q^" << e;
            v.detail = os.str();
        }
    }
    return v;
}

// (1-aq^n)(a-q^n)/((a-b)(1-ab)) == 1 (mod b-q^n), checked at b := q^n, a symbolic.
Verdict crt_ab2_run(const Entry&, const Inst& inst, Strategy st, const CheckOptions& o) {
    const long n = inst.n;
    Factored f;
    f.mul_atom(Atom{Rat(1), 1, n}, 1);  // 1 - a q^n
    f.mul_apow(1);
    f.mul_atom(Atom{Rat(1), -1, n}, 1);  // a (1 - q^n / a) = a - q^n
    Factored den;                        // (a - b)(1 - a b) at b = q^n
    den.mul_apow(1);
    den.mul_atom(Atom{Rat(1), -1, n}, 1);
    den.mul_atom(Atom{Rat(1), 1, n}, 1);
    f.mul(den.inverse());
    ARat expr = arat(f);
    ARat one(Rat(1));
    if (o.mutate_rhs) one = ARat(BiPoly(QLaurent(QPoly::one(), 1)));
    Verdict v;
    v.strategy = st;
    v.status = expr.equals(one) ? Status::pass : Status::fail;
    if (v.status == Status::fail) v.detail = "not 1 at b=q^n";
    return v;
}

// (1-Q)(1+a^2-a-aQ) == (1-a)^2 + (1-aQ)(a-Q) with Q a fresh indeterminate
// (realized on the q slot): exact bivariate identity, stronger than per-n.
Verdict crt_rel_run(const Entry&, const Inst&, Strategy st, const CheckOptions& o) {
    const QLaurent one(Rat(1));
    const QLaurent Q(QPoly::one(), 1);
    const BiPoly a = BiPoly::a_monomial(one, 1);
    const BiPoly a2 = BiPoly::a_monomial(one, 2);
    BiPoly lhs =
        BiPoly::mul(BiPoly(one) - BiPoly(Q), BiPoly(one) + a2 - a - BiPoly::a_monomial(Q, 1));
    const BiPoly one_minus_a = BiPoly(one) - a;
    BiPoly rhs = BiPoly::mul(one_minus_a, one_minus_a) +
                 BiPoly::mul(BiPoly(one) - BiPoly::a_monomial(Q, 1), a - BiPoly(Q));
    if (o.mutate_rhs) rhs = rhs.shifted_q(1);
    Verdict v;
    v.strategy = st;
    v.status = lhs == rhs ? Status::pass : Status::fail;
    if (v.status == Status::fail) v.detail = "bivariate identity fails";
    return v;
}

// ---- registry ----

std::string conv_stmt(const std::string& term, const std::string& rhs, const std::string& mod) {
    return "sum_{k<n} sum_{j<=k} c(j)c(k-j), c(k) = " + term + ", == " + rhs + " (mod " + mod + ")";
}
std::string single_stmt(const std::string& up, const std::string& term, const std::string& rhs,
                        const std::string& mod) {
    return "sum_{k<=" + up + "} " + term + " == " + rhs + " (mod " + mod + ")";
}

std::vector<Entry> build_registry() {
    std::vector<Entry> R;

    auto add_entry = [&](Entry e) { R.push_back(std::move(e)); };

    auto simple_conv = [&](const char* id, Kind kind, const char* term_s, const char* rhs_s,
                           const char* mod_s, std::function<bool(const Inst&)> pred,
                           const char* pred_s,
                           Factored (*termfn)(const Inst&, long, const ParamPlan&),
                           std::function<ARat(const Inst&, const ParamPlan&, const CheckOptions&)>
                               rhsfn,
                           std::function<ModulusSpec(const Inst&)> modfn) {
        Entry e;
        e.id = id;
        e.kind = kind;
        e.statement = conv_stmt(term_s, rhs_s, mod_s);
        e.predicate_desc = pred_s;
        e.modulus_desc = mod_s;
        e.pred = std::move(pred);
        e.term = [termfn](const Inst& i, long k, const ParamPlan& p, const CheckOptions&) {
            return termfn(i, k, p);
        };
        e.rhs = std::move(rhsfn);
        e.modulus = std::move(modfn);
        return e;
    };

    // -- the eight double-sum theorems --
    add_entry(simple_conv(
        "THM1", Kind::theorem, "[3k+1](q;q^2)_k^3 q^{-C(k+1,2)}/((q;q)_k^2(q^2;q^2)_k)", "q[n]^2",
        "[n]Phi_n^2", odd_ge3, "odd n >= 3", thm1_term,
        [](const Inst& i, const ParamPlan&, const CheckOptions&) {
            return arat(scalar_qint(Rat(1), 1, i.n, 2));
        },
        [](const Inst& i) { return mod_bp(i.n, 1, 2); }));

    add_entry(simple_conv(
        "THM2", Kind::theorem, "(-1)^k[3k+1](q;q^2)_k^3/(q;q)_k^3", "q^{(n+1)/2}[n]^2",
        "[n]Phi_n^2", odd_ge3, "odd n >= 3", thm2_term,
        [](const Inst& i, const ParamPlan&, const CheckOptions&) {
            return arat(scalar_qint(Rat(1), (i.n + 1) / 2, i.n, 2));
        },
        [](const Inst& i) { return mod_bp(i.n, 1, 2); }));

    add_entry(simple_conv(
        "THM3", Kind::theorem, "(-1)^k q^{k^2}[4k+1](q;q^2)_k^3/(q^2;q^2)_k^3",
        "q^{(n-1)^2/2}[n]^2", "[n]Phi_n^3", odd_ge3, "odd n >= 3", thm3_term,
        [](const Inst& i, const ParamPlan&, const CheckOptions&) {
            return arat(scalar_qint(Rat(1), (i.n - 1) * (i.n - 1) / 2, i.n, 2));
        },
        [](const Inst& i) { return mod_bp(i.n, 1, 3); }));

    add_entry(simple_conv(
        "THM4", Kind::theorem, "[4k+1](q;q^2)_k^4/(q^2;q^2)_k^4", "q^{1-n}[n]^2", "[n]Phi_n^3",
        odd_ge3, "odd n >= 3", thm4_term,
        [](const Inst& i, const ParamPlan&, const CheckOptions&) {
            return arat(scalar_qint(Rat(1), 1 - i.n, i.n, 2));
        },
        [](const Inst& i) { return mod_bp(i.n, 1, 3); }));

    add_entry(simple_conv(
        "THM5", Kind::theorem, "2(q;q^2)_k^2 q^{2k}/((q^2;q^2)_k^2(1+q^{2k}))", "1", "Phi_n^2",
        odd_ge3, "odd n >= 3", thm5_term,
        [](const Inst&, const ParamPlan&, const CheckOptions&) { return ARat(Rat(1)); },
        [](const Inst& i) { return mod_bp(i.n, 0, 2); }));

    add_entry(simple_conv(
        "THM6", Kind::theorem, "(q;q^2)_k^2(q^2;q^4)_k q^{2k}/((q^2;q^2)_k^2(q^4;q^4)_k)",
        "(q^2;q^4)_m^4/(q^4;q^4)_m^4 q^{n-1}(1+4[n]^2 sum_{k=1}^{m} q^{4k-2}/[4k-2]^2), m=(n-1)/4, for n=1 mod 4; 0 for n=3 mod 4",
        "Phi_n^3", odd_ge3, "odd n >= 3", thm6_term,
        [](const Inst& i, const ParamPlan&, const CheckOptions& o) {
            if (i.n % 4 == 3) return ARat();
            QRat bracket =
                add(QRat(Rat(1)), mul(QRat::from_factored(scalar_qint(Rat(4), 0, i.n, 2)),
                                      h_correction_sum(i.n, o)));
            Factored pref = even_odd_poch_ratio((i.n - 1) / 4, 4);
            pref.mul_qpow(i.n - 1);
            return ARat(mul(QRat::from_factored(pref), bracket));
        },
        [](const Inst& i) { return mod_bp(i.n, 0, 3); }));

    add_entry(simple_conv(
        "THM7", Kind::theorem, "(-1)^k[4k+1](q;q^2)_k^4(q^2;q^4)_k q^k/((q^2;q^2)_k^4(q^4;q^4)_k)",
        "[n]^2(q^2;q^4)_m^4/(q^4;q^4)_m^4 for n=1 mod 4; 0 for n=3 mod 4", "[n]Phi_n^2", odd_ge3,
        "odd n >= 3", thm7_term,
        [](const Inst& i, const ParamPlan&, const CheckOptions&) {
            if (i.n % 4 == 3) return ARat();
            Factored f = even_odd_poch_ratio((i.n - 1) / 4, 4);
            f.mul(scalar_qint(Rat(1), 0, i.n, 2));
            return arat(f);
        },
        [](const Inst& i) { return mod_bp(i.n, 1, 2); }));

    add_entry(simple_conv(
        "THM8", Kind::theorem, "[4k+1](q;q^2)_k^6 q^k/(q^2;q^2)_k^6",
        "q^{1-n}[n]^2 (sum_{k<=(n-1)/2}(q;q^2)_k^4 q^{2k}/(q^2;q^2)_k^4)^2", "[n]Phi_n^2", odd_ge3,
        "odd n >= 3", thm8_term,
        [](const Inst& i, const ParamPlan&, const CheckOptions&) {
            QRat inner = fourth_power_tail_sum(i.n);
            return ARat(
                mul(QRat::from_factored(scalar_qint(Rat(1), 1 - i.n, i.n, 2)), mul(inner, inner)));
        },
        [](const Inst& i) { return mod_bp(i.n, 1, 2); }));

    // -- parametric parents A1-A4 --
    auto param_conv = [&](const char* id, const char* term_s, const char* rhs_s, const char* mod_s,
                          int bracket, int phi,
                          Factored (*termfn)(const Inst&, long, const ParamPlan&),
                          std::function<ARat(const Inst&, const ParamPlan&, const CheckOptions&)>
                              rhsfn,
                          const char* specializes) {
        Entry e = simple_conv(id, Kind::parametric_theorem, term_s, rhs_s, mod_s, odd_ge3,
                              "odd n >= 3", termfn, std::move(rhsfn), nullptr);
        e.symb = Var::a;
        e.specializes_to = specializes;
        e.modulus = [bracket, phi](const Inst& i) { return mod_param(i.n, bracket, phi); };
        return e;
    };

    add_entry(param_conv("A1", "[3k+1](aq,q/a,q;q^2)_k q^{-C(k+1,2)}/((aq,q/a;q)_k(q^2;q^2)_k)",
                         "q^{1-n}[n]^2", "[n](1-aq^n)(a-q^n)", 1, 0, a1_term,
                         [](const Inst& i, const ParamPlan&, const CheckOptions&) {
                             return arat(scalar_qint(Rat(1), 1 - i.n, i.n, 2));
                         },
                         "THM1"));

    add_entry(param_conv("A2", "(-1)^k[3k+1](aq,q/a,q;q^2)_k/(aq,q/a,q;q)_k",
                         "q^{(n-1)^2/2}[n]^2", "[n](1-aq^n)(a-q^n)", 1, 0, a2_term,
                         [](const Inst& i, const ParamPlan&, const CheckOptions&) {
                             return arat(scalar_qint(Rat(1), (i.n - 1) * (i.n - 1) / 2, i.n, 2));
                         },
                         "THM2"));

    add_entry(param_conv("A3", "(-1)^k q^{k^2}[4k+1](aq,q/a,q;q^2)_k/(aq^2,q^2/a,q^2;q^2)_k",
                         "q^{(n-1)^2/2}[n]^2", "[n]Phi_n(1-aq^n)(a-q^n)", 1, 1, a3_term,
                         [](const Inst& i, const ParamPlan&, const CheckOptions&) {
                             return arat(scalar_qint(Rat(1), (i.n - 1) * (i.n - 1) / 2, i.n, 2));
                         },
                         "THM3"));

    add_entry(param_conv("A4", "[4k+1](aq,q/a;q^2)_k(q;q^2)_k^2/((aq^2,q^2/a;q^2)_k(q^2;q^2)_k^2)",
                         "q^{1-n}[n]^2", "[n]Phi_n(1-aq^n)(a-q^n)", 1, 1, a4_term,
                         [](const Inst& i, const ParamPlan&, const CheckOptions&) {
                             return arat(scalar_qint(Rat(1), 1 - i.n, i.n, 2));
                         },
                         "THM4"));

    // -- exact single-sum evaluations --
    {
        Entry e;
        e.id = "LEM-A1";
        e.kind = Kind::lemma_identity;
        e.statement = single_stmt(
            "(n-1)/2",
            "[3k+1](q^{1+n},q^{1-n},q;q^2)_k q^{-C(k+1,2)}/((q^{1+n},q^{1-n};q)_k(q^2;q^2)_k)",
            "q^{(1-n)/2}[n]", "exact identity");
        e.predicate_desc = "odd n >= 1";
        e.modulus_desc = "exact identity";
        e.pred = [](const Inst& i) { return i.n >= 1 && i.n % 2 == 1; };
        e.shape = SumShape::single;
        e.upper = Upper::half;
        e.term = [](const Inst& i, long k, const ParamPlan& p, const CheckOptions&) {
            return TB{p}
                .qint(3 * k + 1)
                .num(Rat(1), 0, 0, 1 + i.n, 2, k)
                .num(Rat(1), 0, 0, 1 - i.n, 2, k)
                .num(Rat(1), 0, 0, 1, 2, k)
                .qpow(-k * (k + 1) / 2)
                .den(Rat(1), 0, 0, 1 + i.n, 1, k)
                .den(Rat(1), 0, 0, 1 - i.n, 1, k)
                .den(Rat(1), 0, 0, 2, 2, k)
                .done();
        };
        e.rhs = [](const Inst& i, const ParamPlan&, const CheckOptions&) {
            return arat(scalar_qint(Rat(1), (1 - i.n) / 2, i.n, 1));
        };
        e.modulus = [](const Inst& i) { return mod_bp(i.n, 0, 0); };
        e.custom = identity_run;
        add_entry(std::move(e));
    }
    {
        Entry e;
        e.id = "LEM-A2";
        e.kind = Kind::lemma_identity;
        e.statement =
            single_stmt("(n-1)/2", "(-1)^k[3k+1](q^{1+n},q^{1-n},q;q^2)_k/(q^{1+n},q^{1-n},q;q)_k",
                        "(-q)^{(n-1)^2/4}[n]", "exact identity");
        e.predicate_desc = "odd n >= 1";
        e.modulus_desc = "exact identity";
        e.pred = [](const Inst& i) { return i.n >= 1 && i.n % 2 == 1; };
        e.shape = SumShape::single;
        e.upper = Upper::half;
        e.term = [](const Inst& i, long k, const ParamPlan& p, const CheckOptions&) {
            return TB{p}
                .alt(k)
                .qint(3 * k + 1)
                .num(Rat(1), 0, 0, 1 + i.n, 2, k)
                .num(Rat(1), 0, 0, 1 - i.n, 2, k)
                .num(Rat(1), 0, 0, 1, 2, k)
                .den(Rat(1), 0, 0, 1 + i.n, 1, k)
                .den(Rat(1), 0, 0, 1 - i.n, 1, k)
                .den(Rat(1), 0, 0, 1, 1, k)
                .done();
        };
        e.rhs = [](const Inst& i, const ParamPlan&, const CheckOptions&) {
            const long ex = (i.n - 1) * (i.n - 1) / 4;
            return arat(scalar_qint(ex % 2 ? Rat(-1) : Rat(1), ex, i.n, 1));
        };
        e.modulus = [](const Inst& i) { return mod_bp(i.n, 0, 0); };
        e.custom = identity_run;
        add_entry(std::move(e));
    }

    // -- parametric single-sum inputs --
    auto param_single = [&](const char* id, Kind kind, const char* term_s, const char* rhs_s,
                            const char* mod_s,
                            Factored (*termfn)(const Inst&, long, const ParamPlan&),
                            std::function<ARat(const Inst&, const ParamPlan&, const CheckOptions&)>
                                rhsfn,
                            std::function<ModulusSpec(const Inst&)> modfn, Upper up,
                            const char* specializes) {
        Entry e;
        e.id = id;
        e.kind = kind;
        e.statement = single_stmt(up == Upper::half ? "(n-1)/2" : "n-1", term_s, rhs_s, mod_s);
        e.predicate_desc = "odd n >= 3";
        e.modulus_desc = mod_s;
        e.pred = odd_ge3;
        e.shape = SumShape::single;
        e.upper = up;
        e.symb = Var::a;
        e.specializes_to = specializes;
        e.term = [termfn](const Inst& i, long k, const ParamPlan& p, const CheckOptions&) {
            return termfn(i, k, p);
        };
        e.rhs = std::move(rhsfn);
        e.modulus = std::move(modfn);
        return e;
    };

    add_entry(param_single(
        "GUO1", Kind::background, "[3k+1](aq,q/a,q;q^2)_k q^{-C(k+1,2)}/((aq,q/a;q)_k(q^2;q^2)_k)",
        "q^{(1-n)/2}[n]", "[n](1-aq^n)(a-q^n)", a1_term,
        [](const Inst& i, const ParamPlan&, const CheckOptions&) {
            return arat(scalar_qint(Rat(1), (1 - i.n) / 2, i.n, 1));
        },
        [](const Inst& i) { return mod_param(i.n, 1, 0); }, Upper::half, "THM1"));

    add_entry(param_single(
        "GUO2", Kind::background, "(-1)^k[3k+1](aq,q/a,q;q^2)_k/(aq,q/a,q;q)_k",
        "(-q)^{(n-1)^2/4}[n]", "[n](1-aq^n)(a-q^n)", a2_term,
        [](const Inst& i, const ParamPlan&, const CheckOptions&) {
            const long ex = (i.n - 1) * (i.n - 1) / 4;
            return arat(scalar_qint(ex % 2 ? Rat(-1) : Rat(1), ex, i.n, 1));
        },
        [](const Inst& i) { return mod_param(i.n, 1, 0); }, Upper::half, "THM2"));

    add_entry(param_single(
        "BG-MORE1", Kind::background, "2(aq,q/a;q^2)_k q^{2k}/((q^2;q^2)_k^2(1+q^{2k}))",
        "(-1)^{(n-1)/2}", "(1-aq^n)(a-q^n)", more1_term,
        [](const Inst& i, const ParamPlan&, const CheckOptions&) {
            return ARat(((i.n - 1) / 2) % 2 ? Rat(-1) : Rat(1));
        },
        [](const Inst& i) { return mod_param(i.n, 0, 0); }, Upper::n_minus_1, "THM5"));

    add_entry(param_single(
        "BG-A2INPUT", Kind::background,
        "(-1)^k[4k+1](aq,q/a;q^2)_k(q;q^2)_k^2(q^2;q^4)_k q^k/((aq^2,q^2/a;q^2)_k(q^2;q^2)_k^2(q^4;q^4)_k)",
        "[n](q^2;q^4)_m^2/(q^4;q^4)_m^2 for n=1 mod 4; 0 for n=3 mod 4",
        "[n](1-aq^n)(a-q^n)", a2input_term,
        [](const Inst& i, const ParamPlan&, const CheckOptions&) {
            if (i.n % 4 == 3) return ARat();
            Factored f = even_odd_poch_ratio((i.n - 1) / 4, 2);
            f.mul(q_int_factored(i.n));
            return arat(f);
        },
        [](const Inst& i) { return mod_param(i.n, 1, 0); }, Upper::half, "THM7"));

    // -- the b-parametric lemma pairs --
    {
        Entry e;
        e.id = "FALSE1";
        e.kind = Kind::background;
        e.statement = single_stmt(
            "(n-1)/2", "(-1)^k[4k+1](aq,q/a,q/b;q^2)_k b^k q^{k^2}/(aq^2,q^2/a,bq^2;q^2)_k",
            "(-q)^{(n-1)^2/4}[n] sum_{k<=(n-1)/2} (1-b)(aq,q/a;q^2)_k q^k/((1-bq^{2k})(q,q^2;q^2)_k)",
            "[n](1-aq^n)(a-q^n); [n]-part checked at a=1");
        e.predicate_desc = "odd n >= 3";
        e.modulus_desc = "[n](1-aq^n)(a-q^n)";
        e.pred = odd_ge3;
        e.shape = SumShape::single;
        e.upper = Upper::half;
        e.symb = Var::a;
        e.uses_b = true;
        e.specializes_to = "THM3";
        e.term = [](const Inst& i, long k, const ParamPlan& p, const CheckOptions&) {
            return false_z_term(i, k, p);
        };
        e.rhs = [](const Inst& i, const ParamPlan& p, const CheckOptions&) {
            return false1_rhs(i, p);
        };
        e.modulus = [](const Inst& i) { return mod_param(i.n, 1, 0); };
        // [n]-part checked at a := 1 with b symbolic: the b := q^n specialization
        // develops genuine Phi_d poles at composite n (first at n = 9)
        e.cyc_plan = [](const Inst&) {
            ParamPlan p;
            p.b = Mode::symbolic;
            return p;
        };
        add_entry(std::move(e));
    }
    {
        Entry e;
        e.id = "FALSE2";
        e.kind = Kind::background;
        e.statement = single_stmt(
            "(n-1)/2", "(-1)^k[4k+1](aq,q/a,q/b;q^2)_k b^k q^{k^2}/(aq^2,q^2/a,bq^2;q^2)_k",
            "[n] sum_{k<=(n-1)/2} (q,q/b;q^2)_k b^k/(aq^2,q^2/a;q^2)_k", "b-q^n");
        e.predicate_desc = "odd n >= 3";
        e.modulus_desc = "b-q^n";
        e.pred = odd_ge3;
        e.shape = SumShape::single;
        e.upper = Upper::half;
        e.symb = Var::a;
        e.uses_b = true;
        e.term = [](const Inst& i, long k, const ParamPlan& p, const CheckOptions&) {
            return false_z_term(i, k, p);
        };
        e.rhs = [](const Inst& i, const ParamPlan& p, const CheckOptions&) {
            return false2_rhs(i, p);
        };
        e.modulus = [](const Inst& i) {
            return ModulusSpec{i.n, 0, 0, {{ParamFactor::Kind::a_minus_q, i.n, true}}};
        };
        add_entry(std::move(e));
    }
    {
        Entry e;
        e.id = "QLONG1";
        e.kind = Kind::background;
        e.statement = single_stmt(
            "(n-1)/2", "[4k+1](aq,q/a,q/b,q;q^2)_k b^k/(aq^2,q^2/a,bq^2,q^2;q^2)_k",
            "(b/q)^{(n-1)/2}(q^2/b;q^2)_{(n-1)/2}/(bq^2;q^2)_{(n-1)/2} [n]",
            "[n](1-aq^n)(a-q^n); [n]-part checked at a=1");
        e.predicate_desc = "odd n >= 3";
        e.modulus_desc = "[n](1-aq^n)(a-q^n)";
        e.pred = odd_ge3;
        e.shape = SumShape::single;
        e.upper = Upper::half;
        e.symb = Var::a;
        e.uses_b = true;
        e.specializes_to = "THM4";
        e.term = [](const Inst& i, long k, const ParamPlan& p, const CheckOptions&) {
            return qlong_z_term(i, k, p);
        };
        e.rhs = [](const Inst& i, const ParamPlan& p, const CheckOptions&) {
            return qlong1_rhs(i, p);
        };
        e.modulus = [](const Inst& i) { return mod_param(i.n, 1, 0); };
        // [n]-part checked at a := 1 with b symbolic: the b := q^n specialization
        // develops genuine Phi_d poles at composite n (first at n = 9)
        e.cyc_plan = [](const Inst&) {
            ParamPlan p;
            p.b = Mode::symbolic;
            return p;
        };
        add_entry(std::move(e));
    }
    {
        Entry e;
        e.id = "QLONG2";
        e.kind = Kind::background;
        e.statement = single_stmt(
            "(n-1)/2", "[4k+1](aq,q/a,q/b,q;q^2)_k b^k/(aq^2,q^2/a,bq^2,q^2;q^2)_k",
            "(q;q^2)_{(n-1)/2}^2 [n]/(aq^2,q^2/a;q^2)_{(n-1)/2}", "b-q^n");
        e.predicate_desc = "odd n >= 3";
        e.modulus_desc = "b-q^n";
        e.pred = odd_ge3;
        e.shape = SumShape::single;
        e.upper = Upper::half;
        e.symb = Var::a;
        e.uses_b = true;
        e.term = [](const Inst& i, long k, const ParamPlan& p, const CheckOptions&) {
            return qlong_z_term(i, k, p);
        };
        e.rhs = [](const Inst& i, const ParamPlan& p, const CheckOptions&) {
            return qlong2_rhs(i, p);
        };
        e.modulus = [](const Inst& i) {
            return ModulusSpec{i.n, 0, 0, {{ParamFactor::Kind::a_minus_q, i.n, true}}};
        };
        add_entry(std::move(e));
    }
    {
        Entry e;
        e.id = "ANDREWS-JAIN";
        e.kind = Kind::background;
        e.statement = single_stmt(
            "(n-1)/2", "(aq,q/a,q/b,-q/b;q^2)_k q^{2k}/(q^2,q^2,-q^2,q^2/b^2;q^2)_k",
            "(q^2,b^2q^2;q^4)_m/(q^4,q^4/b^2;q^4)_m (q/b)^{(n-1)/2} (mod (1-aq^n)(a-q^n)) and "
            "(abq^2,bq^2/a,aq^2/b,q^2/ab;q^4)_m/(q^2,q^4,q^2/b^2,q^4/b^2;q^4)_m (q/b)^{(n-1)/2} (mod b-q^n)",
            "(1-aq^n)(a-q^n)(b-q^n)");
        e.predicate_desc = "n = 1 mod 4, n >= 5";
        e.modulus_desc = "(1-aq^n)(a-q^n)(b-q^n)";
        e.pred = one_mod4;
        e.shape = SumShape::single;
        e.upper = Upper::half;
        e.symb = Var::a;
        e.uses_b = true;
        e.specializes_to = "THM6";
        e.term = [](const Inst& i, long k, const ParamPlan& p, const CheckOptions&) {
            return aj_z_term(i, k, p);
        };
        e.rhs = [](const Inst& i, const ParamPlan& p, const CheckOptions&) {
            return p.b == Mode::symbolic ? aj_rhs1(i, p) : aj_rhs2(i, p);
        };
        e.modulus = [](const Inst& i) {
            return ModulusSpec{i.n,
                               0,
                               0,
                               {{ParamFactor::Kind::one_minus_aq, i.n},
                                {ParamFactor::Kind::a_minus_q, i.n},
                                {ParamFactor::Kind::a_minus_q, i.n, true}}};
        };
        add_entry(std::move(e));
    }

    // -- Pochhammer-quotient symmetry and the polynomial CRT pieces --
    {
        Entry e;
        e.id = "GS-SYM";
        e.kind = Kind::background;
        e.statement =
            "(aq;q^2)_{M-k}/(q^2/a;q^2)_{M-k} == (-a)^{M-2k}(aq;q^2)_k/(q^2/a;q^2)_k "
            "q^{(n-1)^2/4+k} (mod Phi_n) for 0<=k<=M=(n-1)/2, coefficientwise in a";
        e.predicate_desc = "odd n >= 3";
        e.modulus_desc = "Phi_n";
        e.pred = odd_ge3;
        e.symb = Var::a;
        e.custom = gs_sym_run;
        add_entry(std::move(e));
    }
    {
        Entry e;
        e.id = "CRT-AB1";
        e.kind = Kind::background;
        e.statement = "(b-q^n)(ab-1-a^2+aq^n)/((a-b)(1-ab)) == 1 (mod (1-aq^n)(a-q^n))";
        e.predicate_desc = "n >= 1";
        e.modulus_desc = "(1-aq^n)(a-q^n)";
        e.pred = [](const Inst& i) { return i.n >= 1; };
        e.symb = Var::a;
        e.uses_b = true;
        e.custom = crt_ab1_run;
        add_entry(std::move(e));
    }
    {
        Entry e;
        e.id = "CRT-AB2";
        e.kind = Kind::background;
        e.statement = "(1-aq^n)(a-q^n)/((a-b)(1-ab)) == 1 (mod b-q^n)";
        e.predicate_desc = "n >= 1";
        e.modulus_desc = "b-q^n";
        e.pred = [](const Inst& i) { return i.n >= 1; };
        e.symb = Var::a;
        e.uses_b = true;
        e.custom = crt_ab2_run;
        add_entry(std::move(e));
    }
    {
        Entry e;
        e.id = "CRT-REL";
        e.kind = Kind::lemma_identity;
        e.statement = "(1-Q)(1+a^2-a-aQ) == (1-a)^2 + (1-aQ)(a-Q), Q an indeterminate";
        e.predicate_desc = "none (indeterminate identity)";
        e.modulus_desc = "exact identity";
        e.pred = [](const Inst&) { return true; };
        e.symb = Var::a;
        e.custom = crt_rel_run;
        add_entry(std::move(e));
    }

    // -- non-parametric background congruences --
    {
        Entry e;
        e.id = "BG-Q4B";
        e.kind = Kind::background;
        e.statement = single_stmt(
            "(n-1)/2", "[8k+1](q;q^2)_k^2(q;q^2)_{2k} q^{2k^2}/((q^2;q^2)_{2k}(q^6;q^6)_k^2)",
            "q^{(1-n)/2}[n] jacobi(-3,n)", "[n]Phi_n^2");
        e.predicate_desc = "gcd(n,6)=1, n >= 5";
        e.modulus_desc = "[n]Phi_n^2";
        e.pred = coprime6;
        e.shape = SumShape::single;
        e.upper = Upper::half;
        e.term = [](const Inst& i, long k, const ParamPlan& p, const CheckOptions&) {
            return q4b_term(i, k, p);
        };
        e.rhs = [](const Inst& i, const ParamPlan&, const CheckOptions&) {
            const int j = jacobi(-3, i.n);
            return arat(scalar_qint(Rat(j), (1 - i.n) / 2, i.n, 1));
        };
        e.modulus = [](const Inst& i) { return mod_bp(i.n, 1, 2); };
        add_entry(std::move(e));
    }
    add_entry(simple_conv(
        "BG-EL", Kind::background,
        "[8k+1](q;q^2)_k^2(q;q^2)_{2k} q^{2k^2}/((q^2;q^2)_{2k}(q^6;q^6)_k^2)", "q[n]^2",
        "[n]Phi_n^2", coprime6, "gcd(n,6)=1, n >= 5", q4b_term,
        [](const Inst& i, const ParamPlan&, const CheckOptions&) {
            return arat(scalar_qint(Rat(1), 1, i.n, 2));
        },
        [](const Inst& i) { return mod_bp(i.n, 1, 2); }));
    {
        Entry e;
        e.id = "BG-GW";
        e.kind = Kind::background;
        e.statement = single_stmt("(n-1)/2", "[4k+1](q;q^2)_k^4/(q^2;q^2)_k^4",
                                  "q^{(1-n)/2}[n] + (n^2-1)(1-q)^2/24 q^{(1-n)/2}[n]^3",
                                  "[n]Phi_n^3");
        e.predicate_desc = "odd n >= 3";
        e.modulus_desc = "[n]Phi_n^3";
        e.pred = odd_ge3;
        e.shape = SumShape::single;
        e.upper = Upper::half;
        e.term = [](const Inst& i, long k, const ParamPlan& p, const CheckOptions&) {
            return thm4_term(i, k, p);
        };
        e.rhs = [](const Inst& i, const ParamPlan&, const CheckOptions&) {
            Factored f2 = scalar_qint(Rat(i.n * i.n - 1, 24), (1 - i.n) / 2, i.n, 3);
            f2.mul_atom(Atom{Rat(1), 0, 1}, 2);  // (1-q)^2
            return ARat(add(QRat::from_factored(scalar_qint(Rat(1), (1 - i.n) / 2, i.n, 1)),
                            QRat::from_factored(f2)));
        };
        e.modulus = [](const Inst& i) { return mod_bp(i.n, 1, 3); };
        add_entry(std::move(e));
    }
    {
        Entry e;
        e.id = "BG-RV";
        e.kind = Kind::background;
        e.statement = single_stmt("p-1", "2(q;q^2)_k^2 q^{2k}/((q^2;q^2)_k^2(1+q^{2k}))",
                                  "(-1)^{(p-1)/2}", "[p]^2");
        e.predicate_desc = "odd prime p";
        e.modulus_desc = "[p]^2";
        e.pred = odd_prime;
        e.shape = SumShape::single;
        e.upper = Upper::n_minus_1;
        e.term = [](const Inst& i, long k, const ParamPlan& p, const CheckOptions&) {
            return thm5_term(i, k, p);
        };
        e.rhs = [](const Inst& i, const ParamPlan&, const CheckOptions&) {
            return ARat(((i.n - 1) / 2) % 2 ? Rat(-1) : Rat(1));
        };
        e.modulus = [](const Inst& i) { return mod_bp(i.n, 2, 0); };
        add_entry(std::move(e));
    }
    {
        Entry e;
        e.id = "BG-H1";
        e.kind = Kind::background;
        e.statement = single_stmt(
            "(n-1)/2", "(q;q^2)_k^2(q^2;q^4)_k q^{2k}/((q^2;q^2)_k^2(q^4;q^4)_k)",
            "[n](q^3;q^4)_{(n-1)/2}/(q^5;q^4)_{(n-1)/2}",
            "Phi_n^3 for n=3 mod 4, Phi_n^2 for n=1 mod 4");
        e.predicate_desc = "odd n >= 3";
        e.modulus_desc = "Phi_n^3 (n=3 mod 4) / Phi_n^2 (n=1 mod 4)";
        e.pred = odd_ge3;
        e.shape = SumShape::single;
        e.upper = Upper::half;
        e.term = [](const Inst& i, long k, const ParamPlan& p, const CheckOptions&) {
            return thm6_term(i, k, p);
        };
        e.rhs = [](const Inst& i, const ParamPlan& p, const CheckOptions&) {
            const long M = (i.n - 1) / 2;
            TB b{p};
            b.qint(i.n).num(Rat(1), 0, 0, 3, 4, M).den(Rat(1), 0, 0, 5, 4, M);
            return arat(b.f);
        };
        e.modulus = [](const Inst& i) { return mod_bp(i.n, 0, i.n % 4 == 3 ? 3 : 2); };
        add_entry(std::move(e));
    }
    {
        Entry e;
        e.id = "BG-H2";
        e.kind = Kind::background;
        e.statement = single_stmt(
            "(n-1)/2", "(q;q^2)_k^2(q^2;q^4)_k q^{2k}/((q^2;q^2)_k^2(q^4;q^4)_k)",
            "(q^2;q^4)_m^2/(q^4;q^4)_m^2 q^{(n-1)/2}(1+2[n]^2 sum_{k=1}^{m} q^{4k-2}/[4k-2]^2), m=(n-1)/4",
            "Phi_n^3");
        e.predicate_desc = "n = 1 mod 4, n >= 5";
        e.modulus_desc = "Phi_n^3";
        e.pred = one_mod4;
        e.shape = SumShape::single;
        e.upper = Upper::half;
        e.term = [](const Inst& i, long k, const ParamPlan& p, const CheckOptions&) {
            return thm6_term(i, k, p);
        };
        e.rhs = [](const Inst& i, const ParamPlan&, const CheckOptions& o) {
            QRat bracket =
                add(QRat(Rat(1)), mul(QRat::from_factored(scalar_qint(Rat(2), 0, i.n, 2)),
                                      h_correction_sum(i.n, o)));
            Factored pref = even_odd_poch_ratio((i.n - 1) / 4, 2);
            pref.mul_qpow((i.n - 1) / 2);
            return ARat(mul(QRat::from_factored(pref), bracket));
        };
        e.modulus = [](const Inst& i) { return mod_bp(i.n, 0, 3); };
        add_entry(std::move(e));
    }
    {
        Entry e;
        e.id = "BG-GS-T8";
        e.kind = Kind::background;
        e.statement = single_stmt(
            "(n-1)/2", "[4k+1](q;q^2)_k^6 q^k/(q^2;q^2)_k^6",
            "q^{(1-n)/2}[n] sum_{k<=(n-1)/2}(q;q^2)_k^4 q^{2k}/(q^2;q^2)_k^4", "[n]Phi_n^2");
        e.predicate_desc = "odd n >= 3";
        e.modulus_desc = "[n]Phi_n^2";
        e.pred = odd_ge3;
        e.shape = SumShape::single;
        e.upper = Upper::half;
        e.term = [](const Inst& i, long k, const ParamPlan& p, const CheckOptions&) {
            return thm8_term(i, k, p);
        };
        e.rhs = [](const Inst& i, const ParamPlan&, const CheckOptions&) {
            return ARat(mul(QRat::from_factored(scalar_qint(Rat(1), (1 - i.n) / 2, i.n, 1)),
                            fourth_power_tail_sum(i.n)));
        };
        e.modulus = [](const Inst& i) { return mod_bp(i.n, 1, 2); };
        add_entry(std::move(e));
    }

    // -- conjectures (q-side) --
    {
        Entry e = param_conv("CONJ2",
                             "(-1)^k q^{k^2}[4k+1](aq,q/a,q;q^2)_k/(aq^2,q^2/a,q^2;q^2)_k",
                             "q^{(n-1)^2/2}[n]^2", "[n]^2(1-aq^n)(a-q^n)", 2, 0, a3_term,
                             [](const Inst& i, const ParamPlan&, const CheckOptions&) {
                                 return arat(scalar_qint(Rat(1), (i.n - 1) * (i.n - 1) / 2, i.n, 2));
                             },
                             "THM3");
        e.kind = Kind::conjecture;
        e.specialized_modulus = [](const Inst& i) { return mod_bp(i.n, 2, 2); };
        e.modulus_desc = "[n]^2(1-aq^n)(a-q^n); at a=1 also [n]^2 Phi_n^2";
        add_entry(std::move(e));
    }
    add_entry(simple_conv(
        "CONJ3", Kind::conjecture, "[4k+1](q;q^2)_k^4/(q^2;q^2)_k^4",
        "q^{1-n}[n]^2 + (n^2-1)(1-q)^2/12 q[n]^4", "[n]^2Phi_n^3", odd_ge3, "odd n >= 3",
        thm4_term,
        [](const Inst& i, const ParamPlan&, const CheckOptions&) {
            Factored f2 = scalar_qint(Rat(i.n * i.n - 1, 12), 1, i.n, 4);
            f2.mul_atom(Atom{Rat(1), 0, 1}, 2);
            return ARat(add(QRat::from_factored(scalar_qint(Rat(1), 1 - i.n, i.n, 2)),
                            QRat::from_factored(f2)));
        },
        [](const Inst& i) { return mod_bp(i.n, 2, 3); }));
    {
        Entry e = param_conv("CONJ4", "2(aq,q/a;q^2)_k q^{2k}/((q^2;q^2)_k^2(1+q^{2k}))", "1",
                             "Phi_n(1-aq^n)(a-q^n)", 0, 1, more1_term,
                             [](const Inst&, const ParamPlan&, const CheckOptions&) {
                                 return ARat(Rat(1));
                             },
                             "THM5");
        e.kind = Kind::conjecture;
        e.specialized_modulus = [](const Inst& i) { return mod_bp(i.n, 0, 3); };
        e.modulus_desc = "Phi_n(1-aq^n)(a-q^n); at a=1 also Phi_n^3";
        add_entry(std::move(e));
    }
    {
        Entry e;
        e.id = "CONJ5";
        e.kind = Kind::conjecture;
        e.statement = conv_stmt("2(q^r;q^d)_k(q^{d-r};q^d)_k q^{dk}/((q^d;q^d)_k^2(1+q^{dk}))",
                                "1", "Phi_n^2");
        e.predicate_desc = "odd n >= 3, gcd(d,n)=1, 1 <= r < d";
        e.modulus_desc = "Phi_n^2";
        e.pred = dr_pred;
        e.uses_dr = true;
        e.term = [](const Inst& i, long k, const ParamPlan& p, const CheckOptions&) {
            return conj5_term(i, k, p);
        };
        e.rhs = [](const Inst&, const ParamPlan&, const CheckOptions&) { return ARat(Rat(1)); };
        e.modulus = [](const Inst& i) { return mod_bp(i.n, 0, 2); };
        add_entry(std::move(e));
    }
    {
        Entry e;
        e.id = "CONJ5-PARAM";
        e.kind = Kind::background;
        e.statement = single_stmt(
            "n-1", "2(aq^r;q^d)_k(q^{d-r}/a;q^d)_k q^{dk}/((q^d;q^d)_k^2(1+q^{dk}))",
            "(-1)^{<-r/d>_n}", "(1-aq^{r+d<-r/d>_n})(a-q^{d-r+d<(r-d)/d>_n})");
        e.predicate_desc = "odd n >= 3, gcd(d,n)=1, 1 <= r < d";
        e.modulus_desc = "(1-aq^{e1})(a-q^{e2})";
        e.pred = dr_pred;
        e.uses_dr = true;
        e.shape = SumShape::single;
        e.upper = Upper::n_minus_1;
        e.symb = Var::a;
        e.specializes_to = "CONJ5";
        e.term = [](const Inst& i, long k, const ParamPlan& p, const CheckOptions&) {
            return conj5p_term(i, k, p);
        };
        e.rhs = [](const Inst& i, const ParamPlan&, const CheckOptions&) {
            const long t1 = residue_mod(Rat(-i.r, i.d), i.n);
            return ARat(t1 % 2 ? Rat(-1) : Rat(1));
        };
        e.modulus = [](const Inst& i) {
            const long t1 = residue_mod(Rat(-i.r, i.d), i.n);
            const long t2 = residue_mod(Rat(i.r - i.d, i.d), i.n);
            return ModulusSpec{i.n,
                               0,
                               0,
                               {{ParamFactor::Kind::one_minus_aq, i.r + i.d * t1},
                                {ParamFactor::Kind::a_minus_q, i.d - i.r + i.d * t2}}};
        };
        add_entry(std::move(e));
    }
    {
        Entry e;
        e.id = "CONJ7";
        e.kind = Kind::conjecture;
        e.statement = conv_stmt(
            "(-1)^k[4k+1](q;q^2)_k^4(q^2;q^4)_k q^k/((q^2;q^2)_k^4(q^4;q^4)_k)",
            "[n]^2(q^2;q^4)_m^4/(q^4;q^4)_m^4 (mod [n]^2Phi_n^2) for n=1 mod 4; 0 (mod [n]^2Phi_n^4) for n=3 mod 4",
            "case-split");
        e.predicate_desc = "odd n >= 3";
        e.modulus_desc = "[n]^2Phi_n^2 (n=1 mod 4) / [n]^2Phi_n^4 (n=3 mod 4)";
        e.pred = odd_ge3;
        e.term = [](const Inst& i, long k, const ParamPlan& p, const CheckOptions&) {
            return thm7_term(i, k, p);
        };
        e.rhs = [](const Inst& i, const ParamPlan&, const CheckOptions&) {
            if (i.n % 4 == 3) return ARat();
            Factored f = even_odd_poch_ratio((i.n - 1) / 4, 4);
            f.mul(scalar_qint(Rat(1), 0, i.n, 2));
            return arat(f);
        };
        e.modulus = [](const Inst& i) {
            return i.n % 4 == 1 ? mod_bp(i.n, 2, 2) : mod_bp(i.n, 2, 4);
        };
        add_entry(std::move(e));
    }
    add_entry(simple_conv(
        "CONJ8", Kind::conjecture, "[4k+1](q;q^2)_k^6 q^k/(q^2;q^2)_k^6",
        "q^{1-n}([n]^2 + (n^2-1)(1-q)^2/12 [n]^4)(sum_{k<=(n-1)/2}(q;q^2)_k^4 q^{2k}/(q^2;q^2)_k^4)^2",
        "[n]^2Phi_n^3", odd_ge3, "odd n >= 3", thm8_term,
        [](const Inst& i, const ParamPlan&, const CheckOptions&) {
            Factored f2 = scalar_qint(Rat(i.n * i.n - 1, 12), 1 - i.n, i.n, 4);
            f2.mul_atom(Atom{Rat(1), 0, 1}, 2);
            QRat bracket = add(QRat::from_factored(scalar_qint(Rat(1), 1 - i.n, i.n, 2)),
                               QRat::from_factored(f2));
            QRat inner = fourth_power_tail_sum(i.n);
            return ARat(mul(bracket, mul(inner, inner)));
        },
        [](const Inst& i) { return mod_bp(i.n, 2, 3); }));

    return R;
}

}  // namespace

const std::vector<Entry>& catalog_entries() {
    static const std::vector<Entry> R = build_registry();
    return R;
}

}  // namespace qcong
