#include "qcong/congruence.hpp"

#include <sstream>

namespace qcong {

const char* to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::inapplicable: return "inapplicable";
        case Status::error: return "error";
    }
    return "?";
}

const char* to_string(Strategy s) {
    switch (s) {
        case Strategy::exact: return "exact";
        case Strategy::modular: return "modular";
        case Strategy::both: return "both";
    }
    return "?";
}

QPoly reduce_mod(const QLaurent& f, const QPoly& M) {
    if (M.is_constant()) throw arith_error("reduce_mod: constant modulus");
    QReducer R(M);
    return R.reduce(f).to_qpoly();
}

QPoly inv_mod(const QPoly& f, const QPoly& M) {
    ExtGcd e = qpoly_ext_gcd(f, M);
    if (!e.d.is_one()) throw not_invertible_error();
    return qpoly_divrem(e.u, M).second;
}

namespace {

template <class V>
V conv_sum_impl(const std::vector<V>& c, const QReducer* R) {
    if (c.empty()) throw arith_error("conv_sum: empty term list");
    const std::size_t n = c.size();
    std::vector<V> prefix(n);
    prefix[0] = c[0];
    for (std::size_t k = 1; k < n; ++k) prefix[k] = add(prefix[k - 1], c[k], R);
    V total;
    for (std::size_t j = 0; j < n; ++j) total = add(total, mul(c[j], prefix[n - 1 - j], R), R);
    return total;
}

template <class V>
V sum_terms_impl(const std::vector<V>& c, const QReducer* R) {
    V total;
    for (const V& t : c) total = add(total, t, R);
    return total;
}

}  // namespace

QRat conv_sum(const std::vector<QRat>& terms, const QReducer* R) { return conv_sum_impl(terms, R); }
ARat conv_sum(const std::vector<ARat>& terms, const QReducer* R) { return conv_sum_impl(terms, R); }
QRat sum_terms(const std::vector<QRat>& terms, const QReducer* R) { return sum_terms_impl(terms, R); }
ARat sum_terms(const std::vector<ARat>& terms, const QReducer* R) { return sum_terms_impl(terms, R); }

ModRing::ModRing(long d_, int mult_)
    : d(d_), mult(mult_), phi(cyclotomic(d_)), red(cyclotomic(d_).pow(static_cast<unsigned long>(mult_))) {}

namespace {

// expand an a-free atom and strip its cyclotomic content
QLaurent stripped_atom_q(const Atom& at, const QPoly& phi, long content) {
    QLaurent e = at.expand_q();
    QPoly body = e.body();
    for (long i = 0; i < content; ++i) body = qpoly_divexact(body, phi);
    return QLaurent(std::move(body), e.shift());
}

}  // namespace

QRat residue_q(const Factored& t, const ModRing& ring) {
    if (t.is_zero()) return QRat();
    if (!t.a_free()) throw arith_error("residue_q: parametric term");
    const long e = t.phi_multiplicity_num(ring.phi) - t.phi_multiplicity_den(ring.phi);
    if (e < 0) throw meets_denominator_error();
    if (e >= ring.mult) return QRat();
    QPoly num = ring.red.reduce(QLaurent(QPoly(t.scalar), t.qshift)).to_qpoly();
    QPoly den = QPoly::one();
    for (const auto& [at, exp] : t.atoms) {
        const long c = atom_multiplicity(at, ring.phi);
        const QPoly ar = ring.red.reduce(stripped_atom_q(at, ring.phi, c)).to_qpoly();
        QPoly& dst = exp > 0 ? num : den;
        for (int i = 0; i < (exp > 0 ? exp : -exp); ++i) dst = ring.red.reduce(QPoly::mul(dst, ar));
    }
    QPoly res = ring.red.reduce(QPoly::mul(num, inv_mod(den, ring.red.modulus())));
    if (e > 0) res = ring.red.reduce(QPoly::mul(res, ring.red.pow_mod(ring.phi, static_cast<unsigned long>(e))));
    return QRat(QLaurent(std::move(res)));
}

QRat residue_q(const QRat& v, const ModRing& ring) {
    if (v.is_zero()) return QRat();
    const long e_den = v.den_factors().phi_multiplicity(ring.phi);
    QPoly num = v.num().body();
    for (long i = 0; i < e_den; ++i) {
        auto [q, r] = qpoly_divrem(num, ring.phi);
        if (!r.is_zero()) throw meets_denominator_error();
        num = std::move(q);
    }
    QPoly den = QPoly::one();
    for (const auto& [at, m] : v.den_factors().factors()) {
        const long c = atom_multiplicity(at, ring.phi);
        const QPoly ar = ring.red.reduce(stripped_atom_q(at, ring.phi, c)).to_qpoly();
        for (int i = 0; i < m; ++i) den = ring.red.reduce(QPoly::mul(den, ar));
    }
    QPoly res = ring.red.reduce(QLaurent(std::move(num), v.num().shift())).to_qpoly();
    res = ring.red.reduce(QPoly::mul(res, inv_mod(den, ring.red.modulus())));
    return QRat(QLaurent(std::move(res)));
}

ARat residue_a(const Factored& t, const ModRing& ring) {
    if (t.is_zero()) return ARat();
    const long e = t.phi_multiplicity_num(ring.phi) - t.phi_multiplicity_den(ring.phi);
    if (e < 0) throw meets_denominator_error();
    if (e >= ring.mult) return ARat();
    BiPoly num = BiPoly::a_monomial(ring.red.reduce(QLaurent(QPoly(t.scalar), t.qshift)), t.ashift);
    QPoly den_afree = QPoly::one();
    FactorMap aden;
    for (const auto& [at, exp] : t.atoms) {
        if (at.a_free()) {
            const long c = atom_multiplicity(at, ring.phi);
            const QPoly ar = ring.red.reduce(stripped_atom_q(at, ring.phi, c)).to_qpoly();
            if (exp > 0) {
                for (int i = 0; i < exp; ++i) num = ring.red.reduce(num.scaled_q(QLaurent(ar)));
            } else {
                for (int i = 0; i < -exp; ++i) den_afree = ring.red.reduce(QPoly::mul(den_afree, ar));
            }
        } else {
            if (exp > 0) {
                const BiPoly ar = at.expand_ab();
                for (int i = 0; i < exp; ++i) num = ring.red.reduce(BiPoly::mul(num, ar));
            } else {
                aden.mul_atom(at, -exp);
            }
        }
    }
    num = ring.red.reduce(num.scaled_q(QLaurent(inv_mod(den_afree, ring.red.modulus()))));
    if (e > 0)
        num = ring.red.reduce(num.scaled_q(QLaurent(ring.red.pow_mod(ring.phi, static_cast<unsigned long>(e)))));
    return ARat(std::move(num), std::move(aden));
}

ARat residue_a(const ARat& v, const ModRing& ring) {
    if (v.is_zero()) return ARat();
    QPoly den_afree = QPoly::one();
    FactorMap aden;
    long e_den = 0;
    for (const auto& [at, m] : v.den_factors().factors()) {
        if (at.a_free()) {
            const long c = atom_multiplicity(at, ring.phi);
            e_den += c * m;
            const QPoly ar = ring.red.reduce(stripped_atom_q(at, ring.phi, c)).to_qpoly();
            for (int i = 0; i < m; ++i) den_afree = ring.red.reduce(QPoly::mul(den_afree, ar));
        } else {
            aden.mul_atom(at, m);
        }
    }
    std::vector<QLaurent> coeffs = v.num().acoeffs();
    for (auto& cc : coeffs) {
        if (cc.is_zero()) continue;
        QPoly body = cc.body();
        for (long i = 0; i < e_den; ++i) {
            auto [q, r] = qpoly_divrem(body, ring.phi);
            if (!r.is_zero()) throw meets_denominator_error();
            body = std::move(q);
        }
        cc = QLaurent(std::move(body), cc.shift());
    }
    BiPoly num = ring.red.reduce(BiPoly(std::move(coeffs), v.num().ashift()));
    num = ring.red.reduce(num.scaled_q(QLaurent(inv_mod(den_afree, ring.red.modulus()))));
    return ARat(std::move(num), std::move(aden));
}

FactorResult factor_check_exact(const QRat& diff, long d, int mult) {
    if (diff.is_zero()) return {Status::pass, ""};
    const QPoly& phi = cyclotomic(d);
    const long e_den = diff.den_factors().phi_multiplicity(phi);
    const long e_num = qpoly_multiplicity(diff.num().body(), phi);
    if (e_num >= e_den + mult) return {Status::pass, ""};
    std::ostringstream os;
    if (e_num < e_den) {
        os << "modulus meets denominator at Phi_" << d;
        return {Status::error, os.str()};
    }
    os << "Phi_" << d << "^" << mult << " divides numerator only " << (e_num - e_den)
       << " times (numerator degree " << diff.num().body().degree() << ")";
    return {Status::fail, os.str()};
}

FactorResult factor_check_exact(const ARat& diff, long d, int mult) {
    if (diff.is_zero()) return {Status::pass, ""};
    const QPoly& phi = cyclotomic(d);
    const long e_den = diff.den_factors().phi_multiplicity(phi);
    long min_mult = -1;
    for (const QLaurent& c : diff.num().acoeffs()) {
        if (c.is_zero()) continue;
        const long m = qpoly_multiplicity(c.body(), phi);
        if (min_mult < 0 || m < min_mult) min_mult = m;
        if (min_mult < e_den) break;
    }
    if (min_mult < 0) return {Status::pass, ""};
    if (min_mult >= e_den + mult) return {Status::pass, ""};
    std::ostringstream os;
    if (min_mult < e_den) {
        os << "modulus meets denominator at Phi_" << d;
        return {Status::error, os.str()};
    }
    os << "Phi_" << d << "^" << mult << " divides some a-coefficient only " << (min_mult - e_den)
       << " times";
    return {Status::fail, os.str()};
}

Verdict check_rat_congruence(const QRat& lhs, const QRat& rhs, const QPoly& modulus) {
    Verdict v;
    v.strategy = Strategy::exact;
    if (modulus.is_zero() || modulus.is_constant()) {
        v.status = Status::error;
        v.detail = "modulus must be nonconstant";
        return v;
    }
    QRat diff = sub(lhs, rhs);
    if (diff.is_zero()) {
        v.status = Status::pass;
        return v;
    }
    QPoly u = diff.num().body();
    QPoly w = diff.den().body();  // shift discarded: q is a unit mod any usable M
    v.lhs_degree = u.degree();
    QPoly g = qpoly_gcd(w, modulus);
    if (!g.is_one()) {
        // reduce u/v by gcd(u, v) once, then re-test
        QPoly uw = qpoly_gcd(u, w);
        if (!uw.is_one()) {
            u = qpoly_divexact(u, uw);
            w = qpoly_divexact(w, uw);
            g = qpoly_gcd(w, modulus);
        }
        if (!g.is_one()) {
            v.status = Status::error;
            v.detail = "modulus meets denominator";
            return v;
        }
    }
    const QPoly rem = qpoly_divrem(u, modulus).second;
    if (rem.is_zero()) {
        v.status = Status::pass;
    } else {
        v.status = Status::fail;
        std::ostringstream os;
        os << "nonzero remainder of degree " << rem.degree();
        v.detail = os.str();
    }
    return v;
}

namespace {

Verdict fold_factors(const std::vector<std::pair<std::string, FactorResult>>& results) {
    Verdict v;
    v.status = Status::pass;
    std::ostringstream os;
    for (const auto& [name, r] : results) {
        if (r.status == Status::error) {
            v.status = Status::error;
            os << name << ": " << r.detail << "; ";
        } else if (r.status == Status::fail && v.status != Status::error) {
            v.status = Status::fail;
            os << name << ": " << r.detail << "; ";
        }
    }
    v.detail = os.str();
    return v;
}

}  // namespace

Verdict check_task(const CongruenceTask& task, Strategy strategy) {
    if (task.parametric) {
        Verdict v = check_param_congruence(task.lhs_a, task.rhs_a, task.modulus);
        v.strategy = strategy;
        return v;
    }
    auto run = [&](bool modular) -> Verdict {
        std::vector<std::pair<std::string, FactorResult>> results;
        QRat diff;
        if (!modular) diff = sub(task.lhs_q, task.rhs_q);
        for (const CycFactor& f : modulus_cyclotomic_factors(task.modulus)) {
            std::ostringstream name;
            name << "Phi_" << f.d << "^" << f.mult;
            try {
                if (modular) {
                    ModRing ring(f.d, f.mult);
                    QRat d2 = sub(residue_q(task.lhs_q, ring), residue_q(task.rhs_q, ring), &ring.red);
                    results.push_back({name.str(), d2.is_zero()
                                                       ? FactorResult{Status::pass, ""}
                                                       : FactorResult{Status::fail, "nonzero residue"}});
                } else {
                    results.push_back({name.str(), factor_check_exact(diff, f.d, f.mult)});
                }
            } catch (const arith_error& e) {
                results.push_back({name.str(), {Status::error, e.what()}});
            }
        }
        Verdict v = fold_factors(results);
        v.strategy = modular ? Strategy::modular : Strategy::exact;
        if (!modular && !diff.is_zero()) v.lhs_degree = diff.num().body().degree();
        return v;
    };
    switch (strategy) {
        case Strategy::exact: return run(false);
        case Strategy::modular: return run(true);
        case Strategy::both: {
            Verdict ve = run(false);
            Verdict vm = run(true);
            if (ve.status != vm.status) {
                Verdict v;
                v.status = Status::error;
                v.strategy = Strategy::both;
                v.detail = std::string("strategy mismatch: exact=") + to_string(ve.status) +
                           " modular=" + to_string(vm.status);
                return v;
            }
            ve.strategy = Strategy::both;
            return ve;
        }
    }
    throw arith_error("check_task: bad strategy");
}

Verdict check_param_congruence(const ARat& lhs, const ARat& rhs, const ModulusSpec& modulus) {
    std::vector<std::pair<std::string, FactorResult>> results;
    ARat diff = sub(lhs, rhs);
    for (const ParamFactor& pf : modulus.param) {
        const long e = pf.kind == ParamFactor::Kind::one_minus_aq ? -pf.exponent : pf.exponent;
        std::ostringstream name;
        name << (pf.kind == ParamFactor::Kind::one_minus_aq ? "(1-aq^" : "(a-q^") << pf.exponent << ")";
        try {
            QRat s = bipoly_subst_a(diff, e);
            results.push_back({name.str(), s.is_zero() ? FactorResult{Status::pass, ""}
                                                       : FactorResult{Status::fail, "nonzero at substitution"}});
        } catch (const arith_error& ex) {
            results.push_back({name.str(), {Status::error, ex.what()}});
        }
    }
    if (modulus.bracket_power > 0 || modulus.phi_power > 0) {
        for (const CycFactor& f : modulus_cyclotomic_factors(modulus)) {
            std::ostringstream name;
            name << "Phi_" << f.d << "^" << f.mult;
            try {
                results.push_back({name.str(), factor_check_exact(diff, f.d, f.mult)});
            } catch (const arith_error& ex) {
                results.push_back({name.str(), {Status::error, ex.what()}});
            }
        }
    }
    Verdict v = fold_factors(results);
    v.strategy = Strategy::exact;
    return v;
}

bool zero_lemma_check(const std::vector<QRat>& seq, long n) {
    if (static_cast<long>(seq.size()) != n || n < 1 || n % 2 == 0)
        throw hypothesis_error("zero_lemma_check: sequence length must equal odd n");
    const long h = (n - 1) / 2;
    for (long k = 0; k <= h; ++k) {
        if (!seq[static_cast<std::size_t>(k)].equals(-seq[static_cast<std::size_t>(h - k)])) {
            std::ostringstream os;
            os << "antisymmetry hypothesis fails at index " << k;
            throw hypothesis_error(os.str());
        }
    }
    for (long k = h + 1; k <= n - 1; ++k) {
        const long mirror = (3 * n - 1) / 2 - k;
        if (!seq[static_cast<std::size_t>(k)].equals(-seq[static_cast<std::size_t>(mirror)])) {
            std::ostringstream os;
            os << "antisymmetry hypothesis fails at index " << k;
            throw hypothesis_error(os.str());
        }
    }
    // direct pair loop, independent of the prefix-sum path in conv_sum
    QRat total;
    for (long k = 0; k < n; ++k)
        for (long i = 0; i <= k; ++i)
            total = add(total, mul(seq[static_cast<std::size_t>(i)], seq[static_cast<std::size_t>(k - i)]));
    return total.is_zero();
}

bool check_identity(const QRat& lhs, const QRat& rhs) { return lhs.equals(rhs); }
bool check_identity(const ARat& lhs, const ARat& rhs) { return lhs.equals(rhs); }

}  // namespace qcong
