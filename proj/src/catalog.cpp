#include "qcong/catalog.hpp"

#include <chrono>
#include <sstream>

#include "qcong/padic.hpp"

namespace qcong {

const char* to_string(Kind k) {
    switch (k) {
        case Kind::theorem: return "theorem";
        case Kind::parametric_theorem: return "parametric-theorem";
        case Kind::lemma_identity: return "lemma-identity";
        case Kind::background: return "background";
        case Kind::conjecture: return "conjecture";
    }
    return "?";
}

const Entry* find_entry(const std::string& id) {
    for (const Entry& e : catalog_entries())
        if (e.id == id) return &e;
    return nullptr;
}

struct unknown_entry_error : arith_error {
    explicit unknown_entry_error(const std::string& id) : arith_error("unknown id: " + id) {}
};

namespace {

const Entry& require_entry(const std::string& id) {
    const Entry* e = find_entry(id);
    if (!e) throw unknown_entry_error(id);
    return *e;
}

ParamPlan symbolic_plan(Var symb) {
    ParamPlan p;
    if (symb == Var::b)
        p.b = ParamPlan::Mode::symbolic;
    else if (symb == Var::a)
        p.a = ParamPlan::Mode::symbolic;
    return p;
}

// Substituting one parameter leaves the other symbolic when the entry uses it.
ParamPlan subst_plan(const Entry& e, const ParamFactor& pf, long se) {
    ParamPlan p;
    if (pf.on_b) {
        p.b = ParamPlan::Mode::qpow;
        p.b_exp = se;
        p.a = ParamPlan::Mode::symbolic;
    } else {
        p.a = ParamPlan::Mode::qpow;
        p.a_exp = se;
        if (e.uses_b) p.b = ParamPlan::Mode::symbolic;
    }
    return p;
}

ARat mutate_q(const ARat& r) {
    if (r.is_zero()) return ARat(BiPoly(QLaurent(QPoly::one(), 1)));  // 0 mutates to q
    return ARat(r.num().shifted_q(1), r.den_factors());
}

long upper_k(const Entry& e, const Inst& inst) {
    return e.upper == Upper::half ? (inst.n - 1) / 2 : inst.n - 1;
}

std::vector<Factored> build_terms(const Entry& e, const Inst& inst, const ParamPlan& plan,
                                  const CheckOptions& opts) {
    const long kmax = upper_k(e, inst);
    std::vector<Factored> ts;
    ts.reserve(static_cast<std::size_t>(kmax) + 1);
    for (long k = 0; k <= kmax; ++k) ts.push_back(e.term(inst, k, plan, opts));
    return ts;
}

QRat sum_q(const std::vector<Factored>& ts, SumShape shape, const QReducer* R = nullptr) {
    std::vector<QRat> vals;
    vals.reserve(ts.size());
    for (const Factored& t : ts) vals.push_back(QRat::from_factored(t, R));
    return shape == SumShape::convolution ? conv_sum(vals, R) : sum_terms(vals, R);
}

ARat sum_a(const std::vector<Factored>& ts, SumShape shape, const QReducer* R = nullptr) {
    std::vector<ARat> vals;
    vals.reserve(ts.size());
    for (const Factored& t : ts) vals.push_back(ARat::from_factored(t, R));
    return shape == SumShape::convolution ? conv_sum(vals, R) : sum_terms(vals, R);
}

QRat sum_q_residues(const std::vector<Factored>& ts, SumShape shape, const ModRing& ring) {
    std::vector<QRat> vals;
    vals.reserve(ts.size());
    for (const Factored& t : ts) vals.push_back(residue_q(t, ring));
    return shape == SumShape::convolution ? conv_sum(vals, &ring.red) : sum_terms(vals, &ring.red);
}

ARat sum_a_residues(const std::vector<Factored>& ts, SumShape shape, const ModRing& ring) {
    std::vector<ARat> vals;
    vals.reserve(ts.size());
    for (const Factored& t : ts) vals.push_back(residue_a(t, ring));
    return shape == SumShape::convolution ? conv_sum(vals, &ring.red) : sum_terms(vals, &ring.red);
}

using Legs = std::vector<std::pair<std::string, FactorResult>>;

Verdict fold_legs(const Legs& legs, Strategy st) {
    Verdict v;
    v.status = Status::pass;
    v.strategy = st;
    std::ostringstream os;
    for (const auto& [name, r] : legs) {
        if (r.status == Status::error) {
            if (v.status != Status::error) os.str("");
            v.status = Status::error;
            os << name << ": " << r.detail << "; ";
        } else if (r.status == Status::fail && v.status == Status::pass) {
            v.status = Status::fail;
            os << name << ": " << r.detail << "; ";
        }
    }
    v.detail = os.str();
    return v;
}

// Runs the cyclotomic part of a task: lhs terms + rhs under one plan,
// against a list of prime-power factors, exact or modular.
Legs cyc_legs(const Entry& e, const Inst& inst, const ParamPlan& plan,
              const std::vector<CycFactor>& factors, SumShape shape, bool modular,
              const CheckOptions& opts, const std::string& tag, long* lhs_deg) {
    Legs out;
    if (factors.empty()) return out;
    const bool parametric =
        (plan.a == ParamPlan::Mode::symbolic) || (plan.b == ParamPlan::Mode::symbolic);
    std::vector<Factored> ts;
    try {
        ts = build_terms(e, inst, plan, opts);
    } catch (const arith_error& ex) {
        for (const CycFactor& f : factors)
            out.push_back({tag + "Phi_" + std::to_string(f.d), {Status::error, ex.what()}});
        return out;
    }
    if (!modular) {
        try {
            if (parametric) {
                ARat lhs = sum_a(ts, shape);
                ARat r = e.rhs(inst, plan, opts);
                if (opts.mutate_rhs) r = mutate_q(r);
                ARat diff = sub(lhs, r);
                if (lhs_deg && !diff.is_zero())
                    *lhs_deg = std::max(*lhs_deg, diff.num().q_hi() - diff.num().q_lo());
                for (const CycFactor& f : factors) {
                    std::ostringstream nm;
                    nm << tag << "Phi_" << f.d << "^" << f.mult;
                    out.push_back({nm.str(), factor_check_exact(diff, f.d, f.mult)});
                }
            } else {
                QRat lhs = sum_q(ts, shape);
                QRat r = e.rhs(inst, plan, opts).project_q();
                if (opts.mutate_rhs) r = QRat(r.num().shifted(1), r.den_factors());
                QRat diff = sub(lhs, r);
                if (lhs_deg && !diff.is_zero())
                    *lhs_deg = std::max(*lhs_deg, diff.num().body().degree());
                for (const CycFactor& f : factors) {
                    std::ostringstream nm;
                    nm << tag << "Phi_" << f.d << "^" << f.mult;
                    out.push_back({nm.str(), factor_check_exact(diff, f.d, f.mult)});
                }
            }
        } catch (const arith_error& ex) {
            out.push_back({tag + "exact", {Status::error, ex.what()}});
        }
        return out;
    }
    for (const CycFactor& f : factors) {
        std::ostringstream nm;
        nm << tag << "Phi_" << f.d << "^" << f.mult;
        try {
            ModRing ring(f.d, f.mult);
            if (parametric) {
                ARat lhs = sum_a_residues(ts, shape, ring);
                ARat r = e.rhs(inst, plan, opts);
                if (opts.mutate_rhs) r = mutate_q(r);
                ARat diff = sub(lhs, residue_a(r, ring), &ring.red);
                out.push_back({nm.str(), diff.is_zero() ? FactorResult{Status::pass, ""}
                                                        : FactorResult{Status::fail, "nonzero residue"}});
            } else {
                QRat lhs = sum_q_residues(ts, shape, ring);
                QRat r = e.rhs(inst, plan, opts).project_q();
                if (opts.mutate_rhs) r = QRat(r.num().shifted(1), r.den_factors());
                QRat diff = sub(lhs, residue_q(r, ring), &ring.red);
                out.push_back({nm.str(), diff.is_zero() ? FactorResult{Status::pass, ""}
                                                        : FactorResult{Status::fail, "nonzero residue"}});
            }
        } catch (const arith_error& ex) {
            out.push_back({nm.str(), {Status::error, ex.what()}});
        }
    }
    return out;
}

// Substitution legs for the parameter-linear modulus factors
// (strategy-independent: divisibility by a linear factor is exact vanishing).
Legs subst_legs(const Entry& e, const Inst& inst, const ModulusSpec& mod,
                const CheckOptions& opts) {
    Legs out;
    for (const ParamFactor& pf : mod.param) {
        const long se = pf.kind == ParamFactor::Kind::one_minus_aq ? -pf.exponent : pf.exponent;
        const char* v = pf.on_b ? "b" : "a";
        std::ostringstream nm;
        if (pf.kind == ParamFactor::Kind::one_minus_aq)
            nm << "(1-" << v << "q^" << pf.exponent << ")";
        else
            nm << "(" << v << "-q^" << pf.exponent << ")";
        try {
            ParamPlan plan = subst_plan(e, pf, se);
            const bool parametric =
                plan.a == ParamPlan::Mode::symbolic || plan.b == ParamPlan::Mode::symbolic;
            std::vector<Factored> ts = build_terms(e, inst, plan, opts);
            bool zero;
            if (parametric) {
                ARat lhs = sum_a(ts, e.shape);
                ARat r = e.rhs(inst, plan, opts);
                if (opts.mutate_rhs) r = mutate_q(r);
                zero = sub(lhs, r).is_zero();
            } else {
                QRat lhs = sum_q(ts, e.shape);
                QRat r = e.rhs(inst, plan, opts).project_q();
                if (opts.mutate_rhs) r = QRat(r.num().shifted(1), r.den_factors());
                zero = sub(lhs, r).is_zero();
            }
            out.push_back({nm.str(), zero ? FactorResult{Status::pass, ""}
                                          : FactorResult{Status::fail, "nonzero at substitution"}});
        } catch (const arith_error& ex) {
            out.push_back({nm.str(), {Status::error, ex.what()}});
        }
    }
    return out;
}

bool legs_agree(const Legs& x, const Legs& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i].second.status != y[i].second.status) return false;
    return true;
}

Verdict run_generic(const Entry& e, const Inst& inst, Strategy st, const CheckOptions& opts) {
    const ModulusSpec mod = e.modulus(inst);
    long lhs_deg = 0;

    Legs common = subst_legs(e, inst, mod, opts);

    std::vector<CycFactor> cycs;
    if (mod.bracket_power > 0 || mod.phi_power > 0) cycs = modulus_cyclotomic_factors(mod);
    std::vector<CycFactor> spec_cycs;
    ModulusSpec smod;
    if (e.specialized_modulus) {
        smod = e.specialized_modulus(inst);
        spec_cycs = modulus_cyclotomic_factors(smod);
    }
    const ParamPlan main_plan = e.cyc_plan ? e.cyc_plan(inst) : symbolic_plan(e.symb);
    const ParamPlan ground = ParamPlan::ground();

    auto run_mode = [&](bool modular) {
        Legs legs = common;
        Legs cl = cyc_legs(e, inst, main_plan, cycs, e.shape, modular, opts, "", &lhs_deg);
        legs.insert(legs.end(), cl.begin(), cl.end());
        if (!spec_cycs.empty()) {
            Legs sl = cyc_legs(e, inst, ground, spec_cycs, e.shape, modular, opts, "a=1 ", &lhs_deg);
            legs.insert(legs.end(), sl.begin(), sl.end());
        }
        return legs;
    };

    Verdict v;
    if (st == Strategy::exact) {
        v = fold_legs(run_mode(false), Strategy::exact);
    } else if (st == Strategy::modular) {
        v = fold_legs(run_mode(true), Strategy::modular);
    } else {
        Legs le = run_mode(false);
        Legs lm = run_mode(true);
        if (!legs_agree(le, lm)) {
            v.status = Status::error;
            v.detail = "strategy mismatch between exact and modular pipelines";
            v.strategy = Strategy::both;
            return v;
        }
        v = fold_legs(le, Strategy::both);
    }
    v.lhs_degree = lhs_deg;
    return v;
}

}  // namespace

Verdict check_entry(const Entry& e, const Inst& inst, Strategy strategy, const CheckOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    if (!e.pred(inst)) {
        v.status = Status::inapplicable;
        v.detail = e.predicate_desc;
        v.strategy = strategy;
    } else {
        try {
            v = e.custom ? e.custom(e, inst, strategy, opts) : run_generic(e, inst, strategy, opts);
        } catch (const arith_error& ex) {
            v.status = Status::error;
            v.detail = ex.what();
            v.strategy = strategy;
        }
    }
    v.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    return v;
}

Verdict check_entry(const std::string& id, const Inst& inst, Strategy strategy,
                    const CheckOptions& opts) {
    return check_entry(require_entry(id), inst, strategy, opts);
}

Factored term_factored(const Entry& e, const Inst& inst, long k, const ParamPlan& plan,
                       const CheckOptions& opts) {
    if (!e.term) throw arith_error(e.id + ": no term generator");
    return e.term(inst, k, plan, opts);
}

QRat term(const std::string& id, long n, long k) {
    const Entry& e = require_entry(id);
    return QRat::from_factored(term_factored(e, Inst{n}, k, ParamPlan::ground()));
}

ARat param_term(const std::string& id, long n, long k) {
    const Entry& e = require_entry(id);
    return ARat::from_factored(term_factored(e, Inst{n}, k, ParamPlan::symbolic_a()));
}

QRat rhs(const std::string& id, long n, const CheckOptions& opts) {
    const Entry& e = require_entry(id);
    return e.rhs(Inst{n}, ParamPlan::ground(), opts).project_q();
}

ARat param_rhs(const std::string& id, long n, const CheckOptions& opts) {
    const Entry& e = require_entry(id);
    return e.rhs(Inst{n}, ParamPlan::symbolic_a(), opts);
}

bool q1_cross_check(const std::string& id, long p, long k) {
    if (id != "THM1" && id != "THM2") throw arith_error("q1_cross_check: id must be THM1 or THM2");
    const Rat q1 = eval_limit_q1(term(id, p, k));
    const mpz_class cb = central_binomial(k);
    mpz_class num = mpz_class(3 * k + 1) * cb * cb * cb;
    Rat expect = Rat(num);
    if (id == "THM1")
        expect /= Rat(mpz_class(16)).pow(k);
    else
        expect /= Rat(mpz_class(-8)).pow(k);
    return q1 == expect;
}

std::string registry_manifest() {
    std::ostringstream os;
    os << "id | kind | predicate | modulus | statement\n";
    for (const Entry& e : catalog_entries()) {
        os << e.id << " | " << to_string(e.kind) << " | " << e.predicate_desc << " | "
           << e.modulus_desc << " | " << e.statement << "\n";
    }
    return os.str();
}

}  // namespace qcong
