#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qcong/congruence.hpp"

namespace qcong {

enum class Kind { theorem, parametric_theorem, lemma_identity, background, conjecture };
enum class Upper { n_minus_1, half };
enum class Var { none, a, b };

const char* to_string(Kind k);

/// One check instance; d, r only for the two-parameter family.
struct Inst {
    long n = 0;
    long d = 0;
    long r = 0;
};

/// How the two statement parameters are realized when a term or right-hand
/// side is built: as 1, as the symbolic variable, or as a fixed power of q.
struct ParamPlan {
    enum class Mode { one, symbolic, qpow };
    Mode a = Mode::one;
    long a_exp = 0;
    Mode b = Mode::one;
    long b_exp = 0;

    static ParamPlan ground() { return {}; }
    static ParamPlan symbolic_a() { return {Mode::symbolic, 0, Mode::one, 0}; }
    static ParamPlan a_at(long e) { return {Mode::qpow, e, Mode::one, 0}; }
};

struct CheckOptions {
    bool mutate_rhs = false;      // multiply the RHS by q (mutation sensitivity tests)
    bool h_sum_from_zero = false; // start the q^{4k-2}/[4k-2]^2 correction sums at k=0
};

struct Entry {
    std::string id;
    Kind kind = Kind::theorem;
    std::string statement;
    std::string predicate_desc;
    std::string modulus_desc;
    std::function<bool(const Inst&)> pred;
    SumShape shape = SumShape::convolution;
    Upper upper = Upper::n_minus_1;
    Var symb = Var::none;    // symbolic variable of the cyclotomic legs
    bool uses_b = false;     // statement carries the second parameter b
    bool uses_dr = false;
    std::string specializes_to;  // id whose term this one's term becomes at a=b=1
    std::function<Factored(const Inst&, long, const ParamPlan&, const CheckOptions&)> term;
    std::function<ARat(const Inst&, const ParamPlan&, const CheckOptions&)> rhs;
    std::function<ModulusSpec(const Inst&)> modulus;
    std::function<ModulusSpec(const Inst&)> specialized_modulus;  // extra a=1 leg
    std::function<ParamPlan(const Inst&)> cyc_plan;  // plan of the cyclotomic legs (default: symb var symbolic)
    std::function<Verdict(const Entry&, const Inst&, Strategy, const CheckOptions&)> custom;
};

const std::vector<Entry>& catalog_entries();
const Entry* find_entry(const std::string& id);

/// LHS term / parametric term / right-hand sides of a registry entry.
QRat term(const std::string& id, long n, long k);
ARat param_term(const std::string& id, long n, long k);
QRat rhs(const std::string& id, long n, const CheckOptions& opts = {});
ARat param_rhs(const std::string& id, long n, const CheckOptions& opts = {});
Factored term_factored(const Entry& e, const Inst& inst, long k, const ParamPlan& plan,
                       const CheckOptions& opts = {});

/// Run one catalog entry at one instance.
Verdict check_entry(const std::string& id, const Inst& inst, Strategy strategy,
                    const CheckOptions& opts = {});
Verdict check_entry(const Entry& e, const Inst& inst, Strategy strategy,
                    const CheckOptions& opts = {});

/// q -> 1 cross-check of the THM1/THM2 terms against the integer-side terms.
bool q1_cross_check(const std::string& id, long p, long k);

/// Human-readable registry table (id, kind, predicate, modulus, statement).
std::string registry_manifest();

}  // namespace qcong
