#include "qcong/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qcong {

namespace {

struct Job {
    const Entry* entry = nullptr;  // q-side
    std::string integer_id;       // integer-side
    Inst inst;
    long p = 0, r = 0;
    std::string tag;
};

bool row_less(const ReportRow& x, const ReportRow& y) {
    if (x.id != y.id) return x.id < y.id;
    if (x.n != y.n) return x.n < y.n;
    if (x.d != y.d) return x.d < y.d;
    if (x.r != y.r) return x.r < y.r;
    return x.p < y.p;
}

std::vector<long> odd_range(long begin, long end, long step) {
    std::vector<long> ns;
    if (step < 1) step = 1;
    for (long n = begin; n <= end; n += step)
        if (n % 2 == 1) ns.push_back(n);
    return ns;
}

std::string describe_config(const RunConfig& c, const std::string& command) {
    std::ostringstream os;
    os << command << " n=" << c.n_begin << ".." << c.n_end << " strategy=" << to_string(c.strategy)
       << " jobs=" << c.jobs;
    if (!c.primes.empty()) {
        os << " primes=";
        for (std::size_t i = 0; i < c.primes.size(); ++i) os << (i ? "," : "") << c.primes[i];
        os << " r=";
        for (std::size_t i = 0; i < c.rs.size(); ++i) os << (i ? "," : "") << c.rs[i];
    }
    return os.str();
}

std::vector<Job> expand_jobs(const RunConfig& c, bool conjectures_only) {
    std::vector<Job> jobs;
    const std::vector<long> ns = odd_range(c.n_begin, c.n_end, c.n_step);

    std::vector<const Entry*> q_entries;
    std::vector<std::string> int_ids;
    if (c.ids.empty()) {
        for (const Entry& e : catalog_entries()) {
            if (!conjectures_only || e.kind == Kind::conjecture) q_entries.push_back(&e);
        }
        for (const std::string& id : integer_entry_ids()) {
            if (!conjectures_only || integer_entry_is_conjecture(id)) int_ids.push_back(id);
        }
    } else {
        for (const std::string& id : c.ids) {
            if (const Entry* e = find_entry(id))
                q_entries.push_back(e);
            else if (is_integer_entry(id))
                int_ids.push_back(id);
            else
                throw usage_error("unknown id: " + id);
        }
    }

    for (const Entry* e : q_entries) {
        const std::string tag = e->kind == Kind::conjecture ? "conjecture-evidence" : "";
        for (long n : ns) {
            if (e->uses_dr) {
                for (long d = 2; d <= c.d_max; ++d) {
                    if (std::gcd(d, n) != 1) continue;
                    for (long r = 1; r < d; ++r)
                        jobs.push_back(Job{e, "", Inst{n, d, r}, 0, 0, tag});
                }
            } else {
                jobs.push_back(Job{e, "", Inst{n}, 0, 0, tag});
            }
        }
    }
    for (const std::string& id : int_ids) {
        const std::string tag = integer_entry_is_conjecture(id) ? "conjecture-evidence" : "";
        for (long p : c.primes)
            for (long r : c.rs) jobs.push_back(Job{nullptr, id, Inst{}, p, r, tag});
    }
    return jobs;
}

Report run_jobs(const RunConfig& c, std::vector<Job> jobs, const std::string& command) {
    const auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.config_desc = describe_config(c, command);
    CheckOptions opts;
    opts.h_sum_from_zero = c.h_sum_from_zero;

    std::vector<ReportRow> rows(jobs.size());
    std::vector<char> done(jobs.size(), 0);
    std::atomic<bool> stop{false};

    const long count = static_cast<long>(jobs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(c.jobs > 0 ? c.jobs : 1)
#endif
    for (long idx = 0; idx < count; ++idx) {
        if (stop.load(std::memory_order_relaxed)) continue;
        const Job& job = jobs[static_cast<std::size_t>(idx)];
        ReportRow row;
        row.tag = job.tag;
        if (job.entry) {
            row.id = job.entry->id;
            row.n = job.inst.n;
            row.d = job.inst.d;
            row.r = job.inst.r;
            row.verdict = check_entry(*job.entry, job.inst, c.strategy, opts);
        } else {
            row.id = job.integer_id;
            row.integer_side = true;
            row.p = job.p;
            row.r = job.r;
            row.verdict = check_integer_task(job.integer_id, job.p, job.r);
        }
        if (c.fail_fast &&
            (row.verdict.status == Status::fail || row.verdict.status == Status::error))
            stop.store(true, std::memory_order_relaxed);
        rows[static_cast<std::size_t>(idx)] = std::move(row);
        done[static_cast<std::size_t>(idx)] = 1;
    }

    for (std::size_t i = 0; i < rows.size(); ++i)
        if (done[i]) rep.rows.push_back(std::move(rows[i]));
    std::sort(rep.rows.begin(), rep.rows.end(), row_less);

    for (ReportRow& row : rep.rows) {
        switch (row.verdict.status) {
            case Status::pass: ++rep.pass; break;
            case Status::fail: ++rep.fail; break;
            case Status::inapplicable: ++rep.inapplicable; break;
            case Status::error: ++rep.error; break;
        }
        if (c.stable_output) row.verdict.elapsed_ms = 0;
    }
    rep.total_elapsed_ms = c.stable_output
                               ? 0
                               : std::chrono::duration_cast<std::chrono::milliseconds>(
                                     std::chrono::steady_clock::now() - t0)
                                     .count();
    return rep;
}

}  // namespace

Report run_verify(const RunConfig& config) {
    return run_jobs(config, expand_jobs(config, false), "verify");
}

Report run_scan_conjectures(const RunConfig& config) {
    return run_jobs(config, expand_jobs(config, true), "scan");
}

Report run_padic(const RunConfig& config) {
    RunConfig c = config;
    if (c.ids.empty()) c.ids = integer_entry_ids();
    for (const std::string& id : c.ids)
        if (!is_integer_entry(id)) throw usage_error("not an integer-side id: " + id);
    std::vector<Job> jobs;
    for (const std::string& id : c.ids) {
        const std::string tag = integer_entry_is_conjecture(id) ? "conjecture-evidence" : "";
        for (long p : c.primes)
            for (long r : c.rs) jobs.push_back(Job{nullptr, id, Inst{}, p, r, tag});
    }
    return run_jobs(c, std::move(jobs), "padic");
}

std::size_t cache_cyclotomics(const std::string& path, long n_max) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw usage_error("cannot write cache file: " + path);
    out << "qcongruence-cyclo-v1\n";
    std::size_t count = 0;
    for (long n = 1; n <= n_max; ++n) {
        const QPoly& phi = cyclotomic(n);
        out << n << ": ";
        for (std::size_t i = 0; i < phi.size(); ++i) {
            if (i) out << ",";
            out << phi.coeff(i).num();  // cyclotomic coefficients are integers
        }
        out << "\n";
        ++count;
    }
    return count;
}

std::size_t load_cyclotomic_cache(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot read cache file: " + path);
    std::string header;
    std::getline(in, header);
    if (header != "qcongruence-cyclo-v1") throw usage_error("bad cache header in " + path);
    std::size_t count = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto colon = line.find(':');
        if (colon == std::string::npos) throw usage_error("bad cache line: " + line);
        const long n = std::stol(line.substr(0, colon));
        std::vector<Rat> coeffs;
        std::stringstream ss(line.substr(colon + 1));
        std::string tok;
        while (std::getline(ss, tok, ',')) coeffs.push_back(Rat(mpz_class(tok)));
        seed_cyclotomic(n, QPoly(std::move(coeffs)));
        ++count;
    }
    return count;
}

namespace {

nlohmann::json params_json(const ReportRow& row) {
    nlohmann::json p;
    if (row.integer_side) {
        p["p"] = row.p;
        p["r"] = row.r;
    } else {
        p["n"] = row.n;
        if (row.d) {
            p["d"] = row.d;
            p["r"] = row.r;
        }
    }
    return p;
}

std::string row_detail(const ReportRow& row) {
    if (row.tag.empty()) return row.verdict.detail;
    if (row.verdict.detail.empty()) return row.tag;
    return row.tag + "; " + row.verdict.detail;
}

std::string params_str(const ReportRow& row) {
    std::ostringstream os;
    if (row.integer_side) {
        os << "p=" << row.p << " r=" << row.r;
    } else {
        os << "n=" << row.n;
        if (row.d) os << " d=" << row.d << " r=" << row.r;
    }
    return os.str();
}

}  // namespace

std::string report_json(const Report& r) {
    nlohmann::json j;
    j["engine_version"] = r.engine_version;
    j["config"] = r.config_desc;
    j["rows"] = nlohmann::json::array();
    for (const ReportRow& row : r.rows) {
        nlohmann::json jr;
        jr["id"] = row.id;
        jr["params"] = params_json(row);
        jr["status"] = to_string(row.verdict.status);
        jr["strategy"] = to_string(row.verdict.strategy);
        jr["lhs_degree"] = row.verdict.lhs_degree;
        jr["elapsed_ms"] = row.verdict.elapsed_ms;
        jr["detail"] = row_detail(row);
        j["rows"].push_back(std::move(jr));
    }
    j["summary"] = {{"pass", r.pass},
                    {"fail", r.fail},
                    {"inapplicable", r.inapplicable},
                    {"error", r.error}};
    return j.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    Report r;
    r.engine_version = j.at("engine_version").get<std::string>();
    r.config_desc = j.at("config").get<std::string>();
    for (const auto& jr : j.at("rows")) {
        ReportRow row;
        row.id = jr.at("id").get<std::string>();
        const auto& p = jr.at("params");
        if (p.contains("n")) {
            row.n = p.at("n").get<long>();
            if (p.contains("d")) {
                row.d = p.at("d").get<long>();
                row.r = p.at("r").get<long>();
            }
        } else {
            row.integer_side = true;
            row.p = p.at("p").get<long>();
            row.r = p.at("r").get<long>();
        }
        const std::string st = jr.at("status").get<std::string>();
        row.verdict.status = st == "pass"           ? Status::pass
                             : st == "fail"         ? Status::fail
                             : st == "inapplicable" ? Status::inapplicable
                                                    : Status::error;
        const std::string sg = jr.at("strategy").get<std::string>();
        row.verdict.strategy = sg == "exact"     ? Strategy::exact
                               : sg == "modular" ? Strategy::modular
                                                 : Strategy::both;
        row.verdict.lhs_degree = jr.at("lhs_degree").get<long>();
        row.verdict.elapsed_ms = jr.at("elapsed_ms").get<long>();
        row.verdict.detail = jr.at("detail").get<std::string>();
        switch (row.verdict.status) {
            case Status::pass: ++r.pass; break;
            case Status::fail: ++r.fail; break;
            case Status::inapplicable: ++r.inapplicable; break;
            case Status::error: ++r.error; break;
        }
        r.rows.push_back(std::move(row));
    }
    return r;
}

std::string report_csv(const Report& r) {
    std::ostringstream os;
    os << "id,params,status,strategy,lhs_degree,elapsed_ms,detail\n";
    for (const ReportRow& row : r.rows) {
        std::string detail = row_detail(row);
        for (char& ch : detail)
            if (ch == ',' || ch == '\n') ch = ';';
        os << row.id << "," << params_str(row) << "," << to_string(row.verdict.status) << ","
           << to_string(row.verdict.strategy) << "," << row.verdict.lhs_degree << ","
           << row.verdict.elapsed_ms << "," << detail << "\n";
    }
    return os.str();
}

std::string report_table(const Report& r) {
    std::ostringstream os;
    for (const ReportRow& row : r.rows) {
        std::ostringstream left;
        left << row.id << " " << params_str(row);
        os << left.str();
        for (std::size_t i = left.str().size(); i < 36; ++i) os << ' ';
        os << to_string(row.verdict.status);
        if (row.verdict.elapsed_ms) os << "  (" << row.verdict.elapsed_ms << " ms)";
        const std::string detail = row_detail(row);
        if (!detail.empty()) os << "  " << detail;
        os << "\n";
    }
    os << "summary: pass=" << r.pass << " fail=" << r.fail << " inapplicable=" << r.inapplicable
       << " error=" << r.error << " elapsed_ms=" << r.total_elapsed_ms << "\n";
    return os.str();
}

int exit_code_for(const Report& r) { return (r.fail == 0 && r.error == 0) ? 0 : 1; }

}  // namespace qcong
