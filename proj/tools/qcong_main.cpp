#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qcong/runner.hpp"

namespace {

using namespace qcong;

// "3..21" or "3..21..2"
void parse_range(const std::string& s, RunConfig& c) {
    const auto p1 = s.find("..");
    if (p1 == std::string::npos) {
        c.n_begin = c.n_end = std::stol(s);
        return;
    }
    c.n_begin = std::stol(s.substr(0, p1));
    const std::string rest = s.substr(p1 + 2);
    const auto p2 = rest.find("..");
    if (p2 == std::string::npos) {
        c.n_end = std::stol(rest);
    } else {
        c.n_end = std::stol(rest.substr(0, p2));
        c.n_step = std::stol(rest.substr(p2 + 2));
    }
}

std::vector<std::string> split_ids(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(tok);
    }
    return out;
}

Strategy parse_strategy(const std::string& s) {
    if (s == "exact") return Strategy::exact;
    if (s == "modular") return Strategy::modular;
    if (s == "both") return Strategy::both;
    throw usage_error("unknown strategy: " + s);
}

int emit(const Report& rep, const RunConfig& c) {
    std::string text;
    if (c.format == "json")
        text = report_json(rep);
    else if (c.format == "csv")
        text = report_csv(rep);
    else if (c.format == "table")
        text = report_table(rep);
    else
        throw usage_error("unknown format: " + c.format);
    if (c.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(c.out_path, std::ios::trunc);
        if (!out) throw usage_error("cannot write " + c.out_path);
        out << text;
    }
    return exit_code_for(rep);
}

void add_common(CLI::App* cmd, RunConfig& c, std::string& nrange, std::string& ids,
                std::string& strategy, std::string& primes, std::string& rlist) {
    cmd->add_option("--ids", ids, "comma-separated entry ids (default: all in scope)");
    cmd->add_option("--n", nrange, "odd-n range, e.g. 3..21 or 3..21..2");
    cmd->add_option("--strategy", strategy, "exact | modular | both");
    cmd->add_option("--format", c.format, "json | csv | table");
    cmd->add_option("--out", c.out_path, "write the report here instead of stdout");
    cmd->add_option("--jobs", c.jobs, "worker count");
    cmd->add_option("--cache", c.cache_path, "cyclotomic cache file to preload");
    cmd->add_option("--primes", primes, "comma-separated primes for integer-side ids");
    cmd->add_option("--r", rlist, "comma-separated prime-power exponents r");
    cmd->add_option("--dmax", c.d_max, "grid bound d for the (d,r)-parameterized family");
    cmd->add_flag("--fail-fast", c.fail_fast, "stop after the first failure");
    cmd->add_flag("--stable-output", c.stable_output, "zero timings for byte-stable reports");
    cmd->add_flag("--h-sum-from-zero", c.h_sum_from_zero,
                  "start the q^{4k-2}/[4k-2]^2 correction sums at k=0 instead of k=1");
}

std::vector<long> parse_longs(const std::string& s) {
    std::vector<long> out;
    for (const std::string& t : split_ids(s)) out.push_back(std::stol(t));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qcongruence: exact verification of truncated q-series convolution congruences"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string nrange, ids, strategy = "exact", primes, rlist;

    CLI::App* verify = app.add_subcommand("verify", "run catalog entries over an n-range");
    add_common(verify, cfg, nrange, ids, strategy, primes, rlist);

    CLI::App* scan = app.add_subcommand("scan", "run the conjecture entries (evidence only)");
    bool conjectures = false;
    scan->add_flag("--conjectures", conjectures, "restrict to conjecture-kind entries (default)");
    add_common(scan, cfg, nrange, ids, strategy, primes, rlist);

    CLI::App* padic = app.add_subcommand("padic", "run the integer-side congruences");
    add_common(padic, cfg, nrange, ids, strategy, primes, rlist);

    CLI::App* cache = app.add_subcommand("cache", "write the cyclotomic cache file");
    long nmax = 200;
    std::string cache_path = "cyclo.cache";
    cache->add_option("--nmax", nmax, "largest n to cache");
    cache->add_option("--path", cache_path, "cache file path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (!ids.empty()) cfg.ids = split_ids(ids);
        if (!nrange.empty()) parse_range(nrange, cfg);
        cfg.strategy = parse_strategy(strategy);
        if (!primes.empty()) cfg.primes = parse_longs(primes);
        if (!rlist.empty()) cfg.rs = parse_longs(rlist);
        if (cfg.jobs < 1) throw usage_error("--jobs must be >= 1");
        if (!cfg.cache_path.empty()) load_cyclotomic_cache(cfg.cache_path);

        if (app.got_subcommand(cache)) {
            const std::size_t count = cache_cyclotomics(cache_path, nmax);
            std::cout << count << " cyclotomic polynomials written to " << cache_path << "\n";
            return 0;
        }
        if (app.got_subcommand(verify)) return emit(run_verify(cfg), cfg);
        if (app.got_subcommand(scan)) return emit(run_scan_conjectures(cfg), cfg);
        if (app.got_subcommand(padic)) {
            if (cfg.primes.empty()) throw usage_error("padic requires --primes");
            return emit(run_padic(cfg), cfg);
        }
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
