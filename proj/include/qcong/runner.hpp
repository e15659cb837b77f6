#pragma once

#include <string>
#include <vector>

#include "qcong/catalog.hpp"
#include "qcong/padic.hpp"

namespace qcong {

inline constexpr const char* kEngineVersion = "0.1.0";

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::vector<std::string> ids;  // empty = every entry in the command's scope
    long n_begin = 3;
    long n_end = 9;
    long n_step = 2;
    std::vector<long> primes;
    std::vector<long> rs = {1};
    long d_max = 4;  // grid bound for the (d, r)-parameterized family
    Strategy strategy = Strategy::exact;
    int jobs = 1;
    std::string format = "table";  // json | csv | table
    std::string out_path;
    std::string cache_path;
    bool fail_fast = false;
    bool stable_output = false;  // zero all timings (byte-stable reports)
    bool h_sum_from_zero = false;
};

struct ReportRow {
    std::string id;
    bool integer_side = false;
    long n = 0, d = 0, r = 0, p = 0;
    Verdict verdict;
    std::string tag;  // "conjecture-evidence" on scan rows
};

struct Report {
    std::string engine_version = kEngineVersion;
    std::string config_desc;
    std::vector<ReportRow> rows;
    long pass = 0, fail = 0, inapplicable = 0, error = 0;
    long total_elapsed_ms = 0;
};

Report run_verify(const RunConfig& config);
Report run_scan_conjectures(const RunConfig& config);
Report run_padic(const RunConfig& config);

std::size_t cache_cyclotomics(const std::string& path, long n_max);
std::size_t load_cyclotomic_cache(const std::string& path);

std::string report_json(const Report& r);
std::string report_csv(const Report& r);
std::string report_table(const Report& r);
Report report_from_json(const std::string& text);

/// 0 iff no fail and no error rows (inapplicable rows do not fail a run).
int exit_code_for(const Report& r);

}  // namespace qcong
