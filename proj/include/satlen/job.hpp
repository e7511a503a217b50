#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "satlen/linalg.hpp"

namespace satlen {

/// Command-line overrides applied on top of a job file.
struct JobOptions {
    std::optional<int> nmax;
    std::optional<unsigned long> characteristic;
    std::optional<std::string> order;
    std::optional<int> verify_max;
    /// Cross-check every h0 task against the degree-slice oracle.
    bool oracle = false;
    /// Add wall-clock timings to the report (makes it nondeterministic).
    bool timing = false;
    Execution execution = Execution::Serial;
};

struct JobResult {
    /// 0 all checks pass, 1 a validator or expectation failed, 2 input error.
    int exit_code = 0;
    std::string job_name;
    /// Pretty-printed JSON report; empty on input errors.
    std::string report;
    /// Input error message with file, line and column when known.
    std::string error;
    /// (task name, values) for every sequence the job produced.
    std::vector<std::pair<std::string, std::vector<std::int64_t>>> sequences;
};

JobResult run_job_text(const std::string& text, const std::string& source_name, const JobOptions& options = {});
JobResult run_job_file(const std::filesystem::path& path, const JobOptions& options = {});

/// `n,value` rows in ascending n.
std::string sequence_csv(const std::vector<std::int64_t>& values);

/// Writes <dir>/<job>_<task>.csv per sequence and <dir>/<job>_report.json.
/// Returns the paths written.
std::vector<std::filesystem::path> export_results(const JobResult& result, const std::filesystem::path& dir);

} // namespace satlen
