#include <iostream>

#include <CLI11.hpp>

#include "satlen/job.hpp"

int main(int argc, char** argv) {
    CLI::App app{"satlen: lengths of local cohomology of powers of ideals"};
    app.require_subcommand(1);

    satlen::JobOptions opts;
    std::string job_path;
    std::string out_dir;
    bool parallel = false;
    bool quiet = false;

    auto* run = app.add_subcommand("run", "Run a job file and print its JSON report");
    run->add_option("job", job_path, "Job file (JSON)")->required();
    run->add_option("--nmax", opts.nmax, "Override every task's n_max")->check(CLI::NonNegativeNumber);
    run->add_option("--char", opts.characteristic, "Override the ring characteristic (0 or a prime)");
    run->add_option("--order", opts.order, "Monomial order: grevlex, lex or elim<k>");
    run->add_option("--verify-grid", opts.verify_max, "Largest exponent checked in sop grid fits")
        ->check(CLI::PositiveNumber);
    run->add_flag("--oracle", opts.oracle, "Cross-check h0 tasks against the degree-slice oracle");
    run->add_option("--out-dir", out_dir, "Write <job>_report.json and one CSV per sequence here");
    run->add_flag("--timing", opts.timing, "Add per-task wall-clock times to the report");
    run->add_flag("--parallel", parallel, "Use the OpenMP kernels");
    run->add_flag("-q,--quiet", quiet, "Do not print the report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (parallel) opts.execution = satlen::Execution::Parallel;
    auto result = satlen::run_job_file(job_path, opts);
    if (result.exit_code == 2) {
        std::cerr << "error: " << result.error << "\n";
        return 2;
    }
    if (!quiet) std::cout << result.report;
    if (!out_dir.empty()) {
        try {
            satlen::export_results(result, out_dir);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
    }
    return result.exit_code;
}
