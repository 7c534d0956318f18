#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "copoly/job.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact copolynomial calculus"};
    app.require_subcommand(1);

    copoly::job::JobOverrides overrides;
    overrides.unsafe_rings = std::getenv("COPOLY_UNSAFE_RINGS") != nullptr &&
                             std::string(std::getenv("COPOLY_UNSAFE_RINGS")) == "1";

    unsigned degree = 0;
    std::size_t kmax = 0;
    std::string output;

    std::string job_path;
    CLI::App* run = app.add_subcommand("run", "run one job file");
    run->add_option("job", job_path, "path to a JSON job file")->required();
    run->add_option("--degree", degree, "override the job's moment degree bound");
    run->add_option("--kmax", kmax, "override the job's t-order bound");
    run->add_option("--output", output, "override the output format (json|tsv)");

    std::string suite_dir;
    CLI::App* suite = app.add_subcommand("suite", "run a directory of golden jobs");
    suite->add_option("dir", suite_dir, "directory of <name>.json/<name>.expected pairs")
        ->required();
    suite->add_option("--degree", degree, "override every job's degree bound");
    suite->add_option("--kmax", kmax, "override every job's t-order bound");
    suite->add_option("--output", output, "override every job's output format");

    CLI11_PARSE(app, argc, argv);

    if (run->count("--degree") || suite->count("--degree")) overrides.degree = degree;
    if (run->count("--kmax") || suite->count("--kmax")) overrides.kmax = kmax;
    if (run->count("--output") || suite->count("--output")) overrides.output = output;

    if (run->parsed()) {
        copoly::job::RunResult result = copoly::job::run_job_file(job_path, overrides);
        std::cout << result.output;
        return result.exit_code;
    }

    copoly::job::SuiteReport report = copoly::job::run_suite(suite_dir, overrides);
    for (const auto& entry : report.entries) {
        if (entry.passed) {
            std::cout << "PASS " << entry.name << "\n";
        } else {
            std::cout << "FAIL " << entry.name << " (" << entry.detail << ")\n";
        }
    }
    std::cout << report.entries.size() << " jobs, "
              << (report.all_passed() ? "all passed" : "FAILURES") << " ["
              << report.seconds << "s]\n";
    return report.all_passed() ? 0 : 1;
}
