// r11: batch driver.
//
//   r11 verify [--suite S] [--seed N]
//   r11 transform --job file.json [--param key=value ...]
//   r11 dump --kind kernel|geometry --job file.json [--param key=value ...]
//
// Exit codes: 0 success, 1 failed verification, 2 unknown suite or schema
// violation, 3 when every row of a transform job failed.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "r11/errors.hpp"
#include "r11/jobs.hpp"
#include "r11/verify.hpp"

namespace {

int emit(const r11::JobSpec& job, const r11::JobOutput& out) {
    if (job.output.empty()) {
        std::cout << out.csv;
    } else {
        std::ofstream file(job.output);
        if (!file) {
            std::cerr << "r11: cannot write '" << job.output << "'\n";
            return 2;
        }
        file << out.csv;
    }
    if (out.failed > 0) std::cerr << "r11: " << out.failed << " of " << out.rows << " rows failed\n";
    return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Harmonic analysis on the two-fold cover of R^{1,1}"};
    app.require_subcommand(1);

    std::string suite = "all";
    std::uint64_t seed = 1;
    auto* verify = app.add_subcommand("verify", "Run the built-in self-checks and print a JSON report");
    verify->add_option("--suite", suite, "Suite name or 'all'");
    verify->add_option("--seed", seed, "Seed for the random samples");

    std::string job_path;
    std::vector<std::string> params;
    auto* transform = app.add_subcommand("transform", "Evaluate a transform job and print CSV");
    transform->add_option("--job", job_path, "Job file")->required();
    transform->add_option("--param", params, "Override a job field, key=value");

    std::string kind;
    auto* dump = app.add_subcommand("dump", "Dump kernel or geometry samples as CSV");
    dump->add_option("--kind", kind, "kernel or geometry")->required()->check(CLI::IsMember({"kernel", "geometry"}));
    dump->add_option("--job", job_path, "Job file")->required();
    dump->add_option("--param", params, "Override a job field, key=value");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (verify->parsed()) {
        if (!r11::known_suite(suite)) {
            std::cerr << "r11: unknown suite '" << suite << "'\n";
            return 2;
        }
        const auto reports = r11::run_verify(suite, seed);
        std::cout << r11::to_json(reports, seed) << "\n";
        for (const auto& r : reports) {
            if (!r.pass()) return 1;
        }
        return 0;
    }

    try {
        const r11::JobSpec job = r11::load_job(job_path, params);
        if (transform->parsed()) return emit(job, r11::run_transform(job));
        const auto k = kind == "kernel" ? r11::DumpKind::kernel : r11::DumpKind::geometry;
        return emit(job, r11::run_dump(k, job));
    } catch (const r11::Error& e) {
        std::cerr << "r11: " << e.what() << "\n";
        return 2;
    }
}
