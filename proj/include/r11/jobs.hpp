#pragma once

// JSON job files for the batch driver and the CSV they produce.
//
// A job is {"command": ..., "seed": N, "output": "path", "params": {...}} with
// command one of cauchy-disk, cauchy-r11, taylor (run_transform) and
// kernel-dump, geometry-dump (run_dump).  Every numeric field is written with
// 17 significant digits; rows appear in input order.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <json.hpp>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace r11 {

struct JobSpec {
    std::string command;
    std::uint64_t seed = 0;
    std::string output;  // empty: standard output
    nlohmann::json params = nlohmann::json::object();
};

/// Throws SchemaError on a malformed job or unknown command.
JobSpec parse_job(const nlohmann::json& j);
/// Reads a job file and applies "key=value" overrides before validation.
JobSpec load_job(const std::string& path, const std::vector<std::string>& overrides = {});
/// "params.sigma=0.5": dotted path into the job; the value is parsed as JSON
/// when possible and kept as a string otherwise.  Throws SchemaError.
void apply_override(nlohmann::json& job, const std::string& assignment);

struct JobOutput {
    std::string csv;
    std::size_t rows = 0;
    std::size_t failed = 0;  // rows whose evaluation raised
    int exit_code = 0;       // 3 when every row of a non-empty job failed
};

JobOutput run_transform(const JobSpec& job);

enum class DumpKind { kernel, geometry };
/// Throws SchemaError when the job command does not match the kind.
JobOutput run_dump(DumpKind kind, const JobSpec& job);

/// "%.17g"; non-finite values print as nan, inf, -inf.
std::string format_double(double x);

/// Hardware concurrency capped by R11_THREADS (>= 1).
std::size_t thread_count();

/// Calls f(i) for i < n on up to thread_count() threads.
template <class F>
void parallel_for(std::size_t n, F&& f) {
    const std::size_t workers = std::min(thread_count(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex guard;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            try {
                for (std::size_t i = next++; i < n; i = next++) f(i);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(guard);
                if (!failure) failure = std::current_exception();
                next = n;
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace r11
