#pragma once

// Command-line front end: deterministic parameter sweeps over (q, beta),
// Ramanujan-sum tables, operator matrix dumps, and the self-verification
// suite.  Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

namespace phaselock::cli {

enum class Command { sweep_q, sweep_beta, ramanujan, dump, verify };
enum class OutputFormat { csv, json };

struct RunConfig {
    Command command = Command::sweep_q;
    std::int64_t q_min = 2;
    std::int64_t q_max = 100;
    std::int64_t q = 13;
    std::vector<double> beta_values;  // sweep-q grid, in given order
    double beta_min = 0.0;
    double beta_max = 2.0 * std::numbers::pi;
    std::int64_t beta_steps = 256;  // inclusive grid point count
    std::string output_path;        // empty = stdout
    OutputFormat format = OutputFormat::csv;
    std::string target = "projector";  // dump target
    std::string gnuplot_path;          // optional companion plot script
    bool renormalized = false;         // append exploratory renormalized-variance column
    std::int64_t verify_q_max = 0;     // verify: 0 keeps the per-suite defaults
    bool inject_fault = false;         // verify: negative control
};

// One output row per (q, beta) grid point.
struct SweepRecord {
    std::int64_t q;
    double beta;
    double expectation_def;
    double expectation_closed;
    double variance_def;
    double variance_closed;
    double modified_expectation;
    double total_weight;
    double mangoldt_q;
};

SweepRecord make_sweep_record(std::int64_t q, double beta);

int cmd_sweep_q(const RunConfig& cfg);
int cmd_sweep_beta(const RunConfig& cfg);
int cmd_ramanujan(const RunConfig& cfg);
int cmd_dump(const RunConfig& cfg);
int cmd_verify(const RunConfig& cfg);

int run(int argc, const char* const* argv);

}  // namespace phaselock::cli
