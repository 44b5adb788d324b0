#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qslice/instances.hpp"
#include "qslice/trainer.hpp"

namespace qslice {

// Exit codes shared by the CLI: 0 success, 1 config error, 2 partial
// (some tasks were skipped with a recorded reason).
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 1;
inline constexpr int kExitPartial = 2;

struct GenerateOptions {
    std::string outdir;
    int count = 50;
    GeneratorConfig base; // per-instance seeds derive from base.seed
};

/// Write `count` instances plus manifest.json; byte-stable per seed.
int cmd_generate(const GenerateOptions& opt, std::ostream& log);

struct ExperimentConfig {
    std::string instances;                  // directory or comma-separated files
    std::vector<std::string> algorithms{"qaoa", "pqaoa-multi", "pqaoa-single"};
    std::vector<int> p_range{1, 2, 3, 4, 5, 6};
    long long shots_per_eval = 0;           // 0 -> 10^(p+1)
    int subsamples = 100;                   // m
    int max_iters = 60;                     // objective evaluations per run
    std::string optimizer = "nelder-mead"; // or "spsa"
    double convergence_tol = 1e-3;
    std::string angle_init = "zeros";      // or "uniform-random"
    bool warm_start_chain = true;           // p+1 starts from the p-layer best
    long long final_samples = 10000;        // final sampling pass size
    std::uint64_t seed = 0;                 // master seed
    std::string outdir;
    int threads = 0;                        // 0 -> hardware concurrency

    static ExperimentConfig from_json_file(const std::string& path);
};

struct ExperimentRecord {
    std::string instance_id;
    std::string instance_path;
    std::string algorithm;
    int p = 0;
    std::uint64_t master_seed = 0;
    std::uint64_t task_seed = 0;
    std::string status = "ok"; // ok | skipped
    std::string skip_reason;
    int num_vars = 0;
    int slice_qubits = 0;
    double opt_energy = 0.0;
    std::string opt_source; // brute-force | route-enum
    double baseline_energy = 0.0;
    double baseline_ratio = 0.0;
    double best_train_objective = 0.0;
    double best_sample_energy = 0.0;
    double best_feasible_energy = 0.0;
    bool feasible_found = false;
    double approx_ratio = 0.0; // 0 when no feasible sample was seen
    int train_iterations = 0;
    long long total_shots = 0;
    std::string trace_file;
    double wall_ms = 0.0; // records.json only; kept out of the CSV
};

/// Train/evaluate every (instance, algorithm, p) task; writes records.csv,
/// records.json and per-run traces under outdir. Returns the records
/// sorted by (instance, algorithm, p).
std::vector<ExperimentRecord> run_experiments(const ExperimentConfig& cfg, std::ostream& log);

int cmd_run(const ExperimentConfig& cfg, std::ostream& log);

struct TransferOptions {
    std::string outdir;        // a previous cmd_run output directory
    long long shots = 10000;
    std::uint64_t seed = 0;
};

/// Evaluate pQAOA-trained parameters on the full-model QAOA circuit and
/// pair the ratios with the direct-QAOA records; writes transfer.csv and
/// transfer_summary.csv.
int cmd_transfer(const TransferOptions& opt, std::ostream& log);

struct ReportOptions {
    std::string outdir; // reads records.csv, writes summary.csv
};

int cmd_report(const ReportOptions& opt, std::ostream& log);

/// Stable float formatting used by every CSV writer (%.12g).
std::string csv_double(double v);

} // namespace qslice
