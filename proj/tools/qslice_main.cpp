#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qslice/experiment.hpp"

namespace {

// "1..6" or "1,2,3".
std::vector<int> parse_p_range(const std::string& spec) {
    std::vector<int> out;
    const auto dots = spec.find("..");
    if (dots != std::string::npos) {
        const int lo = std::stoi(spec.substr(0, dots));
        const int hi = std::stoi(spec.substr(dots + 2));
        for (int p = lo; p <= hi; ++p) out.push_back(p);
    } else {
        std::stringstream ss(spec);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) out.push_back(std::stoi(item));
    }
    if (out.empty()) throw qslice::ValidationError("empty p range: " + spec);
    return out;
}

std::vector<std::string> parse_list(const std::string& spec) {
    std::vector<std::string> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hamiltonian slicing and parallel QAOA experiments"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "generate Gaussian VRP instances");
    qslice::GenerateOptions gen_opt;
    gen->add_option("--out", gen_opt.outdir, "output directory")->required();
    gen->add_option("--count", gen_opt.count, "number of instances");
    gen->add_option("--n", gen_opt.base.n, "customer locations per instance");
    gen->add_option("--A", gen_opt.base.A, "vehicles per instance");
    gen->add_option("--seed", gen_opt.base.seed, "master seed");
    gen->add_option("--sigma", gen_opt.base.sigma, "Gaussian std dev");
    gen->add_option("--grid-half", gen_opt.base.grid_half, "half-width of the grid");

    // run
    auto* run = app.add_subcommand("run", "train and evaluate algorithms on instances");
    std::string run_config, run_p, run_algorithms;
    qslice::ExperimentConfig run_cfg;
    run_cfg.p_range.clear();
    run->add_option("--config", run_config, "JSON config file (flags override it)");
    run->add_option("--instances", run_cfg.instances, "instance directory or file list");
    run->add_option("--out", run_cfg.outdir, "output directory");
    run->add_option("--algorithms", run_algorithms,
                    "comma list of qaoa,pqaoa-multi,pqaoa-single");
    run->add_option("--p", run_p, "layer range, e.g. 1..6 or 1,2,3");
    run->add_option("--seed", run_cfg.seed, "master seed");
    run->add_option("--shots", run_cfg.shots_per_eval, "shots per evaluation (0 = 10^(p+1))");
    run->add_option("--subsamples", run_cfg.subsamples, "subsamples per slice (m)");
    run->add_option("--max-iters", run_cfg.max_iters, "objective evaluations per run");
    run->add_option("--optimizer", run_cfg.optimizer, "nelder-mead or spsa");
    run->add_option("--angle-init", run_cfg.angle_init, "zeros or uniform-random");
    run->add_option("--final-samples", run_cfg.final_samples, "final sampling pass size");
    run->add_option("--threads", run_cfg.threads, "worker threads (0 = hardware)");
    run->add_flag("--no-warm-start", "disable warm-starting deeper circuits");

    // transfer
    auto* transfer = app.add_subcommand("transfer", "evaluate pQAOA angles on full QAOA");
    qslice::TransferOptions transfer_opt;
    transfer->add_option("--out", transfer_opt.outdir, "cmd_run output directory")->required();
    transfer->add_option("--shots", transfer_opt.shots, "samples per evaluation");
    transfer->add_option("--seed", transfer_opt.seed, "sampling seed");

    // report
    auto* report = app.add_subcommand("report", "aggregate records into summary tables");
    qslice::ReportOptions report_opt;
    report->add_option("--out", report_opt.outdir, "cmd_run output directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return qslice::cmd_generate(gen_opt, std::cout);
        if (run->parsed()) {
            qslice::ExperimentConfig cfg;
            if (!run_config.empty()) cfg = qslice::ExperimentConfig::from_json_file(run_config);
            // Flag overrides.
            if (!run_cfg.instances.empty()) cfg.instances = run_cfg.instances;
            if (!run_cfg.outdir.empty()) cfg.outdir = run_cfg.outdir;
            if (!run_algorithms.empty()) cfg.algorithms = parse_list(run_algorithms);
            if (!run_p.empty()) cfg.p_range = parse_p_range(run_p);
            if (run->count("--seed")) cfg.seed = run_cfg.seed;
            if (run->count("--shots")) cfg.shots_per_eval = run_cfg.shots_per_eval;
            if (run->count("--subsamples")) cfg.subsamples = run_cfg.subsamples;
            if (run->count("--max-iters")) cfg.max_iters = run_cfg.max_iters;
            if (run->count("--optimizer")) cfg.optimizer = run_cfg.optimizer;
            if (run->count("--angle-init")) cfg.angle_init = run_cfg.angle_init;
            if (run->count("--final-samples")) cfg.final_samples = run_cfg.final_samples;
            if (run->count("--threads")) cfg.threads = run_cfg.threads;
            if (run->count("--no-warm-start")) cfg.warm_start_chain = false;
            return qslice::cmd_run(cfg, std::cout);
        }
        if (transfer->parsed()) return qslice::cmd_transfer(transfer_opt, std::cout);
        if (report->parsed()) return qslice::cmd_report(report_opt, std::cout);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return qslice::kExitConfigError;
    }
    return qslice::kExitConfigError;
}
