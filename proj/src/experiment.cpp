#include "qslice/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "qslice/brute_force.hpp"
#include "qslice/rng.hpp"
#include "qslice/serialize.hpp"

namespace fs = std::filesystem;

namespace qslice {

namespace {

constexpr int kSimCap = kMaxSimQubits;

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

int algorithm_id(const std::string& name) {
    if (name == "qaoa") return 1;
    if (name == "pqaoa-multi") return 2;
    if (name == "pqaoa-single") return 3;
    throw ValidationError("unknown algorithm: " + name);
}

std::string sanitize_csv(std::string s) {
    for (char& c : s)
        if (c == ',' || c == '\n') c = ';';
    return s;
}

} // namespace

std::string csv_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

int cmd_generate(const GenerateOptions& opt, std::ostream& log) {
    if (opt.count < 0) throw ValidationError("count must be >= 0");
    fs::create_directories(opt.outdir);

    json manifest;
    manifest["seed"] = opt.base.seed;
    manifest["count"] = opt.count;
    manifest["n"] = opt.base.n;
    manifest["A"] = opt.base.A;
    json files = json::array();

    for (int i = 0; i < opt.count; ++i) {
        GeneratorConfig cfg = opt.base;
        cfg.seed = derive_seed(opt.base.seed, {static_cast<std::uint64_t>(i)});
        const VrpInstance inst = generate_vrp(cfg);
        char name[64];
        std::snprintf(name, sizeof(name), "vrp_n%d_A%d_%03d.json", cfg.n, cfg.A, i);
        write_json_file((fs::path(opt.outdir) / name).string(), to_json(inst, cfg.seed));
        files.push_back(name);
    }
    manifest["files"] = files;
    write_json_file((fs::path(opt.outdir) / "manifest.json").string(), manifest);

    log << "generated " << opt.count << " instances (n=" << opt.base.n << ", A=" << opt.base.A
        << ", seed=" << opt.base.seed << ") in " << opt.outdir << "\n";
    log << "  index  file\n";
    for (std::size_t i = 0; i < files.size(); ++i)
        log << "  " << i << "  " << files[i].get<std::string>() << "\n";
    return kExitOk;
}

ExperimentConfig ExperimentConfig::from_json_file(const std::string& path) {
    const json j = read_json_file(path);
    ExperimentConfig cfg;
    if (j.contains("instances")) cfg.instances = j.at("instances").get<std::string>();
    if (j.contains("algorithms")) cfg.algorithms = j.at("algorithms").get<std::vector<std::string>>();
    if (j.contains("p_range")) cfg.p_range = j.at("p_range").get<std::vector<int>>();
    if (j.contains("shots_per_eval")) cfg.shots_per_eval = j.at("shots_per_eval").get<long long>();
    if (j.contains("subsamples")) cfg.subsamples = j.at("subsamples").get<int>();
    if (j.contains("max_iters")) cfg.max_iters = j.at("max_iters").get<int>();
    if (j.contains("optimizer")) cfg.optimizer = j.at("optimizer").get<std::string>();
    if (j.contains("convergence_tol")) cfg.convergence_tol = j.at("convergence_tol").get<double>();
    if (j.contains("angle_init")) cfg.angle_init = j.at("angle_init").get<std::string>();
    if (j.contains("warm_start_chain")) cfg.warm_start_chain = j.at("warm_start_chain").get<bool>();
    if (j.contains("final_samples")) cfg.final_samples = j.at("final_samples").get<long long>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("outdir")) cfg.outdir = j.at("outdir").get<std::string>();
    if (j.contains("threads")) cfg.threads = j.at("threads").get<int>();
    return cfg;
}

namespace {

std::vector<std::string> expand_instances(const std::string& spec) {
    std::vector<std::string> files;
    if (spec.empty()) throw ValidationError("no instances given");
    if (fs::is_directory(spec)) {
        for (const auto& entry : fs::directory_iterator(spec)) {
            if (entry.path().extension() == ".json" &&
                entry.path().filename().string() != "manifest.json")
                files.push_back(entry.path().string());
        }
        std::sort(files.begin(), files.end());
    } else {
        std::stringstream ss(spec);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) files.push_back(item);
    }
    if (files.empty()) throw ValidationError("instance set is empty: " + spec);
    return files;
}

TrainingConfig make_training_config(const ExperimentConfig& cfg, std::uint64_t seed) {
    TrainingConfig t;
    t.optimizer =
        cfg.optimizer == "spsa" ? OptimizerKind::Spsa : OptimizerKind::NelderMead;
    if (cfg.optimizer != "spsa" && cfg.optimizer != "nelder-mead")
        throw ValidationError("unknown optimizer: " + cfg.optimizer);
    t.max_iters = cfg.max_iters;
    t.shots_per_eval = cfg.shots_per_eval;
    t.subsamples_per_slice = cfg.subsamples;
    t.seed = seed;
    t.convergence_tol = cfg.convergence_tol;
    if (cfg.angle_init == "uniform-random")
        t.angle_init = TrainingConfig::AngleInit::UniformRandom;
    else if (cfg.angle_init != "zeros")
        throw ValidationError("unknown angle_init: " + cfg.angle_init);
    return t;
}

// Final sampling pass scorer: full energies plus full-model feasibility.
struct FinalScorer {
    CompiledModel full;
    CompiledModel penalties;
    bool has_penalties = false;

    explicit FinalScorer(const QuboModel& model) : full(compile(model)) {
        QuboModel pen(model.num_vars());
        for (const auto& [v, t] : model.linear())
            if (t.tag.is_penalty()) pen.add_linear(v, t.coeff, t.tag);
        for (const auto& [p, t] : model.quadratic())
            if (t.tag.is_penalty()) pen.add_quadratic(p.first, p.second, t.coeff, t.tag);
        for (const auto& [tag, c] : model.constants())
            if (tag.is_penalty()) pen.add_constant(c, tag);
        has_penalties = !pen.linear().empty() || !pen.quadratic().empty() || pen.offset() != 0.0;
        penalties = compile(pen);
    }

    struct Outcome {
        double best_energy = 0.0;
        double best_feasible = 0.0;
        bool feasible_found = false;
    };

    Outcome score(const SampleSet& samples) const {
        Outcome out;
        bool first = true;
        for (const auto& [key, count] : samples.counts) {
            const double e = full.evaluate_mask(key);
            if (first || e < out.best_energy) out.best_energy = e;
            first = false;
            const bool feas = !has_penalties || std::abs(penalties.evaluate_mask(key)) < 1e-9;
            if (feas && (!out.feasible_found || e < out.best_feasible)) {
                out.best_feasible = e;
                out.feasible_found = true;
            }
        }
        return out;
    }
};

long long per_slice_final_samples(long long final_samples, int k) {
    if (k <= 1) return final_samples;
    long long m = static_cast<long long>(std::llround(std::pow(
        static_cast<double>(final_samples), 1.0 / static_cast<double>(k))));
    if (m < 1) m = 1;
    auto power = [&](long long base) {
        long long v = 1;
        for (int i = 0; i < k; ++i) v *= base;
        return v;
    };
    while (power(m) < final_samples) ++m;
    return m;
}

struct ChainInputs {
    VrpInstance instance;
    QuboModel model;
    std::optional<SliceDecomposition> decomposition; // pQAOA modes
    double opt_energy = 0.0;
    std::string opt_source;
    double baseline_energy = 0.0;
    double baseline_ratio = 0.0;
};

// One (instance, algorithm) task: trains p ascending, warm-starting each
// depth from the previous best, and runs the final sampling pass.
std::vector<ExperimentRecord> run_chain(const ExperimentConfig& cfg, const std::string& path,
                                        const std::string& algorithm) {
    const std::string instance_id = fs::path(path).stem().string();
    const std::uint64_t task_seed =
        derive_seed(cfg.seed, {fnv1a(instance_id), static_cast<std::uint64_t>(
                                                       algorithm_id(algorithm))});

    ChainInputs in;
    in.instance = instance_from_json(read_json_file(path));
    in.model = build_vrp_qubo(in.instance);

    if (in.model.num_vars() <= kSimCap) {
        in.opt_energy = brute_force_min(in.model).energy;
        in.opt_source = "brute-force";
    } else {
        in.opt_energy = route_enum_optimal(in.instance).qubo_energy;
        in.opt_source = "route-enum";
    }
    const BaselineResult baseline = heuristic_baseline(in.instance, task_seed);
    in.baseline_energy = baseline.qubo_energy;
    in.baseline_ratio = approximation_ratio(baseline.qubo_energy, in.opt_energy);

    if (algorithm != "qaoa")
        in.decomposition = decompose(in.model, {Tag::coupling()});

    const FinalScorer scorer(in.model);

    std::vector<ExperimentRecord> records;
    std::optional<TrainingTrace> previous;

    for (const int p : cfg.p_range) {
        ExperimentRecord rec;
        rec.instance_id = instance_id;
        rec.instance_path = path;
        rec.algorithm = algorithm;
        rec.p = p;
        rec.master_seed = cfg.seed;
        rec.task_seed = task_seed;
        rec.num_vars = in.model.num_vars();
        rec.opt_energy = in.opt_energy;
        rec.opt_source = in.opt_source;
        rec.baseline_energy = in.baseline_energy;
        rec.baseline_ratio = in.baseline_ratio;

        const auto started = std::chrono::steady_clock::now();
        try {
            TrainingConfig tcfg =
                make_training_config(cfg, derive_seed(task_seed, {static_cast<std::uint64_t>(p)}));
            if (cfg.warm_start_chain && previous && previous->best_iteration >= 0 &&
                previous->p + 1 == p) {
                WarmStart warm;
                warm.angles = previous->best_angles.with_zero_layer_appended();
                const IterationRecord& best_it = previous->iterations[previous->best_iteration];
                warm.eval_seed = best_it.eval_seed;
                warm.shots = previous->shots_per_eval;
                warm.subsamples = previous->subsamples_per_slice;
                tcfg.warm_start = warm;
            }

            TrainingTrace trace;
            if (algorithm == "qaoa") {
                if (in.model.num_vars() > kSimCap)
                    throw SizeCapError("full model needs " + std::to_string(in.model.num_vars()) +
                                       " qubits; simulator cap is " + std::to_string(kSimCap) +
                                       " (2^" + std::to_string(in.model.num_vars()) +
                                       " amplitudes is not desk-reproducible; use a pQAOA mode)");
                trace = train_qaoa(in.model, p, tcfg);
            } else if (algorithm == "pqaoa-multi") {
                trace = train_multi_angle_pqaoa(*in.decomposition, p, tcfg);
            } else {
                trace = train_single_slice_pqaoa(*in.decomposition, p, tcfg);
            }

            // Final sampling pass: 10^4 global samples.
            const std::uint64_t final_seed =
                derive_seed(task_seed, {static_cast<std::uint64_t>(p), 0xF1A1});
            SampleSet global;
            if (algorithm == "qaoa") {
                const DiagonalHamiltonian ham = DiagonalHamiltonian::from_model(AnyModel(in.model));
                Statevector state = run_qaoa(ham, trace.best_angles.slice_params(0));
                global = sample(state, cfg.final_samples, final_seed);
            } else {
                const SliceDecomposition& d = *in.decomposition;
                const long long m_final = per_slice_final_samples(cfg.final_samples, d.k());
                std::vector<SampleSet> parts(d.k());
                if (algorithm == "pqaoa-multi") {
                    for (int a = 0; a < d.k(); ++a) {
                        const DiagonalHamiltonian ham =
                            DiagonalHamiltonian::from_model(d.slices[a]);
                        Statevector state = run_qaoa(ham, trace.best_angles.slice_params(a));
                        parts[a] = sample(state, m_final,
                                          derive_seed(final_seed, {static_cast<std::uint64_t>(a)}));
                    }
                } else {
                    // One slice sampled once; the product reuses the set.
                    const DiagonalHamiltonian ham = DiagonalHamiltonian::from_model(d.slices[0]);
                    Statevector state = run_qaoa(ham, trace.best_angles.slice_params(0));
                    const SampleSet once = sample(state, m_final, derive_seed(final_seed, {0}));
                    for (int a = 0; a < d.k(); ++a) parts[a] = once;
                }
                global = recombine(parts, d.index_maps, in.model.num_vars(),
                                   std::max<long long>(cfg.final_samples * 2, 1000000));
            }

            const FinalScorer::Outcome outcome = scorer.score(global);
            rec.best_sample_energy = outcome.best_energy;
            rec.feasible_found = outcome.feasible_found;
            rec.best_feasible_energy = outcome.feasible_found ? outcome.best_feasible : 0.0;
            rec.approx_ratio = outcome.feasible_found
                                   ? approximation_ratio(outcome.best_feasible, in.opt_energy)
                                   : 0.0;
            rec.best_train_objective = trace.best_objective;
            rec.train_iterations = static_cast<int>(trace.iterations.size());
            rec.total_shots = trace.total_shots;
            rec.slice_qubits = trace.max_qubits;

            const std::string trace_name =
                instance_id + "_" + algorithm + "_p" + std::to_string(p) + ".json";
            write_json_file((fs::path(cfg.outdir) / "traces" / trace_name).string(),
                            to_json(trace));
            rec.trace_file = (fs::path("traces") / trace_name).string();
            previous = std::move(trace);
        } catch (const SizeCapError& e) {
            rec.status = "skipped";
            rec.skip_reason = e.what();
            previous.reset();
        }
        rec.wall_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - started)
                          .count();
        records.push_back(std::move(rec));
    }
    return records;
}

const char* kRecordsHeader =
    "instance_id,algorithm,p,master_seed,task_seed,status,skip_reason,num_vars,slice_qubits,"
    "opt_energy,opt_source,baseline_energy,baseline_ratio,best_train_objective,"
    "best_sample_energy,best_feasible_energy,feasible_found,approx_ratio,train_iterations,"
    "total_shots,trace_file";

std::string record_csv_row(const ExperimentRecord& r) {
    std::ostringstream os;
    os << r.instance_id << ',' << r.algorithm << ',' << r.p << ',' << r.master_seed << ','
       << r.task_seed << ',' << r.status << ',' << sanitize_csv(r.skip_reason) << ','
       << r.num_vars << ',' << r.slice_qubits << ',' << csv_double(r.opt_energy) << ','
       << r.opt_source << ',' << csv_double(r.baseline_energy) << ','
       << csv_double(r.baseline_ratio) << ',' << csv_double(r.best_train_objective) << ','
       << csv_double(r.best_sample_energy) << ',' << csv_double(r.best_feasible_energy) << ','
       << (r.feasible_found ? 1 : 0) << ',' << csv_double(r.approx_ratio) << ','
       << r.train_iterations << ',' << r.total_shots << ',' << r.trace_file;
    return os.str();
}

json record_to_json(const ExperimentRecord& r) {
    return json{{"instance_id", r.instance_id},
                {"instance_path", r.instance_path},
                {"algorithm", r.algorithm},
                {"p", r.p},
                {"master_seed", r.master_seed},
                {"task_seed", r.task_seed},
                {"status", r.status},
                {"skip_reason", r.skip_reason},
                {"num_vars", r.num_vars},
                {"slice_qubits", r.slice_qubits},
                {"opt_energy", r.opt_energy},
                {"opt_source", r.opt_source},
                {"baseline_energy", r.baseline_energy},
                {"baseline_ratio", r.baseline_ratio},
                {"best_train_objective", r.best_train_objective},
                {"best_sample_energy", r.best_sample_energy},
                {"best_feasible_energy", r.best_feasible_energy},
                {"feasible_found", r.feasible_found},
                {"approx_ratio", r.approx_ratio},
                {"train_iterations", r.train_iterations},
                {"total_shots", r.total_shots},
                {"trace_file", r.trace_file},
                {"wall_ms", r.wall_ms}};
}

ExperimentRecord record_from_json(const json& j) {
    ExperimentRecord r;
    r.instance_id = j.at("instance_id").get<std::string>();
    r.instance_path = j.at("instance_path").get<std::string>();
    r.algorithm = j.at("algorithm").get<std::string>();
    r.p = j.at("p").get<int>();
    r.master_seed = j.at("master_seed").get<std::uint64_t>();
    r.task_seed = j.at("task_seed").get<std::uint64_t>();
    r.status = j.at("status").get<std::string>();
    r.skip_reason = j.at("skip_reason").get<std::string>();
    r.num_vars = j.at("num_vars").get<int>();
    r.slice_qubits = j.at("slice_qubits").get<int>();
    r.opt_energy = j.at("opt_energy").get<double>();
    r.opt_source = j.at("opt_source").get<std::string>();
    r.baseline_energy = j.at("baseline_energy").get<double>();
    r.baseline_ratio = j.at("baseline_ratio").get<double>();
    r.best_train_objective = j.at("best_train_objective").get<double>();
    r.best_sample_energy = j.at("best_sample_energy").get<double>();
    r.best_feasible_energy = j.at("best_feasible_energy").get<double>();
    r.feasible_found = j.at("feasible_found").get<bool>();
    r.approx_ratio = j.at("approx_ratio").get<double>();
    r.train_iterations = j.at("train_iterations").get<int>();
    r.total_shots = j.at("total_shots").get<long long>();
    r.trace_file = j.at("trace_file").get<std::string>();
    r.wall_ms = j.at("wall_ms").get<double>();
    return r;
}

} // namespace

std::vector<ExperimentRecord> run_experiments(const ExperimentConfig& cfg, std::ostream& log) {
    if (cfg.algorithms.empty()) throw ValidationError("algorithm set is empty");
    for (const int p : cfg.p_range)
        if (p < 1) throw ValidationError("p must be >= 1");
    if (cfg.outdir.empty()) throw ValidationError("outdir is required");
    for (const auto& a : cfg.algorithms) algorithm_id(a); // validate names

    const std::vector<std::string> files = expand_instances(cfg.instances);
    fs::create_directories(fs::path(cfg.outdir) / "traces");

    struct Task {
        std::string path;
        std::string algorithm;
    };
    std::vector<Task> tasks;
    for (const auto& f : files)
        for (const auto& a : cfg.algorithms) tasks.push_back({f, a});

    std::vector<std::vector<ExperimentRecord>> results(tasks.size());
    std::vector<std::string> errors(tasks.size());
    std::atomic<std::size_t> next{0};

    unsigned workers = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads)
                                       : std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    workers = std::min<unsigned>(workers, static_cast<unsigned>(tasks.size()));

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            try {
                results[i] = run_chain(cfg, tasks[i].path, tasks[i].algorithm);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (std::size_t i = 0; i < tasks.size(); ++i)
        if (!errors[i].empty())
            throw ValidationError("task " + tasks[i].path + " [" + tasks[i].algorithm +
                                  "] failed: " + errors[i]);

    std::vector<ExperimentRecord> records;
    for (auto& chunk : results)
        for (auto& r : chunk) records.push_back(std::move(r));
    std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
        return std::tie(a.instance_id, a.algorithm, a.p) <
               std::tie(b.instance_id, b.algorithm, b.p);
    });

    std::ofstream csv(fs::path(cfg.outdir) / "records.csv", std::ios::binary);
    csv << kRecordsHeader << "\n";
    for (const auto& r : records) csv << record_csv_row(r) << "\n";
    csv.close();

    json jrecords = json::array();
    for (const auto& r : records) jrecords.push_back(record_to_json(r));
    write_json_file((fs::path(cfg.outdir) / "records.json").string(), jrecords);

    int skipped = 0;
    for (const auto& r : records)
        if (r.status == "skipped") ++skipped;
    log << "ran " << records.size() << " records (" << skipped << " skipped) -> "
        << (fs::path(cfg.outdir) / "records.csv").string() << "\n";
    return records;
}

int cmd_run(const ExperimentConfig& cfg, std::ostream& log) {
    const auto records = run_experiments(cfg, log);
    for (const auto& r : records)
        if (r.status == "skipped") return kExitPartial;
    return kExitOk;
}

int cmd_transfer(const TransferOptions& opt, std::ostream& log) {
    const fs::path outdir(opt.outdir);
    const json jrecords = read_json_file((outdir / "records.json").string());

    std::vector<ExperimentRecord> records;
    for (const auto& j : jrecords) records.push_back(record_from_json(j));

    // Direct-QAOA ratios for pairing, keyed by (instance, p).
    std::map<std::pair<std::string, int>, const ExperimentRecord*> qaoa_records;
    for (const auto& r : records)
        if (r.algorithm == "qaoa" && r.status == "ok")
            qaoa_records[{r.instance_id, r.p}] = &r;

    struct Row {
        std::string instance_id;
        std::string algorithm;
        int p = 0;
        std::string status = "ok";
        std::string skip_reason;
        int sources = 0;
        double best_energy = 0.0;
        double best_feasible_energy = 0.0;
        bool feasible_found = false;
        double ratio = 0.0;
        bool has_qaoa = false;
        double qaoa_ratio = 0.0;
    };
    std::vector<Row> rows;
    bool any_skip = false;

    for (const auto& r : records) {
        if (r.algorithm == "qaoa") continue;
        Row row;
        row.instance_id = r.instance_id;
        row.algorithm = r.algorithm;
        row.p = r.p;
        if (r.status != "ok") {
            row.status = "skipped";
            row.skip_reason = "training record was skipped";
            any_skip = true;
            rows.push_back(row);
            continue;
        }
        try {
            const fs::path trace_path = outdir / r.trace_file;
            if (!fs::exists(trace_path)) {
                row.status = "skipped";
                row.skip_reason = "trace file missing";
                any_skip = true;
                rows.push_back(row);
                continue;
            }
            const TrainingTrace trace = trace_from_json(read_json_file(trace_path.string()));
            const VrpInstance inst = instance_from_json(read_json_file(r.instance_path));
            const QuboModel model = build_vrp_qubo(inst);
            const std::uint64_t seed =
                derive_seed(opt.seed, {fnv1a(r.instance_id),
                                       static_cast<std::uint64_t>(algorithm_id(r.algorithm)),
                                       static_cast<std::uint64_t>(r.p)});
            const TransferResult t =
                transfer_evaluate(model, trace, r.p, opt.shots, seed, r.opt_energy);
            row.sources = static_cast<int>(t.sources.size());
            row.best_energy = t.best_energy;
            row.best_feasible_energy = t.feasible_found ? t.best_feasible_energy : 0.0;
            row.feasible_found = t.feasible_found;
            row.ratio = t.ratio;
            if (const auto it = qaoa_records.find({r.instance_id, r.p});
                it != qaoa_records.end()) {
                row.has_qaoa = true;
                row.qaoa_ratio = it->second->approx_ratio;
            }
        } catch (const SizeCapError& e) {
            row.status = "skipped";
            row.skip_reason = e.what();
            any_skip = true;
        }
        rows.push_back(row);
    }

    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        return std::tie(a.instance_id, a.algorithm, a.p) <
               std::tie(b.instance_id, b.algorithm, b.p);
    });

    std::ofstream csv(outdir / "transfer.csv", std::ios::binary);
    csv << "instance_id,algorithm,p,status,skip_reason,sources,transfer_best_energy,"
           "transfer_best_feasible_energy,transfer_feasible_found,transfer_ratio,qaoa_ratio,"
           "abs_ratio_diff\n";
    for (const auto& row : rows) {
        csv << row.instance_id << ',' << row.algorithm << ',' << row.p << ',' << row.status << ','
            << sanitize_csv(row.skip_reason) << ',' << row.sources << ','
            << csv_double(row.best_energy) << ',' << csv_double(row.best_feasible_energy) << ','
            << (row.feasible_found ? 1 : 0) << ',' << csv_double(row.ratio) << ',';
        if (row.has_qaoa)
            csv << csv_double(row.qaoa_ratio) << ','
                << csv_double(std::abs(row.ratio - row.qaoa_ratio));
        else
            csv << ',';
        csv << "\n";
    }
    csv.close();

    // Per-(algorithm, p) mean absolute ratio difference to direct QAOA.
    std::map<std::pair<std::string, int>, std::pair<double, int>> diffs;
    for (const auto& row : rows) {
        if (row.status != "ok" || !row.has_qaoa) continue;
        auto& [sum, count] = diffs[{row.algorithm, row.p}];
        sum += std::abs(row.ratio - row.qaoa_ratio);
        ++count;
    }
    std::ofstream summary(outdir / "transfer_summary.csv", std::ios::binary);
    summary << "algorithm,p,count,mean_abs_ratio_diff\n";
    for (const auto& [key, val] : diffs)
        summary << key.first << ',' << key.second << ',' << val.second << ','
                << csv_double(val.first / val.second) << "\n";
    summary.close();

    log << "transfer evaluated " << rows.size() << " records -> "
        << (outdir / "transfer.csv").string() << "\n";
    return any_skip ? kExitPartial : kExitOk;
}

namespace {

struct Quartiles {
    double mean = 0.0, median = 0.0, q1 = 0.0, q3 = 0.0, min = 0.0, max = 0.0;
};

// Linear-interpolation quantiles (numpy default). Values must be sorted.
double quantile(const std::vector<double>& sorted, double q) {
    if (sorted.empty()) return 0.0;
    const double pos = q * (static_cast<double>(sorted.size()) - 1.0);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] * (1.0 - frac) + sorted[hi] * frac;
}

Quartiles summarize(std::vector<double> values) {
    Quartiles s;
    if (values.empty()) return s;
    std::sort(values.begin(), values.end());
    double sum = 0.0;
    for (double v : values) sum += v;
    s.mean = sum / static_cast<double>(values.size());
    s.median = quantile(values, 0.5);
    s.q1 = quantile(values, 0.25);
    s.q3 = quantile(values, 0.75);
    s.min = values.front();
    s.max = values.back();
    return s;
}

} // namespace

int cmd_report(const ReportOptions& opt, std::ostream& log) {
    const fs::path outdir(opt.outdir);
    std::ifstream csv(outdir / "records.csv");
    if (!csv) throw ValidationError("cannot read " + (outdir / "records.csv").string());

    std::string header;
    std::getline(csv, header);

    std::map<std::pair<std::string, int>, std::vector<double>> groups;
    std::map<std::string, double> baseline_by_instance;
    std::vector<std::string> malformed;

    std::string line;
    while (std::getline(csv, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        try {
            if (cells.size() < 21) throw ValidationError("short row");
            const std::string& instance = cells[0];
            const std::string& algorithm = cells[1];
            const int p = std::stoi(cells[2]);
            const std::string& status = cells[5];
            const double baseline_ratio = std::stod(cells[12]);
            const double ratio = std::stod(cells[17]);
            baseline_by_instance[instance] = baseline_ratio;
            if (status == "ok") groups[{algorithm, p}].push_back(ratio);
        } catch (const std::exception&) {
            malformed.push_back(line);
        }
    }

    std::ofstream out(outdir / "summary.csv", std::ios::binary);
    out << "algorithm,p,count,ratio_mean,ratio_median,ratio_q1,ratio_q3,ratio_min,ratio_max\n";

    if (!baseline_by_instance.empty()) {
        std::vector<double> baseline;
        for (const auto& [id, r] : baseline_by_instance) baseline.push_back(r);
        const Quartiles s = summarize(baseline);
        out << "baseline-nn2opt,0," << baseline.size() << ',' << csv_double(s.mean) << ','
            << csv_double(s.median) << ',' << csv_double(s.q1) << ',' << csv_double(s.q3) << ','
            << csv_double(s.min) << ',' << csv_double(s.max) << "\n";
    }
    for (const auto& [key, values] : groups) {
        const Quartiles s = summarize(values);
        out << key.first << ',' << key.second << ',' << values.size() << ','
            << csv_double(s.mean) << ',' << csv_double(s.median) << ',' << csv_double(s.q1)
            << ',' << csv_double(s.q3) << ',' << csv_double(s.min) << ',' << csv_double(s.max)
            << "\n";
    }
    out.close();

    log << "summary of " << groups.size() << " (algorithm, p) groups -> "
        << (outdir / "summary.csv").string() << "\n";
    for (const auto& m : malformed) log << "excluded malformed record: " << m << "\n";
    return kExitOk;
}

} // namespace qslice
