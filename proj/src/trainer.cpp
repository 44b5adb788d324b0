#include "qslice/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "qslice/rng.hpp"

namespace qslice {

namespace {

constexpr std::uint64_t kStreamEval = 0xE7A1;
constexpr std::uint64_t kStreamSample = 0x5A3B;
constexpr std::uint64_t kStreamSubsample = 0x509D;
constexpr std::uint64_t kStreamInit = 0x1217;
constexpr std::uint64_t kStreamOpt = 0x0F7C;

} // namespace

AngleSet AngleSet::shared(const QaoaParams& params) {
    params.validate();
    AngleSet s;
    s.variant = Variant::Shared;
    s.k = 1;
    s.p = params.p();
    s.flat = params.gamma;
    s.flat.insert(s.flat.end(), params.beta.begin(), params.beta.end());
    return s;
}

AngleSet AngleSet::multi_angle(const std::vector<QaoaParams>& per_slice) {
    if (per_slice.empty()) throw ValidationError("multi-angle set needs at least one slice");
    AngleSet s;
    s.variant = Variant::MultiAngle;
    s.k = static_cast<int>(per_slice.size());
    s.p = per_slice[0].p();
    for (const auto& params : per_slice) {
        params.validate();
        if (params.p() != s.p) throw ValidationError("slices must share the layer count");
        s.flat.insert(s.flat.end(), params.gamma.begin(), params.gamma.end());
        s.flat.insert(s.flat.end(), params.beta.begin(), params.beta.end());
    }
    return s;
}

AngleSet AngleSet::zeros(Variant variant, int k, int p) {
    AngleSet s;
    s.variant = variant;
    s.k = variant == Variant::Shared ? 1 : k;
    s.p = p;
    s.flat.assign(s.dimension(), 0.0);
    s.validate();
    return s;
}

void AngleSet::validate() const {
    if (p < 1) throw ValidationError("angle set needs p >= 1");
    if (k < 1) throw ValidationError("angle set needs k >= 1");
    if (variant == Variant::Shared && k != 1)
        throw ValidationError("shared angle sets have k = 1");
    if (static_cast<int>(flat.size()) != dimension())
        throw ValidationError("angle vector length does not match 2*k*p layout");
}

QaoaParams AngleSet::slice_params(int slice) const {
    validate();
    const int block = variant == Variant::Shared ? 0 : slice;
    if (variant == Variant::MultiAngle && (slice < 0 || slice >= k))
        throw ValidationError("slice index out of range");
    QaoaParams params;
    const auto base = flat.begin() + 2 * p * block;
    params.gamma.assign(base, base + p);
    params.beta.assign(base + p, base + 2 * p);
    return params;
}

AngleSet AngleSet::with_zero_layer_appended() const {
    validate();
    AngleSet out;
    out.variant = variant;
    out.k = k;
    out.p = p + 1;
    const int blocks = variant == Variant::Shared ? 1 : k;
    for (int b = 0; b < blocks; ++b) {
        const auto base = flat.begin() + 2 * p * b;
        out.flat.insert(out.flat.end(), base, base + p);
        out.flat.push_back(0.0);
        out.flat.insert(out.flat.end(), base + p, base + 2 * p);
        out.flat.push_back(0.0);
    }
    return out;
}

SampleSet recombine(const std::vector<SampleSet>& slice_samples,
                    const std::vector<std::vector<int>>& index_maps, int num_vars,
                    long long cap) {
    if (slice_samples.empty()) throw ValidationError("recombine needs at least one slice");
    if (slice_samples.size() != index_maps.size())
        throw ValidationError("one index map per slice sample set is required");

    int width = num_vars;
    if (width < 0) {
        width = 0;
        for (const auto& map : index_maps)
            for (int g : map) width = std::max(width, g + 1);
    }
    if (width > 64) throw SizeCapError("recombined width exceeds 64 variables");

    std::vector<int> cover(width, 0);
    for (std::size_t a = 0; a < index_maps.size(); ++a) {
        if (static_cast<std::size_t>(slice_samples[a].n) != index_maps[a].size())
            throw DimensionError("slice sample width does not match its index map");
        for (int g : index_maps[a]) {
            if (g < 0 || g >= width) throw ValidationError("index map entry out of range");
            ++cover[g];
        }
    }
    for (int g = 0; g < width; ++g) {
        if (cover[g] == 0)
            throw ValidationError("variable " + std::to_string(g) +
                                  " is not covered by any slice (residual-only variables "
                                  "cannot be recombined)");
        if (cover[g] > 1)
            throw ValidationError("variable " + std::to_string(g) + " covered by two slices");
    }

    long long product = 1;
    for (const auto& s : slice_samples) {
        if (s.empty()) throw ValidationError("cannot recombine an empty slice sample set");
        if (s.shots > cap || product > cap / s.shots)
            throw SizeCapError("Cartesian product exceeds the recombination cap; subsample the "
                               "slices first");
        product *= s.shots;
    }

    // Scatter masks: local bit j of slice a lands on global bit map[a][j].
    std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>> scattered(
        slice_samples.size());
    for (std::size_t a = 0; a < slice_samples.size(); ++a) {
        for (const auto& [key, count] : slice_samples[a].counts) {
            std::uint64_t g = 0;
            for (std::size_t j = 0; j < index_maps[a].size(); ++j)
                if ((key >> j) & 1u) g |= std::uint64_t(1) << index_maps[a][j];
            scattered[a].emplace_back(g, static_cast<std::uint64_t>(count));
        }
    }

    SampleSet out;
    out.n = width;
    std::vector<std::size_t> cursor(slice_samples.size(), 0);
    // Odometer walk over the distinct-entry product.
    while (true) {
        std::uint64_t key = 0;
        long long count = 1;
        for (std::size_t a = 0; a < scattered.size(); ++a) {
            key |= scattered[a][cursor[a]].first;
            count *= static_cast<long long>(scattered[a][cursor[a]].second);
        }
        out.add(key, count);

        std::size_t a = 0;
        while (a < cursor.size()) {
            if (++cursor[a] < scattered[a].size()) break;
            cursor[a] = 0;
            ++a;
        }
        if (a == cursor.size()) break;
    }
    return out;
}

double objective_mean_energy(const SampleSet& samples, const CompiledModel& model) {
    if (samples.empty()) throw ValidationError("mean energy of an empty sample set");
    if (samples.n != model.num_vars)
        throw DimensionError("sample width does not match the model");
    double acc = 0.0;
    for (const auto& [key, count] : samples.counts)
        acc += static_cast<double>(count) * model.evaluate_mask(key);
    return acc / static_cast<double>(samples.shots);
}

double objective_mean_energy(const SampleSet& samples, const QuboModel& model) {
    return objective_mean_energy(samples, compile(model));
}
double objective_mean_energy(const SampleSet& samples, const IsingModel& model) {
    return objective_mean_energy(samples, compile(model));
}
double objective_mean_energy(const SampleSet& samples, const AnyModel& model) {
    return objective_mean_energy(samples, compile(model));
}

double objective_mean_energy(const SampleSet& samples, const std::vector<double>& table) {
    if (samples.empty()) throw ValidationError("mean energy of an empty sample set");
    if (table.size() != (std::size_t(1) << samples.n))
        throw DimensionError("energy table does not match the sample width");
    double acc = 0.0;
    for (const auto& [key, count] : samples.counts)
        acc += static_cast<double>(count) * table[key];
    return acc / static_cast<double>(samples.shots);
}

namespace {

// Uniform m-subset of [0, total) via Floyd's algorithm; O(m) memory.
std::set<long long> floyd_positions(long long total, long long m, std::mt19937_64& rng) {
    std::set<long long> chosen;
    for (long long j = total - m; j < total; ++j) {
        const long long r = static_cast<long long>(uniform_below(rng, j + 1));
        if (!chosen.insert(r).second) chosen.insert(j);
    }
    return chosen;
}

template <typename FeasibleFn, typename EnergyFn>
SampleSet subsample_impl(const SampleSet& samples, int m, std::uint64_t seed,
                         FeasibleFn&& feasible, EnergyFn&& energy) {
    if (m < 1) throw ValidationError("subsample count m must be >= 1");

    SampleSet out;
    out.n = samples.n;

    std::vector<std::pair<std::uint64_t, long long>> feas;
    std::vector<std::pair<std::uint64_t, long long>> infeas;
    long long feas_total = 0;
    for (const auto& [key, count] : samples.counts) {
        if (feasible(key)) {
            feas.emplace_back(key, count);
            feas_total += count;
        } else {
            infeas.emplace_back(key, count);
        }
    }

    long long want = std::min<long long>(m, samples.shots);

    if (feas_total <= want) {
        for (const auto& [key, count] : feas) out.add(key, count);
        want -= feas_total;
    } else {
        auto rng = make_rng(seed);
        const auto positions = floyd_positions(feas_total, want, rng);
        auto it = positions.begin();
        long long offset = 0;
        for (const auto& [key, count] : feas) {
            long long taken = 0;
            while (it != positions.end() && *it < offset + count) {
                ++taken;
                ++it;
            }
            if (taken > 0) out.add(key, taken);
            offset += count;
        }
        want = 0;
    }

    if (want > 0 && !infeas.empty()) {
        // Fallback: lowest slice energies first (then key, for determinism).
        std::stable_sort(infeas.begin(), infeas.end(),
                         [&](const auto& a, const auto& b) {
                             const double ea = energy(a.first), eb = energy(b.first);
                             if (ea != eb) return ea < eb;
                             return a.first < b.first;
                         });
        for (const auto& [key, count] : infeas) {
            if (want <= 0) break;
            const long long take = std::min(want, count);
            out.add(key, take);
            want -= take;
        }
    }
    return out;
}

} // namespace

SampleSet subsample(const SampleSet& slice_samples, const QuboModel& slice_model, int m,
                    std::uint64_t seed) {
    if (slice_samples.n != slice_model.num_vars())
        throw DimensionError("sample width does not match the slice model");
    const CompiledModel compiled = compile(slice_model);
    std::set<Tag> penalty;
    for (const Tag& t : slice_model.tags())
        if (t.is_penalty()) penalty.insert(t);
    return subsample_impl(
        slice_samples, m, seed,
        [&](std::uint64_t key) {
            if (penalty.empty()) return true;
            const Assignment x = assignment_from_mask(key, slice_model.num_vars());
            return std::abs(slice_model.evaluate_tags(penalty, x)) < 1e-9;
        },
        [&](std::uint64_t key) { return compiled.evaluate_mask(key); });
}

SampleSet subsample(const SampleSet& slice_samples, const AnyModel& slice_model, int m,
                    std::uint64_t seed) {
    if (const QuboModel* q = std::get_if<QuboModel>(&slice_model))
        return subsample(slice_samples, *q, m, seed);
    // Ising slices carry no constraint tags; every draw counts as feasible.
    const CompiledModel compiled = compile(slice_model);
    if (slice_samples.n != compiled.num_vars)
        throw DimensionError("sample width does not match the slice model");
    return subsample_impl(
        slice_samples, m, seed, [](std::uint64_t) { return true; },
        [&](std::uint64_t key) { return compiled.evaluate_mask(key); });
}

long long resolve_shots(const TrainingConfig& cfg, int p) {
    if (cfg.shots_per_eval > 0) return cfg.shots_per_eval;
    long long shots = 1;
    for (int i = 0; i < p + 1; ++i) shots *= 10;
    return shots;
}

namespace {

// Slice runtime data shared by the pQAOA objective evaluations.
struct SliceRuntime {
    DiagonalHamiltonian ham;
    std::vector<std::uint8_t> feasible; // per basis state

    SampleSet draw_and_subsample(const QaoaParams& params, long long shots, int m,
                                 std::uint64_t sample_seed, std::uint64_t subsample_seed,
                                 SampleSet* raw_out = nullptr) const {
        Statevector state = run_qaoa(ham, params);
        SampleSet raw = sample(state, shots, sample_seed);
        SampleSet sub = subsample_impl(
            raw, m, subsample_seed, [&](std::uint64_t key) { return feasible[key] != 0; },
            [&](std::uint64_t key) { return ham.energies[key]; });
        if (raw_out) *raw_out = std::move(raw);
        return sub;
    }
};

SliceRuntime make_slice_runtime(const AnyModel& slice) {
    SliceRuntime rt;
    rt.ham = DiagonalHamiltonian::from_model(slice);
    const std::size_t dim = rt.ham.energies.size();
    rt.feasible.assign(dim, 1);
    if (const QuboModel* q = std::get_if<QuboModel>(&slice)) {
        std::set<Tag> penalty;
        for (const Tag& t : q->tags())
            if (t.is_penalty()) penalty.insert(t);
        if (!penalty.empty()) {
            QuboModel penalties(q->num_vars());
            for (const auto& [v, t] : q->linear())
                if (penalty.count(t.tag)) penalties.add_linear(v, t.coeff, t.tag);
            for (const auto& [pr, t] : q->quadratic())
                if (penalty.count(t.tag))
                    penalties.add_quadratic(pr.first, pr.second, t.coeff, t.tag);
            for (const auto& [tag, c] : q->constants())
                if (penalty.count(tag)) penalties.add_constant(c, tag);
            const std::vector<double> ptable = energy_table(penalties);
            for (std::size_t z = 0; z < dim; ++z)
                rt.feasible[z] = std::abs(ptable[z]) < 1e-9 ? 1 : 0;
        }
    }
    return rt;
}

// Scores global samples against the full model: an energy table when the
// model fits, mask evaluation otherwise.
struct FullScorer {
    CompiledModel compiled;
    std::vector<double> table;

    explicit FullScorer(const AnyModel& model) : compiled(compile(model)) {
        if (compiled.num_vars <= kMaxSimQubits) table = energy_table(compiled);
    }

    double energy(std::uint64_t key) const {
        return table.empty() ? compiled.evaluate_mask(key) : table[key];
    }

    double mean(const SampleSet& samples) const {
        if (samples.empty()) throw ValidationError("mean energy of an empty sample set");
        double acc = 0.0;
        for (const auto& [key, count] : samples.counts)
            acc += static_cast<double>(count) * energy(key);
        return acc / static_cast<double>(samples.shots);
    }
};

struct EvalContext {
    std::uint64_t eval_seed = 0;
    long long shots = 0;
    int subsamples = 0;
};

struct EvalOutcome {
    double objective = 0.0;
    long long shots_used = 0;
    long long scored_samples = 0;
};

using TrainEvalFn = std::function<EvalOutcome(std::span<const double>, const EvalContext&)>;

TrainingTrace run_training(AngleSet::Variant variant, int k, int p, const TrainingConfig& cfg,
                           const TrainEvalFn& eval_fn) {
    const long long shots = resolve_shots(cfg, p);
    if (cfg.subsamples_per_slice < 1 || cfg.max_iters < 1 || shots < 1)
        throw ValidationError("training config values must be positive");
    if (cfg.subsamples_per_slice > shots)
        throw ValidationError("subsamples per slice m must not exceed shots per evaluation");

    TrainingTrace trace;
    trace.variant = variant;
    trace.k = k;
    trace.p = p;
    trace.shots_per_eval = shots;
    trace.subsamples_per_slice = cfg.subsamples_per_slice;

    AngleSet x0 = AngleSet::zeros(variant, k, p);
    if (cfg.warm_start) {
        const AngleSet& w = cfg.warm_start->angles;
        w.validate();
        if (w.variant != variant || w.p != p || (variant == AngleSet::Variant::MultiAngle && w.k != k))
            throw ValidationError("warm-start angles do not match the requested run shape");
        x0 = w;
    } else if (cfg.angle_init == TrainingConfig::AngleInit::UniformRandom) {
        auto rng = make_rng(derive_seed(cfg.seed, {kStreamInit}));
        for (double& a : x0.flat) a = uniform01(rng) * 2.0 * 3.14159265358979323846;
    }

    const ObjectiveFn objective = [&](std::span<const double> x, int eval_index) {
        EvalContext ctx;
        if (eval_index == 0 && cfg.warm_start && cfg.warm_start->replay) {
            ctx.eval_seed = cfg.warm_start->eval_seed;
            ctx.shots = cfg.warm_start->shots;
            ctx.subsamples = cfg.warm_start->subsamples;
        } else {
            ctx.eval_seed = derive_seed(cfg.seed, {kStreamEval, static_cast<std::uint64_t>(eval_index)});
            ctx.shots = shots;
            ctx.subsamples = cfg.subsamples_per_slice;
        }
        const EvalOutcome outcome = eval_fn(x, ctx);
        IterationRecord rec;
        rec.angles.assign(x.begin(), x.end());
        rec.objective = outcome.objective;
        rec.shots = outcome.shots_used;
        rec.scored_samples = outcome.scored_samples;
        rec.eval_seed = ctx.eval_seed;
        trace.iterations.push_back(std::move(rec));
        trace.total_shots += outcome.shots_used;
        return outcome.objective;
    };

    MinimizeOptions opt;
    opt.kind = cfg.optimizer;
    opt.max_evals = cfg.max_iters;
    opt.tol = cfg.convergence_tol;
    opt.seed = derive_seed(cfg.seed, {kStreamOpt});
    const MinimizeResult result = minimize(objective, x0.flat, opt);

    trace.converged = result.converged;
    trace.aborted = result.aborted;
    trace.best_iteration = result.best_eval;
    trace.best_objective = result.f_best;
    trace.best_angles = x0;
    if (result.best_eval >= 0) trace.best_angles.flat = result.x_best;
    trace.best_angles_mod_2pi = angles_mod_2pi(trace.best_angles.flat);
    return trace;
}

} // namespace

TrainingTrace train_qaoa(const AnyModel& full_model, int p, const TrainingConfig& cfg) {
    const int n = model_num_vars(full_model);
    if (n > kMaxSimQubits)
        throw SizeCapError("full model exceeds the simulator qubit cap; use a pQAOA mode");
    if (p < 1) throw ValidationError("p must be >= 1");

    const DiagonalHamiltonian ham = DiagonalHamiltonian::from_model(full_model);

    const TrainEvalFn eval_fn = [&](std::span<const double> x, const EvalContext& ctx) {
        QaoaParams params;
        params.gamma.assign(x.begin(), x.begin() + p);
        params.beta.assign(x.begin() + p, x.begin() + 2 * p);
        Statevector state = run_qaoa(ham, params);
        const SampleSet samples =
            sample(state, ctx.shots, derive_seed(ctx.eval_seed, {0, kStreamSample}));
        EvalOutcome out;
        out.objective = objective_mean_energy(samples, ham.energies);
        out.shots_used = ctx.shots;
        out.scored_samples = samples.shots;
        return out;
    };

    TrainingTrace trace = run_training(AngleSet::Variant::Shared, 1, p, cfg, eval_fn);
    trace.max_qubits = n;
    return trace;
}

TrainingTrace train_qaoa(const QuboModel& full_model, int p, const TrainingConfig& cfg) {
    return train_qaoa(AnyModel(full_model), p, cfg);
}

TrainingTrace train_multi_angle_pqaoa(const SliceDecomposition& d, int p,
                                      const TrainingConfig& cfg) {
    if (d.k() < 1) throw ValidationError("decomposition has no slices");
    if (p < 1) throw ValidationError("p must be >= 1");

    std::vector<SliceRuntime> slices;
    int max_width = 0;
    for (int a = 0; a < d.k(); ++a) {
        slices.push_back(make_slice_runtime(d.slices[a]));
        max_width = std::max(max_width, model_num_vars(d.slices[a]));
    }
    const FullScorer scorer(d.source);
    const int num_vars = model_num_vars(d.source);
    const int k = d.k();

    const TrainEvalFn eval_fn = [&, k, num_vars](std::span<const double> x,
                                                 const EvalContext& ctx) {
        std::vector<SampleSet> subs(k);
        for (int a = 0; a < k; ++a) {
            QaoaParams params;
            const auto base = x.begin() + 2 * p * a;
            params.gamma.assign(base, base + p);
            params.beta.assign(base + p, base + 2 * p);
            subs[a] = slices[a].draw_and_subsample(
                params, ctx.shots, ctx.subsamples,
                derive_seed(ctx.eval_seed, {static_cast<std::uint64_t>(a), kStreamSample}),
                derive_seed(ctx.eval_seed, {static_cast<std::uint64_t>(a), kStreamSubsample}));
        }
        const SampleSet global = recombine(subs, d.index_maps, num_vars, cfg.recombine_cap);
        EvalOutcome out;
        out.objective = scorer.mean(global);
        out.shots_used = static_cast<long long>(k) * ctx.shots;
        out.scored_samples = global.shots;
        return out;
    };

    TrainingTrace trace = run_training(AngleSet::Variant::MultiAngle, k, p, cfg, eval_fn);
    trace.max_qubits = max_width;
    return trace;
}

TrainingTrace train_single_slice_pqaoa(const SliceDecomposition& d, int p,
                                       const TrainingConfig& cfg) {
    if (d.k() < 1) throw ValidationError("decomposition has no slices");
    if (p < 1) throw ValidationError("p must be >= 1");
    if (!slices_identical(d))
        throw ValidationError("single-slice pQAOA requires identical slices");

    const SliceRuntime slice = make_slice_runtime(d.slices[0]);
    const FullScorer scorer(d.source);
    const int num_vars = model_num_vars(d.source);
    const int k = d.k();

    const TrainEvalFn eval_fn = [&, k, num_vars](std::span<const double> x,
                                                 const EvalContext& ctx) {
        QaoaParams params;
        params.gamma.assign(x.begin(), x.begin() + p);
        params.beta.assign(x.begin() + p, x.begin() + 2 * p);

        Statevector state = run_qaoa(slice.ham, params);
        const SampleSet raw =
            sample(state, ctx.shots, derive_seed(ctx.eval_seed, {0, kStreamSample}));

        std::vector<SampleSet> subs(k);
        for (int f = 0; f < k; ++f) {
            const std::uint64_t factor =
                cfg.single_slice_same_subsample ? 0 : static_cast<std::uint64_t>(f);
            subs[f] = subsample_impl(
                raw, ctx.subsamples, derive_seed(ctx.eval_seed, {factor, kStreamSubsample}),
                [&](std::uint64_t key) { return slice.feasible[key] != 0; },
                [&](std::uint64_t key) { return slice.ham.energies[key]; });
        }
        const SampleSet global = recombine(subs, d.index_maps, num_vars, cfg.recombine_cap);
        EvalOutcome out;
        out.objective = scorer.mean(global);
        out.shots_used = ctx.shots; // one slice is measured
        out.scored_samples = global.shots;
        return out;
    };

    TrainingTrace trace = run_training(AngleSet::Variant::Shared, k, p, cfg, eval_fn);
    trace.k = k;
    trace.max_qubits = model_num_vars(d.slices[0]);
    return trace;
}

TransferResult transfer_evaluate(const QuboModel& full_model, const TrainingTrace& trained,
                                 int p, long long shots, std::uint64_t seed,
                                 std::optional<double> optimal_energy) {
    if (full_model.num_vars() > kMaxSimQubits)
        throw SizeCapError("full model exceeds the simulator qubit cap");
    if (trained.best_iteration < 0) throw ValidationError("trace holds no evaluations");
    if (trained.best_angles.p != p)
        throw ValidationError("trace layer count does not match the requested p");

    const DiagonalHamiltonian ham = DiagonalHamiltonian::from_model(full_model);

    std::set<Tag> penalty;
    for (const Tag& t : full_model.tags())
        if (t.is_penalty()) penalty.insert(t);

    const int num_sources =
        trained.best_angles.variant == AngleSet::Variant::MultiAngle ? trained.best_angles.k : 1;

    TransferResult result;
    for (int src = 0; src < num_sources; ++src) {
        const QaoaParams params = trained.best_angles.slice_params(src);
        Statevector state = run_qaoa(ham, params);
        const SampleSet samples =
            sample(state, shots, derive_seed(seed, {static_cast<std::uint64_t>(src)}));

        TransferSource s;
        s.angles = params.gamma;
        s.angles.insert(s.angles.end(), params.beta.begin(), params.beta.end());
        bool first = true;
        for (const auto& [key, count] : samples.counts) {
            const double e = ham.energies[key];
            if (first || e < s.best_energy) s.best_energy = e;
            first = false;
            bool feas = true;
            if (!penalty.empty()) {
                const Assignment x = assignment_from_mask(key, full_model.num_vars());
                feas = std::abs(full_model.evaluate_tags(penalty, x)) < 1e-9;
            }
            if (feas && (!s.feasible_found || e < s.best_feasible_energy)) {
                s.best_feasible_energy = e;
                s.feasible_found = true;
            }
        }
        if (optimal_energy && s.feasible_found) {
            const double found = std::max(s.best_feasible_energy, *optimal_energy);
            s.ratio = *optimal_energy / found;
        }
        result.sources.push_back(std::move(s));
    }

    for (int src = 0; src < num_sources; ++src) {
        const TransferSource& s = result.sources[src];
        const bool better =
            result.best_source < 0 ||
            (s.feasible_found && !result.feasible_found) ||
            (s.feasible_found == result.feasible_found &&
             (s.feasible_found ? s.best_feasible_energy < result.best_feasible_energy
                               : s.best_energy < result.best_energy));
        if (better) {
            result.best_source = src;
            result.best_energy = s.best_energy;
            result.best_feasible_energy = s.best_feasible_energy;
            result.feasible_found = s.feasible_found;
            result.ratio = s.ratio;
        }
        result.best_energy = std::min(result.best_energy, s.best_energy);
    }
    return result;
}

TrainingTrace train_sampled_circuit(const AnyModel& circuit_model, int p,
                                    const TrainingConfig& cfg,
                                    const std::function<double(const SampleSet&)>& score) {
    const int n = model_num_vars(circuit_model);
    if (n > kMaxSimQubits) throw SizeCapError("circuit model exceeds the simulator qubit cap");
    if (p < 1) throw ValidationError("p must be >= 1");

    const DiagonalHamiltonian ham = DiagonalHamiltonian::from_model(circuit_model);

    const TrainEvalFn eval_fn = [&](std::span<const double> x, const EvalContext& ctx) {
        QaoaParams params;
        params.gamma.assign(x.begin(), x.begin() + p);
        params.beta.assign(x.begin() + p, x.begin() + 2 * p);
        Statevector state = run_qaoa(ham, params);
        const SampleSet samples =
            sample(state, ctx.shots, derive_seed(ctx.eval_seed, {0, kStreamSample}));
        EvalOutcome out;
        out.objective = score(samples);
        out.shots_used = ctx.shots;
        out.scored_samples = samples.shots;
        return out;
    };

    TrainingTrace trace = run_training(AngleSet::Variant::Shared, 1, p, cfg, eval_fn);
    trace.max_qubits = n;
    return trace;
}

TrainingTrace train_multi_objective(const QuboModel& constraint_model,
                                    const std::vector<AssignmentObjective>& objectives, int p,
                                    const TrainingConfig& cfg) {
    if (objectives.empty()) throw ValidationError("multi-objective training needs objectives");

    std::vector<std::vector<ObjectiveVector>> fronts;
    const AnyModel circuit(constraint_model);
    const std::vector<double> table = energy_table(constraint_model);
    const int n = constraint_model.num_vars();

    const auto score = [&](const SampleSet& samples) {
        std::vector<ObjectiveVector> points;
        points.reserve(samples.counts.size());
        for (const auto& [key, count] : samples.counts) {
            const Assignment x = assignment_from_mask(key, n);
            ObjectiveVector v(objectives.size());
            for (std::size_t i = 0; i < objectives.size(); ++i)
                v[i] = objectives[i](x) + table[key];
            points.push_back(std::move(v));
        }
        std::vector<ObjectiveVector> front = pareto_front(points);
        const std::size_t knee = knee_point_index(front);
        double scalar = 0.0;
        for (double v : front[knee]) scalar += v;
        fronts.push_back(std::move(front));
        return scalar;
    };

    TrainingTrace trace = train_sampled_circuit(circuit, p, cfg, score);
    trace.fronts = std::move(fronts);
    return trace;
}

} // namespace qslice
