#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qslice/optimize.hpp"
#include "qslice/pareto.hpp"
#include "qslice/slicing.hpp"
#include "qslice/statevector.hpp"
#include "qslice/vrp.hpp"

namespace qslice {

/// Trainable angle layout. Shared keeps one (gamma, beta) pair per layer
/// (2p values); MultiAngle keeps one pair per layer per slice (2kp values).
/// Flat order is slice-major, layer-minor: per slice all gammas (layer
/// 1..p) then all betas.
struct AngleSet {
    enum class Variant { Shared, MultiAngle };

    Variant variant = Variant::Shared;
    int k = 1;
    int p = 1;
    std::vector<double> flat;

    static AngleSet shared(const QaoaParams& params);
    static AngleSet multi_angle(const std::vector<QaoaParams>& per_slice);
    static AngleSet zeros(Variant variant, int k, int p);

    int dimension() const { return variant == Variant::Shared ? 2 * p : 2 * k * p; }
    QaoaParams slice_params(int slice) const;

    /// Append an identity layer (gamma = beta = 0) to every block; the
    /// produced p+1 circuit prepares exactly the same state.
    AngleSet with_zero_layer_appended() const;

    void validate() const;
};

struct IterationRecord {
    std::vector<double> angles;
    double objective = 0.0;
    long long shots = 0;          // qubit measurements consumed
    long long scored_samples = 0; // global samples scored with the full model
    std::uint64_t eval_seed = 0;
};

struct TrainingTrace {
    AngleSet::Variant variant = AngleSet::Variant::Shared;
    int k = 1;
    int p = 1;
    std::vector<IterationRecord> iterations;
    AngleSet best_angles;
    std::vector<double> best_angles_mod_2pi; // display copy
    double best_objective = 0.0;
    int best_iteration = -1;
    bool converged = false;
    bool aborted = false;
    int max_qubits = 0;
    long long total_shots = 0;
    long long shots_per_eval = 0;
    int subsamples_per_slice = 0;
    // Multi-objective runs record the per-iteration Pareto fronts.
    std::vector<std::vector<ObjectiveVector>> fronts;
};

/// Warm start: initial angles plus the replay settings of the evaluation
/// that produced them. Evaluation 0 replays with these settings, so the
/// incumbent of the warm-started run starts exactly at the parent's best.
struct WarmStart {
    AngleSet angles;
    std::uint64_t eval_seed = 0;
    long long shots = 0;
    int subsamples = 0;
    bool replay = true;
};

struct TrainingConfig {
    OptimizerKind optimizer = OptimizerKind::NelderMead;
    int max_iters = 200;            // objective evaluation budget
    long long shots_per_eval = 0;   // 0 resolves to 10^(p+1)
    int subsamples_per_slice = 100; // m
    std::uint64_t seed = 0;
    double convergence_tol = 1e-3;
    enum class AngleInit { Zeros, UniformRandom } angle_init = AngleInit::Zeros;
    // Literal reading of the single-slice product: reuse one subsample for
    // every Cartesian factor instead of independent re-draws.
    bool single_slice_same_subsample = false;
    long long recombine_cap = 1'000'000;
    std::optional<WarmStart> warm_start;
};

/// Cartesian-product recombination: global bitstrings assembled by
/// scattering each slice's bits through its index map; multiplicities
/// multiply. The product size (product of totals) must stay within cap.
/// Every variable in [0, num_vars) must be covered by exactly one map;
/// num_vars = -1 derives the width from the maps.
SampleSet recombine(const std::vector<SampleSet>& slice_samples,
                    const std::vector<std::vector<int>>& index_maps, int num_vars = -1,
                    long long cap = 1'000'000);

/// Count-weighted mean energy of the multiset; equals <S|H|S> for
/// diagonal H. Throws on an empty set.
double objective_mean_energy(const SampleSet& samples, const QuboModel& model);
double objective_mean_energy(const SampleSet& samples, const IsingModel& model);
double objective_mean_energy(const SampleSet& samples, const AnyModel& model);
double objective_mean_energy(const SampleSet& samples, const CompiledModel& model);
double objective_mean_energy(const SampleSet& samples, const std::vector<double>& energy_table);

/// Feasibility-first subsampling: up to m draws, slice-feasible draws
/// chosen uniformly at random (without replacement, with multiplicity);
/// any remainder is filled with infeasible draws in ascending slice-energy
/// order. |output| = min(m, shots). Deterministic per seed.
SampleSet subsample(const SampleSet& slice_samples, const QuboModel& slice_model, int m,
                    std::uint64_t seed);
SampleSet subsample(const SampleSet& slice_samples, const AnyModel& slice_model, int m,
                    std::uint64_t seed);

/// Vanilla QAOA on the full model: shared angles, objective = mean sampled
/// energy. Models over the simulator cap raise SizeCapError (use pQAOA).
TrainingTrace train_qaoa(const QuboModel& full_model, int p, const TrainingConfig& cfg);
TrainingTrace train_qaoa(const AnyModel& full_model, int p, const TrainingConfig& cfg);

/// Multi-angle pQAOA: independent angles per slice (2kp parameters). Per
/// evaluation each slice runs its own circuit, is sampled shots times,
/// subsampled to m, recombined, and scored with the full source model
/// (residual included).
TrainingTrace train_multi_angle_pqaoa(const SliceDecomposition& d, int p,
                                      const TrainingConfig& cfg);

/// Single-slice pQAOA (requires identical slices): one slice is simulated
/// and sampled; its subsamples are recombined with themselves k times
/// (independent re-draws per factor unless configured otherwise). Uses one
/// slice's qubit width only.
TrainingTrace train_single_slice_pqaoa(const SliceDecomposition& d, int p,
                                       const TrainingConfig& cfg);

struct TransferSource {
    std::vector<double> angles; // [gamma..., beta...]
    double best_energy = 0.0;
    double best_feasible_energy = 0.0;
    bool feasible_found = false;
    double ratio = 0.0; // 0 when no feasible sample or no optimum given
};

struct TransferResult {
    std::vector<TransferSource> sources;
    int best_source = -1;
    double best_energy = 0.0;
    double best_feasible_energy = 0.0;
    bool feasible_found = false;
    double ratio = 0.0;
};

/// Evaluate pQAOA-trained angles on the full-model QAOA circuit: one run
/// per angle source (per slice for multi-angle, the shared set otherwise),
/// sampled `shots` times; reports the best result across sources.
TransferResult transfer_evaluate(const QuboModel& full_model, const TrainingTrace& trained,
                                 int p, long long shots, std::uint64_t seed,
                                 std::optional<double> optimal_energy = std::nullopt);

/// Generic sampled-circuit training loop: QAOA ansatz over an arbitrary
/// diagonal model, scored by an arbitrary function of the sample multiset.
TrainingTrace train_sampled_circuit(const AnyModel& circuit_model, int p,
                                    const TrainingConfig& cfg,
                                    const std::function<double(const SampleSet&)>& score);

using AssignmentObjective = std::function<double(const Assignment&)>;

/// Multi-objective training: the circuit implements the constraint
/// Hamiltonian only; every sample is scored as (f_i(x) + H(x))_i, the
/// per-evaluation Pareto front is recorded and the optimizer minimizes the
/// sum of the knee point's components (for one objective this is the
/// minimum sampled f_1 + H).
TrainingTrace train_multi_objective(const QuboModel& constraint_model,
                                    const std::vector<AssignmentObjective>& objectives, int p,
                                    const TrainingConfig& cfg);

/// Resolved shots per evaluation: explicit config value or 10^(p+1).
long long resolve_shots(const TrainingConfig& cfg, int p);

} // namespace qslice
