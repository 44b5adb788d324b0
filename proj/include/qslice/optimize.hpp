#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qslice/errors.hpp"

namespace qslice {

enum class OptimizerKind { NelderMead, Spsa };

/// Objective callback; eval_index counts evaluations from 0 and lets
/// stochastic objectives derive a reproducible noise stream per call.
using ObjectiveFn = std::function<double(std::span<const double>, int eval_index)>;

struct MinimizeOptions {
    OptimizerKind kind = OptimizerKind::NelderMead;
    int max_evals = 200;      // objective evaluation budget
    double tol = 1e-6;        // stop when the simplex objective spread drops below
    double init_step = 0.5;   // initial simplex displacement per coordinate
    int reeval_interval = 10; // re-evaluate the incumbent every k steps (noisy objectives)
    std::uint64_t seed = 0;   // SPSA perturbation stream
};

struct EvalRecord {
    std::vector<double> x;
    double value = 0.0;
};

struct MinimizeResult {
    std::vector<double> x_best;
    double f_best = 0.0;
    int best_eval = -1;
    int evals = 0;
    bool converged = false;
    bool aborted = false; // objective returned a non-finite value
    std::vector<EvalRecord> history;
};

/// Derivative-free minimization. Nelder-Mead uses reflection 1, expansion
/// 2, contraction 0.5, shrink 0.5. Aborts (with the trace so far) if the
/// objective returns a non-finite value.
MinimizeResult minimize(const ObjectiveFn& f, std::vector<double> x0,
                        const MinimizeOptions& options);

/// Reduce angles into [0, 2*pi) for display. Reported values only; stored
/// angles stay unreduced because non-integer spectra are not 2*pi-periodic
/// in gamma.
std::vector<double> angles_mod_2pi(const std::vector<double>& angles);

} // namespace qslice
