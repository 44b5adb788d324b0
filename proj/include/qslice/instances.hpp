#pragma once

#include <cstdint>
#include <vector>

#include "qslice/vrp.hpp"

namespace qslice {

struct GeneratorConfig {
    int n = 3;             // customer locations
    int A = 2;             // vehicles
    int grid_half = 50;    // coordinates clamp to [-grid_half, grid_half]
    double sigma = 20.0;   // Gaussian std dev per axis
    std::uint64_t seed = 0;
};

/// Gaussian VRP instance on the discrete grid: depot at (0,0), customer
/// coordinates drawn i.i.d. from a rounded N(0, sigma^2) per axis, clamped
/// to the grid and re-drawn on collision. Deterministic per seed.
VrpInstance generate_vrp(const GeneratorConfig& cfg);

enum class BaselineMethod { RouteEnum, NearestNeighbor2Opt };

struct BaselineResult {
    double cost = 0.0;                        // W-normalized route cost
    std::vector<std::vector<int>> routes;     // [vehicle][step] -> location
    BaselineMethod method = BaselineMethod::RouteEnum;
    double qubo_energy = 0.0;                 // energy of the encoded solution
    Assignment encoded;                       // the corresponding assignment
};

/// Exhaustive search over feasible plans: every vehicle occupies one
/// location per step (n+1 steps), each customer is visited exactly once,
/// transitions s -> s+1 are scored for s = 0..n-1 with costs normalized by
/// W. Guarded at n <= 8.
BaselineResult route_enum_optimal(const VrpInstance& inst);

/// Greedy nearest-neighbor assignment followed by per-route 2-opt until no
/// reversal improves the cost. The construction is deterministic, so any
/// seed reproduces the same result.
BaselineResult heuristic_baseline(const VrpInstance& inst, std::uint64_t seed = 0);

/// optimal / found, in (0, 1]; 1.0 means the optimum was found. Requires
/// optimal > 0 and found >= optimal - 1e-9.
double approximation_ratio(double found_energy, double optimal_energy);

} // namespace qslice
