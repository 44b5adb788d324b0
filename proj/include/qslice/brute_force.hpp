#pragma once

#include <cstdint>

#include "qslice/compiled.hpp"
#include "qslice/model.hpp"

namespace qslice {

struct BruteForceResult {
    double energy = 0.0;
    Assignment argmin;
    long long degeneracy = 0;
};

/// Exact global minimum by exhaustive enumeration over 2^n assignments.
/// Ties break to the lexicographically smallest bitstring (variable 0
/// compared first); degeneracy counts all assignments at the minimum.
/// Deterministic regardless of internal parallelism.
BruteForceResult brute_force_min(const CompiledModel& m, int max_vars = 26);
BruteForceResult brute_force_min(const QuboModel& m, int max_vars = 26);
BruteForceResult brute_force_min(const IsingModel& m, int max_vars = 26);
BruteForceResult brute_force_min(const AnyModel& m, int max_vars = 26);

} // namespace qslice
