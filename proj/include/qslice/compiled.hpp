#pragma once

#include <cstdint>
#include <tuple>
#include <vector>

#include "qslice/model.hpp"

namespace qslice {

/// Flattened term arrays for fast repeated evaluation (enumeration,
/// energy tables, sample scoring). Semantics match the source model.
struct CompiledModel {
    int num_vars = 0;
    bool spin = false; // evaluate spins s = 1 - 2x instead of bits
    double offset = 0.0;
    std::vector<std::pair<int, double>> linear;
    std::vector<std::tuple<int, int, double>> quadratic;

    double evaluate_mask(std::uint64_t mask) const {
        double e = offset;
        if (!spin) {
            for (const auto& [v, c] : linear)
                if ((mask >> v) & 1u) e += c;
            for (const auto& [i, j, c] : quadratic)
                if (((mask >> i) & 1u) && ((mask >> j) & 1u)) e += c;
        } else {
            for (const auto& [v, c] : linear)
                e += ((mask >> v) & 1u) ? -c : c;
            for (const auto& [i, j, c] : quadratic)
                e += (((mask >> i) ^ (mask >> j)) & 1u) ? -c : c;
        }
        return e;
    }

    double evaluate(const Assignment& x) const;
};

CompiledModel compile(const QuboModel& m);
CompiledModel compile(const IsingModel& m);
CompiledModel compile(const AnyModel& m);

/// energies[z] = model energy of the assignment with bit i = (z >> i) & 1.
/// Caps at `max_qubits` (default 26) to bound the 2^n table.
std::vector<double> energy_table(const CompiledModel& m, int max_qubits = 26);
std::vector<double> energy_table(const AnyModel& m, int max_qubits = 26);
std::vector<double> energy_table(const QuboModel& m, int max_qubits = 26);
std::vector<double> energy_table(const IsingModel& m, int max_qubits = 26);

} // namespace qslice
