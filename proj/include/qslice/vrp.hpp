#pragma once

#include <string>
#include <vector>

#include "qslice/model.hpp"

namespace qslice {

/// Vehicle routing instance. coords[0] is the depot at (0,0); the n
/// customer locations follow. Distances are the L2 norm on integer
/// coordinates; W is the largest pairwise distance.
struct VrpInstance {
    std::vector<std::pair<int, int>> coords; // [0] = depot
    int A = 1;                               // vehicles

    int n() const { return static_cast<int>(coords.size()) - 1; } // customers
    int num_locations() const { return static_cast<int>(coords.size()); }

    std::vector<std::vector<double>> distance_matrix() const;
    double max_distance() const; // W
};

/// Flat index of x_{a,i,s}: a * (n+1)^2 + i * (n+1) + s.
inline int vrp_var_index(int a, int i, int s, int n) {
    return a * (n + 1) * (n + 1) + i * (n + 1) + s;
}

/// Build the VRP QUBO: transit objective (tag objective), per-vehicle step
/// one-hot penalties (tag vehicle(a)) and the customer-visit penalty
/// (tag coupling). Transition sums run s = 0..n-1; routes need not return
/// to the depot. A*(n+1)^2 labeled variables.
QuboModel build_vrp_qubo(const VrpInstance& inst);

/// Decoded view of an assignment under the VRP encoding.
struct RouteSolution {
    // step_locations[a][s] = locations vehicle a occupies at step s
    // (exactly one per step iff the one-hot constraints hold).
    std::vector<std::vector<std::vector<int>>> step_locations;
    bool feasible = false;
    std::vector<std::string> violated_constraints; // "onehot:a=..,s=..", "visit:i=.."
};

RouteSolution decode_vrp(const Assignment& x, const VrpInstance& inst);

/// True iff every penalty-tagged group of the slice model vanishes at x.
/// Feasible solutions of the global Hamiltonian are feasible per slice.
bool feasible_for_slice(const QuboModel& slice_model, const Assignment& x);

} // namespace qslice
