#pragma once

#include <utility>
#include <vector>

#include "qslice/model.hpp"

namespace qslice {

/// MaxCut Ising Hamiltonian over a simple undirected graph: J_ij = +1 per
/// edge, h = 0, so minimizing the energy maximizes the cut. Pass
/// antiferromagnetic=false to emit the -sum s_i s_j sign instead.
IsingModel build_maxcut_ising(int num_nodes, const std::vector<std::pair<int, int>>& edges,
                              bool antiferromagnetic = true);

} // namespace qslice
