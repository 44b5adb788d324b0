#pragma once

#include <vector>

#include "qslice/errors.hpp"

namespace qslice {

using ObjectiveVector = std::vector<double>;

/// Non-dominated subset under weak dominance (minimization): a dominates b
/// when a <= b componentwise and a != b. Output preserves input order;
/// duplicate points are all kept.
std::vector<ObjectiveVector> pareto_front(const std::vector<ObjectiveVector>& points);

/// Index (into `front`) of the knee point: minimum L2 norm after
/// per-objective min-max normalization over the front. Degenerate ranges
/// normalize to zero; ties resolve to the earliest point.
std::size_t knee_point_index(const std::vector<ObjectiveVector>& front);

} // namespace qslice
