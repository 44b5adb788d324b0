#pragma once

#include <set>
#include <vector>

#include "qslice/model.hpp"

namespace qslice {

/// Variable-interaction graph: one node per variable, one edge per
/// quadratic term surviving the tag filter.
struct InteractionGraph {
    int num_nodes = 0;
    std::set<VarPair> edges;
};

/// Edges from quadratic terms whose tag is not excluded. Excluded tags
/// must exist in the model. IsingModel carries no tags, so its overload
/// only accepts an empty exclusion set.
InteractionGraph build_interaction_graph(const QuboModel& m, const std::set<Tag>& excluded_tags = {});
InteractionGraph build_interaction_graph(const IsingModel& m, const std::set<Tag>& excluded_tags = {});
InteractionGraph build_interaction_graph(const AnyModel& m, const std::set<Tag>& excluded_tags = {});

/// Maximal connected node sets, isolated nodes as singletons, ordered by
/// smallest contained index; nodes sorted within each component.
std::vector<std::vector<int>> connected_components(const InteractionGraph& g);

/// Edges whose removal increases the component count (DFS low-link).
std::vector<VarPair> find_bridges(const InteractionGraph& g);

} // namespace qslice
