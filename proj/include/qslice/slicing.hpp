#pragma once

#include <set>
#include <vector>

#include "qslice/graph.hpp"
#include "qslice/model.hpp"

namespace qslice {

/// A splitting of a model into a residual term group (kept classical) and
/// k sub-models over pairwise-disjoint variable subsets. For every full
/// assignment x:
///   sum_a E_slice_a(x|_a) + E_residual(x) = E_source(x)
/// Slices are ordered by their smallest global variable index; slice a's
/// local variable j corresponds to global index index_maps[a][j].
struct SliceDecomposition {
    AnyModel source;
    AnyModel residual;                       // full variable width
    std::vector<AnyModel> slices;            // local variable spaces
    std::vector<std::vector<int>> index_maps; // local -> global, ascending
    int k() const { return static_cast<int>(slices.size()); }

    /// Restrict a full assignment to slice a's local variables.
    Assignment restrict_to_slice(const Assignment& x, int a) const;
};

/// Remove the classical_tags groups into the residual (all their terms,
/// linear ones included) and slice the rest by connected components.
/// k = 1 is a legal degenerate decomposition.
SliceDecomposition decompose(const QuboModel& model, const std::set<Tag>& classical_tags);

/// Remove explicit coupling terms (e.g. a bridge edge) from an Ising model.
/// Throws NotSeparableError when the remaining graph stays connected.
SliceDecomposition decompose_by_edge_cut(const IsingModel& model,
                                         const std::vector<VarPair>& cut_edges);

/// True iff all slices carry equal coefficient multisets under their
/// label-induced alignment (vehicle index stripped); unlabeled slices are
/// compared by local index. Differing sizes give false, not an error.
bool slices_identical(const SliceDecomposition& d);

} // namespace qslice
