#include "qslice/maxcut.hpp"

#include <set>

namespace qslice {

IsingModel build_maxcut_ising(int num_nodes, const std::vector<std::pair<int, int>>& edges,
                              bool antiferromagnetic) {
    IsingModel m(num_nodes);
    std::set<VarPair> seen;
    for (const auto& [i, j] : edges) {
        VarPair p = make_pair_ordered(i, j);
        if (p.second >= num_nodes || p.first < 0)
            throw ValidationError("edge endpoint out of range");
        if (!seen.insert(p).second) throw ValidationError("duplicate edge");
        m.add_coupling(p.first, p.second, antiferromagnetic ? 1.0 : -1.0);
    }
    return m;
}

} // namespace qslice
