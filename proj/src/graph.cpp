#include "qslice/graph.hpp"

#include <algorithm>

namespace qslice {

InteractionGraph build_interaction_graph(const QuboModel& m, const std::set<Tag>& excluded_tags) {
    const std::set<Tag> present = m.tags();
    for (const Tag& t : excluded_tags)
        if (!present.count(t)) throw ValidationError("excluded tag not present in model: " + t.str());

    InteractionGraph g;
    g.num_nodes = m.num_vars();
    for (const auto& [p, term] : m.quadratic()) {
        if (term.coeff == 0.0) continue;
        if (excluded_tags.count(term.tag)) continue;
        g.edges.insert(p);
    }
    return g;
}

InteractionGraph build_interaction_graph(const IsingModel& m, const std::set<Tag>& excluded_tags) {
    if (!excluded_tags.empty())
        throw ValidationError("Ising models carry no term tags to exclude");
    InteractionGraph g;
    g.num_nodes = m.num_vars();
    for (const auto& [p, J] : m.couplings())
        if (J != 0.0) g.edges.insert(p);
    return g;
}

InteractionGraph build_interaction_graph(const AnyModel& m, const std::set<Tag>& excluded_tags) {
    return std::visit([&](const auto& mm) { return build_interaction_graph(mm, excluded_tags); }, m);
}

namespace {

std::vector<std::vector<int>> adjacency(const InteractionGraph& g) {
    std::vector<std::vector<int>> adj(g.num_nodes);
    for (const auto& [i, j] : g.edges) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());
    return adj;
}

} // namespace

std::vector<std::vector<int>> connected_components(const InteractionGraph& g) {
    const auto adj = adjacency(g);
    std::vector<int> comp(g.num_nodes, -1);
    std::vector<std::vector<int>> components;

    for (int start = 0; start < g.num_nodes; ++start) {
        if (comp[start] != -1) continue;
        const int id = static_cast<int>(components.size());
        components.emplace_back();
        std::vector<int> stack{start};
        comp[start] = id;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            components[id].push_back(u);
            for (int v : adj[u]) {
                if (comp[v] == -1) {
                    comp[v] = id;
                    stack.push_back(v);
                }
            }
        }
        std::sort(components[id].begin(), components[id].end());
    }
    // Scanning starts in index order, so components are already ordered by
    // their smallest contained node.
    return components;
}

std::vector<VarPair> find_bridges(const InteractionGraph& g) {
    const auto adj = adjacency(g);
    const int n = g.num_nodes;
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<VarPair> bridges;
    int timer = 0;

    // Iterative DFS; parent is tracked per frame so parallel edges are not
    // an issue (the graph is simple by construction).
    struct Frame {
        int node;
        int parent;
        std::size_t next = 0;
    };

    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        std::vector<Frame> stack;
        stack.push_back({root, -1});
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next < adj[f.node].size()) {
                const int v = adj[f.node][f.next++];
                if (v == f.parent) continue;
                if (disc[v] == -1) {
                    disc[v] = low[v] = timer++;
                    stack.push_back({v, f.node});
                } else {
                    low[f.node] = std::min(low[f.node], disc[v]);
                }
            } else {
                const int u = f.node;
                const int p = f.parent;
                stack.pop_back();
                if (p != -1) {
                    low[p] = std::min(low[p], low[u]);
                    if (low[u] > disc[p]) bridges.push_back(make_pair_ordered(p, u));
                }
            }
        }
    }

    std::sort(bridges.begin(), bridges.end());
    return bridges;
}

} // namespace qslice
