#include "qslice/slicing.hpp"

#include <algorithm>
#include <map>

namespace qslice {

Assignment SliceDecomposition::restrict_to_slice(const Assignment& x, int a) const {
    const auto& map = index_maps.at(a);
    Assignment local(map.size());
    for (std::size_t j = 0; j < map.size(); ++j) local[j] = x.at(map[j]);
    return local;
}

namespace {

std::vector<int> global_to_local(const std::vector<int>& index_map, int num_vars) {
    std::vector<int> g2l(num_vars, -1);
    for (std::size_t j = 0; j < index_map.size(); ++j) g2l[index_map[j]] = static_cast<int>(j);
    return g2l;
}

} // namespace

SliceDecomposition decompose(const QuboModel& model, const std::set<Tag>& classical_tags) {
    const std::set<Tag> present = model.tags();
    for (const Tag& t : classical_tags)
        if (!present.count(t)) throw ValidationError("classical tag not present in model: " + t.str());

    const InteractionGraph g = build_interaction_graph(model, classical_tags);
    const auto components = connected_components(g);

    SliceDecomposition d;
    d.source = model;

    QuboModel residual(model.num_vars());
    if (model.has_labels())
        for (int v = 0; v < model.num_vars(); ++v)
            if (model.label(v)) residual.set_label(v, *model.label(v));

    std::vector<int> comp_of(model.num_vars(), -1);
    for (std::size_t c = 0; c < components.size(); ++c)
        for (int v : components[c]) comp_of[v] = static_cast<int>(c);

    std::vector<QuboModel> slices;
    std::vector<std::vector<int>> maps;
    std::vector<std::vector<int>> g2l;
    for (const auto& comp : components) {
        QuboModel s(static_cast<int>(comp.size()));
        if (model.has_labels())
            for (std::size_t j = 0; j < comp.size(); ++j)
                if (model.label(comp[j])) s.set_label(static_cast<int>(j), *model.label(comp[j]));
        slices.push_back(std::move(s));
        maps.push_back(comp);
        g2l.push_back(global_to_local(comp, model.num_vars()));
    }

    for (const auto& [v, t] : model.linear()) {
        if (classical_tags.count(t.tag)) {
            residual.add_linear(v, t.coeff, t.tag);
        } else {
            const int c = comp_of[v];
            slices[c].add_linear(g2l[c][v], t.coeff, t.tag);
        }
    }
    for (const auto& [p, t] : model.quadratic()) {
        if (classical_tags.count(t.tag)) {
            residual.add_quadratic(p.first, p.second, t.coeff, t.tag);
        } else {
            const int c = comp_of[p.first];
            // Non-removed quadratic terms define the component graph, so
            // both endpoints are in the same component.
            slices[c].add_quadratic(g2l[c][p.first], g2l[c][p.second], t.coeff, t.tag);
        }
    }

    // Constants follow their tag group: removed groups go to the residual;
    // kept groups go to the slice holding the group's smallest variable
    // (groups without variable support stay in the residual).
    std::map<Tag, int> group_min_var;
    for (const auto& [v, t] : model.linear())
        if (!classical_tags.count(t.tag)) {
            auto [it, ins] = group_min_var.try_emplace(t.tag, v);
            if (!ins) it->second = std::min(it->second, v);
        }
    for (const auto& [p, t] : model.quadratic())
        if (!classical_tags.count(t.tag)) {
            auto [it, ins] = group_min_var.try_emplace(t.tag, p.first);
            if (!ins) it->second = std::min(it->second, p.first);
        }
    for (const auto& [tag, value] : model.constants()) {
        if (classical_tags.count(tag)) {
            residual.add_constant(value, tag);
        } else if (auto it = group_min_var.find(tag); it != group_min_var.end()) {
            const int c = comp_of[it->second];
            slices[c].add_constant(value, tag);
        } else {
            residual.add_constant(value, tag);
        }
    }

    d.residual = std::move(residual);
    for (auto& s : slices) d.slices.emplace_back(std::move(s));
    d.index_maps = std::move(maps);
    return d;
}

SliceDecomposition decompose_by_edge_cut(const IsingModel& model,
                                         const std::vector<VarPair>& cut_edges) {
    std::set<VarPair> cut;
    for (const auto& [i, j] : cut_edges) {
        const VarPair p = make_pair_ordered(i, j);
        if (!model.couplings().count(p))
            throw ValidationError("cut edge is not a coupling of the model");
        cut.insert(p);
    }

    InteractionGraph g = build_interaction_graph(model);
    for (const auto& p : cut) g.edges.erase(p);
    const auto components = connected_components(g);
    if (components.size() < 2)
        throw NotSeparableError("removing the cut edges does not disconnect the model");

    SliceDecomposition d;
    d.source = model;

    IsingModel residual(model.num_vars());
    for (const auto& p : cut) residual.add_coupling(p.first, p.second, model.couplings().at(p));

    std::vector<int> comp_of(model.num_vars(), -1);
    for (std::size_t c = 0; c < components.size(); ++c)
        for (int v : components[c]) comp_of[v] = static_cast<int>(c);

    std::vector<IsingModel> slices;
    std::vector<std::vector<int>> g2l;
    for (const auto& comp : components) {
        slices.emplace_back(static_cast<int>(comp.size()));
        g2l.push_back(global_to_local(comp, model.num_vars()));
        d.index_maps.push_back(comp);
    }

    for (const auto& [v, h] : model.fields()) {
        const int c = comp_of[v];
        slices[c].add_field(g2l[c][v], h);
    }
    for (const auto& [p, J] : model.couplings()) {
        if (cut.count(p)) continue;
        const int c = comp_of[p.first];
        slices[c].add_coupling(g2l[c][p.first], g2l[c][p.second], J);
    }
    // The source offset stays with the first slice so the reconstruction
    // identity holds without double counting.
    if (model.offset() != 0.0) slices[0].add_constant(model.offset());

    d.residual = std::move(residual);
    for (auto& s : slices) d.slices.emplace_back(std::move(s));
    return d;
}

namespace {

// Canonical per-slice view with the vehicle index stripped from labels.
// Keys are (location, step) when labels exist, else (local index, -1).
struct CanonicalSlice {
    std::map<std::pair<int, int>, double> linear;
    std::map<std::pair<std::pair<int, int>, std::pair<int, int>>, double> quadratic;
    double offset = 0.0;

    friend bool operator==(const CanonicalSlice&, const CanonicalSlice&) = default;
};

std::pair<int, int> local_key(const QuboModel& m, int v) {
    if (m.has_labels() && m.label(v)) return {m.label(v)->location, m.label(v)->step};
    return {v, -1};
}

CanonicalSlice canonicalize(const QuboModel& m) {
    CanonicalSlice c;
    c.offset = m.offset();
    for (const auto& [v, t] : m.linear()) c.linear[local_key(m, v)] += t.coeff;
    for (const auto& [p, t] : m.quadratic()) {
        auto a = local_key(m, p.first);
        auto b = local_key(m, p.second);
        if (b < a) std::swap(a, b);
        c.quadratic[{a, b}] += t.coeff;
    }
    return c;
}

CanonicalSlice canonicalize(const IsingModel& m) {
    CanonicalSlice c;
    c.offset = m.offset();
    for (const auto& [v, h] : m.fields()) c.linear[{v, -1}] += h;
    for (const auto& [p, J] : m.couplings())
        c.quadratic[{{p.first, -1}, {p.second, -1}}] += J;
    return c;
}

} // namespace

bool slices_identical(const SliceDecomposition& d) {
    if (d.k() <= 1) return true;
    for (int a = 1; a < d.k(); ++a)
        if (d.slices[a].index() != d.slices[0].index()) return false;
    if (model_num_vars(d.slices[0]) >= 0) {
        for (int a = 1; a < d.k(); ++a)
            if (model_num_vars(d.slices[a]) != model_num_vars(d.slices[0])) return false;
    }
    const CanonicalSlice ref =
        std::visit([](const auto& m) { return canonicalize(m); }, d.slices[0]);
    for (int a = 1; a < d.k(); ++a) {
        const CanonicalSlice c =
            std::visit([](const auto& m) { return canonicalize(m); }, d.slices[a]);
        if (!(c == ref)) return false;
    }
    return true;
}

} // namespace qslice
