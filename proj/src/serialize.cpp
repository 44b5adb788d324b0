#include "qslice/serialize.hpp"

#include <fstream>

namespace qslice {

json to_json(const QuboModel& m) {
    json j;
    j["kind"] = "qubo";
    j["num_vars"] = m.num_vars();
    json offset = json::object();
    for (const auto& [tag, v] : m.constants()) offset[tag.str()] = v;
    j["offset"] = offset;
    json linear = json::array();
    for (const auto& [v, t] : m.linear())
        linear.push_back({{"v", v}, {"c", t.coeff}, {"tag", t.tag.str()}});
    j["linear"] = linear;
    json quadratic = json::array();
    for (const auto& [p, t] : m.quadratic())
        quadratic.push_back({{"i", p.first}, {"j", p.second}, {"c", t.coeff}, {"tag", t.tag.str()}});
    j["quadratic"] = quadratic;
    if (m.has_labels()) {
        json labels = json::array();
        for (int v = 0; v < m.num_vars(); ++v) {
            if (m.label(v)) {
                const VarLabel& l = *m.label(v);
                labels.push_back({{"v", v}, {"a", l.vehicle}, {"i", l.location}, {"s", l.step}});
            }
        }
        j["labels"] = labels;
    }
    return j;
}

QuboModel qubo_from_json(const json& j) {
    QuboModel m(j.at("num_vars").get<int>());
    for (const auto& [tag, v] : j.at("offset").items())
        m.add_constant(v.get<double>(), Tag::parse(tag));
    for (const auto& t : j.at("linear"))
        m.add_linear(t.at("v").get<int>(), t.at("c").get<double>(),
                     Tag::parse(t.at("tag").get<std::string>()));
    for (const auto& t : j.at("quadratic"))
        m.add_quadratic(t.at("i").get<int>(), t.at("j").get<int>(), t.at("c").get<double>(),
                        Tag::parse(t.at("tag").get<std::string>()));
    if (j.contains("labels"))
        for (const auto& l : j.at("labels"))
            m.set_label(l.at("v").get<int>(),
                        VarLabel{l.at("a").get<int>(), l.at("i").get<int>(), l.at("s").get<int>()});
    return m;
}

json to_json(const IsingModel& m) {
    json j;
    j["kind"] = "ising";
    j["num_vars"] = m.num_vars();
    j["offset"] = m.offset();
    json h = json::array();
    for (const auto& [v, c] : m.fields()) h.push_back({{"v", v}, {"c", c}});
    j["h"] = h;
    json J = json::array();
    for (const auto& [p, c] : m.couplings())
        J.push_back({{"i", p.first}, {"j", p.second}, {"c", c}});
    j["J"] = J;
    return j;
}

IsingModel ising_from_json(const json& j) {
    IsingModel m(j.at("num_vars").get<int>());
    m.add_constant(j.at("offset").get<double>());
    for (const auto& t : j.at("h")) m.add_field(t.at("v").get<int>(), t.at("c").get<double>());
    for (const auto& t : j.at("J"))
        m.add_coupling(t.at("i").get<int>(), t.at("j").get<int>(), t.at("c").get<double>());
    return m;
}

json to_json(const AnyModel& m) {
    return std::visit([](const auto& mm) { return to_json(mm); }, m);
}

AnyModel model_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "qubo") return qubo_from_json(j);
    if (kind == "ising") return ising_from_json(j);
    throw ValidationError("unknown model kind: " + kind);
}

json to_json(const VrpInstance& inst, std::uint64_t seed) {
    json j;
    j["seed"] = seed;
    j["A"] = inst.A;
    json coords = json::array();
    for (const auto& [x, y] : inst.coords) coords.push_back({x, y});
    j["coords"] = coords;
    return j;
}

VrpInstance instance_from_json(const json& j) {
    VrpInstance inst;
    inst.A = j.at("A").get<int>();
    for (const auto& c : j.at("coords"))
        inst.coords.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
    if (inst.coords.empty() || inst.coords[0] != std::pair<int, int>{0, 0})
        throw ValidationError("instance depot must be the first coordinate at (0,0)");
    return inst;
}

json to_json(const SliceDecomposition& d) {
    json j;
    j["source"] = to_json(d.source);
    j["residual"] = to_json(d.residual);
    json slices = json::array();
    for (const auto& s : d.slices) slices.push_back(to_json(s));
    j["slices"] = slices;
    j["index_maps"] = d.index_maps;
    return j;
}

SliceDecomposition decomposition_from_json(const json& j) {
    SliceDecomposition d;
    d.source = model_from_json(j.at("source"));
    d.residual = model_from_json(j.at("residual"));
    for (const auto& s : j.at("slices")) d.slices.push_back(model_from_json(s));
    d.index_maps = j.at("index_maps").get<std::vector<std::vector<int>>>();
    return d;
}

namespace {

const char* variant_name(AngleSet::Variant v) {
    return v == AngleSet::Variant::Shared ? "shared" : "multi-angle";
}

AngleSet::Variant variant_from_name(const std::string& s) {
    if (s == "shared") return AngleSet::Variant::Shared;
    if (s == "multi-angle") return AngleSet::Variant::MultiAngle;
    throw ValidationError("unknown angle variant: " + s);
}

} // namespace

json to_json(const TrainingTrace& t) {
    json j;
    j["variant"] = variant_name(t.variant);
    j["k"] = t.k;
    j["p"] = t.p;
    j["best_objective"] = t.best_objective;
    j["best_iteration"] = t.best_iteration;
    j["best_angles"] = t.best_angles.flat;
    j["best_angles_mod_2pi"] = t.best_angles_mod_2pi;
    j["converged"] = t.converged;
    j["aborted"] = t.aborted;
    j["max_qubits"] = t.max_qubits;
    j["total_shots"] = t.total_shots;
    j["shots_per_eval"] = t.shots_per_eval;
    j["subsamples_per_slice"] = t.subsamples_per_slice;
    json iters = json::array();
    for (const auto& it : t.iterations) {
        iters.push_back({{"angles", it.angles},
                         {"objective", it.objective},
                         {"shots", it.shots},
                         {"scored_samples", it.scored_samples},
                         {"eval_seed", it.eval_seed}});
    }
    j["iterations"] = iters;
    if (!t.fronts.empty()) j["fronts"] = t.fronts;
    return j;
}

TrainingTrace trace_from_json(const json& j) {
    TrainingTrace t;
    t.variant = variant_from_name(j.at("variant").get<std::string>());
    t.k = j.at("k").get<int>();
    t.p = j.at("p").get<int>();
    t.best_objective = j.at("best_objective").get<double>();
    t.best_iteration = j.at("best_iteration").get<int>();
    t.best_angles.variant = t.variant;
    t.best_angles.k = t.variant == AngleSet::Variant::MultiAngle ? t.k : 1;
    t.best_angles.p = t.p;
    t.best_angles.flat = j.at("best_angles").get<std::vector<double>>();
    t.best_angles_mod_2pi = j.at("best_angles_mod_2pi").get<std::vector<double>>();
    t.converged = j.at("converged").get<bool>();
    t.aborted = j.at("aborted").get<bool>();
    t.max_qubits = j.at("max_qubits").get<int>();
    t.total_shots = j.at("total_shots").get<long long>();
    t.shots_per_eval = j.at("shots_per_eval").get<long long>();
    t.subsamples_per_slice = j.at("subsamples_per_slice").get<int>();
    for (const auto& it : j.at("iterations")) {
        IterationRecord rec;
        rec.angles = it.at("angles").get<std::vector<double>>();
        rec.objective = it.at("objective").get<double>();
        rec.shots = it.at("shots").get<long long>();
        rec.scored_samples = it.at("scored_samples").get<long long>();
        rec.eval_seed = it.at("eval_seed").get<std::uint64_t>();
        t.iterations.push_back(std::move(rec));
    }
    if (j.contains("fronts"))
        t.fronts = j.at("fronts").get<std::vector<std::vector<ObjectiveVector>>>();
    return t;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write " + path);
    out << j.dump(2) << "\n";
}

json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot read " + path);
    json j;
    in >> j;
    return j;
}

} // namespace qslice
