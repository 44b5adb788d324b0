#include "qslice/model.hpp"

#include <cmath>

namespace qslice {

QuboModel::QuboModel(int num_vars) : num_vars_(num_vars) {
    if (num_vars < 0) throw ValidationError("num_vars must be >= 0");
}

void QuboModel::check_var(int v) const {
    if (v < 0 || v >= num_vars_) throw ValidationError("variable index out of range");
}

void QuboModel::add_linear(int v, double coeff, const Tag& tag) {
    check_var(v);
    if (!std::isfinite(coeff)) throw ValidationError("coefficient must be finite");
    auto [it, inserted] = linear_.try_emplace(v, Term{coeff, tag});
    if (!inserted) {
        if (it->second.tag != tag) throw ValidationError("conflicting tag for linear term");
        it->second.coeff += coeff;
    }
}

void QuboModel::add_quadratic(int i, int j, double coeff, const Tag& tag) {
    check_var(i);
    check_var(j);
    if (!std::isfinite(coeff)) throw ValidationError("coefficient must be finite");
    VarPair p = make_pair_ordered(i, j);
    auto [it, inserted] = quadratic_.try_emplace(p, Term{coeff, tag});
    if (!inserted) {
        if (it->second.tag != tag) throw ValidationError("conflicting tag for quadratic term");
        it->second.coeff += coeff;
    }
}

void QuboModel::add_constant(double value, const Tag& tag) {
    if (!std::isfinite(value)) throw ValidationError("constant must be finite");
    constants_[tag] += value;
}

double QuboModel::offset() const {
    double c = 0.0;
    for (const auto& [tag, v] : constants_) c += v;
    return c;
}

std::set<Tag> QuboModel::tags() const {
    std::set<Tag> out;
    for (const auto& [v, t] : linear_) out.insert(t.tag);
    for (const auto& [p, t] : quadratic_) out.insert(t.tag);
    for (const auto& [tag, v] : constants_) out.insert(tag);
    return out;
}

double QuboModel::evaluate(const Assignment& x) const {
    if (static_cast<int>(x.size()) != num_vars_)
        throw DimensionError("assignment length does not match model");
    double e = offset();
    for (const auto& [v, t] : linear_)
        if (x[v]) e += t.coeff;
    for (const auto& [p, t] : quadratic_)
        if (x[p.first] && x[p.second]) e += t.coeff;
    return e;
}

double QuboModel::evaluate_tag_group(const Tag& tag, const Assignment& x) const {
    if (static_cast<int>(x.size()) != num_vars_)
        throw DimensionError("assignment length does not match model");
    double e = 0.0;
    if (auto it = constants_.find(tag); it != constants_.end()) e += it->second;
    for (const auto& [v, t] : linear_)
        if (t.tag == tag && x[v]) e += t.coeff;
    for (const auto& [p, t] : quadratic_)
        if (t.tag == tag && x[p.first] && x[p.second]) e += t.coeff;
    return e;
}

double QuboModel::evaluate_tags(const std::set<Tag>& tags, const Assignment& x) const {
    if (static_cast<int>(x.size()) != num_vars_)
        throw DimensionError("assignment length does not match model");
    double e = 0.0;
    for (const auto& [tag, v] : constants_)
        if (tags.count(tag)) e += v;
    for (const auto& [v, t] : linear_)
        if (tags.count(t.tag) && x[v]) e += t.coeff;
    for (const auto& [p, t] : quadratic_)
        if (tags.count(t.tag) && x[p.first] && x[p.second]) e += t.coeff;
    return e;
}

const std::optional<VarLabel>& QuboModel::label(int v) const {
    static const std::optional<VarLabel> none;
    if (labels_.empty()) return none;
    check_var(v);
    return labels_[v];
}

void QuboModel::set_label(int v, VarLabel l) {
    check_var(v);
    if (labels_.empty()) labels_.resize(num_vars_);
    if (labels_[v].has_value()) throw ValidationError("variable already labeled");
    labels_[v] = l;
}

IsingModel::IsingModel(int num_vars) : num_vars_(num_vars) {
    if (num_vars < 0) throw ValidationError("num_vars must be >= 0");
}

void IsingModel::check_var(int v) const {
    if (v < 0 || v >= num_vars_) throw ValidationError("variable index out of range");
}

void IsingModel::add_field(int v, double h) {
    check_var(v);
    if (!std::isfinite(h)) throw ValidationError("coefficient must be finite");
    h_[v] += h;
}

void IsingModel::add_coupling(int i, int j, double J) {
    check_var(i);
    check_var(j);
    if (!std::isfinite(J)) throw ValidationError("coefficient must be finite");
    J_[make_pair_ordered(i, j)] += J;
}

double IsingModel::evaluate(const Assignment& x) const {
    if (static_cast<int>(x.size()) != num_vars_)
        throw DimensionError("assignment length does not match model");
    double e = offset_;
    for (const auto& [v, h] : h_) e += h * spin_of(x[v]);
    for (const auto& [p, J] : J_) e += J * spin_of(x[p.first]) * spin_of(x[p.second]);
    return e;
}

int model_num_vars(const AnyModel& m) {
    return std::visit([](const auto& mm) { return mm.num_vars(); }, m);
}

double model_evaluate(const AnyModel& m, const Assignment& x) {
    return std::visit([&](const auto& mm) { return mm.evaluate(x); }, m);
}

IsingModel qubo_to_ising(const QuboModel& q) {
    // x = (1 - s) / 2
    IsingModel out(q.num_vars());
    out.add_constant(q.offset());
    for (const auto& [v, t] : q.linear()) {
        out.add_constant(t.coeff / 2.0);
        out.add_field(v, -t.coeff / 2.0);
    }
    for (const auto& [p, t] : q.quadratic()) {
        out.add_constant(t.coeff / 4.0);
        out.add_field(p.first, -t.coeff / 4.0);
        out.add_field(p.second, -t.coeff / 4.0);
        out.add_coupling(p.first, p.second, t.coeff / 4.0);
    }
    return out;
}

QuboModel ising_to_qubo(const IsingModel& m) {
    // s = 1 - 2x
    QuboModel out(m.num_vars());
    out.add_constant(m.offset());
    for (const auto& [v, h] : m.fields()) {
        out.add_constant(h);
        out.add_linear(v, -2.0 * h);
    }
    for (const auto& [p, J] : m.couplings()) {
        out.add_constant(J);
        out.add_linear(p.first, -2.0 * J);
        out.add_linear(p.second, -2.0 * J);
        out.add_quadratic(p.first, p.second, 4.0 * J);
    }
    return out;
}

double penalty_energy(const QuboModel& model, const Assignment& x) {
    std::set<Tag> penalty;
    for (const Tag& t : model.tags())
        if (t.is_penalty()) penalty.insert(t);
    if (penalty.empty()) {
        if (static_cast<int>(x.size()) != model.num_vars())
            throw DimensionError("assignment length does not match model");
        return 0.0;
    }
    return model.evaluate_tags(penalty, x);
}

Assignment assignment_from_mask(std::uint64_t mask, int n) {
    Assignment x(n);
    for (int i = 0; i < n; ++i) x[i] = (mask >> i) & 1u;
    return x;
}

std::uint64_t mask_from_assignment(const Assignment& x) {
    if (x.size() > 64) throw SizeCapError("assignment too wide for mask form");
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i]) m |= std::uint64_t(1) << i;
    return m;
}

std::string bitstring_from_mask(std::uint64_t mask, int n) {
    std::string s(n, '0');
    for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1u) s[i] = '1';
    return s;
}

std::uint64_t mask_from_bitstring(const std::string& s) {
    if (s.size() > 64) throw SizeCapError("bitstring too wide");
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            m |= std::uint64_t(1) << i;
        else if (s[i] != '0')
            throw ValidationError("bitstring must be 0/1");
    }
    return m;
}

} // namespace qslice
