#include "qslice/compiled.hpp"

namespace qslice {

double CompiledModel::evaluate(const Assignment& x) const {
    if (static_cast<int>(x.size()) != num_vars)
        throw DimensionError("assignment length does not match model");
    double e = offset;
    if (!spin) {
        for (const auto& [v, c] : linear)
            if (x[v]) e += c;
        for (const auto& [i, j, c] : quadratic)
            if (x[i] && x[j]) e += c;
    } else {
        for (const auto& [v, c] : linear)
            e += c * spin_of(x[v]);
        for (const auto& [i, j, c] : quadratic)
            e += c * spin_of(x[i]) * spin_of(x[j]);
    }
    return e;
}

CompiledModel compile(const QuboModel& m) {
    CompiledModel out;
    out.num_vars = m.num_vars();
    out.spin = false;
    out.offset = m.offset();
    out.linear.reserve(m.linear().size());
    for (const auto& [v, t] : m.linear()) out.linear.emplace_back(v, t.coeff);
    out.quadratic.reserve(m.quadratic().size());
    for (const auto& [p, t] : m.quadratic()) out.quadratic.emplace_back(p.first, p.second, t.coeff);
    return out;
}

CompiledModel compile(const IsingModel& m) {
    CompiledModel out;
    out.num_vars = m.num_vars();
    out.spin = true;
    out.offset = m.offset();
    out.linear.reserve(m.fields().size());
    for (const auto& [v, h] : m.fields()) out.linear.emplace_back(v, h);
    out.quadratic.reserve(m.couplings().size());
    for (const auto& [p, J] : m.couplings()) out.quadratic.emplace_back(p.first, p.second, J);
    return out;
}

CompiledModel compile(const AnyModel& m) {
    return std::visit([](const auto& mm) { return compile(mm); }, m);
}

std::vector<double> energy_table(const CompiledModel& m, int max_qubits) {
    if (m.num_vars > max_qubits)
        throw SizeCapError("model too large for an energy table");
    const std::uint64_t dim = std::uint64_t(1) << m.num_vars;
    std::vector<double> table(dim);
    for (std::uint64_t z = 0; z < dim; ++z) table[z] = m.evaluate_mask(z);
    return table;
}

std::vector<double> energy_table(const AnyModel& m, int max_qubits) {
    return energy_table(compile(m), max_qubits);
}
std::vector<double> energy_table(const QuboModel& m, int max_qubits) {
    return energy_table(compile(m), max_qubits);
}
std::vector<double> energy_table(const IsingModel& m, int max_qubits) {
    return energy_table(compile(m), max_qubits);
}

} // namespace qslice
