#include "qslice/statevector.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

#include "qslice/rng.hpp"

namespace qslice {

namespace {
std::atomic<int> g_peak_qubits{0};

void note_allocation(int n) {
    int prev = g_peak_qubits.load(std::memory_order_relaxed);
    while (prev < n && !g_peak_qubits.compare_exchange_weak(prev, n, std::memory_order_relaxed)) {
    }
}
} // namespace

int peak_qubits_allocated() { return g_peak_qubits.load(std::memory_order_relaxed); }
void reset_peak_qubits() { g_peak_qubits.store(0, std::memory_order_relaxed); }

DiagonalHamiltonian DiagonalHamiltonian::from_model(const AnyModel& m, int max_qubits) {
    DiagonalHamiltonian h;
    h.n = model_num_vars(m);
    h.energies = energy_table(m, max_qubits);
    return h;
}
DiagonalHamiltonian DiagonalHamiltonian::from_model(const QuboModel& m, int max_qubits) {
    return from_model(AnyModel(m), max_qubits);
}
DiagonalHamiltonian DiagonalHamiltonian::from_model(const IsingModel& m, int max_qubits) {
    return from_model(AnyModel(m), max_qubits);
}

Statevector::Statevector(int n) : n_(n) {
    if (n < 1) throw ValidationError("statevector needs at least one qubit");
    if (n > kMaxSimQubits) throw SizeCapError("qubit count exceeds simulator cap");
    note_allocation(n);
    amps_.assign(std::size_t(1) << n, {0.0, 0.0});
    amps_[0] = {1.0, 0.0};
}

double Statevector::norm_sq() const {
    double s = 0.0;
    for (const auto& a : amps_) s += std::norm(a);
    return s;
}

Statevector init_plus(int n) {
    Statevector state(n);
    const double amp = std::pow(2.0, -0.5 * n);
    std::fill(state.amplitudes().begin(), state.amplitudes().end(),
              std::complex<double>(amp, 0.0));
    return state;
}

void apply_phase_separator(Statevector& state, const DiagonalHamiltonian& h, double gamma) {
    if (h.n != state.num_qubits() ||
        h.energies.size() != state.dim())
        throw DimensionError("Hamiltonian dimension does not match state");
    auto& amps = state.amplitudes();
    for (std::size_t z = 0; z < amps.size(); ++z) {
        const double phi = -gamma * h.energies[z];
        amps[z] *= std::complex<double>(std::cos(phi), std::sin(phi));
    }
}

void apply_mixer(Statevector& state, double beta) {
    const double c = std::cos(beta);
    const double s = std::sin(beta);
    const std::complex<double> off(0.0, -s); // exp(-i beta sx) = [[c, -is], [-is, c]]
    auto& amps = state.amplitudes();
    const int n = state.num_qubits();
    for (int q = 0; q < n; ++q) {
        const std::size_t bit = std::size_t(1) << q;
        for (std::size_t base = 0; base < amps.size(); ++base) {
            if (base & bit) continue;
            const std::complex<double> a0 = amps[base];
            const std::complex<double> a1 = amps[base | bit];
            amps[base] = c * a0 + off * a1;
            amps[base | bit] = off * a0 + c * a1;
        }
    }
}

void apply_ry(Statevector& state, int qubit, double theta) {
    if (qubit < 0 || qubit >= state.num_qubits()) throw DimensionError("qubit out of range");
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    auto& amps = state.amplitudes();
    const std::size_t bit = std::size_t(1) << qubit;
    for (std::size_t base = 0; base < amps.size(); ++base) {
        if (base & bit) continue;
        const std::complex<double> a0 = amps[base];
        const std::complex<double> a1 = amps[base | bit];
        amps[base] = c * a0 - s * a1;
        amps[base | bit] = s * a0 + c * a1;
    }
}

void apply_cz(Statevector& state, int q1, int q2) {
    if (q1 == q2) throw DimensionError("CZ needs two distinct qubits");
    if (q1 < 0 || q2 < 0 || q1 >= state.num_qubits() || q2 >= state.num_qubits())
        throw DimensionError("qubit out of range");
    auto& amps = state.amplitudes();
    const std::size_t mask = (std::size_t(1) << q1) | (std::size_t(1) << q2);
    for (std::size_t z = 0; z < amps.size(); ++z)
        if ((z & mask) == mask) amps[z] = -amps[z];
}

int QaoaParams::p() const { return static_cast<int>(gamma.size()); }

void QaoaParams::validate() const {
    if (gamma.empty() || gamma.size() != beta.size())
        throw ValidationError("QAOA parameters need equal gamma/beta lengths, p >= 1");
}

Statevector run_qaoa(const DiagonalHamiltonian& h, const QaoaParams& params) {
    params.validate();
    Statevector state = init_plus(h.n);
    for (int layer = 0; layer < params.p(); ++layer) {
        apply_phase_separator(state, h, params.gamma[layer]);
        apply_mixer(state, params.beta[layer]);
    }
    return state;
}

Statevector run_hea(int n, const HeaParams& params, Entangler entangler) {
    if (params.layers != static_cast<int>(params.angles.size()))
        throw ValidationError("HEA layer count does not match angle rows");
    for (const auto& row : params.angles)
        if (static_cast<int>(row.size()) != n)
            throw ValidationError("HEA angle row does not match qubit count");
    (void)entangler; // only the chain pattern is implemented

    Statevector state(n);
    for (int layer = 0; layer < params.layers; ++layer) {
        for (int q = 0; q < n; ++q) apply_ry(state, q, params.angles[layer][q]);
        for (int q = 0; q + 1 < n; ++q) apply_cz(state, q, q + 1);
    }
    return state;
}

double exact_expectation(const Statevector& state, const DiagonalHamiltonian& h) {
    if (h.n != state.num_qubits()) throw DimensionError("Hamiltonian dimension does not match state");
    const auto& amps = state.amplitudes();
    double e = 0.0;
    for (std::size_t z = 0; z < amps.size(); ++z) e += std::norm(amps[z]) * h.energies[z];
    return e;
}

SampleSet sample(const Statevector& state, long long shots, std::uint64_t seed) {
    if (shots < 1) throw ValidationError("shots must be >= 1");
    const auto& amps = state.amplitudes();
    std::vector<double> cdf(amps.size());
    double acc = 0.0;
    for (std::size_t z = 0; z < amps.size(); ++z) {
        acc += std::norm(amps[z]);
        cdf[z] = acc;
    }
    const double total = acc;

    SampleSet out;
    out.n = state.num_qubits();
    auto rng = make_rng(seed);
    for (long long s = 0; s < shots; ++s) {
        const double u = uniform01(rng) * total;
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        std::uint64_t z = static_cast<std::uint64_t>(it - cdf.begin());
        if (z >= amps.size()) z = amps.size() - 1;
        out.add(z);
    }
    return out;
}

} // namespace qslice
