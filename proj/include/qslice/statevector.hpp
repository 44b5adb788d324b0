#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qslice/compiled.hpp"
#include "qslice/model.hpp"
#include "qslice/sampleset.hpp"

namespace qslice {

inline constexpr int kMaxSimQubits = 26;

/// Diagonal problem Hamiltonian: energies[z] is the model energy of the
/// computational-basis state z (qubit i = bit i, least significant first).
struct DiagonalHamiltonian {
    int n = 0;
    std::vector<double> energies;

    static DiagonalHamiltonian from_model(const AnyModel& m, int max_qubits = kMaxSimQubits);
    static DiagonalHamiltonian from_model(const QuboModel& m, int max_qubits = kMaxSimQubits);
    static DiagonalHamiltonian from_model(const IsingModel& m, int max_qubits = kMaxSimQubits);
};

/// Dense 2^n-amplitude state. Construction counts toward the peak-qubit
/// statistics used to verify resource claims.
class Statevector {
public:
    explicit Statevector(int n); // |0...0>
    static Statevector zero_state(int n) { return Statevector(n); }

    int num_qubits() const { return n_; }
    std::size_t dim() const { return amps_.size(); }
    const std::vector<std::complex<double>>& amplitudes() const { return amps_; }
    std::vector<std::complex<double>>& amplitudes() { return amps_; }

    double norm_sq() const;

private:
    int n_;
    std::vector<std::complex<double>> amps_;
};

/// Uniform superposition: Hadamards on |0...0>.
Statevector init_plus(int n);

/// amp[z] *= exp(-i * gamma * E[z]).
void apply_phase_separator(Statevector& state, const DiagonalHamiltonian& h, double gamma);

/// exp(-i * beta * sigma_x) on every qubit (= Rx(2*beta) per qubit).
void apply_mixer(Statevector& state, double beta);

void apply_ry(Statevector& state, int qubit, double theta);
void apply_cz(Statevector& state, int q1, int q2);

struct QaoaParams {
    std::vector<double> gamma;
    std::vector<double> beta;

    int p() const;
    void validate() const;
};

/// Eq.-style ansatz: |+>^n then p layers of phase separator followed by
/// mixer (phase first within each layer).
Statevector run_qaoa(const DiagonalHamiltonian& h, const QaoaParams& params);

struct HeaParams {
    int layers = 0;
    std::vector<std::vector<double>> angles; // [layer][qubit]
};

enum class Entangler { Chain };

/// Hardware-efficient ansatz from |0...0>: per layer one Ry per qubit then
/// a nearest-neighbor CZ chain; exactly n*L rotations and (n-1)*L entanglers.
Statevector run_hea(int n, const HeaParams& params, Entangler entangler = Entangler::Chain);

/// <psi| H |psi> for a diagonal H.
double exact_expectation(const Statevector& state, const DiagonalHamiltonian& h);

/// i.i.d. computational-basis measurements; deterministic per seed.
SampleSet sample(const Statevector& state, long long shots, std::uint64_t seed);

/// Peak qubit width of any Statevector constructed since the last reset.
/// Used to check how many qubits a training mode actually allocates.
int peak_qubits_allocated();
void reset_peak_qubits();

} // namespace qslice
