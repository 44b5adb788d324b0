#include "qslice/dense_oracle.hpp"

#include <Eigen/Dense>

namespace qslice {

namespace {

using Cplx = std::complex<double>;
using MatC = Eigen::MatrixXcd;
using VecC = Eigen::VectorXcd;

VecC to_eigen(const Statevector& s) {
    VecC v(s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) v(i) = s.amplitudes()[i];
    return v;
}

Statevector from_eigen(const VecC& v, int n) {
    Statevector s(n);
    for (std::size_t i = 0; i < s.dim(); ++i) s.amplitudes()[i] = v(i);
    return s;
}

// Dense mixer Hamiltonian sum_i sigma_x^(i) in the computational basis.
Eigen::MatrixXd mixer_hamiltonian(int n) {
    const std::size_t dim = std::size_t(1) << n;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (std::size_t z = 0; z < dim; ++z)
        for (int q = 0; q < n; ++q) h(z ^ (std::size_t(1) << q), z) += 1.0;
    return h;
}

MatC kron(const MatC& a, const MatC& b) {
    MatC out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

// Single-qubit gate embedded on qubit q of n (qubit 0 = least significant
// bit, i.e. the rightmost Kronecker factor).
MatC embed_single(const MatC& gate, int q, int n) {
    MatC out = MatC::Identity(1, 1);
    for (int k = n - 1; k >= 0; --k) {
        if (k == q)
            out = kron(out, gate);
        else
            out = kron(out, MatC::Identity(2, 2));
    }
    return out;
}

MatC cz_matrix(int q1, int q2, int n) {
    const std::size_t dim = std::size_t(1) << n;
    MatC m = MatC::Identity(dim, dim);
    const std::size_t mask = (std::size_t(1) << q1) | (std::size_t(1) << q2);
    for (std::size_t z = 0; z < dim; ++z)
        if ((z & mask) == mask) m(z, z) = -1.0;
    return m;
}

} // namespace

Statevector dense_qaoa_oracle(const DiagonalHamiltonian& h, const QaoaParams& params) {
    params.validate();
    if (h.n > kMaxOracleQubits) throw SizeCapError("dense oracle capped at 10 qubits");
    const std::size_t dim = std::size_t(1) << h.n;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(mixer_hamiltonian(h.n));
    const Eigen::MatrixXd evecs = eig.eigenvectors();
    const Eigen::VectorXd evals = eig.eigenvalues();

    VecC psi = to_eigen(init_plus(h.n));
    for (int layer = 0; layer < params.p(); ++layer) {
        MatC phase = MatC::Zero(dim, dim);
        for (std::size_t z = 0; z < dim; ++z)
            phase(z, z) = std::exp(Cplx(0.0, -params.gamma[layer] * h.energies[z]));

        VecC expl(dim);
        for (std::size_t i = 0; i < dim; ++i)
            expl(i) = std::exp(Cplx(0.0, -params.beta[layer] * evals(i)));
        const MatC mixer =
            evecs.cast<Cplx>() * expl.asDiagonal() * evecs.transpose().cast<Cplx>();

        psi = mixer * (phase * psi);
    }
    return from_eigen(psi, h.n);
}

Statevector dense_hea_oracle(int n, const HeaParams& params) {
    if (n > kMaxOracleQubits) throw SizeCapError("dense oracle capped at 10 qubits");
    if (params.layers != static_cast<int>(params.angles.size()))
        throw ValidationError("HEA layer count does not match angle rows");

    const std::size_t dim = std::size_t(1) << n;
    MatC u = MatC::Identity(dim, dim);
    for (int layer = 0; layer < params.layers; ++layer) {
        if (static_cast<int>(params.angles[layer].size()) != n)
            throw ValidationError("HEA angle row does not match qubit count");
        for (int q = 0; q < n; ++q) {
            const double t = params.angles[layer][q];
            MatC ry(2, 2);
            ry << std::cos(t / 2), -std::sin(t / 2), std::sin(t / 2), std::cos(t / 2);
            u = embed_single(ry, q, n) * u;
        }
        for (int q = 0; q + 1 < n; ++q) u = cz_matrix(q, q + 1, n) * u;
    }

    VecC psi = VecC::Zero(dim);
    psi(0) = 1.0;
    return from_eigen(u * psi, n);
}

double state_fidelity(const Statevector& a, const Statevector& b) {
    if (a.num_qubits() != b.num_qubits()) throw DimensionError("state dimensions differ");
    Cplx inner(0.0, 0.0);
    for (std::size_t z = 0; z < a.dim(); ++z)
        inner += std::conj(a.amplitudes()[z]) * b.amplitudes()[z];
    return std::norm(inner);
}

} // namespace qslice
