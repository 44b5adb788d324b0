#pragma once

#include "qslice/statevector.hpp"

namespace qslice {

inline constexpr int kMaxOracleQubits = 10;

/// Ground-truth QAOA state built from explicit 2^n x 2^n unitaries: the
/// mixer layer is the matrix exponential of sum_i sigma_x^(i) (via dense
/// eigendecomposition), the phase layer a diagonal exponential. Independent
/// of the stride-loop simulator it verifies. n <= 10.
Statevector dense_qaoa_oracle(const DiagonalHamiltonian& h, const QaoaParams& params);

/// Ground-truth HEA state from explicit Kronecker-product gate matrices.
Statevector dense_hea_oracle(int n, const HeaParams& params);

/// |<a|b>|^2.
double state_fidelity(const Statevector& a, const Statevector& b);

} // namespace qslice
