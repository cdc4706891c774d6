// Measuring-process fixtures shared by the measurement tests and the
// acceptance runner.
#pragma once

#include "qlogic/measurement.hpp"
#include "support.hpp"

namespace qtest {

using qlogic::MeasuringProcess;
using qlogic::Observable;

inline ComplexMatrix ket0_state(int dim) { return outer(basis_vector(dim, 0)); }

/// System qubit controls a NOT on the probe qubit; meter reads Z on the probe.
inline MeasuringProcess cnot_process() {
  const ComplexMatrix u = mat(4, 4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});
  return MeasuringProcess(2, ket0_state(2), u, Observable(pauli_z()));
}

/// Exchanges system and probe of equal dimension.
inline ComplexMatrix swap_unitary(int dim) {
  ComplexMatrix u = ComplexMatrix::Zero(dim * dim, dim * dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) u(j * dim + i, i * dim + j) = 1.0;
  return u;
}

inline MeasuringProcess idle_process(int sys_dim, const ComplexMatrix& sigma, const Observable& meter) {
  const int n = sys_dim * static_cast<int>(sigma.rows());
  return MeasuringProcess(sys_dim, sigma, ComplexMatrix::Identity(n, n), meter);
}

/// Copies the eigenvalue index of `source` into a probe register of size
/// |Sp(source)|: U = Σₖ Pₖ ⊗ Sᵏ with S the cyclic shift, σ = |0⟩⟨0|, and the
/// meter maps |k⟩ to the k-th eigenvalue. This process measures `source` in
/// every state.
inline MeasuringProcess copy_process(const Observable& source) {
  const int dim = source.dim();
  const int m = static_cast<int>(source.spectrum().size());
  ComplexMatrix shift = ComplexMatrix::Zero(m, m);
  for (int k = 0; k < m; ++k) shift((k + 1) % m, k) = 1.0;
  ComplexMatrix u = ComplexMatrix::Zero(dim * m, dim * m);
  ComplexMatrix power = ComplexMatrix::Identity(m, m);
  for (int k = 0; k < m; ++k) {
    u += qlogic::tensor_product(source.eigenprojectors()[static_cast<std::size_t>(k)].matrix(), power);
    power = shift * power;
  }
  Eigen::VectorXd values(m);
  for (int k = 0; k < m; ++k) values[k] = source.spectrum()[static_cast<std::size_t>(k)];
  return MeasuringProcess(dim, ket0_state(m), u, Observable(values.cast<Complex>().asDiagonal()));
}

/// Two-qubit system, two-qubit probe: CNOT from system qubit 1 to probe qubit 1
/// and from system qubit 2 to probe qubit 2. Meter m = diag(0, 1, 2, 3) encodes
/// both probe bits; the first bit is ⌊m/2⌋, the second m mod 2.
inline MeasuringProcess cnot_pair_process() {
  // Basis index = s1·8 + s2·4 + p1·2 + p2.
  ComplexMatrix u = ComplexMatrix::Zero(16, 16);
  for (int s1 = 0; s1 < 2; ++s1)
    for (int s2 = 0; s2 < 2; ++s2)
      for (int p1 = 0; p1 < 2; ++p1)
        for (int p2 = 0; p2 < 2; ++p2) {
          const int from = s1 * 8 + s2 * 4 + p1 * 2 + p2;
          const int to = s1 * 8 + s2 * 4 + (p1 ^ s1) * 2 + (p2 ^ s2);
          u(to, from) = 1.0;
        }
  return MeasuringProcess(4, ket0_state(4), u, Observable(diag({0, 1, 2, 3})));
}

inline double decode_first(double m) { return 1.0 - 2.0 * std::floor(m / 2.0 + 1e-9); }
inline double decode_second(double m) {
  return 1.0 - 2.0 * (static_cast<int>(std::lround(m)) % 2);
}

/// Random small process: generic unitary on C^sys ⊗ C^probe, random pure probe
/// state and a random finite meter.
inline MeasuringProcess random_process(int sys_dim, int probe_dim, Rng& rng) {
  const ComplexVector s = random_unit_vector(probe_dim, rng);
  return MeasuringProcess(sys_dim, outer(s), random_unitary(sys_dim * probe_dim, rng),
                          random_finite_observable(probe_dim, rng));
}

}  // namespace qtest
