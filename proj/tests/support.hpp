// Shared generators and brute-force oracles for the test suites. The oracles
// here deliberately avoid the library's commutant / lattice code paths.
#pragma once

#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "qlogic/linalg.hpp"
#include "qlogic/projlattice.hpp"
#include "qlogic/spectral.hpp"

namespace qtest {

using qlogic::Complex;
using qlogic::ComplexMatrix;
using qlogic::ComplexVector;
using Rng = std::mt19937_64;

inline ComplexMatrix diag(std::initializer_list<double> values) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double x : values) v[i++] = x;
  return v.cast<Complex>().asDiagonal();
}

inline ComplexMatrix mat(int rows, int cols, std::initializer_list<double> entries) {
  ComplexMatrix m(rows, cols);
  auto it = entries.begin();
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = *it++;
  return m;
}

inline ComplexMatrix pauli_x() { return mat(2, 2, {0, 1, 1, 0}); }
inline ComplexMatrix pauli_z() { return diag({1, -1}); }

inline ComplexVector vec(std::initializer_list<Complex> entries) {
  ComplexVector v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (Complex x : entries) v[i++] = x;
  return v;
}

inline ComplexMatrix outer(const ComplexVector& v) { return v * v.adjoint(); }

inline ComplexVector basis_vector(int dim, int k) {
  ComplexVector v = ComplexVector::Zero(dim);
  v[k] = 1.0;
  return v;
}

/// Rank-one projection onto the normalized vector.
inline qlogic::Projection line(const ComplexVector& v) {
  return qlogic::Projection(outer(v.normalized()));
}

inline ComplexMatrix random_gaussian(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = Complex(n(rng), n(rng));
  return m;
}

inline ComplexMatrix random_unitary(int dim, Rng& rng) {
  Eigen::HouseholderQR<ComplexMatrix> qr(random_gaussian(dim, dim, rng));
  return qr.householderQ() * ComplexMatrix::Identity(dim, dim);
}

inline ComplexMatrix random_hermitian(int dim, Rng& rng) {
  const ComplexMatrix g = random_gaussian(dim, dim, rng);
  return 0.5 * (g + g.adjoint());
}

inline ComplexVector random_unit_vector(int dim, Rng& rng) {
  ComplexVector v = random_gaussian(dim, 1, rng).col(0);
  return v.normalized();
}

inline ComplexMatrix random_density(int dim, Rng& rng) {
  const ComplexMatrix g = random_gaussian(dim, dim, rng);
  ComplexMatrix rho = g * g.adjoint();
  return rho / rho.trace();
}

inline int uniform_int(int lo, int hi, Rng& rng) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline qlogic::Projection random_projection(int dim, int rank, Rng& rng) {
  const ComplexMatrix u = random_unitary(dim, rng);
  const ComplexMatrix cols = u.leftCols(rank);
  return qlogic::Projection(cols * cols.adjoint());
}

/// V diag(values) V† for a random unitary V.
inline ComplexMatrix rotated_diagonal(const std::vector<double>& values, const ComplexMatrix& v) {
  Eigen::VectorXd d(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) d[static_cast<Eigen::Index>(i)] = values[i];
  return v * d.cast<Complex>().asDiagonal() * v.adjoint();
}

/// Observable with small integer eigenvalues (degeneracies likely).
inline qlogic::Observable random_finite_observable(int dim, Rng& rng) {
  std::vector<double> values(static_cast<std::size_t>(dim));
  for (auto& x : values) x = uniform_int(-2, 2, rng);
  return qlogic::Observable(rotated_diagonal(values, random_unitary(dim, rng)));
}

/// Block-structured observable: integer eigenvalues on the first `k` columns of
/// the shared frame `frame`, and a random Hermitian block on the rest.
inline ComplexMatrix partially_classical(int dim, int k, const ComplexMatrix& frame, Rng& rng,
                                         const std::vector<double>& diagonal = {}) {
  ComplexMatrix inner = ComplexMatrix::Zero(dim, dim);
  for (int i = 0; i < k; ++i) {
    inner(i, i) = diagonal.empty() ? uniform_int(-2, 2, rng) : diagonal[static_cast<std::size_t>(i)];
  }
  if (dim > k) inner.bottomRightCorner(dim - k, dim - k) = random_hermitian(dim - k, rng);
  return frame * inner * frame.adjoint();
}

// ---------------------------------------------------------------------------
// Oracles

/// Hilbert–Schmidt orthonormal basis of the span of all finite words in the
/// generators (including the empty word I). For self-adjoint generators this
/// is the generated von Neumann algebra in finite dimension.
inline std::vector<ComplexMatrix> word_algebra(const std::vector<ComplexMatrix>& gens, int dim) {
  std::vector<ComplexMatrix> basis;
  auto try_add = [&](ComplexMatrix m) {
    for (const auto& b : basis) m -= (b.adjoint() * m).trace() * b;
    const double norm = m.norm();
    if (norm <= 1e-9) return false;
    basis.push_back(m / norm);
    return true;
  };
  try_add(ComplexMatrix::Identity(dim, dim));
  std::size_t frontier = 0;
  while (frontier < basis.size()) {
    const std::size_t end = basis.size();
    for (std::size_t i = frontier; i < end; ++i) {
      for (const auto& g : gens) try_add(basis[i] * g);
    }
    frontier = end;
  }
  return basis;
}

/// Orthonormal columns spanning the given vectors (Gram–Schmidt, threshold 1e-9).
inline ComplexMatrix gram_schmidt(const std::vector<ComplexVector>& vectors, int dim) {
  std::vector<ComplexVector> out;
  for (ComplexVector v : vectors) {
    for (const auto& b : out) v -= b.dot(v) * b;
    if (v.norm() > 1e-9) out.push_back(v.normalized());
  }
  ComplexMatrix m(dim, static_cast<Eigen::Index>(out.size()));
  for (std::size_t i = 0; i < out.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = out[i];
  return m;
}

/// Kernel of m via full-pivot LU. Entries below 1e-9 are rounding noise and
/// are zeroed first, since the LU rank threshold is only relative.
inline std::vector<ComplexVector> lu_kernel(const ComplexMatrix& m) {
  const ComplexMatrix cleaned = m.unaryExpr([](Complex z) { return std::abs(z) < 1e-9 ? Complex(0) : z; });
  Eigen::FullPivLU<ComplexMatrix> lu(cleaned);
  lu.setThreshold(1e-9);
  const ComplexMatrix k = lu.kernel();
  std::vector<ComplexVector> out;
  if (lu.rank() == m.cols()) return out;
  for (Eigen::Index c = 0; c < k.cols(); ++c) out.emplace_back(k.col(c));
  return out;
}

/// Span of the common eigenvectors of the matrices: ⋁ over eigenvalue tuples
/// of ⋂ ker(Xᵢ − tᵢ). Only tuples with every tᵢ ∈ Sp(Xᵢ) contribute.
/// When `equal_values` is set, only tuples with all tᵢ equal are kept.
inline ComplexMatrix common_eigenvector_span(const std::vector<qlogic::Observable>& xs,
                                             bool equal_values = false) {
  const int dim = xs.front().dim();
  std::vector<ComplexVector> found;
  std::vector<std::size_t> idx(xs.size(), 0);
  for (;;) {
    bool keep = true;
    if (equal_values) {
      for (std::size_t i = 1; i < xs.size(); ++i) {
        keep = keep && std::abs(xs[i].spectrum()[idx[i]] - xs[0].spectrum()[idx[0]]) < 1e-9;
      }
    }
    if (keep) {
      ComplexMatrix stacked(static_cast<Eigen::Index>(xs.size()) * dim, dim);
      for (std::size_t i = 0; i < xs.size(); ++i) {
        stacked.middleRows(static_cast<Eigen::Index>(i) * dim, dim) =
            xs[i].matrix() - xs[i].spectrum()[idx[i]] * ComplexMatrix::Identity(dim, dim);
      }
      for (auto& v : lu_kernel(stacked)) found.push_back(v);
    }
    std::size_t k = 0;
    while (k < xs.size() && ++idx[k] == xs[k].spectrum().size()) idx[k++] = 0;
    if (k == xs.size()) break;
  }
  return gram_schmidt(found, dim);
}

/// Classical CDF of a diagonal model: Σ over basis index k with all
/// diagonals[i][k] ≤ cuts[i] of the weight ⟨k|ρ'|k⟩, ρ' = V†ρV.
inline double classical_joint_cdf(const std::vector<std::vector<double>>& diagonals,
                                  const std::vector<double>& cuts, const ComplexMatrix& rho,
                                  const ComplexMatrix& frame) {
  const ComplexMatrix in_frame = frame.adjoint() * rho * frame;
  double total = 0.0;
  for (Eigen::Index k = 0; k < in_frame.rows(); ++k) {
    bool below = true;
    for (std::size_t i = 0; i < diagonals.size(); ++i) {
      below = below && diagonals[i][static_cast<std::size_t>(k)] <= cuts[i];
    }
    if (below) total += in_frame(k, k).real();
  }
  return total;
}

}  // namespace qtest
