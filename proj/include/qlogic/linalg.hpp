#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qlogic/error.hpp"

namespace qlogic {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Numerical thresholds shared by every rank and equality decision.
///
/// `eig_cluster` is a coefficient: the absolute merge threshold for the
/// eigenvalues of a matrix m is eig_cluster * (1 + max|m_ij|).
struct Tolerance {
  double eig_cluster = 1e-8;
  double rank_rel = 1e-10;
  double op_eq = 1e-8;
  double prob_clip = 1e-10;

  /// Throws InvalidTolerance unless every field lies in (0, 1e-2).
  void validate() const;

  double eig_cluster_for(const ComplexMatrix& m) const;
};

struct EigenComponent {
  double value;
  ComplexMatrix projector;
};

/// Max-entry norm ‖m‖∞.
double max_abs(const ComplexMatrix& m);

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double eps);

ComplexMatrix identity(int dim);
ComplexMatrix zeros(int dim);

bool is_hermitian(const ComplexMatrix& m, const Tolerance& tol = {});

/// Positive semidefinite with unit trace, within op_eq.
bool is_density_matrix(const ComplexMatrix& m, const Tolerance& tol = {});

/// Throws NotDensityMatrix with `what` in the message when `m` is not a state.
void require_density(const ComplexMatrix& m, const char* what, const Tolerance& tol = {});

/// Spectral decomposition of a Hermitian matrix. Eigenvalues closer than the
/// cluster threshold share one eigenprojector; output is sorted ascending.
std::vector<EigenComponent> hermitian_eig(const ComplexMatrix& m, const Tolerance& tol = {});

/// Kronecker product, row index i_a * dim(b) + i_b.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Traces out the second (probe) factor of a system-major composite operator.
ComplexMatrix partial_trace_probe(const ComplexMatrix& m, int sys_dim, int probe_dim);

/// Orthonormal basis (as columns) of the span of the given columns.
ComplexMatrix orthonormal_span(const ComplexMatrix& columns, const Tolerance& tol = {});

ComplexMatrix projector_onto_columnspan(std::span<const ComplexVector> vectors, int dim,
                                        const Tolerance& tol = {});

/// Orthonormal basis (as columns) of the common null space of the stacked
/// rows of `stacked`. Singular values at or below max(rank_rel * σmax, op_eq)
/// count as zero.
ComplexMatrix null_space(const ComplexMatrix& stacked, const Tolerance& tol = {});

/// Projector onto the intersection of the kernels; identity for an empty list.
ComplexMatrix kernel_projector(std::span<const ComplexMatrix> ms, int dim,
                               const Tolerance& tol = {});

/// Orthonormal basis of the range of a Hermitian idempotent matrix.
ComplexMatrix projection_range(const ComplexMatrix& p);

/// Orthonormal basis of the support of a positive semidefinite matrix.
ComplexMatrix support_basis(const ComplexMatrix& psd, const Tolerance& tol = {});

/// Smallest eigenvalue of the Hermitian part of m.
double min_eigenvalue(const ComplexMatrix& m);

}  // namespace qlogic
