#include "qlogic/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qlogic {

namespace {

int numerical_rank(const Eigen::VectorXd& singular, double rank_rel, double floor) {
  if (singular.size() == 0) return 0;
  const double cutoff = std::max(rank_rel * singular.maxCoeff(), floor);
  int rank = 0;
  for (Eigen::Index i = 0; i < singular.size(); ++i) {
    if (singular[i] > cutoff) ++rank;
  }
  return rank;
}

void require_finite(const ComplexMatrix& m) {
  if (!m.allFinite()) throw Error(ErrorKind::NotHermitian, "matrix has non-finite entries");
}

}  // namespace

void Tolerance::validate() const {
  for (double v : {eig_cluster, rank_rel, op_eq, prob_clip}) {
    if (!(v > 0.0 && v < 1e-2)) {
      throw Error(ErrorKind::InvalidTolerance,
                  "tolerance values must lie in (0, 1e-2), got " + std::to_string(v));
    }
  }
}

double Tolerance::eig_cluster_for(const ComplexMatrix& m) const {
  return eig_cluster * (1.0 + max_abs(m));
}

double max_abs(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double eps) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return max_abs(a - b) <= eps;
}

ComplexMatrix identity(int dim) { return ComplexMatrix::Identity(dim, dim); }

ComplexMatrix zeros(int dim) { return ComplexMatrix::Zero(dim, dim); }

bool is_hermitian(const ComplexMatrix& m, const Tolerance& tol) {
  return m.rows() == m.cols() && m.allFinite() && max_abs(m - m.adjoint()) <= tol.op_eq;
}

double min_eigenvalue(const ComplexMatrix& m) {
  if (m.rows() == 0) return 0.0;
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

bool is_density_matrix(const ComplexMatrix& m, const Tolerance& tol) {
  if (m.rows() == 0 || !is_hermitian(m, tol)) return false;
  if (std::abs(m.trace() - Complex(1.0, 0.0)) > tol.op_eq) return false;
  return min_eigenvalue(m) >= -tol.op_eq;
}

void require_density(const ComplexMatrix& m, const char* what, const Tolerance& tol) {
  if (!is_density_matrix(m, tol)) {
    throw Error(ErrorKind::NotDensityMatrix,
                std::string(what) + " is not positive with unit trace");
  }
}

std::vector<EigenComponent> hermitian_eig(const ComplexMatrix& m, const Tolerance& tol) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::NotHermitian, "matrix is not square");
  require_finite(m);
  if (max_abs(m - m.adjoint()) > tol.op_eq) {
    throw Error(ErrorKind::NotHermitian, "‖m − m†‖∞ exceeds op_eq");
  }
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  const Eigen::VectorXd& values = solver.eigenvalues();
  const ComplexMatrix& vectors = solver.eigenvectors();
  const double cluster = tol.eig_cluster_for(m);

  std::vector<EigenComponent> out;
  Eigen::Index start = 0;
  const Eigen::Index n = values.size();
  for (Eigen::Index i = 1; i <= n; ++i) {
    if (i < n && values[i] - values[i - 1] <= cluster) continue;
    const Eigen::Index count = i - start;
    const ComplexMatrix block = vectors.middleCols(start, count);
    const double mean = values.segment(start, count).mean();
    out.push_back({mean, block * block.adjoint()});
    start = i;
  }
  return out;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix partial_trace_probe(const ComplexMatrix& m, int sys_dim, int probe_dim) {
  if (sys_dim <= 0 || probe_dim <= 0 || m.rows() != sys_dim * probe_dim ||
      m.cols() != m.rows()) {
    throw Error(ErrorKind::DimensionMismatch,
                "partial trace needs a " + std::to_string(sys_dim * probe_dim) +
                    "-dimensional square operator");
  }
  ComplexMatrix out = ComplexMatrix::Zero(sys_dim, sys_dim);
  for (int i = 0; i < sys_dim; ++i) {
    for (int j = 0; j < sys_dim; ++j) {
      Complex sum = 0.0;
      for (int k = 0; k < probe_dim; ++k) sum += m(i * probe_dim + k, j * probe_dim + k);
      out(i, j) = sum;
    }
  }
  return out;
}

ComplexMatrix orthonormal_span(const ComplexMatrix& columns, const Tolerance& tol) {
  if (columns.cols() == 0 || columns.rows() == 0) return ComplexMatrix(columns.rows(), 0);
  Eigen::JacobiSVD<ComplexMatrix> svd(columns, Eigen::ComputeThinU);
  const int rank = numerical_rank(svd.singularValues(), tol.rank_rel, tol.rank_rel);
  return svd.matrixU().leftCols(rank);
}

ComplexMatrix projector_onto_columnspan(std::span<const ComplexVector> vectors, int dim,
                                        const Tolerance& tol) {
  ComplexMatrix stacked(dim, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    if (vectors[k].size() != dim) {
      throw Error(ErrorKind::DimensionMismatch, "vector length differs from dim");
    }
    stacked.col(static_cast<Eigen::Index>(k)) = vectors[k];
  }
  const ComplexMatrix basis = orthonormal_span(stacked, tol);
  return basis * basis.adjoint();
}

ComplexMatrix null_space(const ComplexMatrix& stacked, const Tolerance& tol) {
  const Eigen::Index n = stacked.cols();
  if (stacked.rows() == 0) return ComplexMatrix::Identity(n, n);
  Eigen::JacobiSVD<ComplexMatrix> svd(stacked, Eigen::ComputeFullV);
  const int rank = numerical_rank(svd.singularValues(), tol.rank_rel, tol.op_eq);
  return svd.matrixV().rightCols(n - rank);
}

ComplexMatrix kernel_projector(std::span<const ComplexMatrix> ms, int dim, const Tolerance& tol) {
  ComplexMatrix stacked(static_cast<Eigen::Index>(ms.size()) * dim, dim);
  Eigen::Index row = 0;
  for (const auto& m : ms) {
    if (m.rows() != dim || m.cols() != dim) {
      throw Error(ErrorKind::DimensionMismatch, "kernel_projector operands differ in dimension");
    }
    stacked.middleRows(row, dim) = m;
    row += dim;
  }
  const ComplexMatrix basis = null_space(stacked, tol);
  return basis * basis.adjoint();
}

ComplexMatrix projection_range(const ComplexMatrix& p) {
  const ComplexMatrix h = 0.5 * (p + p.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  const Eigen::VectorXd& values = solver.eigenvalues();
  Eigen::Index first = 0;
  while (first < values.size() && values[first] <= 0.5) ++first;
  return solver.eigenvectors().rightCols(values.size() - first);
}

ComplexMatrix support_basis(const ComplexMatrix& psd, const Tolerance& tol) {
  const ComplexMatrix h = 0.5 * (psd + psd.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  const Eigen::VectorXd& values = solver.eigenvalues();
  if (values.size() == 0) return ComplexMatrix(0, 0);
  const double cutoff = std::max(tol.rank_rel * values.cwiseAbs().maxCoeff(), tol.op_eq);
  Eigen::Index first = 0;
  while (first < values.size() && values[first] <= cutoff) ++first;
  return solver.eigenvectors().rightCols(values.size() - first);
}

}  // namespace qlogic
