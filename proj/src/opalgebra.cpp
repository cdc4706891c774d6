#include "qlogic/opalgebra.hpp"

namespace qlogic {

namespace {

int common_dim(std::span<const ComplexMatrix> generators, int dim) {
  for (const auto& g : generators) {
    if (g.rows() != g.cols() || (dim > 0 && g.rows() != dim)) {
      throw Error(ErrorKind::DimensionMismatch, "generators differ in dimension");
    }
    dim = static_cast<int>(g.rows());
  }
  if (dim <= 0) throw Error(ErrorKind::DimensionMismatch, "algebra dimension must be positive");
  return dim;
}

ComplexMatrix unvec(const ComplexVector& v, int dim) {
  return Eigen::Map<const ComplexMatrix>(v.data(), dim, dim);
}

}  // namespace

double AlgebraBasis::residual(const ComplexMatrix& m) const {
  ComplexMatrix rest = m;
  for (const auto& b : basis) {
    const Complex coeff = (b.adjoint() * rest).trace();
    rest -= coeff * b;
  }
  return max_abs(rest);
}

AlgebraBasis commutant(std::span<const ComplexMatrix> generators, int dim, const Tolerance& tol) {
  dim = common_dim(generators, dim);
  const int n = dim * dim;
  // Column-major vec: vec(GX) = (I⊗G)vec(X), vec(XG) = (Gᵀ⊗I)vec(X).
  ComplexMatrix stacked(static_cast<Eigen::Index>(generators.size()) * n, n);
  const ComplexMatrix id = identity(dim);
  Eigen::Index row = 0;
  for (const auto& g : generators) {
    stacked.middleRows(row, n) = tensor_product(id, g) - tensor_product(g.transpose(), id);
    row += n;
  }
  const ComplexMatrix kernel = null_space(stacked, tol);
  AlgebraBasis out{dim, {}};
  out.basis.reserve(static_cast<std::size_t>(kernel.cols()));
  for (Eigen::Index k = 0; k < kernel.cols(); ++k) {
    out.basis.push_back(unvec(kernel.col(k), dim));
  }
  return out;
}

AlgebraBasis generated_algebra(std::span<const ComplexMatrix> generators, int dim,
                               const Tolerance& tol) {
  const AlgebraBasis first = commutant(generators, dim, tol);
  return commutant(first.basis, first.dim, tol);
}

std::vector<ComplexMatrix> basis_commutators(const AlgebraBasis& algebra) {
  std::vector<ComplexMatrix> out;
  const auto& b = algebra.basis;
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) out.push_back(b[i] * b[j] - b[j] * b[i]);
  }
  return out;
}

Projection set_commutator(std::span<const ComplexMatrix> generators, int dim,
                          const Tolerance& tol) {
  const AlgebraBasis algebra = generated_algebra(generators, dim, tol);
  const auto commutators = basis_commutators(algebra);
  return Projection(kernel_projector(commutators, algebra.dim, tol), tol);
}

std::vector<ComplexMatrix> matrices_of(std::span<const Observable> observables) {
  std::vector<ComplexMatrix> out;
  out.reserve(observables.size());
  for (const auto& o : observables) out.push_back(o.matrix());
  return out;
}

Projection cyclic_subspace(std::span<const Observable> observables, const ComplexMatrix& rho,
                           const Tolerance& tol) {
  require_density(rho, "rho", tol);
  const int dim = static_cast<int>(rho.rows());
  const auto generators = matrices_of(observables);
  const AlgebraBasis algebra = generated_algebra(generators, dim, tol);
  const ComplexMatrix support = support_basis(rho, tol);
  ComplexMatrix images(dim, static_cast<Eigen::Index>(algebra.size()) * support.cols());
  Eigen::Index col = 0;
  for (const auto& b : algebra.basis) {
    images.middleCols(col, support.cols()) = b * support;
    col += support.cols();
  }
  return Projection::onto_span(images, tol);
}

}  // namespace qlogic
