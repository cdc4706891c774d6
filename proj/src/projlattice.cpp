#include "qlogic/projlattice.hpp"

#include <cmath>

namespace qlogic {

namespace {

void require_same_dim(const Projection& p, const Projection& q) {
  if (p.dim() != q.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "projections act on spaces of different dimension");
  }
}

}  // namespace

Projection::Projection(const ComplexMatrix& m, const Tolerance& tol) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(ErrorKind::InvalidProjection, "projection must be a non-empty square matrix");
  }
  if (!m.allFinite() || max_abs(m - m.adjoint()) > tol.op_eq ||
      max_abs(m * m - m) > tol.op_eq) {
    throw Error(ErrorKind::InvalidProjection, "matrix is not a Hermitian idempotent");
  }
  matrix_ = 0.5 * (m + m.adjoint());
}

Projection Projection::zero(int dim) { return Projection(Unchecked{}, zeros(dim)); }

Projection Projection::identity(int dim) { return Projection(Unchecked{}, qlogic::identity(dim)); }

Projection Projection::onto_span(const ComplexMatrix& vectors, const Tolerance& tol) {
  const ComplexMatrix basis = orthonormal_span(vectors, tol);
  return Projection(Unchecked{}, basis * basis.adjoint());
}

int Projection::rank() const { return static_cast<int>(std::lround(matrix_.trace().real())); }

Projection ortho(const Projection& p) {
  return Projection(qlogic::identity(p.dim()) - p.matrix());
}

Projection join(const Projection& p, const Projection& q, const Tolerance& tol) {
  require_same_dim(p, q);
  const ComplexMatrix a = p.range();
  const ComplexMatrix b = q.range();
  ComplexMatrix both(p.dim(), a.cols() + b.cols());
  both << a, b;
  return Projection::onto_span(both, tol);
}

Projection meet(const Projection& p, const Projection& q, const Tolerance& tol) {
  require_same_dim(p, q);
  return ortho(join(ortho(p), ortho(q), tol));
}

bool leq(const Projection& p, const Projection& q, const Tolerance& tol) {
  require_same_dim(p, q);
  const ComplexMatrix& a = p.matrix();
  return max_abs(a * q.matrix() * a - a) <= tol.op_eq;
}

Projection sasaki_implies(const Projection& p, const Projection& q, const Tolerance& tol) {
  return join(ortho(p), meet(p, q, tol), tol);
}

Projection logical_equiv(const Projection& p, const Projection& q, const Tolerance& tol) {
  return meet(sasaki_implies(p, q, tol), sasaki_implies(q, p, tol), tol);
}

bool commutes(const Projection& p, const Projection& q, const Tolerance& tol) {
  require_same_dim(p, q);
  const ComplexMatrix& a = p.matrix();
  const ComplexMatrix& b = q.matrix();
  return max_abs(a * b - b * a) <= tol.op_eq;
}

Projection marsden_com(const Projection& p, const Projection& q, const Tolerance& tol) {
  const Projection pc = ortho(p);
  const Projection qc = ortho(q);
  Projection out = meet(p, q, tol);
  out = join(out, meet(p, qc, tol), tol);
  out = join(out, meet(pc, q, tol), tol);
  return join(out, meet(pc, qc, tol), tol);
}

}  // namespace qlogic
