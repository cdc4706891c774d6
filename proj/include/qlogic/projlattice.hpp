#pragma once

#include "qlogic/linalg.hpp"

namespace qlogic {

/// An orthogonal projection on C^dim, i.e. an element of the lattice Q(H).
class Projection {
 public:
  /// Validates idempotence and self-adjointness within op_eq; the stored
  /// matrix is the Hermitian part of `m`.
  explicit Projection(const ComplexMatrix& m, const Tolerance& tol = {});

  static Projection zero(int dim);
  static Projection identity(int dim);
  /// Projection onto the span of the columns of `vectors`.
  static Projection onto_span(const ComplexMatrix& vectors, const Tolerance& tol = {});

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  int dim() const noexcept { return static_cast<int>(matrix_.rows()); }
  int rank() const;
  /// Orthonormal basis of the range, one vector per column.
  ComplexMatrix range() const { return projection_range(matrix_); }

  bool approx_equal(const Projection& other, double eps) const {
    return qlogic::approx_equal(matrix_, other.matrix_, eps);
  }

 private:
  struct Unchecked {};
  Projection(Unchecked, ComplexMatrix m) : matrix_(std::move(m)) {}

  ComplexMatrix matrix_;
};

Projection ortho(const Projection& p);
Projection meet(const Projection& p, const Projection& q, const Tolerance& tol = {});
Projection join(const Projection& p, const Projection& q, const Tolerance& tol = {});
bool leq(const Projection& p, const Projection& q, const Tolerance& tol = {});

/// P ⇒ Q = P⊥ ∨ (P ∧ Q).
Projection sasaki_implies(const Projection& p, const Projection& q, const Tolerance& tol = {});
/// (P ⇒ Q) ∧ (Q ⇒ P).
Projection logical_equiv(const Projection& p, const Projection& q, const Tolerance& tol = {});
bool commutes(const Projection& p, const Projection& q, const Tolerance& tol = {});
/// (P∧Q) ∨ (P∧Q⊥) ∨ (P⊥∧Q) ∨ (P⊥∧Q⊥).
Projection marsden_com(const Projection& p, const Projection& q, const Tolerance& tol = {});

}  // namespace qlogic
