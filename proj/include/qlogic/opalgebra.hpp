#pragma once

#include <span>
#include <vector>

#include "qlogic/linalg.hpp"
#include "qlogic/projlattice.hpp"
#include "qlogic/spectral.hpp"

namespace qlogic {

/// Hilbert–Schmidt orthonormal basis of a unital *-subalgebra of B(C^dim).
struct AlgebraBasis {
  int dim = 0;
  std::vector<ComplexMatrix> basis;

  std::size_t size() const noexcept { return basis.size(); }
  /// Distance of `m` from the span, in max-entry norm.
  double residual(const ComplexMatrix& m) const;
  bool contains(const ComplexMatrix& m, const Tolerance& tol = {}) const {
    return residual(m) <= tol.op_eq;
  }
};

/// {X : XG = GX for every generator G}. `dim` is only consulted when the
/// generator list is empty.
AlgebraBasis commutant(std::span<const ComplexMatrix> generators, int dim,
                       const Tolerance& tol = {});

/// Double commutant of the generators.
AlgebraBasis generated_algebra(std::span<const ComplexMatrix> generators, int dim,
                               const Tolerance& tol = {});

/// com(A): projector onto the common kernel of every commutator [A, B] with
/// A, B in the generated algebra.
Projection set_commutator(std::span<const ComplexMatrix> generators, int dim,
                          const Tolerance& tol = {});

/// Pairwise commutators [bᵢ, bⱼ] (i < j) of an algebra basis.
std::vector<ComplexMatrix> basis_commutators(const AlgebraBasis& algebra);

/// Closure of {A₁,…,Aₙ}″ applied to the range of rho.
Projection cyclic_subspace(std::span<const Observable> observables, const ComplexMatrix& rho,
                           const Tolerance& tol = {});

std::vector<ComplexMatrix> matrices_of(std::span<const Observable> observables);

}  // namespace qlogic
