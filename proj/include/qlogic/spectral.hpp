#pragma once

#include <functional>
#include <map>
#include <vector>

#include "qlogic/linalg.hpp"
#include "qlogic/projlattice.hpp"

namespace qlogic {

/// A self-adjoint operator with its spectral decomposition cached at
/// construction. Spectrum is strictly increasing; eigenprojectors are parallel
/// to it and sum to the identity.
class Observable {
 public:
  explicit Observable(const ComplexMatrix& m, const Tolerance& tol = {});

  /// Builds Σ values[i]·projectors[i]; equal values (within the cluster
  /// threshold) are merged. Projectors must be mutually orthogonal and sum to I.
  static Observable from_spectral(std::vector<double> values, std::vector<Projection> projectors,
                                  const Tolerance& tol = {});

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  int dim() const noexcept { return static_cast<int>(matrix_.rows()); }
  const std::vector<double>& spectrum() const noexcept { return spectrum_; }
  const std::vector<Projection>& eigenprojectors() const noexcept { return projectors_; }
  double cluster_threshold() const noexcept { return cluster_; }

 private:
  Observable() = default;

  ComplexMatrix matrix_;
  std::vector<double> spectrum_;
  std::vector<Projection> projectors_;
  double cluster_ = 0.0;
};

/// Finite-dimensional Dedekind-cut real: a monotone step function of
/// projections indexed by cut points. Below the least cut point the value is 0;
/// at the greatest cut point it must be I.
struct QuantumReal {
  std::map<double, Projection> cuts;
};

/// E^X(λ): sum of eigenprojectors with eigenvalue ≤ λ.
Projection spectral_family(const Observable& x, double lambda);

/// E^X((a, b]) = E^X(b) − E^X(a). Throws EmptyInterval unless a < b.
Projection interval_projection(const Observable& x, double a, double b);

/// Half the least spectral gap, capped at 1; 1 for a singleton spectrum.
double delta(const Observable& x);

/// Truth value of X = v: the eigenprojector of v when v is (within the cluster
/// threshold) an eigenvalue, 0 otherwise.
Projection eigen_atom(const Observable& x, double v);

/// Σ f(λᵢ)Pᵢ. Throws UndefinedAtSpectrum when f yields a non-finite value or throws.
Observable apply_function(const Observable& x, const std::function<double(double)>& f,
                          const Tolerance& tol = {});

QuantumReal to_quantum_real(const Observable& x);

/// Inverse of to_quantum_real. Throws NotDedekindCut when cuts are not
/// monotone or the top cut is not the identity.
Observable from_quantum_real(const QuantumReal& u, const Tolerance& tol = {});

}  // namespace qlogic
