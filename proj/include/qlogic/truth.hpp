#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>

#include "qlogic/projlattice.hpp"
#include "qlogic/proplang.hpp"
#include "qlogic/spectral.hpp"

namespace qlogic {

using StateMap = std::map<std::string, ComplexMatrix, std::less<>>;

/// Named observables and density matrices on one Hilbert space C^dim.
class Model {
 public:
  Model(int dim, ObservableMap observables, StateMap states, Tolerance tol = {});

  int dim() const noexcept { return dim_; }
  const Tolerance& tolerance() const noexcept { return tol_; }
  const ObservableMap& observables() const noexcept { return observables_; }
  const StateMap& states() const noexcept { return states_; }

  /// Throws UnknownObservable.
  const Observable& observable(std::string_view name) const;
  /// Throws UnknownState.
  const ComplexMatrix& state(std::string_view name) const;

 private:
  int dim_;
  ObservableMap observables_;
  StateMap states_;
  Tolerance tol_;
};

/// Projection-valued truth value of a proposition.
Projection truth_value(const Prop& p, const Model& model);

/// Projector onto {ψ : E^X(λ)ψ = E^Y(λ)ψ for all λ}.
Projection equality_projection(const Observable& x, const Observable& y, const Tolerance& tol = {});

/// com(X₁,…,Xₙ), the truth value of joint(X₁,…,Xₙ).
Projection joint_projection(std::span<const Observable> xs, const Tolerance& tol = {});

/// ⋁ over spectral tuples of (X₁=x₁ ∧ ⋯ ∧ Xₙ=xₙ).
Projection finite_joint_sup(std::span<const Observable> xs, const Tolerance& tol = {});

/// ⋁ over x ∈ Sp(X) of (X=x ∧ Y=x).
Projection finite_equality_sup(const Observable& x, const Observable& y, const Tolerance& tol = {});

/// Tr[Pρ], clamped into [0, 1] when within prob_clip of it; throws
/// ProbabilityOutOfRange otherwise.
double born_probability(const Projection& p, const ComplexMatrix& rho, const Tolerance& tol = {});

double probability(const Prop& p, const Model& model, std::string_view state);

/// Probability at least 1 − prob_clip.
bool holds(const Prop& p, const Model& model, std::string_view state);

/// The observables named in `p` are jointly determinate in the state.
bool well_formed(const Prop& p, const Model& model, std::string_view state);

/// For a proposition whose atomic skeleton is a classical tautology, checks
/// com(names) ≤ truth value. Throws NotATautology when the skeleton is not one.
bool transfer_check(const Prop& p, const Model& model);

/// Classical tautology test treating each distinct atom as a Boolean variable.
bool is_classical_tautology(const Prop& p);

}  // namespace qlogic
