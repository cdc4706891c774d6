#pragma once

#include <functional>
#include <vector>

#include "qlogic/linalg.hpp"
#include "qlogic/spectral.hpp"

namespace qlogic {

/// Measuring process (K, σ, U, M): probe Hilbert space K = C^probe_dim, probe
/// state σ, interaction unitary U on H⊗K (system-major), meter M on K.
class MeasuringProcess {
 public:
  /// Throws NotUnitary, NotDensityMatrix or DimensionMismatch.
  MeasuringProcess(int sys_dim, ComplexMatrix sigma, ComplexMatrix unitary, Observable meter,
                   const Tolerance& tol = {});

  int sys_dim() const noexcept { return sys_dim_; }
  int probe_dim() const noexcept { return static_cast<int>(sigma_.rows()); }
  const ComplexMatrix& sigma() const noexcept { return sigma_; }
  const ComplexMatrix& unitary() const noexcept { return unitary_; }
  const Observable& meter() const noexcept { return meter_; }
  const Tolerance& tolerance() const noexcept { return tol_; }

  /// The same process read out through `meter`, e.g. f(M).
  MeasuringProcess with_meter(Observable meter) const;

 private:
  int sys_dim_;
  ComplexMatrix sigma_;
  ComplexMatrix unitary_;
  Observable meter_;
  Tolerance tol_;
};

/// Operator-valued distribution function Π(x), right-continuous steps at `cuts`.
struct Povm {
  int dim = 0;
  std::vector<double> cuts;
  std::vector<ComplexMatrix> cumulative;  // parallel to cuts

  /// Π(x); zero below the first cut.
  ComplexMatrix at(double x) const;
};

/// M(Δt) = U†(I⊗M)U.
Observable meter_heisenberg(const MeasuringProcess& mp);

/// Pr{x ≤ x ‖ ρ} = Tr[E^{M(Δt)}(x)(ρ⊗σ)].
double output_distribution(const MeasuringProcess& mp, const ComplexMatrix& rho, double x);

/// Π(x) = Tr_K[E^{M(Δt)}(x)(I⊗σ)] at each spectral point of M(Δt).
Povm povm(const MeasuringProcess& mp);

/// Positivity, monotonicity and Π = I at the top cut.
bool povm_well_formed(const Povm& pi, const Tolerance& tol = {});

/// A(0) and M(Δt) are equal in the state ρ⊗σ.
bool measures_in(const MeasuringProcess& mp, const Observable& a, const ComplexMatrix& rho);

/// Tr[Π(x)E^A(y)ρ] = Tr[E^A(min{x,y})ρ] on the grid Sp(A) ∪ cuts.
bool weakly_measures(const MeasuringProcess& mp, const Observable& a, const ComplexMatrix& rho);

/// Born statistical formula: Pr{x ≤ x ‖ ρ} = Tr[E^A(x)ρ] on the grid.
bool bsf_holds(const MeasuringProcess& mp, const Observable& a, const ComplexMatrix& rho);

struct EquivalenceReport {
  bool measures;
  bool weakly_measures;
  bool bsf_on_cyclic_subspace;

  bool consistent() const noexcept {
    return measures == weakly_measures && weakly_measures == bsf_on_cyclic_subspace;
  }
};

/// Vector states probing BSF on C(A, ρ): an orthonormal basis of the cyclic
/// subspace plus (eᵢ ± eⱼ)/√2 and (eᵢ ± i·eⱼ)/√2 for every pair.
std::vector<ComplexVector> cyclic_probe_states(const Observable& a, const ComplexMatrix& rho,
                                               const Tolerance& tol = {});

EquivalenceReport equivalence_suite(const MeasuringProcess& mp, const Observable& a,
                                    const ComplexMatrix& rho);

/// Π(x) = E^A(x) for every x.
bool measures_everywhere_iff(const MeasuringProcess& mp, const Observable& a);

/// M(f(x)) measures A and M(g(x)) measures B in rho.
bool simultaneous_check(const MeasuringProcess& mp, const std::function<double(double)>& f,
                        const std::function<double(double)>& g, const Observable& a,
                        const Observable& b, const ComplexMatrix& rho);

/// Two-variable operator distribution function: values[i][j] = Π(x_cuts[i], y_cuts[j]).
struct Povm2 {
  int dim = 0;
  std::vector<double> x_cuts;
  std::vector<double> y_cuts;
  std::vector<std::vector<ComplexMatrix>> values;
};

enum class MarginalMode { Determinate, Simultaneous };

/// Checks that the marginals of `pi` reproduce E^A and E^B on the relevant
/// cyclic subspaces: C(A,B,ρ) for both in Determinate mode, C(A,ρ) and C(B,ρ)
/// in Simultaneous mode. Throws MalformedPovm.
bool theorem_main_verify(const Povm2& pi, const Observable& a, const Observable& b,
                         const ComplexMatrix& rho, MarginalMode mode, const Tolerance& tol = {});

}  // namespace qlogic
