#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qlogic/spectral.hpp"

namespace qlogic {

struct JointAxis {
  std::string name;
  std::vector<double> values;  // sorted spectrum
};

/// Point masses of a joint probability distribution on spectral tuples.
struct JointDistribution {
  std::vector<JointAxis> axes;
  std::map<std::vector<double>, double> masses;

  /// F(x₁,…,xₙ) = Σ masses at tuples t with tᵢ ≤ xᵢ for every i.
  double cumulative(std::span<const double> point) const;
  /// Mass function of one axis, parallel to axes[axis].values.
  std::vector<double> marginal(std::size_t axis) const;
};

/// Tr[com(X₁,…,Xₙ)ρ].
double com_probability(std::span<const Observable> xs, const ComplexMatrix& rho,
                       const Tolerance& tol = {});

/// Whether a joint probability distribution function exists, i.e. the
/// observables are jointly determinate in rho.
bool jpd_exists(std::span<const Observable> xs, const ComplexMatrix& rho, const Tolerance& tol = {});

/// Throws NotJointlyDeterminate when no distribution exists. Axis names
/// default to X1, X2, ….
JointDistribution jpd(std::span<const Observable> xs, const ComplexMatrix& rho,
                      std::vector<std::string> names = {}, const Tolerance& tol = {});

struct Monomial {
  double coefficient;
  std::vector<int> powers;  // one exponent per variable
};
using Polynomial = std::vector<Monomial>;
using SpectralFunction = std::function<double(double)>;

struct MomentComparison {
  double lhs;  // Tr[p(f₁(X₁),…,fₙ(Xₙ))ρ], operator products in variable order
  double rhs;  // Σ over masses of p(f₁(x₁),…,fₙ(xₙ))
};

MomentComparison moment_check(std::span<const Observable> xs, const ComplexMatrix& rho,
                              std::span<const SpectralFunction> fs, const Polynomial& p,
                              const Tolerance& tol = {});

/// JPD mass on the diagonal {x = y}.
double diagonal_mass(const Observable& x, const Observable& y, const ComplexMatrix& rho,
                     const Tolerance& tol = {});

}  // namespace qlogic
