#include "qlogic/measurement.hpp"

#include <algorithm>
#include <cmath>

#include "qlogic/opalgebra.hpp"
#include "qlogic/truth.hpp"

namespace qlogic {

namespace {

void require_system(const MeasuringProcess& mp, const Observable& a, const ComplexMatrix& rho) {
  if (a.dim() != mp.sys_dim() || rho.rows() != mp.sys_dim() || rho.cols() != mp.sys_dim()) {
    throw Error(ErrorKind::DimensionMismatch, "observable and state must act on the system space");
  }
  require_density(rho, "rho", mp.tolerance());
}

// Sorted union of two breakpoint sets. Points within the cluster threshold are
// one breakpoint, represented by the largest so every step function sampled
// there has already jumped.
std::vector<double> merged_grid(const std::vector<double>& a, const std::vector<double>& b,
                                const Tolerance& tol) {
  std::vector<double> all = a;
  all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  double scale = 0.0;
  for (double v : all) scale = std::max(scale, std::abs(v));
  const double merge = tol.eig_cluster * (1.0 + scale);
  std::vector<double> out;
  for (double v : all) {
    if (!out.empty() && v - out.back() <= merge) {
      out.back() = v;
    } else {
      out.push_back(v);
    }
  }
  return out;
}

ComplexMatrix step_at(const std::vector<double>& cuts, const std::vector<ComplexMatrix>& values,
                      double x, int dim) {
  // Same breakpoint slack as spectral_family.
  const double slack = Tolerance{}.eig_cluster * (1.0 + std::abs(x));
  auto it = std::upper_bound(cuts.begin(), cuts.end(), x + slack);
  if (it == cuts.begin()) return zeros(dim);
  return values[static_cast<std::size_t>(it - cuts.begin() - 1)];
}

bool psd(const ComplexMatrix& m, const Tolerance& tol) { return min_eigenvalue(m) >= -tol.op_eq; }

}  // namespace

MeasuringProcess::MeasuringProcess(int sys_dim, ComplexMatrix sigma, ComplexMatrix unitary,
                                   Observable meter, const Tolerance& tol)
    : sys_dim_(sys_dim),
      sigma_(std::move(sigma)),
      unitary_(std::move(unitary)),
      meter_(std::move(meter)),
      tol_(tol) {
  if (sys_dim_ <= 0) throw Error(ErrorKind::DimensionMismatch, "system dimension must be positive");
  if (meter_.dim() != sigma_.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "meter and probe state differ in dimension");
  }
  require_density(sigma_, "probe state sigma", tol_);
  const int total = sys_dim_ * probe_dim();
  if (unitary_.rows() != total || unitary_.cols() != total) {
    throw Error(ErrorKind::DimensionMismatch, "unitary must act on system ⊗ probe");
  }
  if (max_abs(unitary_.adjoint() * unitary_ - identity(total)) > tol_.op_eq) {
    throw Error(ErrorKind::NotUnitary, "‖U†U − I‖∞ exceeds op_eq");
  }
}

MeasuringProcess MeasuringProcess::with_meter(Observable meter) const {
  return MeasuringProcess(sys_dim_, sigma_, unitary_, std::move(meter), tol_);
}

ComplexMatrix Povm::at(double x) const { return step_at(cuts, cumulative, x, dim); }

Observable meter_heisenberg(const MeasuringProcess& mp) {
  const ComplexMatrix lifted = tensor_product(identity(mp.sys_dim()), mp.meter().matrix());
  return Observable(mp.unitary().adjoint() * lifted * mp.unitary(), mp.tolerance());
}

double output_distribution(const MeasuringProcess& mp, const ComplexMatrix& rho, double x) {
  if (rho.rows() != mp.sys_dim()) throw Error(ErrorKind::DimensionMismatch, "rho is not on the system");
  require_density(rho, "rho", mp.tolerance());
  const Observable m = meter_heisenberg(mp);
  return born_probability(spectral_family(m, x), tensor_product(rho, mp.sigma()), mp.tolerance());
}

Povm povm(const MeasuringProcess& mp) {
  const Observable m = meter_heisenberg(mp);
  const ComplexMatrix probe_state = tensor_product(identity(mp.sys_dim()), mp.sigma());
  Povm out;
  out.dim = mp.sys_dim();
  out.cuts = m.spectrum();
  for (double c : out.cuts) {
    out.cumulative.push_back(
        partial_trace_probe(spectral_family(m, c).matrix() * probe_state, mp.sys_dim(), mp.probe_dim()));
  }
  return out;
}

bool povm_well_formed(const Povm& pi, const Tolerance& tol) {
  if (pi.cuts.empty() || pi.cuts.size() != pi.cumulative.size()) return false;
  ComplexMatrix previous = zeros(pi.dim);
  for (const auto& op : pi.cumulative) {
    if (!is_hermitian(op, tol) || !psd(op - previous, tol)) return false;
    previous = op;
  }
  return approx_equal(previous, identity(pi.dim), tol.op_eq);
}

bool measures_in(const MeasuringProcess& mp, const Observable& a, const ComplexMatrix& rho) {
  require_system(mp, a, rho);
  const Tolerance& tol = mp.tolerance();
  const Observable lifted(tensor_product(a.matrix(), identity(mp.probe_dim())), tol);
  const Projection eq = equality_projection(lifted, meter_heisenberg(mp), tol);
  return born_probability(eq, tensor_product(rho, mp.sigma()), tol) >= 1.0 - tol.prob_clip;
}

bool weakly_measures(const MeasuringProcess& mp, const Observable& a, const ComplexMatrix& rho) {
  require_system(mp, a, rho);
  const Povm pi = povm(mp);
  const auto grid = merged_grid(a.spectrum(), pi.cuts, mp.tolerance());
  for (double x : grid) {
    const ComplexMatrix px = pi.at(x);
    for (double y : grid) {
      const Complex lhs = (px * spectral_family(a, y).matrix() * rho).trace();
      const Complex rhs = (spectral_family(a, std::min(x, y)).matrix() * rho).trace();
      if (std::abs(lhs - rhs) > mp.tolerance().op_eq) return false;
    }
  }
  return true;
}

bool bsf_holds(const MeasuringProcess& mp, const Observable& a, const ComplexMatrix& rho) {
  require_system(mp, a, rho);
  const Povm pi = povm(mp);
  for (double x : merged_grid(a.spectrum(), pi.cuts, mp.tolerance())) {
    const double output = (pi.at(x) * rho).trace().real();
    const double born = (spectral_family(a, x).matrix() * rho).trace().real();
    if (std::abs(output - born) > mp.tolerance().op_eq) return false;
  }
  return true;
}

std::vector<ComplexVector> cyclic_probe_states(const Observable& a, const ComplexMatrix& rho,
                                               const Tolerance& tol) {
  const std::vector<Observable> gens{a};
  const ComplexMatrix basis = cyclic_subspace(gens, rho, tol).range();
  std::vector<ComplexVector> out;
  const double s = 1.0 / std::sqrt(2.0);
  const Complex i_unit(0.0, 1.0);
  for (Eigen::Index k = 0; k < basis.cols(); ++k) out.emplace_back(basis.col(k));
  for (Eigen::Index k = 0; k < basis.cols(); ++k) {
    for (Eigen::Index l = k + 1; l < basis.cols(); ++l) {
      out.emplace_back(s * (basis.col(k) + basis.col(l)));
      out.emplace_back(s * (basis.col(k) - basis.col(l)));
      out.emplace_back(s * (basis.col(k) + i_unit * basis.col(l)));
      out.emplace_back(s * (basis.col(k) - i_unit * basis.col(l)));
    }
  }
  return out;
}

EquivalenceReport equivalence_suite(const MeasuringProcess& mp, const Observable& a,
                                    const ComplexMatrix& rho) {
  EquivalenceReport report{measures_in(mp, a, rho), weakly_measures(mp, a, rho), true};
  for (const auto& psi : cyclic_probe_states(a, rho, mp.tolerance())) {
    if (!bsf_holds(mp, a, psi * psi.adjoint())) {
      report.bsf_on_cyclic_subspace = false;
      break;
    }
  }
  return report;
}

bool measures_everywhere_iff(const MeasuringProcess& mp, const Observable& a) {
  if (a.dim() != mp.sys_dim()) throw Error(ErrorKind::DimensionMismatch, "observable is not on the system");
  const Povm pi = povm(mp);
  for (double x : merged_grid(a.spectrum(), pi.cuts, mp.tolerance())) {
    if (!approx_equal(pi.at(x), spectral_family(a, x).matrix(), mp.tolerance().op_eq)) return false;
  }
  return true;
}

bool simultaneous_check(const MeasuringProcess& mp, const std::function<double(double)>& f,
                        const std::function<double(double)>& g, const Observable& a,
                        const Observable& b, const ComplexMatrix& rho) {
  const MeasuringProcess by_f = mp.with_meter(apply_function(mp.meter(), f, mp.tolerance()));
  const MeasuringProcess by_g = mp.with_meter(apply_function(mp.meter(), g, mp.tolerance()));
  return measures_in(by_f, a, rho) && measures_in(by_g, b, rho);
}

bool theorem_main_verify(const Povm2& pi, const Observable& a, const Observable& b,
                         const ComplexMatrix& rho, MarginalMode mode, const Tolerance& tol) {
  const std::size_t nx = pi.x_cuts.size();
  const std::size_t ny = pi.y_cuts.size();
  if (nx == 0 || ny == 0 || pi.values.size() != nx) {
    throw Error(ErrorKind::MalformedPovm, "grid shape does not match the cut lists");
  }
  if (!std::is_sorted(pi.x_cuts.begin(), pi.x_cuts.end()) ||
      !std::is_sorted(pi.y_cuts.begin(), pi.y_cuts.end())) {
    throw Error(ErrorKind::MalformedPovm, "cut points must be increasing");
  }
  if (a.dim() != pi.dim || b.dim() != pi.dim || rho.rows() != pi.dim) {
    throw Error(ErrorKind::DimensionMismatch, "POVM, observables and state differ in dimension");
  }
  for (std::size_t i = 0; i < nx; ++i) {
    if (pi.values[i].size() != ny) throw Error(ErrorKind::MalformedPovm, "ragged value grid");
    for (std::size_t j = 0; j < ny; ++j) {
      const ComplexMatrix& v = pi.values[i][j];
      if (v.rows() != pi.dim || !is_hermitian(v, tol) || !psd(v, tol)) {
        throw Error(ErrorKind::MalformedPovm, "Π(x, y) must be positive semidefinite");
      }
      if ((i > 0 && !psd(v - pi.values[i - 1][j], tol)) ||
          (j > 0 && !psd(v - pi.values[i][j - 1], tol))) {
        throw Error(ErrorKind::MalformedPovm, "Π is not monotone in each argument");
      }
    }
  }
  if (!approx_equal(pi.values[nx - 1][ny - 1], identity(pi.dim), tol.op_eq)) {
    throw Error(ErrorKind::MalformedPovm, "Π(+∞, +∞) must be the identity");
  }

  std::vector<ComplexMatrix> x_marginal;
  for (std::size_t i = 0; i < nx; ++i) x_marginal.push_back(pi.values[i][ny - 1]);
  std::vector<ComplexMatrix> y_marginal = pi.values[nx - 1];

  Projection subspace_a = Projection::zero(pi.dim);
  Projection subspace_b = Projection::zero(pi.dim);
  if (mode == MarginalMode::Determinate) {
    const std::vector<Observable> both{a, b};
    subspace_a = cyclic_subspace(both, rho, tol);
    subspace_b = subspace_a;
  } else {
    const std::vector<Observable> only_a{a};
    const std::vector<Observable> only_b{b};
    subspace_a = cyclic_subspace(only_a, rho, tol);
    subspace_b = cyclic_subspace(only_b, rho, tol);
  }

  auto marginal_matches = [&](const std::vector<double>& cuts,
                              const std::vector<ComplexMatrix>& marginal, const Observable& obs,
                              const Projection& c) {
    const ComplexMatrix& pc = c.matrix();
    for (double x : merged_grid(cuts, obs.spectrum(), tol)) {
      const ComplexMatrix lhs = pc * step_at(cuts, marginal, x, pi.dim) * pc;
      const ComplexMatrix rhs = pc * spectral_family(obs, x).matrix() * pc;
      if (!approx_equal(lhs, rhs, tol.op_eq)) return false;
    }
    return true;
  };
  return marginal_matches(pi.x_cuts, x_marginal, a, subspace_a) &&
         marginal_matches(pi.y_cuts, y_marginal, b, subspace_b);
}

}  // namespace qlogic
