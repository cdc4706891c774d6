#include "qlogic/jointdist.hpp"

#include <cmath>

#include "qlogic/truth.hpp"

namespace qlogic {

namespace {

constexpr double kNegativeMassSlack = 1e-12;

}  // namespace

double JointDistribution::cumulative(std::span<const double> point) const {
  double total = 0.0;
  for (const auto& [tuple, mass] : masses) {
    bool below = true;
    for (std::size_t i = 0; i < tuple.size() && below; ++i) below = tuple[i] <= point[i];
    if (below) total += mass;
  }
  return total;
}

std::vector<double> JointDistribution::marginal(std::size_t axis) const {
  const auto& values = axes.at(axis).values;
  std::vector<double> out(values.size(), 0.0);
  for (const auto& [tuple, mass] : masses) {
    for (std::size_t k = 0; k < values.size(); ++k) {
      if (values[k] == tuple[axis]) out[k] += mass;
    }
  }
  return out;
}

double com_probability(std::span<const Observable> xs, const ComplexMatrix& rho,
                       const Tolerance& tol) {
  require_density(rho, "rho", tol);
  return born_probability(joint_projection(xs, tol), rho, tol);
}

bool jpd_exists(std::span<const Observable> xs, const ComplexMatrix& rho, const Tolerance& tol) {
  return com_probability(xs, rho, tol) >= 1.0 - tol.prob_clip;
}

JointDistribution jpd(std::span<const Observable> xs, const ComplexMatrix& rho,
                      std::vector<std::string> names, const Tolerance& tol) {
  if (!jpd_exists(xs, rho, tol)) {
    throw Error(ErrorKind::NotJointlyDeterminate, "observables are not jointly determinate in rho");
  }
  JointDistribution out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::string name = i < names.size() ? names[i] : "X" + std::to_string(i + 1);
    out.axes.push_back({std::move(name), xs[i].spectrum()});
  }

  const int dim = xs.front().dim();
  std::vector<std::size_t> index(xs.size(), 0);
  double total = 0.0;
  for (;;) {
    std::vector<double> tuple(xs.size());
    Projection atom = Projection::identity(dim);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      tuple[i] = xs[i].spectrum()[index[i]];
      if (atom.rank() > 0) atom = meet(atom, eigen_atom(xs[i], tuple[i]), tol);
    }
    double mass = (atom.matrix() * rho).trace().real();
    if (mass < -kNegativeMassSlack) {
      throw Error(ErrorKind::NotJointlyDeterminate, "negative joint mass " + std::to_string(mass));
    }
    mass = std::max(mass, 0.0);
    total += mass;
    out.masses.emplace(std::move(tuple), mass);

    std::size_t k = 0;
    while (k < xs.size() && ++index[k] == xs[k].spectrum().size()) index[k++] = 0;
    if (k == xs.size()) break;
  }
  if (total <= 0.0) throw Error(ErrorKind::NotJointlyDeterminate, "joint masses vanish");
  for (auto& [tuple, mass] : out.masses) mass /= total;
  return out;
}

MomentComparison moment_check(std::span<const Observable> xs, const ComplexMatrix& rho,
                              std::span<const SpectralFunction> fs, const Polynomial& p,
                              const Tolerance& tol) {
  if (fs.size() != xs.size()) {
    throw Error(ErrorKind::DimensionMismatch, "one function per observable is required");
  }
  const JointDistribution dist = jpd(xs, rho, {}, tol);

  std::vector<Observable> transformed;
  transformed.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) transformed.push_back(apply_function(xs[i], fs[i], tol));

  const int dim = xs.front().dim();
  ComplexMatrix op = zeros(dim);
  for (const auto& mono : p) {
    if (mono.powers.size() != xs.size()) {
      throw Error(ErrorKind::DimensionMismatch, "monomial arity differs from observable count");
    }
    ComplexMatrix term = identity(dim);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (int k = 0; k < mono.powers[i]; ++k) term = term * transformed[i].matrix();
    }
    op += mono.coefficient * term;
  }
  const double lhs = (op * rho).trace().real();

  double rhs = 0.0;
  for (const auto& [tuple, mass] : dist.masses) {
    double value = 0.0;
    for (const auto& mono : p) {
      double term = mono.coefficient;
      for (std::size_t i = 0; i < tuple.size(); ++i) term *= std::pow(fs[i](tuple[i]), mono.powers[i]);
      value += term;
    }
    rhs += mass * value;
  }
  return {lhs, rhs};
}

double diagonal_mass(const Observable& x, const Observable& y, const ComplexMatrix& rho,
                     const Tolerance& tol) {
  const std::vector<Observable> pair{x, y};
  const JointDistribution dist = jpd(pair, rho, {}, tol);
  const double cluster = std::max(x.cluster_threshold(), y.cluster_threshold());
  double total = 0.0;
  for (const auto& [tuple, mass] : dist.masses) {
    if (std::abs(tuple[0] - tuple[1]) <= cluster) total += mass;
  }
  return total;
}

}  // namespace qlogic
