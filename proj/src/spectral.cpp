#include "qlogic/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qlogic {

Observable::Observable(const ComplexMatrix& m, const Tolerance& tol) {
  auto components = hermitian_eig(m, tol);
  matrix_ = 0.5 * (m + m.adjoint());
  cluster_ = tol.eig_cluster_for(m);
  spectrum_.reserve(components.size());
  projectors_.reserve(components.size());
  for (auto& c : components) {
    spectrum_.push_back(c.value);
    projectors_.emplace_back(c.projector, tol);
  }
}

Observable Observable::from_spectral(std::vector<double> values,
                                     std::vector<Projection> projectors, const Tolerance& tol) {
  if (values.size() != projectors.size() || values.empty()) {
    throw Error(ErrorKind::DimensionMismatch, "values and projectors must be parallel and nonempty");
  }
  const int dim = projectors.front().dim();
  double scale = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw Error(ErrorKind::UndefinedAtSpectrum, "non-finite spectral value");
    }
    if (projectors[i].dim() != dim) {
      throw Error(ErrorKind::DimensionMismatch, "projectors differ in dimension");
    }
    scale = std::max(scale, std::abs(values[i]));
  }

  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

  Observable out;
  out.cluster_ = tol.eig_cluster * (1.0 + scale);
  ComplexMatrix total = zeros(dim);
  ComplexMatrix matrix = zeros(dim);
  std::vector<std::pair<double, ComplexMatrix>> merged;
  for (std::size_t idx : order) {
    const Projection& p = projectors[idx];
    if (p.rank() == 0) continue;
    total += p.matrix();
    matrix += values[idx] * p.matrix();
    if (!merged.empty() && values[idx] - merged.back().first <= out.cluster_) {
      merged.back().second += p.matrix();
    } else {
      merged.emplace_back(values[idx], p.matrix());
    }
  }
  if (max_abs(total - identity(dim)) > tol.op_eq) {
    throw Error(ErrorKind::InvalidProjection, "spectral projectors do not resolve the identity");
  }
  for (auto& [value, proj] : merged) {
    out.spectrum_.push_back(value);
    out.projectors_.emplace_back(proj, tol);
  }
  out.matrix_ = 0.5 * (matrix + matrix.adjoint());
  return out;
}

// Breakpoints are compared with the cluster threshold as slack: an eigenvalue
// computed as 1 + 2e-16 still counts as "≤ 1".
Projection spectral_family(const Observable& x, double lambda) {
  const double edge = lambda + x.cluster_threshold();
  ComplexMatrix sum = zeros(x.dim());
  for (std::size_t i = 0; i < x.spectrum().size() && x.spectrum()[i] <= edge; ++i) {
    sum += x.eigenprojectors()[i].matrix();
  }
  return Projection(sum);
}

Projection interval_projection(const Observable& x, double a, double b) {
  if (!(a < b)) throw Error(ErrorKind::EmptyInterval, "interval (a, b] needs a < b");
  const double slack = x.cluster_threshold();
  ComplexMatrix sum = zeros(x.dim());
  for (std::size_t i = 0; i < x.spectrum().size(); ++i) {
    const double lambda = x.spectrum()[i];
    if (a + slack < lambda && lambda <= b + slack) sum += x.eigenprojectors()[i].matrix();
  }
  return Projection(sum);
}

double delta(const Observable& x) {
  const auto& sp = x.spectrum();
  double out = 1.0;
  for (std::size_t i = 1; i < sp.size(); ++i) out = std::min(out, (sp[i] - sp[i - 1]) / 2.0);
  return out;
}

Projection eigen_atom(const Observable& x, double v) {
  const double d = delta(x);
  for (double lambda : x.spectrum()) {
    if (std::abs(v - lambda) <= x.cluster_threshold()) {
      return interval_projection(x, lambda - d, lambda + d);
    }
  }
  return Projection::zero(x.dim());
}

Observable apply_function(const Observable& x, const std::function<double(double)>& f,
                          const Tolerance& tol) {
  std::vector<double> values;
  values.reserve(x.spectrum().size());
  for (double lambda : x.spectrum()) {
    double fx = 0.0;
    try {
      fx = f(lambda);
    } catch (const std::exception& e) {
      throw Error(ErrorKind::UndefinedAtSpectrum,
                  "function failed at spectral point " + std::to_string(lambda) + ": " + e.what());
    }
    if (!std::isfinite(fx)) {
      throw Error(ErrorKind::UndefinedAtSpectrum,
                  "function undefined at spectral point " + std::to_string(lambda));
    }
    values.push_back(fx);
  }
  return Observable::from_spectral(std::move(values), x.eigenprojectors(), tol);
}

QuantumReal to_quantum_real(const Observable& x) {
  QuantumReal u;
  for (double lambda : x.spectrum()) u.cuts.emplace(lambda, spectral_family(x, lambda));
  return u;
}

Observable from_quantum_real(const QuantumReal& u, const Tolerance& tol) {
  if (u.cuts.empty()) throw Error(ErrorKind::NotDedekindCut, "no cut points");
  const int dim = u.cuts.begin()->second.dim();
  Projection previous = Projection::zero(dim);
  std::vector<double> values;
  std::vector<Projection> steps;
  for (const auto& [cut, proj] : u.cuts) {
    if (proj.dim() != dim) throw Error(ErrorKind::DimensionMismatch, "cut projections differ in dimension");
    if (!leq(previous, proj, tol)) {
      throw Error(ErrorKind::NotDedekindCut, "cut projections are not monotone at " + std::to_string(cut));
    }
    const ComplexMatrix step = proj.matrix() - previous.matrix();
    if (max_abs(step) > tol.op_eq) {
      values.push_back(cut);
      steps.emplace_back(step, tol);
    }
    previous = proj;
  }
  if (!previous.approx_equal(Projection::identity(dim), tol.op_eq)) {
    throw Error(ErrorKind::NotDedekindCut, "greatest cut projection is not the identity");
  }
  return Observable::from_spectral(std::move(values), std::move(steps), tol);
}

}  // namespace qlogic
