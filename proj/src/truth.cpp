#include "qlogic/truth.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "qlogic/opalgebra.hpp"

namespace qlogic {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_same_dim(std::span<const Observable> xs) {
  if (xs.empty()) throw Error(ErrorKind::DimensionMismatch, "empty observable list");
  for (const auto& x : xs) {
    if (x.dim() != xs.front().dim()) {
      throw Error(ErrorKind::DimensionMismatch, "observables act on spaces of different dimension");
    }
  }
}

std::vector<Observable> lookup_all(const Model& model, const std::vector<std::string>& names) {
  std::vector<Observable> out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(model.observable(n));
  return out;
}

bool is_atom(const Prop& p) {
  return !std::holds_alternative<ast::Not>(p.node) && !std::holds_alternative<ast::And>(p.node) &&
         !std::holds_alternative<ast::Or>(p.node);
}

void collect_atoms(const Prop& p, std::vector<std::string>& atoms) {
  if (is_atom(p)) {
    const std::string key = to_string(p);
    if (std::find(atoms.begin(), atoms.end(), key) == atoms.end()) atoms.push_back(key);
    return;
  }
  std::visit(Overloaded{
                 [&](const ast::Not& a) { collect_atoms(*a.child, atoms); },
                 [&](const ast::And& a) {
                   collect_atoms(*a.lhs, atoms);
                   collect_atoms(*a.rhs, atoms);
                 },
                 [&](const ast::Or& a) {
                   collect_atoms(*a.lhs, atoms);
                   collect_atoms(*a.rhs, atoms);
                 },
                 [](const auto&) {},
             },
             p.node);
}

bool eval_classical(const Prop& p, const std::vector<std::string>& atoms, unsigned long bits) {
  if (is_atom(p)) {
    const auto idx = std::find(atoms.begin(), atoms.end(), to_string(p)) - atoms.begin();
    return (bits >> idx) & 1UL;
  }
  return std::visit(Overloaded{
                        [&](const ast::Not& a) { return !eval_classical(*a.child, atoms, bits); },
                        [&](const ast::And& a) {
                          return eval_classical(*a.lhs, atoms, bits) &&
                                 eval_classical(*a.rhs, atoms, bits);
                        },
                        [&](const ast::Or& a) {
                          return eval_classical(*a.lhs, atoms, bits) ||
                                 eval_classical(*a.rhs, atoms, bits);
                        },
                        [](const auto&) { return false; },
                    },
                    p.node);
}

}  // namespace

Model::Model(int dim, ObservableMap observables, StateMap states, Tolerance tol)
    : dim_(dim), observables_(std::move(observables)), states_(std::move(states)), tol_(tol) {
  tol_.validate();
  if (dim_ <= 0) throw Error(ErrorKind::DimensionMismatch, "model dimension must be positive");
  for (const auto& [name, obs] : observables_) {
    if (obs.dim() != dim_) throw Error(ErrorKind::DimensionMismatch, "observable " + name);
  }
  for (const auto& [name, rho] : states_) {
    if (rho.rows() != dim_ || rho.cols() != dim_) {
      throw Error(ErrorKind::DimensionMismatch, "state " + name);
    }
    require_density(rho, ("state " + name).c_str(), tol_);
  }
}

const Observable& Model::observable(std::string_view name) const {
  auto it = observables_.find(name);
  if (it == observables_.end()) throw Error(ErrorKind::UnknownObservable, std::string(name));
  return it->second;
}

const ComplexMatrix& Model::state(std::string_view name) const {
  auto it = states_.find(name);
  if (it == states_.end()) throw Error(ErrorKind::UnknownState, std::string(name));
  return it->second;
}

Projection equality_projection(const Observable& x, const Observable& y, const Tolerance& tol) {
  if (x.dim() != y.dim()) throw Error(ErrorKind::DimensionMismatch, "eq operands differ in dimension");
  std::vector<double> grid = x.spectrum();
  grid.insert(grid.end(), y.spectrum().begin(), y.spectrum().end());
  std::sort(grid.begin(), grid.end());
  // Eigenvalues that agree only up to rounding must land on the same side of
  // every sample point, so a cluster is sampled once at its largest member.
  const double merge = std::max(x.cluster_threshold(), y.cluster_threshold());
  std::vector<double> samples;
  for (double lambda : grid) {
    if (!samples.empty() && lambda - samples.back() <= merge) {
      samples.back() = lambda;
    } else {
      samples.push_back(lambda);
    }
  }
  std::vector<ComplexMatrix> differences;
  differences.reserve(samples.size());
  for (double lambda : samples) {
    differences.push_back(spectral_family(x, lambda).matrix() - spectral_family(y, lambda).matrix());
  }
  return Projection(kernel_projector(differences, x.dim(), tol), tol);
}

Projection joint_projection(std::span<const Observable> xs, const Tolerance& tol) {
  require_same_dim(xs);
  const auto generators = matrices_of(xs);
  return set_commutator(generators, xs.front().dim(), tol);
}

Projection finite_joint_sup(std::span<const Observable> xs, const Tolerance& tol) {
  require_same_dim(xs);
  const int dim = xs.front().dim();
  Projection out = Projection::zero(dim);
  std::vector<std::size_t> index(xs.size(), 0);
  for (;;) {
    Projection term = Projection::identity(dim);
    for (std::size_t i = 0; i < xs.size() && term.rank() > 0; ++i) {
      term = meet(term, eigen_atom(xs[i], xs[i].spectrum()[index[i]]), tol);
    }
    if (term.rank() > 0) out = join(out, term, tol);
    std::size_t k = 0;
    while (k < xs.size() && ++index[k] == xs[k].spectrum().size()) index[k++] = 0;
    if (k == xs.size()) break;
  }
  return out;
}

Projection finite_equality_sup(const Observable& x, const Observable& y, const Tolerance& tol) {
  if (x.dim() != y.dim()) throw Error(ErrorKind::DimensionMismatch, "eq operands differ in dimension");
  Projection out = Projection::zero(x.dim());
  for (double v : x.spectrum()) out = join(out, meet(eigen_atom(x, v), eigen_atom(y, v), tol), tol);
  return out;
}

Projection truth_value(const Prop& p, const Model& model) {
  const Tolerance& tol = model.tolerance();
  return std::visit(
      Overloaded{
          [&](const ast::Leq& a) { return spectral_family(model.observable(a.name), a.value); },
          [&](const ast::EqConst& a) { return eigen_atom(model.observable(a.name), a.value); },
          [&](const ast::InInterval& a) {
            return interval_projection(model.observable(a.name), a.lower, a.upper);
          },
          [&](const ast::EqObs& a) {
            return equality_projection(model.observable(a.lhs), model.observable(a.rhs), tol);
          },
          [&](const ast::Joint& a) { return joint_projection(lookup_all(model, a.names), tol); },
          [&](const ast::Not& a) { return ortho(truth_value(*a.child, model)); },
          [&](const ast::And& a) {
            return meet(truth_value(*a.lhs, model), truth_value(*a.rhs, model), tol);
          },
          [&](const ast::Or& a) {
            return join(truth_value(*a.lhs, model), truth_value(*a.rhs, model), tol);
          },
      },
      p.node);
}

double born_probability(const Projection& p, const ComplexMatrix& rho, const Tolerance& tol) {
  if (rho.rows() != p.dim() || rho.cols() != p.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "state and projection differ in dimension");
  }
  const double value = (p.matrix() * rho).trace().real();
  if (value < -tol.prob_clip || value > 1.0 + tol.prob_clip) {
    throw Error(ErrorKind::ProbabilityOutOfRange, "Tr[Pρ] = " + std::to_string(value));
  }
  return std::clamp(value, 0.0, 1.0);
}

double probability(const Prop& p, const Model& model, std::string_view state) {
  const ComplexMatrix& rho = model.state(state);
  return born_probability(truth_value(p, model), rho, model.tolerance());
}

bool holds(const Prop& p, const Model& model, std::string_view state) {
  return probability(p, model, state) >= 1.0 - model.tolerance().prob_clip;
}

bool well_formed(const Prop& p, const Model& model, std::string_view state) {
  const auto names = names_in(p);
  const ComplexMatrix& rho = model.state(state);
  if (names.size() < 2) {
    for (const auto& n : names) model.observable(n);
    return true;
  }
  const auto xs = lookup_all(model, {names.begin(), names.end()});
  const double pr = born_probability(joint_projection(xs, model.tolerance()), rho, model.tolerance());
  return pr >= 1.0 - model.tolerance().prob_clip;
}

bool is_classical_tautology(const Prop& p) {
  std::vector<std::string> atoms;
  collect_atoms(p, atoms);
  if (atoms.size() > 20) throw std::invalid_argument("too many atoms for a truth-table check");
  const unsigned long rows = 1UL << atoms.size();
  for (unsigned long bits = 0; bits < rows; ++bits) {
    if (!eval_classical(p, atoms, bits)) return false;
  }
  return true;
}

bool transfer_check(const Prop& p, const Model& model) {
  if (!is_classical_tautology(p)) {
    throw Error(ErrorKind::NotATautology, to_string(p));
  }
  const auto names = names_in(p);
  const auto xs = lookup_all(model, {names.begin(), names.end()});
  const Projection com = joint_projection(xs, model.tolerance());
  return leq(com, truth_value(p, model), model.tolerance());
}

}  // namespace qlogic
