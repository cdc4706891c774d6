#include "qlogic/model_file.hpp"

#include <cmath>
#include <fstream>

namespace qlogic {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorKind::ModelFormat, msg); }

Eigen::MatrixXd real_grid(const json& j, int dim, const char* field) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim) {
    bad(std::string(field) + " must have " + std::to_string(dim) + " rows");
  }
  Eigen::MatrixXd out(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const json& row = j[r];
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      bad(std::string(field) + " row " + std::to_string(r) + " must have " + std::to_string(dim) +
          " entries");
    }
    for (int c = 0; c < dim; ++c) {
      if (!row[c].is_number()) bad(std::string(field) + " entries must be numbers");
      out(r, c) = row[c].get<double>();
    }
  }
  return out;
}

Eigen::VectorXd real_list(const json& j, int dim, const char* field) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim) {
    bad(std::string(field) + " must have " + std::to_string(dim) + " entries");
  }
  Eigen::VectorXd out(dim);
  for (int i = 0; i < dim; ++i) {
    if (!j[i].is_number()) bad(std::string(field) + " entries must be numbers");
    out[i] = j[i].get<double>();
  }
  return out;
}

int positive_int(const json& j, const char* field) {
  if (!j.is_number_integer() || j.get<long long>() <= 0) bad(std::string(field) + " must be a positive integer");
  return j.get<int>();
}

}  // namespace

ComplexMatrix matrix_from_json(const json& j, int dim) {
  if (!j.is_object() || !j.contains("re")) bad("matrix must be an object with \"re\" (and optional \"im\")");
  const Eigen::MatrixXd re = real_grid(j["re"], dim, "re");
  const Eigen::MatrixXd im = j.contains("im") ? real_grid(j["im"], dim, "im") : Eigen::MatrixXd::Zero(dim, dim);
  ComplexMatrix out(dim, dim);
  out.real() = re;
  out.imag() = im;
  return out;
}

json matrix_to_json(const ComplexMatrix& m) {
  json re = json::array();
  json im = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json re_row = json::array();
    json im_row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      re_row.push_back(m(r, c).real());
      im_row.push_back(m(r, c).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return json{{"re", std::move(re)}, {"im", std::move(im)}};
}

ComplexMatrix state_from_json(const json& j, int dim, const Tolerance& tol) {
  if (!j.is_object()) bad("state must be an object");
  if (j.contains("vector")) {
    const json& v = j["vector"];
    if (!v.is_object() || !v.contains("re")) bad("state vector needs \"re\"");
    ComplexVector psi(dim);
    psi.real() = real_list(v["re"], dim, "vector.re");
    psi.imag() = v.contains("im") ? real_list(v["im"], dim, "vector.im") : Eigen::VectorXd::Zero(dim);
    const double norm = psi.norm();
    if (std::abs(norm - 1.0) > 1e-6) bad("state vector norm " + std::to_string(norm) + " is not 1");
    psi /= norm;
    return psi * psi.adjoint();
  }
  ComplexMatrix rho = matrix_from_json(j, dim);
  require_density(rho, "state", tol);
  return rho;
}

const MeasuringProcess& ModelFile::process(std::string_view name) const {
  auto it = processes.find(name);
  if (it == processes.end()) throw Error(ErrorKind::UnknownProcess, std::string(name));
  return it->second;
}

ModelFile parse_model(const json& doc, const Tolerance& tol) {
  if (!doc.is_object() || !doc.contains("dimension")) bad("model needs a \"dimension\" field");
  const int dim = positive_int(doc["dimension"], "dimension");

  ObservableMap observables;
  if (doc.contains("operators")) {
    if (!doc["operators"].is_object()) bad("\"operators\" must be an object");
    for (const auto& [name, m] : doc["operators"].items()) {
      observables.emplace(name, Observable(matrix_from_json(m, dim), tol));
    }
  }
  StateMap states;
  if (doc.contains("states")) {
    if (!doc["states"].is_object()) bad("\"states\" must be an object");
    for (const auto& [name, s] : doc["states"].items()) {
      states.emplace(name, state_from_json(s, dim, tol));
    }
  }
  ProcessMap processes;
  if (doc.contains("processes")) {
    if (!doc["processes"].is_object()) bad("\"processes\" must be an object");
    for (const auto& [name, p] : doc["processes"].items()) {
      if (!p.is_object() || !p.contains("probe_dim") || !p.contains("sigma") || !p.contains("U") ||
          !p.contains("M")) {
        bad("process " + name + " needs probe_dim, sigma, U and M");
      }
      const int probe = positive_int(p["probe_dim"], "probe_dim");
      processes.emplace(name, MeasuringProcess(dim, state_from_json(p["sigma"], probe, tol),
                                               matrix_from_json(p["U"], dim * probe),
                                               Observable(matrix_from_json(p["M"], probe), tol), tol));
    }
  }
  return ModelFile{Model(dim, std::move(observables), std::move(states), tol), std::move(processes)};
}

ModelFile load_model(const std::string& path, const Tolerance& tol) {
  std::ifstream in(path);
  if (!in) bad("cannot open model file " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    bad(std::string("invalid JSON in ") + path + ": " + e.what());
  }
  return parse_model(doc, tol);
}

json povm_to_json(const Povm& pi) {
  json ops = json::array();
  for (const auto& op : pi.cumulative) ops.push_back(matrix_to_json(op));
  return json{{"cuts", pi.cuts}, {"operators", std::move(ops)}};
}

json jpd_to_json(const JointDistribution& dist, double min_mass) {
  json axes = json::array();
  for (const auto& axis : dist.axes) axes.push_back(json{{"name", axis.name}, {"values", axis.values}});
  json masses = json::array();
  for (const auto& [tuple, mass] : dist.masses) {
    if (mass > min_mass) masses.push_back(json{{"point", tuple}, {"p", mass}});
  }
  return json{{"exists", true}, {"axes", std::move(axes)}, {"masses", std::move(masses)}};
}

}  // namespace qlogic
