#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "qlogic/jointdist.hpp"
#include "qlogic/measurement.hpp"
#include "qlogic/truth.hpp"

namespace qlogic {

using ProcessMap = std::map<std::string, MeasuringProcess, std::less<>>;

/// A parsed model file:
///
///   {
///     "dimension": 2,
///     "operators": { "Z": {"re": [[1,0],[0,-1]], "im": [[0,0],[0,0]]} },
///     "states":    { "ground": {"vector": {"re": [1,0], "im": [0,0]}},
///                    "mixed":  {"re": [[0.5,0],[0,0.5]]} },
///     "processes": { "cnot": {"probe_dim": 2, "sigma": <state>, "U": <matrix>,
///                             "M": <matrix>} }
///   }
///
/// "im" may be omitted and defaults to zero. State vectors are renormalized
/// when their norm is within 1e-6 of one.
struct ModelFile {
  Model model;
  ProcessMap processes;

  /// Throws UnknownProcess.
  const MeasuringProcess& process(std::string_view name) const;
};

ModelFile load_model(const std::string& path, const Tolerance& tol = {});
ModelFile parse_model(const nlohmann::json& doc, const Tolerance& tol = {});

/// Throws ModelFormat unless `j` holds a dim×dim {re, im} matrix.
ComplexMatrix matrix_from_json(const nlohmann::json& j, int dim);
nlohmann::json matrix_to_json(const ComplexMatrix& m);

/// A {re, im} density matrix or a {vector: {re, im}} pure state.
ComplexMatrix state_from_json(const nlohmann::json& j, int dim, const Tolerance& tol = {});

nlohmann::json povm_to_json(const Povm& pi);
nlohmann::json jpd_to_json(const JointDistribution& dist, double min_mass);

}  // namespace qlogic
