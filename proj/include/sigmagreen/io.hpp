#pragma once

#include "sigmagreen/barrier.hpp"
#include "sigmagreen/cone.hpp"
#include "sigmagreen/greens.hpp"
#include "sigmagreen/matrixhull.hpp"
#include "sigmagreen/tensorid.hpp"
#include "sigmagreen/volcomp.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace sigmagreen {

using Json = nlohmann::ordered_json;

// Deterministic serialization: numbers at 17 significant digits, non-finite numbers as
// the strings "inf", "-inf", "nan", keys in insertion order.
std::string dump_json(const Json& j, int indent = 2);

// Header row then one row per index; all columns must have equal length.
std::string format_csv(const std::vector<std::string>& header, const std::vector<std::vector<double>>& columns);

// Creates missing parent directories.
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

// {"family":"gamma_k","n":5,"k":2} or {"family":"custom","n":4,"slice":"ball","radius":0.8},
// optionally with "open_up": t.
Cone cone_from_json(const Json& j);

Eigen::MatrixXd matrix_from_json(const Json& j);
Json matrix_to_json(const Eigen::MatrixXd& m);
Json vector_to_json(const Eigen::VectorXd& v);

Json to_json(const ConeMembership& m);
Json to_json(const BarrierReport& r);
Json to_json(const DegenerateReport& r);
Json to_json(const SolverReport& r, const std::string& profile_path = "");
Json to_json(const WeightedPermutationList& items);
Json to_json(const HullCheckResult& r);
Json to_json(const ResidualReport& r);
Json to_json(const BishopGromovReport& r);

}  // namespace sigmagreen
