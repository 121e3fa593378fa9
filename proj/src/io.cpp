#include "sigmagreen/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace sigmagreen {

namespace {

std::string format_number(double x) {
  if (std::isnan(x)) return "\"nan\"";
  if (std::isinf(x)) return x > 0 ? "\"inf\"" : "\"-inf\"";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void dump_rec(const Json& j, int indent, int depth, std::ostringstream& os) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
  const char* nl = indent > 0 ? "\n" : "";
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << '{' << nl;
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ',' << nl;
        first = false;
        os << pad << Json(it.key()).dump() << (indent > 0 ? ": " : ":");
        dump_rec(it.value(), indent, depth + 1, os);
      }
      os << nl << close_pad << '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      const bool flat = std::none_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); });
      if (flat) {
        os << '[';
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) os << (indent > 0 ? ", " : ",");
          dump_rec(j[i], indent, depth + 1, os);
        }
        os << ']';
        return;
      }
      os << '[' << nl;
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ',' << nl;
        os << pad;
        dump_rec(j[i], indent, depth + 1, os);
      }
      os << nl << close_pad << ']';
      return;
    }
    case Json::value_t::number_float:
      os << format_number(j.get<double>());
      return;
    default:
      os << j.dump();
  }
}

Json memberships_json(const std::vector<ConeMembership>& ms) {
  Json verdicts = Json::array(), margins = Json::array();
  for (const auto& m : ms) {
    verdicts.push_back(to_string(m.verdict));
    margins.push_back(m.signed_margin);
  }
  return Json{{"verdicts", verdicts}, {"margins", margins}};
}

}  // namespace

std::string dump_json(const Json& j, int indent) {
  std::ostringstream os;
  dump_rec(j, indent, 0, os);
  os << '\n';
  return os.str();
}

std::string format_csv(const std::vector<std::string>& header, const std::vector<std::vector<double>>& columns) {
  if (header.size() != columns.size()) throw ArgumentError("csv: header and column count differ");
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  for (const auto& c : columns)
    if (c.size() != rows) throw ArgumentError("csv: ragged columns");
  std::ostringstream os;
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << '\n';
  char buf[32];
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      std::snprintf(buf, sizeof buf, "%.17g", columns[c][r]);
      os << (c ? "," : "") << buf;
    }
    os << '\n';
  }
  return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  const std::filesystem::path parent = std::filesystem::path(path).parent_path();
  std::error_code ec;
  if (!parent.empty()) std::filesystem::create_directories(parent, ec);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ArgumentError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw ArgumentError("failed writing '" + path + "'");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Cone cone_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("family") || !j.contains("n")) throw ArgumentError("cone record needs family and n");
  const std::string family = j.at("family").get<std::string>();
  const int n = j.at("n").get<int>();
  auto base = [&]() -> Cone {
    if (family == "gamma_k") {
      if (!j.contains("k")) throw ArgumentError("gamma_k cone record needs k");
      return Cone::gamma_k(n, j.at("k").get<int>());
    }
    if (family == "custom") {
      const std::string slice = j.value("slice", std::string("ball"));
      if (slice != "ball") throw ArgumentError("custom cone: unknown slice '" + slice + "' (available: ball)");
      const double radius = j.value("radius", std::sqrt(1.0 - 1.0 / n));
      return Cone::custom(n, ball_slice(n, radius));
    }
    throw ArgumentError("unknown cone family '" + family + "'");
  }();
  if (j.contains("open_up")) return base.open_up(j.at("open_up").get<double>());
  return base;
}

Eigen::MatrixXd matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ArgumentError("matrix must be a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) throw ArgumentError("matrix rows differ in length");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = row[static_cast<std::size_t>(c)].get<double>();
  }
  return m;
}

Json matrix_to_json(const Eigen::MatrixXd& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(row);
  }
  return out;
}

Json vector_to_json(const Eigen::VectorXd& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

Json to_json(const ConeMembership& m) { return Json{{"verdict", to_string(m.verdict)}, {"signed_margin", m.signed_margin}}; }

Json to_json(const BarrierReport& r) {
  const Json ms = memberships_json(r.memberships);
  return Json{{"grid", r.grid},
              {"verdicts", ms["verdicts"]},
              {"margins", ms["margins"]},
              {"min_margin", r.min_margin},
              {"all_interior", r.all_interior},
              {"key_ratio_min", r.key_ratio_min},
              {"chi1_min", r.chi1_min},
              {"ratio_min", r.lower_bound_ratio_min},
              {"ratio_max", r.lower_bound_ratio_max}};
}

Json to_json(const DegenerateReport& r) {
  const Json ms = memberships_json(r.memberships);
  Json out{{"grid", r.grid},
           {"verdicts", ms["verdicts"]},
           {"margins", ms["margins"]},
           {"all_boundary", r.all_boundary},
           {"max_residual", r.max_residual}};
  out["lower_sigma_min"] = r.lower_sigma_min ? Json(*r.lower_sigma_min) : Json(nullptr);
  return out;
}

Json to_json(const SolverReport& r, const std::string& profile_path) {
  return Json{{"converged", r.converged},
              {"epsilon", r.epsilon},
              {"residual_max", r.residual_max},
              {"newton_iterations", r.newton_iterations},
              {"eigen_margin_min", r.eigen_margin_min},
              {"message", r.message},
              {"profile_path", profile_path}};
}

Json to_json(const WeightedPermutationList& items) {
  Json out = Json::array();
  for (const auto& it : items) out.push_back(Json{{"weight", it.weight}, {"permutation", it.perm}});
  return out;
}

Json to_json(const HullCheckResult& r) {
  auto cert = [](const std::vector<HullVertexWeight>& c) {
    Json out = Json::array();
    for (const auto& v : c)
      out.push_back(Json{{"weight", v.weight}, {"source", std::string(1, v.source)}, {"permutation", v.perm}});
    return out;
  };
  return Json{{"feasible", r.feasible},
              {"u", vector_to_json(r.u)},
              {"v", vector_to_json(r.v)},
              {"w", vector_to_json(r.w)},
              {"lp_residual", r.lp_residual},
              {"certificate", cert(r.certificate)},
              {"constructive_residual", r.constructive_residual},
              {"constructive", cert(r.constructive)}};
}

Json to_json(const ResidualReport& r) {
  return Json{{"identity", r.identity == Identity::Divergence ? "divergence" : "curl"},
              {"k", r.k},
              {"h", r.h},
              {"residual_max", r.residual_max},
              {"order", r.order},
              {"exact", r.exact}};
}

Json to_json(const BishopGromovReport& r) {
  return Json{{"r", r.r},
              {"geodesic_radius", r.geodesic_radius},
              {"volume", r.volume},
              {"model_volume", r.model_volume},
              {"ratio", r.ratio},
              {"ricci_ok", r.ricci_ok},
              {"ricci_min_margin", r.ricci_min_margin},
              {"non_increasing", r.non_increasing},
              {"verdict", r.verdict}};
}

}  // namespace sigmagreen
