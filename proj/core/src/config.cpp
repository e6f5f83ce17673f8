#include "counit/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace counit {

using json = nlohmann::ordered_json;

namespace {

FieldMatrix parse_matrix(const json& rows, FieldKind k, const std::string& what) {
  if (!rows.is_array() || rows.empty())
    fail(errc::parse_error, what + " must be a non-empty array of rows");
  int r = static_cast<int>(rows.size());
  int c = -1;
  for (const auto& row : rows) {
    if (!row.is_array()) fail(errc::parse_error, what + " rows must be arrays");
    if (c < 0)
      c = static_cast<int>(row.size());
    else if (c != static_cast<int>(row.size()))
      fail(errc::parse_error, what + " rows have uneven lengths");
  }
  FieldMatrix m(r, c, k);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) {
      const auto& cell = rows[i][j];
      if (!cell.is_string()) fail(errc::parse_error, what + " entries must be scalar literals");
      m.at(i, j) = Scalar::parse(cell.get<std::string>(), k);
    }
  return m;
}

json matrix_to_json(const FieldMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

CharSpec parse_charspec(const json& v, FieldKind k, const std::string& what) {
  if (v.is_string()) return CharSpec{v.get<std::string>(), std::nullopt};
  return CharSpec{"", parse_matrix(v, k, what)};
}

}  // namespace

bool RunConfig::operator==(const RunConfig& o) const {
  return field == o.field && E == o.E && F == o.F &&
         truncation_degree == o.truncation_degree && alpha == o.alpha && beta == o.beta &&
         degree == o.degree && position == o.position && slack == o.slack && k_max == o.k_max &&
         budget_mb == o.budget_mb;
}

RunConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(errc::parse_error, std::string("config is not valid JSON: ") + e.what());
  }
  RunConfig cfg;
  if (!j.contains("field") || !j["field"].is_string())
    fail(errc::parse_error, "config needs a string 'field'");
  cfg.field = field_kind_from_name(j["field"].get<std::string>());
  if (!j.contains("E")) fail(errc::parse_error, "config needs a matrix 'E'");
  cfg.E = parse_matrix(j["E"], cfg.field, "E");
  if (j.contains("F")) cfg.F = parse_matrix(j["F"], cfg.field, "F");
  if (j.contains("truncation_degree")) cfg.truncation_degree = j["truncation_degree"].get<int>();
  if (j.contains("alpha")) cfg.alpha = parse_charspec(j["alpha"], cfg.field, "alpha");
  if (j.contains("beta")) cfg.beta = parse_charspec(j["beta"], cfg.field, "beta");
  if (j.contains("degree")) cfg.degree = j["degree"].get<int>();
  if (j.contains("position")) cfg.position = j["position"].get<int>();
  if (j.contains("slack")) cfg.slack = j["slack"].get<int>();
  if (j.contains("k_max")) cfg.k_max = j["k_max"].get<int>();
  if (j.contains("budget_mb")) cfg.budget_mb = j["budget_mb"].get<long>();

  // Validation: square invertible E of size >= 2, sane degrees.
  if (cfg.E.rows() != cfg.E.cols()) fail(errc::validation_error, "E must be square");
  if (cfg.E.rows() < 2) fail(errc::size_too_small, "E must have size >= 2");
  try {
    cfg.E.inverse();
  } catch (const Error&) {
    fail(errc::validation_error, "E is singular");
  }
  if (cfg.F) {
    if (cfg.F->rows() != cfg.F->cols()) fail(errc::validation_error, "F must be square");
    if (cfg.F->rows() < 2) fail(errc::size_too_small, "F must have size >= 2");
    try {
      cfg.F->inverse();
    } catch (const Error&) {
      fail(errc::validation_error, "F is singular");
    }
  }
  if (cfg.truncation_degree < 1 || cfg.truncation_degree > 12)
    fail(errc::validation_error, "truncation_degree out of range [1, 12]");
  if (cfg.degree < 0) fail(errc::validation_error, "degree must be >= 0");
  if (cfg.slack < 0) fail(errc::validation_error, "slack must be >= 0");
  if (cfg.budget_mb < 1) fail(errc::validation_error, "budget_mb must be >= 1");
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::parse_error, "cannot open config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string RunConfig::to_json() const {
  json j;
  j["field"] = field_kind_name(field);
  j["E"] = matrix_to_json(E);
  if (F) j["F"] = matrix_to_json(*F);
  j["truncation_degree"] = truncation_degree;
  j["alpha"] = alpha.matrix ? matrix_to_json(*alpha.matrix) : json(alpha.name);
  j["beta"] = beta.matrix ? matrix_to_json(*beta.matrix) : json(beta.name);
  j["degree"] = degree;
  j["position"] = position;
  j["slack"] = slack;
  j["k_max"] = k_max;
  j["budget_mb"] = budget_mb;
  return j.dump();
}

Character resolve_character(const BilinearFormHopf& H, const CharSpec& spec) {
  if (spec.matrix) return character_from_matrix(H, *spec.matrix);
  if (spec.name == "epsilon" || spec.name == "I") return counit_character(H);
  if (spec.name == "phi" || spec.name == "sovereign") return sovereign_character(H);
  if (spec.name == "phi2") return char_pow(H, sovereign_character(H), 2);
  if (spec.name == "phi-inv") return char_inv(H, sovereign_character(H));
  fail(errc::validation_error, "unknown character name '" + spec.name + "'");
}

}  // namespace counit
