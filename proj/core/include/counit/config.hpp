#pragma once

#include <optional>
#include <string>

#include "counit/hopf.hpp"

namespace counit {

// Character specification: a named builtin ("epsilon"/"I", "phi", "phi2",
// "phi-inv") or an explicit generator value matrix.
struct CharSpec {
  std::string name;                  // empty when a matrix is given
  std::optional<FieldMatrix> matrix;

  bool operator==(const CharSpec& o) const { return name == o.name && matrix == o.matrix; }
};

struct RunConfig {
  FieldKind field = FieldKind::rationals;
  FieldMatrix E;
  std::optional<FieldMatrix> F;
  int truncation_degree = 3;
  CharSpec alpha{"epsilon", std::nullopt};
  CharSpec beta{"epsilon", std::nullopt};
  int degree = 2;      // word degree for verification commands
  int position = -1;   // exactness position, -1 = 1..3
  int slack = 2;
  int k_max = 2;
  long budget_mb = 2048;

  bool operator==(const RunConfig& o) const;
  std::string to_json() const;  // canonical echo; reparses to an equal config
};

RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::string& path);

Character resolve_character(const BilinearFormHopf& H, const CharSpec& spec);

}  // namespace counit
