#include "extshift/tolerances.hpp"

#include <cmath>
#include <string>

#include "extshift/errors.hpp"

namespace extshift {

namespace {

double* field(Tolerances& t, std::string_view name) {
  if (name == "merge") return &t.merge;
  if (name == "ratio") return &t.ratio;
  if (name == "nullspace") return &t.nullspace;
  if (name == "rank") return &t.rank;
  if (name == "ambiguity_factor") return &t.ambiguity_factor;
  if (name == "condition_cap") return &t.condition_cap;
  if (name == "angle") return &t.angle;
  if (name == "residual") return &t.residual;
  if (name == "inclusion") return &t.inclusion;
  if (name == "max_dimension") return &t.max_dimension;
  return nullptr;
}

}  // namespace

void Tolerances::set(std::string_view name, double value) {
  double* target = field(*this, name);
  if (target == nullptr) {
    throw Error(ErrorKind::InvalidInput, "unknown tolerance '" + std::string(name) + "'");
  }
  if (!std::isfinite(value) || value <= 0.0) {
    throw Error(ErrorKind::InvalidInput, "tolerance '" + std::string(name) + "' must be positive");
  }
  *target = value;
}

void Tolerances::set_from_string(std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) {
    throw Error(ErrorKind::InvalidInput, "expected NAME=VALUE, got '" + std::string(assignment) + "'");
  }
  const std::string value_text(assignment.substr(eq + 1));
  std::size_t consumed = 0;
  double value = 0.0;
  try {
    value = std::stod(value_text, &consumed);
  } catch (const std::exception&) {
    consumed = 0;
  }
  if (consumed == 0 || consumed != value_text.size()) {
    throw Error(ErrorKind::InvalidInput, "bad tolerance value '" + value_text + "'");
  }
  set(assignment.substr(0, eq), value);
}

std::vector<std::pair<std::string, double>> Tolerances::entries() const {
  return {
      {"merge", merge},
      {"ratio", ratio},
      {"nullspace", nullspace},
      {"rank", rank},
      {"ambiguity_factor", ambiguity_factor},
      {"condition_cap", condition_cap},
      {"angle", angle},
      {"residual", residual},
      {"inclusion", inclusion},
      {"max_dimension", max_dimension},
  };
}

}  // namespace extshift
