#include "extshift/cli.hpp"

#include <fstream>
#include <sstream>

#include "extshift/errors.hpp"
#include "extshift/extended_spectrum.hpp"
#include "extshift/oracle.hpp"
#include "extshift/random_instance.hpp"

namespace extshift::cli {

std::optional<Command> parse_command(std::string_view name) {
  if (name == "spectrum") return Command::Spectrum;
  if (name == "eigenvectors") return Command::Eigenvectors;
  if (name == "verify") return Command::Verify;
  if (name == "gram") return Command::Gram;
  if (name == "shift-matrix") return Command::ShiftMatrix;
  if (name == "random") return Command::Random;
  return std::nullopt;
}

std::string_view command_name(Command command) {
  switch (command) {
    case Command::Spectrum:
      return "spectrum";
    case Command::Eigenvectors:
      return "eigenvectors";
    case Command::Verify:
      return "verify";
    case Command::Gram:
      return "gram";
    case Command::ShiftMatrix:
      return "shift-matrix";
    case Command::Random:
      return "random";
  }
  return "unknown";
}

Complex parse_lambda(std::string_view text) {
  const std::string s(text);
  const auto comma = s.find(',');
  auto parse = [&](const std::string& part) {
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size()) {
      throw Error(ErrorKind::InvalidInput, "cannot parse lambda '" + s + "'; expected RE,IM");
    }
    return value;
  };
  if (comma == std::string::npos) return {parse(s), 0.0};
  return {parse(s.substr(0, comma)), parse(s.substr(comma + 1))};
}

std::vector<Complex> default_samples() { return {{0.0, 0.0}, {1.0, 0.0}, {-1.0, 0.0}, {0.0, 2.0}}; }

namespace {

Json index_list(const ModelSpaceBasis& basis) {
  Json list = Json::array();
  for (const BasisIndex& idx : basis.indices()) {
    list.push_back(Json::array({idx.zero_index + 1, idx.order}));
  }
  return list;
}

Json witness_list(const std::vector<WitnessPair>& pairs) {
  Json list = Json::array();
  for (const WitnessPair& w : pairs) list.push_back(Json::array({w.m + 1, w.n + 1}));
  return list;
}

Json tolerance_record(const Tolerances& tol) {
  Json record = Json::object();
  for (const auto& [name, value] : tol.entries()) record[name] = value;
  return record;
}

std::vector<Zero> load_zeros(const RunConfig& config) {
  if (config.input_path && config.zeros_json) {
    throw Error(ErrorKind::InvalidInput, "give either --input or --zeros, not both");
  }
  std::string text;
  if (config.input_path) {
    std::ifstream in(*config.input_path);
    if (!in) throw Error(ErrorKind::InvalidInput, "cannot read " + *config.input_path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  } else if (config.zeros_json) {
    text = *config.zeros_json;
  } else {
    throw Error(ErrorKind::InvalidInput, "no input: use --input FILE or --zeros JSON");
  }
  Json document;
  try {
    document = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
  return zeros_from_json(document);
}

void check_config(const RunConfig& config) {
  const bool wants_lambda = config.command == Command::Eigenvectors;
  if (wants_lambda && !config.lambda) {
    throw Error(ErrorKind::InvalidInput, "eigenvectors needs --lambda RE,IM");
  }
  if (config.lambda && !wants_lambda && config.command != Command::Spectrum) {
    throw Error(ErrorKind::InvalidInput, "--lambda only applies to eigenvectors and spectrum");
  }
  const bool wants_seed = config.command == Command::Random;
  if (wants_seed != config.seed.has_value()) {
    throw Error(ErrorKind::InvalidInput, wants_seed ? "random needs --seed N" : "--seed only applies to random");
  }
  if (wants_seed && (config.input_path || config.zeros_json)) {
    throw Error(ErrorKind::InvalidInput, "random takes no input zeros");
  }
}

// e*_{o, p_o - 1} (x) e_{o, 0} for the zero o at the origin.
Matrix origin_witness(const ModelSpaceBasis& basis) {
  const std::size_t o = *basis.product().origin_index();
  Matrix x = Matrix::Zero(basis.dimension(), basis.dimension());
  x(basis.offset(o) + basis.multiplicity(o) - 1, basis.offset(o)) = 1.0;
  return x;
}

std::vector<Complex> whole_plane_samples(const RunConfig& config) {
  return config.lambda ? std::vector<Complex>{*config.lambda} : default_samples();
}

Json spectrum_report(const RunConfig& config, const BlaschkeProduct& b, int& exit_code) {
  const Tolerances& tol = config.tolerances;
  const ModelSpaceBasis basis(b);
  const auto spectrum = extended_spectrum(b, tol.ratio);
  Json report = Json::object();
  if (spectrum.size() == 1 && spectrum.front().whole_plane) {
    const Matrix s = shift_matrix_dual(basis).entries;
    const Matrix x = origin_witness(basis);
    const std::size_t o = *b.origin_index();
    report["whole_plane"] = true;
    report["witness_operator"] = Json{{"dual_index", Json::array({o + 1, basis.multiplicity(o) - 1})},
                                      {"primal_index", Json::array({o + 1, 0})}};
    Json checks = Json::array();
    for (Complex lambda : whole_plane_samples(config)) {
      const double forward = (s * x).norm();
      const double residual = intertwining_residual(s, x, lambda);
      const bool passed = residual <= tol.inclusion;
      if (!passed) exit_code = kExitMismatch;
      checks.push_back(Json{{"lambda", to_json(lambda)},
                            {"forward_residual", forward},
                            {"intertwining_residual", residual},
                            {"passed", passed}});
    }
    report["sample_checks"] = std::move(checks);
    return report;
  }
  report["whole_plane"] = false;
  Json entries = Json::array();
  for (const ExtendedEigenvalue& e : spectrum) {
    entries.push_back(Json{{"lambda", to_json(e.value)},
                           {"witnesses", witness_list(e.witnesses)},
                           {"dimension", expected_dimension(basis, e.value, tol.ratio)}});
  }
  report["spectrum"] = std::move(entries);
  return report;
}

Json eigenvectors_report(const RunConfig& config, const BlaschkeProduct& b, int& exit_code) {
  const Tolerances& tol = config.tolerances;
  const ModelSpaceBasis basis(b);
  const Complex lambda = *config.lambda;
  const EigenvectorFamily family = eigenvector_family(basis, lambda, tol.ratio);
  const Matrix s = shift_matrix_dual(basis).entries;

  Json generators = Json::array();
  for (const Generator& g : family.generators) {
    const double residual = intertwining_residual(s, g.op, lambda) / g.op.norm();
    if (residual > tol.residual) exit_code = kExitMismatch;
    Json coefficients = Json::array();
    for (Complex c : g.coefficients) coefficients.push_back(to_json(c));
    generators.push_back(Json{{"witness", Json::array({g.witness.m + 1, g.witness.n + 1})},
                              {"level", g.level},
                              {"coefficients", std::move(coefficients)},
                              {"origin_witness", g.origin_witness},
                              {"relative_residual", residual},
                              {"matrix", to_json(g.op)}});
  }
  return Json{{"lambda", to_json(lambda)},
              {"whole_plane", b.has_origin_zero()},
              {"representation", "entry (a, b) is the coefficient of e*_a (x) e_b"},
              {"basis", index_list(basis)},
              {"dimension", family_span_dimension(family, tol.rank, tol.ambiguity_factor)},
              {"generators", std::move(generators)}};
}

Json verify_report(const RunConfig& config, const BlaschkeProduct& b, int& exit_code) {
  const Tolerances& tol = config.tolerances;
  const ModelSpace space = ModelSpace::build(b, tol);
  const ModelSpaceBasis& basis = space.basis();
  const Matrix s = shift_matrix_dual(basis).entries;

  std::vector<Complex> lambdas;
  if (b.has_origin_zero()) {
    lambdas = whole_plane_samples(config);
  } else {
    for (const ExtendedEigenvalue& e : extended_spectrum(b, tol.ratio)) lambdas.push_back(e.value);
  }

  bool all_match = true;
  Json reports = Json::array();
  for (Complex lambda : lambdas) {
    const EigenvectorFamily family = eigenvector_family(basis, lambda, tol.ratio);
    double worst_residual = 0.0;
    for (const Generator& g : family.generators) {
      worst_residual = std::max(worst_residual, intertwining_residual(s, g.op, lambda) / g.op.norm());
    }
    const NullspaceBasis oracle = sylvester_nullspace(s, lambda, tol.nullspace,
                                                      static_cast<Eigen::Index>(tol.max_dimension),
                                                      tol.ambiguity_factor);
    const SubspaceReport r = subspace_match(family, oracle, tol.angle, tol.rank, tol.ambiguity_factor);
    const bool inclusion = verify_inclusion(b, lambda, tol.inclusion);
    const bool ok = r.match && inclusion && worst_residual <= tol.residual;
    all_match = all_match && ok;
    reports.push_back(Json{{"lambda", to_json(lambda)},
                           {"witnesses", witness_list(witnesses_for(b, lambda, tol.ratio))},
                           {"dim_closed_form", r.dim_closed_form},
                           {"dim_oracle", r.dim_oracle},
                           {"max_principal_angle", r.max_principal_angle},
                           {"max_relative_residual", worst_residual},
                           {"inclusion", inclusion},
                           {"verdict", ok ? "match" : "mismatch"},
                           {"singular_values", to_json(oracle.singular_values)}});
  }
  if (!all_match) exit_code = kExitMismatch;
  return Json{{"whole_plane", b.has_origin_zero()},
              {"biorthogonality",
               Json{{"condition_estimate", space.gram().condition_estimate},
                    {"max_deviation", space.dual().max_deviation},
                    {"tolerance", space.dual().tolerance}}},
              {"reports", std::move(reports)},
              {"all_match", all_match}};
}

Json gram_report(const RunConfig& config, const BlaschkeProduct& b) {
  const ModelSpace space = ModelSpace::build(b, config.tolerances);
  return Json{{"basis", index_list(space.basis())},
              {"condition_estimate", space.gram().condition_estimate},
              {"gram", to_json(space.gram().entries)},
              {"dual_coeffs", to_json(space.dual().coeffs)},
              {"biorthogonality",
               Json{{"max_deviation", space.dual().max_deviation}, {"tolerance", space.dual().tolerance}}}};
}

Json shift_report(const RunConfig& config, const BlaschkeProduct& b) {
  const ModelSpaceBasis basis(b);
  ShiftMatrix m;
  if (config.basis == BasisKind::Dual && config.op == OperatorKind::Forward) {
    m = shift_matrix_dual(basis);
  } else if (config.basis == BasisKind::Primal && config.op == OperatorKind::Backward) {
    m = backward_shift_matrix(basis);
  } else {
    m = shift_matrix(ModelSpace::build(b, config.tolerances), config.basis, config.op);
  }
  return Json{{"basis_kind", m.basis == BasisKind::Dual ? "dual" : "primal"},
              {"operator", m.op == OperatorKind::Forward ? "forward" : "backward"},
              {"basis", index_list(basis)},
              {"matrix", to_json(m.entries)}};
}

Json random_report(const RunConfig& config) {
  const RandomInstance instance = random_instance(*config.seed, config.max_degree);
  Json report = Json{{"seed", instance.seed}, {"max_degree", config.max_degree}};
  report["planted_ratio"] = instance.planted_ratio ? to_json(*instance.planted_ratio) : Json(nullptr);
  report["zeros"] = zeros_to_json(instance.zeros)["zeros"];
  return report;
}

}  // namespace

RunResult run(const RunConfig& config) {
  RunResult result;
  Json report = Json{{"tool", kToolName},
                     {"version", kToolVersion},
                     {"command", command_name(config.command)},
                     {"tolerances", tolerance_record(config.tolerances)}};
  try {
    check_config(config);
    Json body;
    if (config.command == Command::Random) {
      body = random_report(config);
    } else {
      const std::vector<Zero> zeros = load_zeros(config);
      report["input"] = zeros_to_json(zeros);
      const BlaschkeProduct b = BlaschkeProduct::validate(zeros, config.tolerances.merge);
      switch (config.command) {
        case Command::Spectrum:
          body = spectrum_report(config, b, result.exit_code);
          break;
        case Command::Eigenvectors:
          body = eigenvectors_report(config, b, result.exit_code);
          break;
        case Command::Verify:
          body = verify_report(config, b, result.exit_code);
          break;
        case Command::Gram:
          body = gram_report(config, b);
          break;
        case Command::ShiftMatrix:
          body = shift_report(config, b);
          break;
        case Command::Random:
          break;
      }
    }
    for (auto& [key, value] : body.items()) report[key] = value;
  } catch (const Error& e) {
    result.exit_code = is_numerical_refusal(e.kind()) ? kExitRefused : kExitInvalid;
    report["error"] = Json{{"kind", to_string(e.kind())}, {"message", e.what()}};
  }
  result.report = std::move(report);
  return result;
}

int execute(const RunConfig& config, std::ostream& out) {
  const RunResult result = run(config);
  const std::string text = dump(result.report);
  if (config.output_path) {
    std::ofstream file(*config.output_path);
    if (!file) {
      out << dump(Json{{"tool", kToolName},
                       {"error", Json{{"kind", "InvalidInput"}, {"message", "cannot write " + *config.output_path}}}});
      return kExitInvalid;
    }
    file << text;
  } else {
    out << text;
  }
  return result.exit_code;
}

}  // namespace extshift::cli
