#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "extshift/cli.hpp"
#include "extshift/errors.hpp"

int main(int argc, char** argv) {
  using namespace extshift;
  CLI::App app{"Extended eigenvalues and eigenvectors of truncated shifts on finite Blaschke model spaces"};
  app.require_subcommand(1);

  std::string input, zeros, lambda, output, basis = "dual", op = "forward";
  std::uint64_t seed = 0;
  int max_degree = 8;
  std::vector<std::string> tolerances;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", input, "JSON file with {\"zeros\": [{re, im, multiplicity}, ...]}");
    sub->add_option("--zeros", zeros, "inline zeros JSON");
    sub->add_option("--tol", tolerances, "tolerance override NAME=VALUE (repeatable)");
    sub->add_option("--output", output, "write the report here instead of stdout");
  };

  auto* spectrum = app.add_subcommand("spectrum", "list extended eigenvalues with witness pairs");
  add_common(spectrum);
  spectrum->add_option("--lambda", lambda, "sample point RE,IM for whole-plane spectra");

  auto* eigenvectors = app.add_subcommand("eigenvectors", "closed-form generators of E_ext(lambda)");
  add_common(eigenvectors);
  eigenvectors->add_option("--lambda", lambda, "extended eigenvalue RE,IM")->required();

  auto* verify = app.add_subcommand("verify", "check every closed form against the intertwining oracle");
  add_common(verify);

  auto* gram = app.add_subcommand("gram", "Gram matrix and dual-basis coefficients");
  add_common(gram);

  auto* shift = app.add_subcommand("shift-matrix", "matrix of S_B or S_B* in a kernel basis");
  add_common(shift);
  shift->add_option("--basis", basis, "primal | dual")->check(CLI::IsMember({"primal", "dual"}));
  shift->add_option("--operator", op, "forward | backward")->check(CLI::IsMember({"forward", "backward"}));

  auto* random = app.add_subcommand("random", "generate a reproducible random instance");
  random->add_option("--seed", seed, "RNG seed")->required();
  random->add_option("--max-degree", max_degree, "largest degree")->check(CLI::PositiveNumber);
  random->add_option("--tol", tolerances, "tolerance override NAME=VALUE (repeatable)");
  random->add_option("--output", output, "write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : cli::kExitInvalid;
  }

  cli::RunConfig config;
  config.command = *cli::parse_command(app.get_subcommands().front()->get_name());
  if (!input.empty()) config.input_path = input;
  if (!zeros.empty()) config.zeros_json = zeros;
  if (!output.empty()) config.output_path = output;
  if (config.command == cli::Command::Random) config.seed = seed;
  config.max_degree = max_degree;
  config.basis = basis == "primal" ? BasisKind::Primal : BasisKind::Dual;
  config.op = op == "backward" ? OperatorKind::Backward : OperatorKind::Forward;
  try {
    if (!lambda.empty()) config.lambda = cli::parse_lambda(lambda);
    for (const auto& t : tolerances) config.tolerances.set_from_string(t);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return cli::kExitInvalid;
  }

  const int code = cli::execute(config, std::cout);
  if (code != cli::kExitOk) std::cerr << "extshift: exit code " << code << "\n";
  return code;
}
