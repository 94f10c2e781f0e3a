// iipsrol: command-line front end for the indefinite Moore-Penrose toolkit.
//
// Exit codes: 0/1 carry the mathematical verdict of a command, 2 is malformed
// input or flags, 3 an unmet identity precondition, 4 a theorem violation
// found by `hunt`.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "iips/core/json_io.hpp"
#include "iips/errors.hpp"
#include "iips/hunter/hunter.hpp"
#include "iips/rol/json_io.hpp"

namespace {

using iips::exact::Json;
using iips::exact::Matrix;

constexpr int kExitMalformed = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitViolation = 4;

Matrix load_matrix(const std::string& path) {
  return iips::exact::matrix_from_json(iips::exact::read_json_file(path), path);
}

iips::core::WeightSet load_weights(const std::string& path) {
  return iips::core::weights_from_json(iips::exact::read_json_file(path));
}

// Writes via a temporary sibling so a failed run never leaves a partial file.
void write_atomically(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw iips::ParseError(path + ": cannot open for writing");
    out << contents;
    if (!out.flush()) throw iips::ParseError(path + ": write failed");
  }
  std::filesystem::rename(tmp, path);
}

int cmd_adjoint(const std::string& matrix_path, const std::string& weights_path) {
  const Matrix a = load_matrix(matrix_path);
  const auto ws = load_weights(weights_path);
  std::cout << iips::exact::matrix_to_json(iips::core::adjoint(a, ws.m, ws.n)).dump() << '\n';
  return 0;
}

int cmd_pinv(const std::string& matrix_path, const std::string& weights_path) {
  const Matrix a = load_matrix(matrix_path);
  const auto ws = load_weights(weights_path);
  const auto r = iips::core::mp_inverse(a, ws.m, ws.n);
  std::cout << iips::core::mp_result_to_json(r).dump() << '\n';
  return r.exists ? 0 : 1;
}

int cmd_rol_check(const std::string& a_path, const std::string& b_path, const std::string& weights_path,
                  const std::string& report_path) {
  const Matrix a = load_matrix(a_path);
  const Matrix b = load_matrix(b_path);
  const auto w = load_weights(weights_path).triple();
  const auto report = iips::rol::rol_classify(a, b, w);
  const std::string text = iips::rol::rol_report_to_json(report).dump(2) + "\n";
  if (report_path.empty()) {
    std::cout << text;
  } else {
    write_atomically(report_path, text);
  }
  return report.status == iips::rol::RolStatus::HoldsEqual ? 0 : 1;
}

int cmd_identity(const std::string& name, const std::vector<std::string>& operand_args,
                 const std::string& weights_path) {
  const auto id = iips::rol::identity_from_string(name);
  iips::rol::Operands ops;
  for (const auto& arg : operand_args) {
    const auto eq = arg.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw iips::ParseError("--operand: expected NAME=PATH, got \"" + arg + "\"");
    }
    ops.insert_or_assign(arg.substr(0, eq), load_matrix(arg.substr(eq + 1)));
  }
  std::optional<iips::core::WeightTriple> weights;
  if (!weights_path.empty()) {
    const auto ws = load_weights(weights_path);
    // Identities that only use M and N accept a file without L.
    weights = iips::core::WeightTriple{ws.m, ws.n, ws.l ? *ws.l : ws.n};
  } else if (iips::rol::identity_needs_weights(id)) {
    throw iips::ParseError(name + ": --weights is required");
  }
  const auto inst = iips::rol::evaluate_rank_identity(id, ops, weights);
  std::cout << iips::rol::identity_instance_to_json(inst).dump() << '\n';
  return inst.holds ? 0 : 1;
}

int cmd_hunt(const iips::hunter::SearchConfig& config, const std::string& out_path) {
  iips::hunter::validate_config(config);
  std::ostringstream jsonl;
  const auto summary = iips::hunter::hunt(config, &jsonl);
  if (!out_path.empty()) write_atomically(out_path, jsonl.str());
  std::cout << iips::hunter::hunt_summary_to_json(summary).dump(2) << '\n';
  if (!summary.violations.empty()) {
    std::cerr << "theorem violations detected in " << summary.violations.size() << " trial(s)\n";
    return kExitViolation;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Moore-Penrose inverses and reverse order laws in indefinite inner product spaces"};
  app.require_subcommand(1);

  std::string matrix_path, weights_path, a_path, b_path, out_path, identity_name;
  std::vector<std::string> operands;

  auto* adjoint = app.add_subcommand("adjoint", "Print the weighted adjoint N^-1 A^* M");
  adjoint->add_option("matrix", matrix_path, "Matrix JSON file")->required();
  adjoint->add_option("weights", weights_path, "Weights JSON file (M, N)")->required();

  auto* pinv = app.add_subcommand("pinv", "Existence test and Moore-Penrose inverse");
  pinv->add_option("matrix", matrix_path, "Matrix JSON file")->required();
  pinv->add_option("weights", weights_path, "Weights JSON file (M, N)")->required();

  auto* rol_check = app.add_subcommand("rol-check", "Classify the reverse order law for (A, B)");
  rol_check->add_option("a", a_path, "Matrix A (m x n)")->required();
  rol_check->add_option("b", b_path, "Matrix B (n x l)")->required();
  rol_check->add_option("weights", weights_path, "Weights JSON file (M, N, L)")->required();
  rol_check->add_option("-o,--out", out_path, "Report file (default: standard output)");

  auto* identity = app.add_subcommand("identity", "Evaluate one rank identity");
  identity->add_option("id", identity_name, "Identity name, e.g. SchurGeneric")->required();
  identity->add_option("--operand", operands, "NAME=PATH, repeatable");
  identity->add_option("--weights", weights_path, "Weights JSON file");

  iips::hunter::SearchConfig config;
  std::string weight_kind = "signature", mode = "random";
  auto* hunt = app.add_subcommand("hunt", "Search for reverse-order-law counterexample candidates");
  hunt->add_option("--seed", config.seed, "Master seed")->capture_default_str();
  hunt->add_option("--trials", config.trials, "Number of trials (cap in exhaustive mode)")->capture_default_str();
  hunt->add_option("--max-dim", config.max_dim, "Largest m, n, l")->capture_default_str();
  hunt->add_option("--entry-bound", config.entry_bound, "Entry parts drawn from [-b, b]")->capture_default_str();
  hunt->add_option("--weights", weight_kind, "signature | random_hermitian | identity")->capture_default_str();
  hunt->add_option("--mode", mode, "random | exhaustive")->capture_default_str();
  hunt->add_option("--threads", config.threads, "Worker threads")->capture_default_str();
  hunt->add_option("--out", out_path, "JSONL file for candidate and violating trials");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitMalformed;
  }

  try {
    if (*adjoint) return cmd_adjoint(matrix_path, weights_path);
    if (*pinv) return cmd_pinv(matrix_path, weights_path);
    if (*rol_check) return cmd_rol_check(a_path, b_path, weights_path, out_path);
    if (*identity) return cmd_identity(identity_name, operands, weights_path);
    if (*hunt) {
      config.weight_kind = iips::hunter::weight_kind_from_string(weight_kind);
      config.mode = iips::hunter::search_mode_from_string(mode);
      return cmd_hunt(config, out_path);
    }
  } catch (const iips::PreconditionError& e) {
    std::cerr << "PreconditionUnmet: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const iips::WeightError& e) {
    std::cerr << "WeightError: " << e.what() << '\n';
    return kExitMalformed;
  } catch (const iips::ParseError& e) {
    std::cerr << "ParseError: " << e.what() << '\n';
    return kExitMalformed;
  } catch (const iips::DimensionError& e) {
    std::cerr << "DimensionError: " << e.what() << '\n';
    return kExitMalformed;
  } catch (const iips::ConfigError& e) {
    std::cerr << "ConfigError: " << e.what() << '\n';
    return kExitMalformed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMalformed;
  }
  return kExitMalformed;
}
