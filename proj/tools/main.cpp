#include <cmath>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ybx/errors.hpp"
#include "ybx/experiment.hpp"
#include "ybx/matrix_io.hpp"
#include "ybx/types.hpp"
#include "ybx/verification.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotSolution = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitDegraded = 4;

nlohmann::json report_json(const ybx::VerificationReport& report) {
  nlohmann::json j;
  j["residual_norm"] = report.residual_norm;
  j["frechet_norm"] = report.frechet_norm;
  // JSON has no Infinity literal; the degenerate-denominator sentinel
  // serializes as null.
  if (std::isinf(report.est_rel)) {
    j["est_rel"] = nullptr;
  } else {
    j["est_rel"] = report.est_rel;
  }
  j["is_solution"] = report.is_solution;
  return j;
}

ybx::ComplexMatrix load_square(const std::string& path) {
  ybx::ComplexMatrix A = ybx::load_matrix(path);
  if (A.rows() != A.cols()) {
    throw ybx::ParseError("'" + path + "' is not square");
  }
  return A;
}

struct ToleranceFlags {
  double residual = 1e-8;
  double rank_factor = 0.0;
  double cluster = 1e-8;

  ybx::ToleranceConfig config() const {
    ybx::ToleranceConfig cfg;
    cfg.residual_tol = residual;
    cfg.rank_tol_factor = rank_factor;
    cfg.eig_cluster_tol = cluster;
    return cfg;
  }
};

void add_tolerance_flags(CLI::App* cmd, ToleranceFlags* flags) {
  cmd->add_option("--tol-residual", flags->residual,
                  "residual / solution tolerance");
  cmd->add_option("--tol-rank-factor", flags->rank_factor,
                  "rank threshold factor (0 = max(rows, cols))");
  cmd->add_option("--tol-cluster", flags->cluster,
                  "eigenvalue clustering tolerance");
}

int run_solve(const std::string& input, const std::string& method_str,
              std::uint64_t seed, const std::string& out_path,
              const ToleranceFlags& flags) {
  const ybx::ToleranceConfig cfg = flags.config();
  ybx::ComplexMatrix A;
  try {
    A = load_square(input);
  } catch (const ybx::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  const auto method = ybx::method_from_name(method_str);
  if (!method) {
    std::cerr << "error: unknown method '" << method_str << "'\n";
    return kExitParse;
  }
  try {
    const ybx::MethodOutcome outcome =
        ybx::solve_with_method(A, *method, seed, cfg);
    nlohmann::json j;
    j["method"] = method_str;
    j["report"] = report_json(outcome.report);
    if (outcome.epsilon) {
      j["epsilon"] = *outcome.epsilon;
    }
    if (out_path.empty()) {
      j["solution"] = nlohmann::json::parse(ybx::matrix_to_json(outcome.X));
    } else {
      ybx::save_matrix_json(out_path, outcome.X);
      j["solution_path"] = out_path;
    }
    std::cout << j.dump() << "\n";
    return outcome.report.is_solution ? kExitOk : kExitDegraded;
  } catch (const ybx::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
}

int run_verify(const std::string& matrix_path, const std::string& candidate_path,
               const ToleranceFlags& flags) {
  const ybx::ToleranceConfig cfg = flags.config();
  ybx::ComplexMatrix A;
  ybx::ComplexMatrix X;
  try {
    A = load_square(matrix_path);
    X = load_square(candidate_path);
    if (X.rows() != A.rows()) {
      throw ybx::ParseError("candidate order does not match the matrix");
    }
  } catch (const ybx::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  const ybx::VerificationReport report = ybx::est_rel(A, X, cfg);
  std::cout << report_json(report).dump() << "\n";
  return report.is_solution ? kExitOk : kExitNotSolution;
}

int run_experiment(std::uint64_t seed, const std::string& out_path,
                   const ToleranceFlags& flags) {
  const auto records = ybx::run_experiment(seed, flags.config());
  if (out_path.empty()) {
    std::cout << ybx::experiment_to_csv(records);
    return kExitOk;
  }
  try {
    ybx::write_experiment_csv(out_path, records);
  } catch (const ybx::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotSolution;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"families of solutions for the singular matrix equation AXA = XAX"};
  app.require_subcommand(1);

  std::string solve_input;
  std::string solve_method = "case1";
  std::string solve_out;
  std::uint64_t solve_seed = 0;
  ToleranceFlags solve_flags;
  CLI::App* solve = app.add_subcommand(
      "solve", "construct one solution for a matrix file");
  solve->add_option("input", solve_input, "matrix file (JSON or text)")
      ->required();
  solve
      ->add_option("--method", solve_method,
                   "construction: case1 | sign | spectral | schur")
      ->check(CLI::IsMember({"case1", "sign", "spectral", "schur"}));
  solve->add_option("--seed", solve_seed, "seed for the free parameters");
  solve->add_option("--out", solve_out, "write the solution matrix here");
  add_tolerance_flags(solve, &solve_flags);

  std::string verify_matrix;
  std::string verify_candidate;
  ToleranceFlags verify_flags;
  CLI::App* verify = app.add_subcommand(
      "verify", "score a candidate solution against a matrix");
  verify->add_option("matrix", verify_matrix, "matrix file")->required();
  verify->add_option("candidate", verify_candidate, "candidate solution file")
      ->required();
  add_tolerance_flags(verify, &verify_flags);

  std::string exp_out;
  std::uint64_t exp_seed = 0;
  ToleranceFlags exp_flags;
  CLI::App* experiment = app.add_subcommand(
      "experiment", "run all methods over the 15-matrix corpus");
  experiment->add_option("--seed", exp_seed, "corpus and parameter seed");
  experiment->add_option("--out", exp_out, "CSV output path (default stdout)");
  add_tolerance_flags(experiment, &exp_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.get_name() << ": " << e.what() << "\n";
    return kExitParse;
  }

  if (solve->parsed()) {
    return run_solve(solve_input, solve_method, solve_seed, solve_out,
                     solve_flags);
  }
  if (verify->parsed()) {
    return run_verify(verify_matrix, verify_candidate, verify_flags);
  }
  return run_experiment(exp_seed, exp_out, exp_flags);
}
