#include "ybx/experiment.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "ybx/errors.hpp"
#include "ybx/fixtures.hpp"
#include "ybx/projectors.hpp"
#include "ybx/random.hpp"
#include "ybx/solvers.hpp"

namespace ybx {
namespace {

ComplexMatrix seeded_parameter(Index n, std::uint64_t seed) {
  return unit_gaussian_complex(n, n, seed);
}

MethodOutcome outcome_from_family(const ComplexMatrix& A,
                                  const SolutionFamily& family,
                                  std::uint64_t seed,
                                  const ToleranceConfig& cfg) {
  MethodOutcome out;
  out.X = family.sample(seeded_parameter(A.rows(), mix_seed(seed, 7)));
  out.report = est_rel(A, out.X, cfg);
  return out;
}

std::string sanitize_reason(std::string text) {
  for (char& c : text) {
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  }
  return text;
}

std::string format_double(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

}  // namespace

std::string method_name(SolveMethod method) {
  switch (method) {
    case SolveMethod::case1:
      return "case1";
    case SolveMethod::sign:
      return "sign";
    case SolveMethod::spectral:
      return "spectral";
    case SolveMethod::schur:
      return "schur";
  }
  return "unknown";
}

std::optional<SolveMethod> method_from_name(const std::string& name) {
  if (name == "case1") return SolveMethod::case1;
  if (name == "sign") return SolveMethod::sign;
  if (name == "spectral") return SolveMethod::spectral;
  if (name == "schur") return SolveMethod::schur;
  return std::nullopt;
}

MethodOutcome solve_with_method(const ComplexMatrix& A, SolveMethod method,
                                std::uint64_t seed,
                                const ToleranceConfig& cfg) {
  switch (method) {
    case SolveMethod::case1: {
      const BCandidate cand =
          check_B_consistency(A, A * A, cfg, BSource::case1_sq);
      return outcome_from_family(A, family_from_B(A, cand, cfg), seed, cfg);
    }
    case SolveMethod::sign: {
      const SignShiftAlphas alphas = sign_shift_alphas(A, cfg);
      if (alphas.values.empty()) {
        throw Error("spectrum has a single real part; no usable shift");
      }
      const auto pair = sign_shift_projectors(A, alphas.values.back(), cfg,
                                              alphas.rotated);
      const auto bs = b_from_projector(A, pair.first, cfg);
      return outcome_from_family(A, family_from_B(A, bs.first, cfg), seed, cfg);
    }
    case SolveMethod::spectral: {
      const auto clusters = distinct_eigenvalues(A, cfg);
      const Complex lambda_s = clusters.back().value;
      const ProjectorCertificate cert =
          complementary_projector(A, lambda_s, cfg);
      const auto bs = b_from_projector(A, cert, cfg);
      return outcome_from_family(A, family_from_B(A, bs.first, cfg), seed, cfg);
    }
    case SolveMethod::schur: {
      const SchurBlockData data = schur_block_data(A, cfg);
      MethodOutcome out;
      out.X = schur_family_solve(data, mix_seed(seed, 9), cfg);
      out.report = est_rel(A, out.X, cfg);
      out.epsilon = data.epsilon;
      return out;
    }
  }
  throw Error("unknown method");
}

std::vector<ExperimentRecord> run_experiment(std::uint64_t seed,
                                             const ToleranceConfig& cfg) {
  const std::vector<TestMatrix> corpus = standard_corpus(seed);
  const SolveMethod methods[] = {SolveMethod::case1, SolveMethod::sign,
                                 SolveMethod::spectral, SolveMethod::schur};
  std::vector<ExperimentRecord> records;
  records.reserve(corpus.size() * 4);
  for (std::size_t idx = 0; idx < corpus.size(); ++idx) {
    const TestMatrix& entry = corpus[idx];
    const Index rank_a = rank(entry.A, cfg);
    for (std::size_t m = 0; m < 4; ++m) {
      ExperimentRecord rec;
      rec.matrix_id = entry.id;
      rec.n = entry.A.rows();
      rec.rank = rank_a;
      rec.method = method_name(methods[m]);
      const std::uint64_t cell_seed = mix_seed(seed, 1000 + 4 * idx + m);
      const auto start = std::chrono::steady_clock::now();
      try {
        const MethodOutcome outcome =
            solve_with_method(entry.A, methods[m], cell_seed, cfg);
        rec.est_rel = outcome.report.est_rel;
        rec.epsilon = outcome.epsilon;
        rec.status = (outcome.report.is_solution &&
                      outcome.report.est_rel <= cfg.residual_tol)
                         ? CellStatus::ok
                         : CellStatus::degraded;
      } catch (const SplitMismatch& e) {
        rec.status = CellStatus::failed;
        rec.failure_reason = e.what();
        rec.epsilon = e.epsilon();
      } catch (const std::exception& e) {
        rec.status = CellStatus::failed;
        rec.failure_reason = e.what();
      }
      const auto stop = std::chrono::steady_clock::now();
      rec.wall_time_ms =
          std::chrono::duration<double, std::milli>(stop - start).count();
      records.push_back(std::move(rec));
    }
  }
  return records;
}

std::string experiment_to_csv(const std::vector<ExperimentRecord>& records) {
  std::string out =
      "matrix_id,n,rank,method,est_rel,epsilon,wall_time_ms,status\n";
  for (const ExperimentRecord& rec : records) {
    out += rec.matrix_id;
    out += ',';
    out += std::to_string(rec.n);
    out += ',';
    out += std::to_string(rec.rank);
    out += ',';
    out += rec.method;
    out += ',';
    if (rec.est_rel) out += format_double(*rec.est_rel);
    out += ',';
    if (rec.epsilon) out += format_double(*rec.epsilon);
    out += ',';
    out += format_double(rec.wall_time_ms);
    out += ',';
    switch (rec.status) {
      case CellStatus::ok:
        out += "ok";
        break;
      case CellStatus::degraded:
        out += "degraded";
        break;
      case CellStatus::failed:
        out += "failed(" + sanitize_reason(rec.failure_reason) + ")";
        break;
    }
    out += '\n';
  }
  return out;
}

void write_experiment_csv(const std::string& path,
                          const std::vector<ExperimentRecord>& records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot write '" + path + "'");
  }
  out << experiment_to_csv(records);
}

}  // namespace ybx
