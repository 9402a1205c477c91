#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ybx/types.hpp"
#include "ybx/verification.hpp"

namespace ybx {

// The four construction routes benchmarked against the corpus:
//   case1    B = A^2 splitting family, seeded Y;
//   sign     B = A^2 (I+S)/2 with S the sign of the last midpoint shift;
//   spectral B = A^2 P for the complementary projector at the largest
//            distinct eigenvalue;
//   schur    randomized member of the reordered-Schur family.
enum class SolveMethod { case1, sign, spectral, schur };

std::string method_name(SolveMethod method);
std::optional<SolveMethod> method_from_name(const std::string& name);

struct MethodOutcome {
  ComplexMatrix X;
  VerificationReport report;
  std::optional<double> epsilon;  // schur split cutoff, absent elsewhere
};

// One seeded solution by the requested route; free parameters are
// unit-Frobenius gaussian. Construction failures propagate as exceptions.
MethodOutcome solve_with_method(const ComplexMatrix& A, SolveMethod method,
                                std::uint64_t seed,
                                const ToleranceConfig& cfg = {});

enum class CellStatus { ok, degraded, failed };

struct ExperimentRecord {
  std::string matrix_id;
  Index n = 0;
  Index rank = 0;
  std::string method;
  std::optional<double> est_rel;  // absent iff status == failed
  std::optional<double> epsilon;  // schur rows only, when the split ran
  double wall_time_ms = 0.0;
  CellStatus status = CellStatus::failed;
  std::string failure_reason;  // set iff status == failed
};

// All four methods over standard_corpus(seed): 60 records in corpus x method
// order. Per-cell failures are recorded, never propagated.
std::vector<ExperimentRecord> run_experiment(std::uint64_t seed,
                                             const ToleranceConfig& cfg = {});

// Fixed column order: matrix_id,n,rank,method,est_rel,epsilon,wall_time_ms,
// status. Floats carry 17 significant digits; infinities print as "inf";
// absent optionals print empty. One header line precedes the records.
std::string experiment_to_csv(const std::vector<ExperimentRecord>& records);

void write_experiment_csv(const std::string& path,
                          const std::vector<ExperimentRecord>& records);

}  // namespace ybx
