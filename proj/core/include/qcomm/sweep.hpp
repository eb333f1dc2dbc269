#pragma once

#include "qcomm/optimizer.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace qcomm {

/// A best_ratio this far above c(q) counts as a conjecture violation.
inline constexpr double kViolationSlack = 1e-6;

struct SweepRecord {
  int n = 0;
  double q = 0.0;
  double best_ratio = 0.0;
  double c_q = 0.0;
  double gap = 0.0;  // c_q - best_ratio; negative past kViolationSlack = violation
  long iterations = 0;
  int restarts = 0;
  bool converged = false;
  std::uint64_t seed = 0;  // the per-cell derived seed
};

struct SweepViolation {
  SweepRecord record;
  ComplexMatrix a;
  ComplexMatrix b;
};

struct SweepConfig {
  std::vector<int> n_list = {2, 5, 10, 15};
  double q_min = -2.0;
  double q_max = 3.0;
  double q_step = 0.25;
  int restarts = 16;
  int max_iters = 500;
  double tol = 1e-10;
  std::uint64_t seed = 0;
  int workers = 1;  // worker threads; records are identical for any value
};

struct SweepOutcome {
  std::vector<SweepRecord> records;  // ordered by (n_list position, q ascending)
  std::vector<SweepViolation> violations;
};

/// The q grid [q_min, q_max] in steps of q_step (endpoints inclusive up to
/// rounding slack).
std::vector<double> sweep_q_values(const SweepConfig& cfg);

/// Optimize every (n, q) cell.  Cells are independent; each derives its seed
/// from (cell config seed, n index, q index), so the record stream is
/// byte-identical no matter how many workers run or how they interleave.
SweepOutcome run_sweep(const SweepConfig& cfg);

enum class RecordFormat { kCsv, kJsonl };

std::string sweep_csv_header();
std::string to_csv_line(const SweepRecord& r);
std::string to_jsonl_line(const SweepRecord& r);
void write_records(std::ostream& os, const std::vector<SweepRecord>& records, RecordFormat fmt);

/// Worst |gap| seen for each n; the per-curve summary of a sweep.
std::map<int, double> max_abs_gap_by_n(const std::vector<SweepRecord>& records);

/// One JSON line per violation with the offending pair embedded in the
/// matrix text format, so a counterexample candidate survives the run.
void write_violations(std::ostream& os, const std::vector<SweepViolation>& violations);

}  // namespace qcomm
