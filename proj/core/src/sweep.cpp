#include "qcomm/sweep.hpp"

#include "qcomm/matrix_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>
#include <utility>

namespace qcomm {

std::vector<double> sweep_q_values(const SweepConfig& cfg) {
  if (!std::isfinite(cfg.q_min) || !std::isfinite(cfg.q_max)) {
    throw std::invalid_argument("sweep: q bounds must be finite");
  }
  if (cfg.q_max < cfg.q_min) throw std::invalid_argument("sweep: q_max must be >= q_min");
  if (!(cfg.q_step > 0.0)) throw std::invalid_argument("sweep: q_step must be positive");
  // The 1e-9 slack keeps the intended endpoint in the grid when the span is
  // an exact multiple of the step up to rounding.
  const long steps = static_cast<long>(std::floor((cfg.q_max - cfg.q_min) / cfg.q_step + 1e-9));
  std::vector<double> qs;
  qs.reserve(steps + 1);
  for (long i = 0; i <= steps; ++i) qs.push_back(cfg.q_min + i * cfg.q_step);
  return qs;
}

SweepOutcome run_sweep(const SweepConfig& cfg) {
  if (cfg.n_list.empty()) throw std::invalid_argument("sweep: n_list must not be empty");
  for (const int n : cfg.n_list) {
    if (n < 2) throw std::invalid_argument("sweep: every n must be at least 2");
  }
  if (cfg.workers < 1) throw std::invalid_argument("sweep: workers must be positive");
  const std::vector<double> qs = sweep_q_values(cfg);
  const std::size_t n_count = cfg.n_list.size();
  const std::size_t cells = n_count * qs.size();

  SweepOutcome outcome;
  outcome.records.resize(cells);
  std::vector<std::pair<std::size_t, SweepViolation>> violations;
  std::mutex violations_mu;

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto work = [&] {
    for (;;) {
      const std::size_t cell = next.fetch_add(1);
      if (cell >= cells) return;
      try {
        const std::size_t ni = cell / qs.size();
        const std::size_t qi = cell % qs.size();
        const double q = qs[qi];
        // The cell seed depends only on the cell's grid position, never on
        // which worker picks it up or in what order.
        const std::uint64_t cell_seed = derive_seed(cfg.seed, ni, qi);
        OptimizeConfig oc;
        oc.n = cfg.n_list[ni];
        oc.q = q;
        oc.restarts = cfg.restarts;
        oc.max_iters = cfg.max_iters;
        oc.tol = cfg.tol;
        oc.seed = cell_seed;
        const OptimizeResult res = optimize_cell(oc);
        const QParams p = bound_c(q);
        SweepRecord rec;
        rec.n = cfg.n_list[ni];
        rec.q = q;
        rec.best_ratio = res.best_ratio;
        rec.c_q = p.c;
        rec.gap = p.c - res.best_ratio;
        rec.iterations = res.iterations;
        rec.restarts = res.restarts_completed;
        rec.converged = res.converged;
        rec.seed = cell_seed;
        outcome.records[cell] = rec;
        if (rec.gap < -kViolationSlack) {
          const std::lock_guard<std::mutex> lock(violations_mu);
          violations.push_back({cell, SweepViolation{rec, res.a_opt, res.b_opt}});
        }
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
      }
    }
  };

  const std::size_t nthreads = std::min<std::size_t>(cfg.workers, cells);
  if (nthreads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);

  std::sort(violations.begin(), violations.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto& [cell, v] : violations) outcome.violations.push_back(std::move(v));
  return outcome;
}

std::string sweep_csv_header() {
  return "n,q,best_ratio,c_q,gap,iterations,restarts,converged,seed";
}

std::string to_csv_line(const SweepRecord& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g,%.17g,%ld,%d,%d,%llu", r.n, r.q,
                r.best_ratio, r.c_q, r.gap, r.iterations, r.restarts, r.converged ? 1 : 0,
                static_cast<unsigned long long>(r.seed));
  return buf;
}

std::string to_jsonl_line(const SweepRecord& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["q"] = r.q;
  j["best_ratio"] = r.best_ratio;
  j["c_q"] = r.c_q;
  j["gap"] = r.gap;
  j["iterations"] = r.iterations;
  j["restarts"] = r.restarts;
  j["converged"] = r.converged;
  j["seed"] = r.seed;
  return j.dump();
}

void write_records(std::ostream& os, const std::vector<SweepRecord>& records, RecordFormat fmt) {
  if (fmt == RecordFormat::kCsv) {
    os << sweep_csv_header() << "\n";
    for (const auto& r : records) os << to_csv_line(r) << "\n";
  } else {
    for (const auto& r : records) os << to_jsonl_line(r) << "\n";
  }
}

std::map<int, double> max_abs_gap_by_n(const std::vector<SweepRecord>& records) {
  std::map<int, double> out;
  for (const auto& r : records) {
    auto [it, inserted] = out.try_emplace(r.n, std::abs(r.gap));
    if (!inserted) it->second = std::max(it->second, std::abs(r.gap));
  }
  return out;
}

void write_violations(std::ostream& os, const std::vector<SweepViolation>& violations) {
  for (const auto& v : violations) {
    std::ostringstream a_text, b_text;
    write_matrix(a_text, v.a);
    write_matrix(b_text, v.b);
    nlohmann::ordered_json j;
    j["n"] = v.record.n;
    j["q"] = v.record.q;
    j["best_ratio"] = v.record.best_ratio;
    j["c_q"] = v.record.c_q;
    j["gap"] = v.record.gap;
    j["seed"] = v.record.seed;
    j["a"] = a_text.str();
    j["b"] = b_text.str();
    os << j.dump() << "\n";
  }
}

}  // namespace qcomm
