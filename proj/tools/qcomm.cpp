// Command-line harness: evaluate the deformed commutator functional on
// matrices from disk, sweep the optimizer over (n, q) grids, run the
// verification suite, and emit extremal witness pairs.
//
// Exit codes: 0 success, 1 verification failure or conjecture violation,
// 2 usage or I/O error.

#include "qcomm/functionals.hpp"
#include "qcomm/matrix_io.hpp"
#include "qcomm/optimizer.hpp"
#include "qcomm/sweep.hpp"
#include "qcomm/verifier.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <thread>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr std::uint64_t kDefaultSeed = 1729;

// Route a record stream to --out when given, stdout otherwise.
class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::runtime_error(path + ": cannot open for writing");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  void finish() {
    if (file_) {
      file_->flush();
      if (!*file_) throw std::runtime_error("write to output file failed");
    }
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

int cmd_eval(const std::string& a_path, const std::string& b_path, double q,
             const std::string& out_path) {
  const qcomm::ComplexMatrix a = qcomm::read_matrix_file(a_path);
  const qcomm::ComplexMatrix b = qcomm::read_matrix_file(b_path);
  qcomm::require_finite(a, "eval: A");
  qcomm::require_finite(b, "eval: B");

  const qcomm::QParams p = qcomm::bound_c(q);
  const double f = qcomm::f_function(a, b, q);
  const double rat = qcomm::ratio(a, b, q);
  const double gap = p.c - rat;

  nlohmann::ordered_json j;
  j["n"] = a.rows();
  j["q"] = q;
  j["f"] = f;
  j["f_trace_form"] = qcomm::f_function_trace_form(a, b, q);
  j["r"] = qcomm::r_function(a, b);
  j["norm_a_sq"] = qcomm::fro_norm_sq(a);
  j["norm_b_sq"] = qcomm::fro_norm_sq(b);
  j["ratio"] = rat;
  j["c_q"] = p.c;
  j["gap"] = gap;
  const bool violation = gap < -qcomm::kViolationSlack;
  j["violation"] = violation;

  OutputTarget out(out_path);
  out.stream() << j.dump() << "\n";
  out.finish();
  if (violation) {
    std::cerr << "conjecture violation: ratio " << rat << " exceeds c(q) " << p.c << "\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_sweep(const qcomm::SweepConfig& cfg, const std::string& format,
              const std::string& out_path) {
  const qcomm::SweepOutcome outcome = qcomm::run_sweep(cfg);

  OutputTarget out(out_path);
  qcomm::write_records(out.stream(), outcome.records,
                       format == "jsonl" ? qcomm::RecordFormat::kJsonl
                                         : qcomm::RecordFormat::kCsv);
  out.finish();

  for (const auto& [n, worst] : qcomm::max_abs_gap_by_n(outcome.records)) {
    std::cerr << "n=" << n << ": max |gap| = " << worst << "\n";
  }
  std::cerr << outcome.records.size() << " cells, " << outcome.violations.size()
            << " violation(s)\n";

  if (!outcome.violations.empty()) {
    const std::string sidecar =
        out_path.empty() ? std::string("sweep_violations.jsonl") : out_path + ".violations.jsonl";
    std::ofstream vf(sidecar);
    if (!vf) throw std::runtime_error(sidecar + ": cannot open for writing");
    qcomm::write_violations(vf, outcome.violations);
    std::cerr << "offending pairs written to " << sidecar << "\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_verify(const qcomm::VerifySuiteConfig& cfg, const std::string& out_path) {
  const std::vector<qcomm::IdentityReport> reports = qcomm::run_verify_suite(cfg);
  if (reports.empty()) throw std::runtime_error("no check matches the --only filter");

  OutputTarget out(out_path);
  bool all_pass = true;
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["trials"] = r.trials;
    j["max_residual"] = r.max_residual;
    j["tolerance"] = r.tolerance;
    j["pass"] = r.pass;
    j["note"] = r.note;
    out.stream() << j.dump() << "\n";
    std::cerr << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": max residual "
              << r.max_residual << " vs tolerance " << r.tolerance << " over " << r.trials
              << " trials\n";
    all_pass = all_pass && r.pass;
  }
  out.finish();
  return all_pass ? kExitOk : kExitCheckFailed;
}

int cmd_witness(double q, Eigen::Index n, const std::string& out_dir) {
  const qcomm::WitnessPair w = qcomm::make_witness(q, n);
  const std::filesystem::path dir(out_dir.empty() ? "." : out_dir);
  std::filesystem::create_directories(dir);
  const std::filesystem::path a_path = dir / "witness_A.txt";
  const std::filesystem::path b_path = dir / "witness_B.txt";
  qcomm::write_matrix_file(a_path, w.a);
  qcomm::write_matrix_file(b_path, w.b);

  nlohmann::ordered_json j;
  j["n"] = n;
  j["q"] = q;
  j["c_q"] = w.params.c;
  j["eps1"] = w.params.eps1;
  j["eps2"] = w.params.eps2;
  j["norm_a_sq"] = qcomm::fro_norm_sq(w.a);
  j["norm_b_sq"] = qcomm::fro_norm_sq(w.b);
  j["f"] = qcomm::f_function(w.a, w.b, q);
  j["ratio"] = qcomm::ratio(w.a, w.b, q);
  j["a_file"] = a_path.string();
  j["b_file"] = b_path.string();
  std::cout << j.dump() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deformed commutator functional: evaluation, bound sweeps, verification"};
  app.require_subcommand(1);

  std::function<int()> action;

  // --- eval -----------------------------------------------------------
  auto* eval = app.add_subcommand("eval", "Evaluate f, r, and the bound gap for a matrix pair");
  {
    auto a_path = std::make_shared<std::string>();
    auto b_path = std::make_shared<std::string>();
    auto q = std::make_shared<double>(1.0);
    auto out_path = std::make_shared<std::string>();
    eval->add_option("a_file", *a_path, "Matrix A in the text format")
        ->required()
        ->check(CLI::ExistingFile);
    eval->add_option("b_file", *b_path, "Matrix B in the text format")
        ->required()
        ->check(CLI::ExistingFile);
    eval->add_option("--q", *q, "Deformation parameter")->required()->check(CLI::Number);
    eval->add_option("--out", *out_path, "Write the record here instead of stdout");
    eval->callback([&action, a_path, b_path, q, out_path] {
      action = [=] { return cmd_eval(*a_path, *b_path, *q, *out_path); };
    });
  }

  // --- sweep ----------------------------------------------------------
  auto* sweep = app.add_subcommand("sweep", "Optimize the ratio over an (n, q) grid");
  {
    auto cfg = std::make_shared<qcomm::SweepConfig>();
    auto q_single = std::make_shared<double>(0.0);
    auto format = std::make_shared<std::string>("csv");
    auto out_path = std::make_shared<std::string>();
    auto workers = std::make_shared<int>(0);
    sweep->add_option("--n", cfg->n_list, "Matrix dimensions (repeatable)")
        ->check(CLI::Range(2, 64));
    auto* q_opt = sweep->add_option("--q", *q_single, "Single q instead of a grid");
    auto* qmin_opt = sweep->add_option("--q-min", cfg->q_min, "Grid start (default -2)");
    auto* qmax_opt = sweep->add_option("--q-max", cfg->q_max, "Grid end (default 3)");
    auto* qstep_opt = sweep->add_option("--q-step", cfg->q_step, "Grid step (default 0.25)");
    q_opt->excludes(qmin_opt)->excludes(qmax_opt)->excludes(qstep_opt);
    sweep->add_option("--restarts", cfg->restarts, "Restarts per cell (default 16)")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--max-iters", cfg->max_iters, "Sweeps per restart (default 500)")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--tol", cfg->tol, "Stall tolerance (default 1e-10)")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--seed", cfg->seed, "Base seed")->envname("QCOMM_SEED");
    sweep->add_option("--workers", *workers, "Worker threads (default: hardware)")
        ->check(CLI::NonNegativeNumber);
    sweep->add_option("--format", *format, "Record format")
        ->check(CLI::IsMember({"csv", "jsonl"}));
    sweep->add_option("--out", *out_path, "Write records here instead of stdout");
    sweep->callback([&action, sweep, cfg, q_single, format, out_path, workers, q_opt] {
      action = [=] {
        qcomm::SweepConfig c = *cfg;
        if (q_opt->count() > 0) {
          c.q_min = *q_single;
          c.q_max = *q_single;
        }
        c.workers = *workers > 0
                        ? *workers
                        : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
        if (sweep->count("--seed") == 0 && !std::getenv("QCOMM_SEED")) c.seed = kDefaultSeed;
        return cmd_sweep(c, *format, *out_path);
      };
    });
  }

  // --- verify ---------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "Run the identity and bound verification suite");
  {
    auto cfg = std::make_shared<qcomm::VerifySuiteConfig>();
    auto out_path = std::make_shared<std::string>();
    verify->add_option("--samples", cfg->trials, "Trials per identity check (default 1000)")
        ->check(CLI::PositiveNumber);
    verify
        ->add_option("--bound-samples", cfg->bound_samples,
                     "Samples per bound check (default 20000)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", cfg->seed, "Base seed")->envname("QCOMM_SEED");
    verify->add_option("--only", cfg->only, "Run only checks whose name contains this");
    verify->add_option("--inject-fault", cfg->c_bias,
                       "Perturb c by this amount; the suite must then fail");
    verify->add_option("--out", *out_path, "Write JSONL reports here instead of stdout");
    verify->callback([&action, verify, cfg, out_path] {
      action = [=] {
        qcomm::VerifySuiteConfig c = *cfg;
        if (verify->count("--seed") == 0 && !std::getenv("QCOMM_SEED")) c.seed = kDefaultSeed;
        return cmd_verify(c, *out_path);
      };
    });
  }

  // --- witness --------------------------------------------------------
  auto* witness = app.add_subcommand("witness", "Write the extremal pair for a given q");
  {
    auto q = std::make_shared<double>(1.0);
    auto n = std::make_shared<int>(2);
    auto out_dir = std::make_shared<std::string>(".");
    witness->add_option("--q", *q, "Deformation parameter")->required()->check(CLI::Number);
    witness->add_option("--n", *n, "Embedding dimension (default 2)")->check(CLI::Range(2, 64));
    witness->add_option("--out", *out_dir, "Directory for witness_A.txt / witness_B.txt");
    witness->callback([&action, q, n, out_dir] {
      action = [=] { return cmd_witness(*q, *n, *out_dir); };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
