// bentga: bent-function search with Gowers U2 fitness.
//
//   bentga run  --n 6 --generations 250 --evaluator classical --out results/
//   bentga eval --tt best.tt [--json]
//   bentga cost --n-min 6 --n-max 40
//
// Exit codes: 0 success, 1 internal failure, 2 invalid arguments, 3 unwritable output.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "bentga/bent.hpp"
#include "bentga/cost.hpp"
#include "bentga/errors.hpp"
#include "bentga/experiment.hpp"
#include "bentga/ga.hpp"
#include "bentga/gowers.hpp"
#include "bentga/quantum.hpp"

namespace {

using namespace bentga;

constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitOutput = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::map<std::string, EvaluatorKind> kEvaluators{
    {"classical", EvaluatorKind::classical},
    {"quantum-exact", EvaluatorKind::quantum_exact},
    {"quantum-shots-allzero", EvaluatorKind::quantum_shots_allzero},
    {"quantum-shots-hadamard", EvaluatorKind::quantum_shots_hadamard},
};

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw UsageError(fmt::format("cannot read {}", p.string()));
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Accepts a path to a .tt file, an `n=<k> tt=<hex>` line, or bare hex (n from --n or the length).
TruthTable load_table(const std::string& arg, std::optional<unsigned> n) {
  std::string text = arg;
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    text = read_file(arg);
    text = text.substr(0, text.find('\n'));
  }
  if (text.find("tt=") != std::string::npos) {
    TruthTable t = parse_text(text);
    if (n && *n != t.n()) throw ValidationError(fmt::format("--n {} disagrees with table n={}", *n, t.n()));
    return t;
  }
  if (!n) {
    const std::uint64_t entries = static_cast<std::uint64_t>(text.size()) * 4;
    if (text.size() < 2 || (entries & (entries - 1)) != 0) {
      throw ValidationError("cannot infer n from the hex length; pass --n");
    }
    unsigned k = 0;
    while ((std::uint64_t{1} << k) < entries) ++k;
    n = k;
  }
  return from_hex(*n, text);
}

struct RunOptions {
  ExperimentConfig config;
  std::string evaluator = "classical";
  std::vector<std::string> emit{"csv", "json", "tt"};
  std::string from_summary;
};

int do_run(RunOptions& opts, const CLI::App& cmd) {
  ExperimentConfig config = opts.config;
  if (!opts.from_summary.empty()) {
    config = config_from_json(read_file(opts.from_summary));
    // An explicit --out redirects the re-run; everything else comes from the echo.
    if (cmd.count("--out") > 0) config.out_dir = opts.config.out_dir;
  } else {
    config.ga.evaluator = kEvaluators.at(opts.evaluator);
    config.emit_csv = config.emit_json = config.emit_tt = false;
    for (const auto& e : opts.emit) {
      if (e == "csv") config.emit_csv = true;
      else if (e == "json") config.emit_json = true;
      else if (e == "tt") config.emit_tt = true;
      else throw UsageError(fmt::format("unknown --emit kind '{}'", e));
    }
  }
  const auto summary = run_experiment(config);
  for (const auto& r : summary.runs) {
    std::cout << fmt::format("run {}: best_norm={:.9f} final_best={:.9f} final_avg={:.9f} bent={} ({:.2f}s)\n",
                             r.repetition, r.best_norm, r.final_best_fitness, r.final_avg_fitness,
                             r.is_bent ? (*r.is_bent ? "yes" : "no") : "n/a", r.wall_clock_seconds);
  }
  std::cout << fmt::format("threshold 2^(-n/4) = {:.9f}; results in {}\n", bent_threshold_norm(config.ga.n),
                           config.out_dir.string());
  return 0;
}

struct EvalOptions {
  std::string tt;
  std::optional<unsigned> n;
  std::string evaluator = "classical";
  std::uint64_t shots = 1000;
  std::uint64_t seed = 0;
  bool json = false;
};

int do_eval(const EvalOptions& opts) {
  const TruthTable f = load_table(opts.tt, opts.n);
  const EvaluatorKind kind = kEvaluators.at(opts.evaluator);
  const GowersEstimate est = make_evaluator(kind, opts.shots)(f, opts.seed);
  const WalshSpectrum w = walsh_hadamard(f);
  const GowersValue exact = gowers_u2_from_spectrum(w);
  const bool even = f.n() % 2 == 0;
  const bool bent = even && is_bent(w);

  if (opts.json) {
    nlohmann::json doc{
        {"n", f.n()},
        {"tt", to_hex(f)},
        {"evaluator", opts.evaluator},
        {"method", std::string(to_string(est.method))},
        {"norm", est.norm},
        {"u4", est.value},
        {"exact_norm", exact.norm},
        {"exact_u4", exact.u4},
        {"spectrum_min", w.min_value()},
        {"spectrum_max", w.max_value()},
        {"spectrum_max_abs", w.max_abs()},
        {"is_bent", even ? nlohmann::json(bent) : nlohmann::json(nullptr)},
        {"threshold", bent_threshold_norm(f.n())},
    };
    if (!is_exact(kind)) {
      doc["shots"] = est.shots;
      doc["std_error"] = est.std_error;
    }
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::cout << fmt::format("n          {}\n", f.n());
  std::cout << fmt::format("method     {}\n", to_string(est.method));
  std::cout << fmt::format("norm       {:.12f}\n", est.norm);
  std::cout << fmt::format("u4         {:.12g}\n", est.value);
  if (!is_exact(kind)) {
    std::cout << fmt::format("std_error  {:.6g} ({} shots)\n", est.std_error, est.shots);
    std::cout << fmt::format("exact norm {:.12f}\n", exact.norm);
  }
  std::cout << fmt::format("spectrum   min {} max {} max|W| {}\n", w.min_value(), w.max_value(), w.max_abs());
  std::cout << fmt::format("is_bent    {}\n", even ? (bent ? "true" : "false") : "n/a (odd n)");
  return 0;
}

struct CostOptions {
  unsigned n_min = 1;
  unsigned n_max = 40;
  double epsilon = 0.01;
  double delta = 0.05;
  std::uint64_t ram_budget_bits = std::uint64_t{1} << 36;
  unsigned qubit_budget = 100;
  unsigned word_bits = 64;
  std::string out;
};

int do_cost(const CostOptions& opts) {
  ResourceBudget budget;
  budget.ram_bits = BigInt(opts.ram_budget_bits);
  budget.qubits = opts.qubit_budget;
  budget.word_bits = opts.word_bits;
  const auto table = resource_table(opts.n_min, opts.n_max, opts.epsilon, opts.delta, budget);
  if (opts.out.empty()) {
    write_csv(std::cout, table);
  } else {
    std::ofstream file(opts.out, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError(fmt::format("cannot open {} for writing", opts.out));
    write_csv(file, table);
    if (!file.flush()) throw IoError(fmt::format("failed writing {}", opts.out));
  }
  for (const auto& note : footnotes(table)) std::cerr << "# " << note << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bent Boolean function search with Gowers U2 fitness"};
  app.require_subcommand(1);

  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "Run seeded GA experiments and write CSV/JSON/tt results");
  auto& ga = run.config.ga;
  run_cmd->add_option("--n", ga.n, "Number of variables")->check(CLI::Range(1U, kMaxVariables));
  run_cmd->add_option("--generations", ga.generations, "Generations per run")->check(CLI::PositiveNumber);
  run_cmd->add_option("--population", ga.population, "Population size")->check(CLI::Range(2U, 1000000U));
  run_cmd->add_option("--pc", ga.crossover_prob, "Crossover probability")->check(CLI::Range(0.0, 1.0));
  run_cmd->add_option("--pm", ga.mutation_prob, "Mutation probability")->check(CLI::Range(0.0, 1.0));
  run_cmd->add_option("--tournament", ga.tournament_size, "Tournament size")->check(CLI::PositiveNumber);
  run_cmd->add_option("--seed", ga.seed, "Master seed");
  run_cmd->add_option("--reps", run.config.repetitions, "Independent repetitions")->check(CLI::PositiveNumber);
  run_cmd->add_option("--evaluator", run.evaluator, "Fitness evaluator")
      ->check(CLI::IsMember({"classical", "quantum-exact", "quantum-shots-allzero", "quantum-shots-hadamard"}));
  run_cmd->add_option("--shots", ga.shots, "Shots per evaluation (shot evaluators)")->check(CLI::PositiveNumber);
  run_cmd->add_option("--threads", ga.threads, "Evaluation threads")->check(CLI::PositiveNumber);
  run_cmd->add_option("--out", run.config.out_dir, "Output directory");
  run_cmd->add_option("--emit", run.emit, "Outputs to write: csv, json, tt")->delimiter(',');
  run_cmd->add_option("--from-summary", run.from_summary, "Re-run the config echoed in a summary.json");

  EvalOptions eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a single truth table");
  eval_cmd->add_option("--tt", eval.tt, "Truth-table file, 'n=<k> tt=<hex>' line, or bare hex")->required();
  eval_cmd->add_option("--n", eval.n, "Number of variables for bare hex")->check(CLI::Range(1U, kMaxVariables));
  eval_cmd->add_option("--evaluator", eval.evaluator, "Fitness evaluator")
      ->check(CLI::IsMember({"classical", "quantum-exact", "quantum-shots-allzero", "quantum-shots-hadamard"}));
  eval_cmd->add_option("--shots", eval.shots, "Shots (shot evaluators)")->check(CLI::PositiveNumber);
  eval_cmd->add_option("--seed", eval.seed, "Seed (shot evaluators)");
  eval_cmd->add_flag("--json", eval.json, "Print JSON");

  CostOptions cost;
  auto* cost_cmd = app.add_subcommand("cost", "Classical vs quantum resource table as CSV");
  cost_cmd->add_option("--n-min", cost.n_min, "Smallest n");
  cost_cmd->add_option("--n-max", cost.n_max, "Largest n");
  cost_cmd->add_option("--epsilon", cost.epsilon, "Additive error target");
  cost_cmd->add_option("--delta", cost.delta, "Failure probability");
  cost_cmd->add_option("--ram-budget-bits", cost.ram_budget_bits, "Classical memory budget in bits");
  cost_cmd->add_option("--qubit-budget", cost.qubit_budget, "Logical qubit budget");
  cost_cmd->add_option("--word-bits", cost.word_bits, "Bits per stored WHT coefficient");
  cost_cmd->add_option("--out", cost.out, "Write CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "bentga: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*run_cmd) return do_run(run, *run_cmd);
    if (*eval_cmd) return do_eval(eval);
    if (*cost_cmd) return do_cost(cost);
  } catch (const UsageError& e) {
    std::cerr << "bentga: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ValidationError& e) {
    std::cerr << "bentga: " << e.what() << "\n";
    return kExitUsage;
  } catch (const RangeError& e) {
    std::cerr << "bentga: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "bentga: " << e.what() << "\n";
    return kExitOutput;
  } catch (const std::exception& e) {
    std::cerr << "bentga: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
