#include "bentga/experiment.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "bentga/bent.hpp"
#include "bentga/errors.hpp"

namespace bentga {
namespace {

using nlohmann::json;

json config_json(const ExperimentConfig& c) {
  return json{
      {"n", c.ga.n},
      {"population", c.ga.population},
      {"generations", c.ga.generations},
      {"tournament", c.ga.tournament_size},
      {"pc", c.ga.crossover_prob},
      {"pm", c.ga.mutation_prob},
      {"seed", c.ga.seed},
      {"evaluator", std::string(to_string(c.ga.evaluator))},
      {"shots", c.ga.shots},
      {"threads", c.ga.threads},
      {"reps", c.repetitions},
      {"out", c.out_dir.string()},
      {"emit_csv", c.emit_csv},
      {"emit_json", c.emit_json},
      {"emit_tt", c.emit_tt},
  };
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(fmt::format("cannot open {} for writing", path.string()));
  out << content;
  out.flush();
  if (!out) throw IoError(fmt::format("failed writing {}", path.string()));
}

void ensure_directory(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    throw IoError(fmt::format("cannot create output directory {}: {}", dir.string(), ec.message()));
  }
}

}  // namespace

void ExperimentConfig::validate() const {
  ga.validate();
  if (repetitions < 1) throw ValidationError("repetitions must be >= 1");
}

std::uint64_t repetition_seed(std::uint64_t master, unsigned repetition) {
  return derive_seed(master, {0x7265706574ULL, repetition});
}

void write_generations_csv(std::ostream& out, const std::vector<GenerationStats>& history) {
  out << "generation,best_fitness,avg_fitness\n";
  for (const auto& s : history) {
    out << fmt::format("{},{:.17g},{:.17g}\n", s.generation, s.best_fitness, s.avg_fitness);
  }
}

ExperimentSummary run_experiment(const ExperimentConfig& config) {
  config.validate();
  if (config.emit_csv || config.emit_json || config.emit_tt) ensure_directory(config.out_dir);

  ExperimentSummary summary;
  summary.config = config;
  const unsigned n = config.ga.n;

  for (unsigned r = 0; r < config.repetitions; ++r) {
    GaConfig ga = config.ga;
    ga.seed = repetition_seed(config.ga.seed, r);

    const auto start = std::chrono::steady_clock::now();
    const GaResult result = run_ga(ga);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

    RunSummary run;
    run.repetition = r;
    run.seed = ga.seed;
    run.final_best_fitness = result.history.back().best_fitness;
    run.final_avg_fitness = result.history.back().avg_fitness;
    run.best_norm = result.best_exact.norm;
    run.best_u4 = result.best_exact.u4;
    run.best_hex = to_hex(result.best);
    if (n % 2 == 0) run.is_bent = is_bent(result.best);
    run.threshold = bent_threshold_norm(n);
    run.gap_to_threshold = run.best_norm - run.threshold;
    run.best_generation = result.best_generation;
    run.wall_clock_seconds = elapsed.count();
    summary.runs.push_back(run);

    const auto run_dir = config.out_dir / fmt::format("run_{}", r);
    if (config.emit_csv || config.emit_tt) ensure_directory(run_dir);
    if (config.emit_csv) {
      std::ostringstream csv;
      write_generations_csv(csv, result.history);
      write_file(run_dir / "generations.csv", csv.str());
    }
    if (config.emit_tt) write_file(run_dir / "best.tt", to_text(result.best) + "\n");
  }

  if (config.emit_json) write_file(config.out_dir / "summary.json", summary_to_json(summary) + "\n");
  return summary;
}

std::string config_to_json(const ExperimentConfig& config) { return config_json(config).dump(2); }

std::string summary_to_json(const ExperimentSummary& summary) {
  json runs = json::array();
  for (const auto& r : summary.runs) {
    runs.push_back(json{
        {"repetition", r.repetition},
        {"seed", r.seed},
        {"final_best_fitness", r.final_best_fitness},
        {"final_avg_fitness", r.final_avg_fitness},
        {"best_norm", r.best_norm},
        {"best_u4", r.best_u4},
        {"best_tt", r.best_hex},
        {"is_bent", r.is_bent ? json(*r.is_bent) : json(nullptr)},
        {"threshold", r.threshold},
        {"gap_to_threshold", r.gap_to_threshold},
        {"best_generation", r.best_generation},
        {"wall_clock_seconds", r.wall_clock_seconds},
    });
  }
  json doc{
      {"fitness_column", "norm"},
      {"config", config_json(summary.config)},
      {"runs", std::move(runs)},
  };
  return doc.dump(2);
}

ExperimentConfig config_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(fmt::format("config is not valid JSON: {}", e.what()));
  }
  const json& c = doc.contains("config") ? doc.at("config") : doc;
  ExperimentConfig config;
  try {
    config.ga.n = c.at("n").get<unsigned>();
    config.ga.population = c.at("population").get<unsigned>();
    config.ga.generations = c.at("generations").get<unsigned>();
    config.ga.tournament_size = c.at("tournament").get<unsigned>();
    config.ga.crossover_prob = c.at("pc").get<double>();
    config.ga.mutation_prob = c.at("pm").get<double>();
    config.ga.seed = c.at("seed").get<std::uint64_t>();
    const auto evaluator = parse_evaluator(c.at("evaluator").get<std::string>());
    if (!evaluator) throw ValidationError("unknown evaluator in config");
    config.ga.evaluator = *evaluator;
    config.ga.shots = c.at("shots").get<std::uint64_t>();
    config.ga.threads = c.value("threads", 1U);
    config.repetitions = c.at("reps").get<unsigned>();
    config.out_dir = c.value("out", std::string("results"));
    config.emit_csv = c.value("emit_csv", true);
    config.emit_json = c.value("emit_json", true);
    config.emit_tt = c.value("emit_tt", true);
  } catch (const json::exception& e) {
    throw ValidationError(fmt::format("config is missing a field or has a wrong type: {}", e.what()));
  }
  return config;
}

}  // namespace bentga
