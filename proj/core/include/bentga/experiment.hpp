#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "bentga/ga.hpp"

namespace bentga {

struct ExperimentConfig {
  GaConfig ga;
  unsigned repetitions = 1;
  std::filesystem::path out_dir = "results";
  bool emit_csv = true;
  bool emit_json = true;
  bool emit_tt = true;

  void validate() const;
};

struct RunSummary {
  unsigned repetition = 0;
  std::uint64_t seed = 0;
  double final_best_fitness = 0.0;  // last generation, search evaluator
  double final_avg_fitness = 0.0;
  double best_norm = 0.0;  // all-time best, exact classical score
  double best_u4 = 0.0;
  std::string best_hex;
  std::optional<bool> is_bent;  // empty for odd n
  double threshold = 0.0;       // 2^(-n/4)
  double gap_to_threshold = 0.0;
  unsigned best_generation = 0;
  double wall_clock_seconds = 0.0;
};

struct ExperimentSummary {
  ExperimentConfig config;
  std::vector<RunSummary> runs;
};

/// Seed for repetition r of an experiment with master seed `master`.
std::uint64_t repetition_seed(std::uint64_t master, unsigned repetition);

/// Runs every repetition and writes run_<r>/generations.csv, run_<r>/best.tt and summary.json
/// under config.out_dir (subject to the emit flags). Throws IoError if the directory is unwritable.
ExperimentSummary run_experiment(const ExperimentConfig& config);

/// Header `generation,best_fitness,avg_fitness`, values printed with 17 significant digits.
void write_generations_csv(std::ostream& out, const std::vector<GenerationStats>& history);

std::string summary_to_json(const ExperimentSummary& summary);
std::string config_to_json(const ExperimentConfig& config);
/// Accepts either a bare config object or a summary.json document (reads its "config" member).
ExperimentConfig config_from_json(const std::string& text);

}  // namespace bentga
