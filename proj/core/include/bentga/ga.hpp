#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "bentga/gowers.hpp"
#include "bentga/quantum.hpp"
#include "bentga/rng.hpp"
#include "bentga/truth_table.hpp"

namespace bentga {

enum class EvaluatorKind { classical, quantum_exact, quantum_shots_allzero, quantum_shots_hadamard };

std::string_view to_string(EvaluatorKind k);
std::optional<EvaluatorKind> parse_evaluator(std::string_view name);
bool is_exact(EvaluatorKind k);

/// Fitness evaluator contract: deterministic given (table, seed). Exact evaluators ignore the seed.
using FitnessFn = std::function<GowersEstimate(const TruthTable&, std::uint64_t seed)>;

FitnessFn make_evaluator(EvaluatorKind kind, std::uint64_t shots);

struct GaConfig {
  unsigned n = 6;
  unsigned population = 25;
  unsigned generations = 250;
  unsigned tournament_size = 3;
  double crossover_prob = 0.5;
  double mutation_prob = 0.8;
  std::uint64_t seed = 0;
  EvaluatorKind evaluator = EvaluatorKind::classical;
  std::uint64_t shots = 1000;
  /// Worker threads for fitness evaluation. Results do not depend on this value.
  unsigned threads = 1;

  /// Throws ValidationError (or RangeError for n) describing the first violated constraint.
  void validate() const;
};

struct GenerationStats {
  unsigned generation = 0;
  double best_fitness = 0.0;  // minimum norm in the population
  double avg_fitness = 0.0;   // mean norm
  TruthTable best_individual;
};

struct GaResult {
  /// All-time best elite, ranked by exact classical re-scoring.
  TruthTable best;
  GowersValue best_exact;
  unsigned best_generation = 0;
  std::vector<GenerationStats> history;
};

GaResult run_ga(const GaConfig& config);
/// Same loop with a caller-supplied evaluator; `config.evaluator` and `config.shots` are ignored.
GaResult run_ga(const GaConfig& config, const FitnessFn& evaluate);

TruthTable random_truth_table(unsigned n, Rng& rng);

/// k distinct indices drawn uniformly; returns the one with the smallest fitness,
/// ties going to the lowest index.
std::size_t tournament_select(std::span<const double> fitness, unsigned k, Rng& rng);

/// Children of a cut at `cut`: entries [cut, 2^n) are exchanged.
std::pair<TruthTable, TruthTable> crossover_at(const TruthTable& a, const TruthTable& b, std::uint64_t cut);

/// With probability p_c, crossover_at a uniform cut in [1, 2^n - 1]; otherwise copies.
std::pair<TruthTable, TruthTable> crossover_single_point(const TruthTable& a, const TruthTable& b,
                                                         double p_c, Rng& rng);

/// With probability p_m, flips one uniformly chosen entry.
TruthTable mutate_bitflip(TruthTable f, double p_m, Rng& rng);

/// Overwrites the offspring with the largest fitness (first one on ties) with the elite.
/// Returns the replaced index.
std::size_t apply_elitism(std::vector<TruthTable>& offspring, std::vector<GowersEstimate>& fitness,
                          const TruthTable& elite, const GowersEstimate& elite_fitness);

}  // namespace bentga
