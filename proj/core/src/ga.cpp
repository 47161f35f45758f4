#include "bentga/ga.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include <fmt/format.h>

#include "bentga/errors.hpp"

namespace bentga {
namespace {

enum Stream : std::uint64_t { kInit = 1, kSelection, kCrossover, kMutation, kEvaluation, kEliteEvaluation };

std::vector<GowersEstimate> evaluate_all(const std::vector<TruthTable>& population, const FitnessFn& evaluate,
                                         std::uint64_t seed, unsigned generation, unsigned threads) {
  std::vector<GowersEstimate> out(population.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      out[i] = evaluate(population[i], derive_seed(seed, {kEvaluation, generation, i}));
    }
  };
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, population.size());
  if (workers == 1) {
    work(0, population.size());
    return out;
  }
  std::vector<std::jthread> pool;
  const std::size_t chunk = (population.size() + workers - 1) / workers;
  for (std::size_t begin = 0; begin < population.size(); begin += chunk) {
    pool.emplace_back(work, begin, std::min(begin + chunk, population.size()));
  }
  return out;
}

std::size_t argmin_value(const std::vector<GowersEstimate>& fitness) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < fitness.size(); ++i) {
    if (fitness[i].value < fitness[best].value) best = i;
  }
  return best;
}

std::vector<double> selection_keys(const std::vector<GowersEstimate>& fitness) {
  std::vector<double> keys(fitness.size());
  std::transform(fitness.begin(), fitness.end(), keys.begin(), [](const auto& e) { return e.value; });
  return keys;
}

}  // namespace

std::string_view to_string(EvaluatorKind k) {
  switch (k) {
    case EvaluatorKind::classical: return "classical";
    case EvaluatorKind::quantum_exact: return "quantum-exact";
    case EvaluatorKind::quantum_shots_allzero: return "quantum-shots-allzero";
    case EvaluatorKind::quantum_shots_hadamard: return "quantum-shots-hadamard";
  }
  return "unknown";
}

std::optional<EvaluatorKind> parse_evaluator(std::string_view name) {
  for (auto k : {EvaluatorKind::classical, EvaluatorKind::quantum_exact, EvaluatorKind::quantum_shots_allzero,
                 EvaluatorKind::quantum_shots_hadamard}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

bool is_exact(EvaluatorKind k) { return k == EvaluatorKind::classical || k == EvaluatorKind::quantum_exact; }

FitnessFn make_evaluator(EvaluatorKind kind, std::uint64_t shots) {
  switch (kind) {
    case EvaluatorKind::classical:
      return [](const TruthTable& f, std::uint64_t) {
        return make_estimate(gowers_u2(f).u4, EstimateMethod::classical_wht, 0, 0.0);
      };
    case EvaluatorKind::quantum_exact:
      return [](const TruthTable& f, std::uint64_t) { return exact_amplitude(GowersCircuit(f)); };
    case EvaluatorKind::quantum_shots_allzero:
      return [shots](const TruthTable& f, std::uint64_t seed) {
        return estimate_shots_allzero(GowersCircuit(f), shots, seed);
      };
    case EvaluatorKind::quantum_shots_hadamard:
      return [shots](const TruthTable& f, std::uint64_t seed) {
        return estimate_shots_hadamard_test(GowersCircuit(f), shots, seed);
      };
  }
  throw ValidationError("unknown evaluator");
}

void GaConfig::validate() const {
  if (n < 1 || n > kMaxVariables) throw RangeError(fmt::format("n must lie in 1..{}, got {}", kMaxVariables, n));
  if (population < 2) throw ValidationError(fmt::format("population must be >= 2, got {}", population));
  if (generations < 1) throw ValidationError("generations must be >= 1");
  if (tournament_size < 1 || tournament_size > population) {
    throw ValidationError(fmt::format("tournament size must lie in 1..{}, got {}", population, tournament_size));
  }
  if (!(crossover_prob >= 0.0 && crossover_prob <= 1.0)) {
    throw ValidationError(fmt::format("crossover probability must lie in [0, 1], got {}", crossover_prob));
  }
  if (!(mutation_prob >= 0.0 && mutation_prob <= 1.0)) {
    throw ValidationError(fmt::format("mutation probability must lie in [0, 1], got {}", mutation_prob));
  }
  if (!is_exact(evaluator) && shots < 1) throw ValidationError("shot evaluators need shots >= 1");
  if (evaluator == EvaluatorKind::quantum_exact || !is_exact(evaluator)) {
    if (n > 12) throw RangeError(fmt::format("quantum evaluators support n <= 12, got {}", n));
  }
}

TruthTable random_truth_table(unsigned n, Rng& rng) {
  TruthTable t(n);
  for (auto& w : t.mutable_words()) w = rng();
  t.normalize();
  return t;
}

std::size_t tournament_select(std::span<const double> fitness, unsigned k, Rng& rng) {
  if (k < 1 || k > fitness.size()) throw ValidationError("tournament size out of range");
  // Partial Fisher-Yates over the index set: k distinct draws.
  std::vector<std::size_t> idx(fitness.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::size_t best = fitness.size();
  for (unsigned i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, idx.size() - 1);
    std::swap(idx[i], idx[pick(rng)]);
    const std::size_t c = idx[i];
    if (best == fitness.size() || fitness[c] < fitness[best] || (fitness[c] == fitness[best] && c < best)) {
      best = c;
    }
  }
  return best;
}

std::pair<TruthTable, TruthTable> crossover_at(const TruthTable& a, const TruthTable& b, std::uint64_t cut) {
  if (a.n() != b.n()) throw ValidationError("crossover parents must have the same n");
  if (cut > a.size()) throw RangeError("crossover cut beyond the table");
  TruthTable c1 = a;
  TruthTable c2 = b;
  auto w1 = c1.mutable_words();
  auto w2 = c2.mutable_words();
  for (std::size_t i = 0; i < w1.size(); ++i) {
    const std::uint64_t lo = i * 64;
    std::uint64_t suffix;  // bits of word i with index >= cut
    if (cut <= lo) {
      suffix = ~std::uint64_t{0};
    } else if (cut >= lo + 64) {
      suffix = 0;
    } else {
      suffix = ~std::uint64_t{0} << (cut - lo);
    }
    const std::uint64_t diff = (w1[i] ^ w2[i]) & suffix;
    w1[i] ^= diff;
    w2[i] ^= diff;
  }
  return {std::move(c1), std::move(c2)};
}

std::pair<TruthTable, TruthTable> crossover_single_point(const TruthTable& a, const TruthTable& b, double p_c,
                                                         Rng& rng) {
  if (a.n() != b.n()) throw ValidationError("crossover parents must have the same n");
  if (!std::bernoulli_distribution(p_c)(rng)) return {a, b};
  std::uniform_int_distribution<std::uint64_t> cut(1, a.size() - 1);
  return crossover_at(a, b, cut(rng));
}

TruthTable mutate_bitflip(TruthTable f, double p_m, Rng& rng) {
  if (std::bernoulli_distribution(p_m)(rng)) {
    std::uniform_int_distribution<std::uint64_t> pos(0, f.size() - 1);
    f.flip(pos(rng));
  }
  return f;
}

std::size_t apply_elitism(std::vector<TruthTable>& offspring, std::vector<GowersEstimate>& fitness,
                          const TruthTable& elite, const GowersEstimate& elite_fitness) {
  if (offspring.empty() || offspring.size() != fitness.size()) {
    throw ValidationError("elitism needs a non-empty, fully evaluated offspring population");
  }
  std::size_t worst = 0;
  for (std::size_t i = 1; i < fitness.size(); ++i) {
    if (fitness[i].value > fitness[worst].value) worst = i;
  }
  offspring[worst] = elite;
  fitness[worst] = elite_fitness;
  return worst;
}

GaResult run_ga(const GaConfig& config) {
  config.validate();
  GaResult result = run_ga(config, make_evaluator(config.evaluator, config.shots));
  return result;
}

GaResult run_ga(const GaConfig& config, const FitnessFn& evaluate) {
  config.validate();
  const unsigned pop_size = config.population;

  std::vector<TruthTable> population;
  population.reserve(pop_size);
  {
    Rng init(derive_seed(config.seed, {kInit}));
    for (unsigned i = 0; i < pop_size; ++i) population.push_back(random_truth_table(config.n, init));
  }
  auto fitness = evaluate_all(population, evaluate, config.seed, 0, config.threads);

  GaResult result;
  result.history.reserve(config.generations);
  std::optional<GowersValue> best_exact;

  for (unsigned g = 0; g < config.generations; ++g) {
    const std::size_t elite_idx = argmin_value(fitness);
    const TruthTable elite = population[elite_idx];
    const GowersEstimate elite_fitness = fitness[elite_idx];

    GenerationStats stats;
    stats.generation = g;
    stats.best_fitness = elite_fitness.norm;
    double total = 0.0;
    for (const auto& e : fitness) {
      total += e.norm;
      stats.best_fitness = std::min(stats.best_fitness, e.norm);
    }
    stats.avg_fitness = total / pop_size;
    stats.best_individual = elite;
    result.history.push_back(std::move(stats));

    const GowersValue exact = gowers_u2(elite);
    if (!best_exact || exact.u4 < best_exact->u4) {
      best_exact = exact;
      result.best = elite;
      result.best_generation = g;
    }

    if (g + 1 == config.generations) break;

    Rng select_rng(derive_seed(config.seed, {kSelection, g}));
    Rng cross_rng(derive_seed(config.seed, {kCrossover, g}));
    Rng mutate_rng(derive_seed(config.seed, {kMutation, g}));
    const auto keys = selection_keys(fitness);

    std::vector<TruthTable> offspring;
    offspring.reserve(pop_size);
    while (offspring.size() < pop_size) {
      const auto& mum = population[tournament_select(keys, config.tournament_size, select_rng)];
      const auto& dad = population[tournament_select(keys, config.tournament_size, select_rng)];
      auto [c1, c2] = crossover_single_point(mum, dad, config.crossover_prob, cross_rng);
      offspring.push_back(mutate_bitflip(std::move(c1), config.mutation_prob, mutate_rng));
      auto second = mutate_bitflip(std::move(c2), config.mutation_prob, mutate_rng);
      if (offspring.size() < pop_size) offspring.push_back(std::move(second));
    }

    auto offspring_fitness = evaluate_all(offspring, evaluate, config.seed, g + 1, config.threads);
    const std::size_t slot = apply_elitism(offspring, offspring_fitness, elite, elite_fitness);
    // Noisy scores are never carried over: the elite gets fresh shots.
    offspring_fitness[slot] = evaluate(elite, derive_seed(config.seed, {kEliteEvaluation, g + 1}));

    population = std::move(offspring);
    fitness = std::move(offspring_fitness);
  }

  result.best_exact = *best_exact;
  return result;
}

}  // namespace bentga
