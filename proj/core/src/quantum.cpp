#include "bentga/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <fmt/format.h>

#include "bentga/errors.hpp"
#include "bentga/rng.hpp"

namespace bentga {
namespace {

constexpr unsigned kMaxExactAmplitudeVariables = 12;

std::uint64_t draw_successes(std::uint64_t shots, double p, std::uint64_t seed) {
  if (shots == 0) throw ValidationError("shot count must be at least 1");
  Rng rng(seed);
  std::binomial_distribution<std::uint64_t> dist(shots, std::clamp(p, 0.0, 1.0));
  return dist(rng);
}

// Success fraction used for standard errors; pulled off 0 and 1 so the error stays positive.
double smoothed_fraction(std::uint64_t successes, std::uint64_t shots) {
  if (successes == 0 || successes == shots) {
    return (static_cast<double>(successes) + 0.5) / (static_cast<double>(shots) + 1.0);
  }
  return static_cast<double>(successes) / static_cast<double>(shots);
}

}  // namespace

std::string_view to_string(EstimateMethod m) {
  switch (m) {
    case EstimateMethod::classical_wht: return "classical-wht";
    case EstimateMethod::exact_amplitude: return "exact-amplitude";
    case EstimateMethod::statevector: return "statevector";
    case EstimateMethod::shots_allzero: return "shots-allzero";
    case EstimateMethod::shots_hadamard_test: return "shots-hadamard-test";
  }
  return "unknown";
}

std::string_view to_string(CircuitStep s) {
  switch (s) {
    case CircuitStep::hadamard_all: return "H^3n";
    case CircuitStep::oracle_x: return "U_f(X)";
    case CircuitStep::cnot_a_to_x: return "CNOT(A->X)";
    case CircuitStep::cnot_b_to_x: return "CNOT(B->X)";
    case CircuitStep::measure: return "measure";
  }
  return "unknown";
}

GowersEstimate make_estimate(double value, EstimateMethod method, std::uint64_t shots, double std_error) {
  GowersEstimate e;
  e.value = value;
  e.norm = std::sqrt(std::sqrt(std::clamp(value, 0.0, 1.0)));
  e.method = method;
  e.shots = shots;
  e.std_error = std_error;
  return e;
}

const std::vector<CircuitStep>& GowersCircuit::steps() {
  using enum CircuitStep;
  static const std::vector<CircuitStep> sequence{
      hadamard_all, oracle_x,    cnot_a_to_x, oracle_x, cnot_b_to_x,  oracle_x,
      cnot_a_to_x,  oracle_x,    cnot_b_to_x, hadamard_all, measure,
  };
  return sequence;
}

DyadicRatio all_zero_amplitude(const GowersCircuit& c) {
  const unsigned n = c.n();
  if (n > kMaxExactAmplitudeVariables) {
    throw RangeError(fmt::format("exact amplitude supports n <= {}, got {}", kMaxExactAmplitudeVariables, n));
  }
  const TruthTable& f = c.oracle();
  const std::uint64_t size = f.size();
  std::vector<std::int8_t> sign(size);
  for (std::uint64_t x = 0; x < size; ++x) sign[x] = f[x] ? -1 : 1;

  WideUint sum = 0;
  for (std::uint64_t a = 0; a < size; ++a) {
    std::int64_t corr = 0;
    for (std::uint64_t x = 0; x < size; ++x) corr += sign[x] * sign[x ^ a];
    sum += static_cast<WideUint>(corr * corr);
  }
  return {sum, 3 * n};
}

GowersEstimate exact_amplitude(const GowersCircuit& c) {
  return make_estimate(all_zero_amplitude(c).to_double(), EstimateMethod::exact_amplitude, 0, 0.0);
}

GowersEstimate estimate_shots_allzero(const GowersCircuit& c, std::uint64_t shots, std::uint64_t seed) {
  const double a0 = all_zero_amplitude(c).to_double();
  const std::uint64_t hits = draw_successes(shots, a0 * a0, seed);
  const double m = static_cast<double>(shots);
  const double p_hat = static_cast<double>(hits) / m;
  const double p_err = smoothed_fraction(hits, shots);
  const double slope = std::max(2.0 * std::sqrt(p_err), 1.0 / std::sqrt(m));
  const double std_error = std::sqrt(p_err * (1.0 - p_err) / m) / slope;
  return make_estimate(std::sqrt(p_hat), EstimateMethod::shots_allzero, shots, std_error);
}

double hadamard_test_zero_probability(const GowersCircuit& c) {
  return 0.5 * (1.0 + all_zero_amplitude(c).to_double());
}

GowersEstimate estimate_shots_hadamard_test(const GowersCircuit& c, std::uint64_t shots,
                                            std::uint64_t seed) {
  const std::uint64_t zeros = draw_successes(shots, hadamard_test_zero_probability(c), seed);
  const double m = static_cast<double>(shots);
  const double p_hat = static_cast<double>(zeros) / m;
  const double p_err = smoothed_fraction(zeros, shots);
  const double std_error = 2.0 * std::sqrt(p_err * (1.0 - p_err) / m);
  return make_estimate(2.0 * p_hat - 1.0, EstimateMethod::shots_hadamard_test, shots, std_error);
}

ShotBudget shot_budget(unsigned n, double epsilon, double delta) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw RangeError(fmt::format("epsilon must be positive, got {}", epsilon));
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw RangeError(fmt::format("delta must lie in (0, 1), got {}", delta));
  }
  ShotBudget b;
  b.n = n;
  b.epsilon = epsilon;
  b.delta = delta;
  const long double eps = epsilon;
  b.exact = std::log(2.0L / static_cast<long double>(delta)) / (2.0L * eps * eps) *
            std::ldexp(1.0L, static_cast<int>(4 * n));
  if (!(b.exact < 0x1p64L)) {
    throw RangeError(fmt::format("shot budget for n={} exceeds 2^64", n));
  }
  // Values that are integers up to rounding noise (e.g. ln(e^2) = 2) are not bumped up.
  const long double nearest = std::nearbyint(b.exact);
  const long double noise = 64.0L * std::numeric_limits<long double>::epsilon() * std::max(1.0L, b.exact);
  const bool integral = std::fabs(b.exact - nearest) <= noise;
  b.shots = static_cast<std::uint64_t>(integral ? nearest : std::ceil(b.exact));
  b.shots = std::max<std::uint64_t>(b.shots, 1);
  return b;
}

GateCount gate_count(unsigned n) {
  if (n < 1) throw RangeError("gate_count needs n >= 1");
  GateCount g;
  g.qubits = 3 * n;
  g.oracle_calls = 4;
  g.cnot_count = 4ULL * n;
  g.two_qubit_total = g.cnot_count + static_cast<std::uint64_t>(g.oracle_calls) * n;
  g.two_qubit_worst_case = static_cast<std::uint64_t>(n) * n;
  return g;
}

}  // namespace bentga
