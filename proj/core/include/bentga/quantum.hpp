#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "bentga/gowers.hpp"
#include "bentga/truth_table.hpp"

namespace bentga {

enum class EstimateMethod { classical_wht, exact_amplitude, statevector, shots_allzero, shots_hadamard_test };

std::string_view to_string(EstimateMethod m);

/// Estimate of u4 = ||f||_U2^4. `value` is the raw estimator output; `norm` is the
/// fourth root of `value` clamped into [0, 1].
struct GowersEstimate {
  double value = 0.0;
  double norm = 0.0;
  EstimateMethod method = EstimateMethod::classical_wht;
  std::uint64_t shots = 0;
  double std_error = 0.0;
};

GowersEstimate make_estimate(double value, EstimateMethod method, std::uint64_t shots, double std_error);

/// One step of the 3n-qubit Gowers circuit. Registers are X (qubits 0..n-1),
/// A (n..2n-1) and B (2n..3n-1); a basis index is x | a << n | b << 2n.
enum class CircuitStep { hadamard_all, oracle_x, cnot_a_to_x, cnot_b_to_x, measure };

std::string_view to_string(CircuitStep s);

class GowersCircuit {
 public:
  explicit GowersCircuit(TruthTable oracle) : oracle_(std::move(oracle)) {}

  unsigned n() const noexcept { return oracle_.n(); }
  unsigned qubit_count() const noexcept { return 3 * oracle_.n(); }
  const TruthTable& oracle() const noexcept { return oracle_; }

  /// H; U_f; CNOT(A->X); U_f; CNOT(B->X); U_f; CNOT(A->X); U_f; CNOT(B->X); H; measure.
  /// The four oracle calls see x, x^a, x^a^b and x^b, and X ends back at x.
  static const std::vector<CircuitStep>& steps();

 private:
  TruthTable oracle_;
};

/// The all-zero output amplitude 2^(-3n) sum_{x,a,b} (-1)^(D_{a,b} f(x)) as an exact
/// dyadic ratio. The Hadamard sandwich collapses the sum to 2^(-3n) sum_a C(a)^2 where
/// C is the autocorrelation of (-1)^f. Throws RangeError for n > 12.
DyadicRatio all_zero_amplitude(const GowersCircuit& c);

GowersEstimate exact_amplitude(const GowersCircuit& c);

/// Shot sampling of the all-zero outcome, whose probability is a0^2. The estimate is
/// sqrt(p_hat) with a delta-method standard error.
GowersEstimate estimate_shots_allzero(const GowersCircuit& c, std::uint64_t shots, std::uint64_t seed);

/// Ancilla-controlled phase block: P(ancilla = 0) = (1 + a0) / 2, estimate 2 p_hat - 1.
/// Unbiased for a0; the raw value may fall slightly below zero.
GowersEstimate estimate_shots_hadamard_test(const GowersCircuit& c, std::uint64_t shots,
                                            std::uint64_t seed);

double hadamard_test_zero_probability(const GowersCircuit& c);

struct ShotBudget {
  unsigned n = 0;
  double epsilon = 0.0;
  double delta = 0.0;
  long double exact = 0.0L;  // ln(2/delta) / (2 epsilon^2) * 2^(4n), before rounding up
  std::uint64_t shots = 0;
};

/// Hoeffding budget M = ceil(ln(2/delta) / (2 epsilon^2) * 2^(4n)).
ShotBudget shot_budget(unsigned n, double epsilon, double delta);

struct GateCount {
  unsigned qubits = 0;
  unsigned oracle_calls = 0;
  std::uint64_t cnot_count = 0;
  /// Oracle counted as n two-qubit gates per call ("oracle-as-given").
  std::uint64_t two_qubit_total = 0;
  /// n^2, the bound for a general oracle decomposition.
  std::uint64_t two_qubit_worst_case = 0;
  std::string_view oracle_model = "oracle-as-given";
};

GateCount gate_count(unsigned n);

}  // namespace bentga
