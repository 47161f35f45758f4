#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bentga {

using BigInt = boost::multiprecision::cpp_int;

// All costs are big-O formulas with unit constants ("asymptotic units"), not wall-clock.

/// T_C(n) = n 2^n.
BigInt classical_cost(unsigned n);

/// n^2 2^(4n), the integer part of T_Q.
BigInt quantum_cost_factor(unsigned n);

/// T_Q(n, eps, delta) = n^2 2^(4n) ln(1/delta) / eps^2. Throws RangeError on a bad eps or delta.
long double quantum_cost(unsigned n, double epsilon, double delta);

struct CostReport {
  unsigned n = 0;
  double epsilon = 0.0;
  double delta = 0.0;
  BigInt t_classical;
  BigInt t_quantum_factor;
  long double t_quantum = 0.0L;
  long double ratio = 0.0L;
  BigInt mem_classical_bits;  // n 2^n
  BigInt wht_array_bits;      // 2^n machine words
  unsigned qubits = 0;
  bool memory_frontier = false;
  bool qubit_frontier = false;

  std::string frontier_flags() const;
};

CostReport cost_report(unsigned n, double epsilon, double delta);

struct ResourceBudget {
  BigInt ram_bits = BigInt(1) << 36;  // 8 GiB
  unsigned qubits = 100;
  unsigned word_bits = 64;
};

struct ResourceTable {
  std::vector<CostReport> rows;
  ResourceBudget budget;
  /// Smallest n in range whose WHT array (2^n words) fills the RAM budget.
  std::optional<unsigned> memory_frontier;
  /// Smallest n in range with 3n above the logical-qubit budget.
  std::optional<unsigned> qubit_frontier;
};

/// One row per n in [n_min, n_max]. Throws RangeError on an empty range or bad parameters.
ResourceTable resource_table(unsigned n_min, unsigned n_max, double epsilon, double delta,
                             const ResourceBudget& budget = {});

/// CSV with header n,t_classical,t_quantum,ratio,mem_classical_bits,qubits,frontier_flags.
void write_csv(std::ostream& out, const ResourceTable& table);

/// Plain-text notes explaining the frontier columns.
std::vector<std::string> footnotes(const ResourceTable& table);

}  // namespace bentga
