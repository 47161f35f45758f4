#include "bentga/cost.hpp"

#include <cmath>

#include <fmt/format.h>

#include "bentga/errors.hpp"

namespace bentga {
namespace {

void check_parameters(double epsilon, double delta) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw RangeError(fmt::format("epsilon must be positive, got {}", epsilon));
  }
  if (!(delta > 0.0 && delta < 1.0)) throw RangeError(fmt::format("delta must lie in (0, 1), got {}", delta));
}

long double to_long_double(const BigInt& v) { return v.convert_to<long double>(); }

}  // namespace

BigInt classical_cost(unsigned n) {
  if (n < 1) throw RangeError("classical_cost needs n >= 1");
  return BigInt(n) << n;
}

BigInt quantum_cost_factor(unsigned n) { return BigInt(static_cast<std::uint64_t>(n) * n) << (4 * n); }

long double quantum_cost(unsigned n, double epsilon, double delta) {
  check_parameters(epsilon, delta);
  if (n < 1) throw RangeError("quantum_cost needs n >= 1");
  const long double eps = epsilon;
  return to_long_double(quantum_cost_factor(n)) * -std::log(static_cast<long double>(delta)) / (eps * eps);
}

std::string CostReport::frontier_flags() const {
  if (memory_frontier && qubit_frontier) return "ram-frontier;qubit-frontier";
  if (memory_frontier) return "ram-frontier";
  if (qubit_frontier) return "qubit-frontier";
  return "";
}

CostReport cost_report(unsigned n, double epsilon, double delta) {
  CostReport r;
  r.n = n;
  r.epsilon = epsilon;
  r.delta = delta;
  r.t_classical = classical_cost(n);
  r.t_quantum_factor = quantum_cost_factor(n);
  r.t_quantum = quantum_cost(n, epsilon, delta);
  r.ratio = r.t_quantum / to_long_double(r.t_classical);
  r.mem_classical_bits = r.t_classical;
  r.wht_array_bits = BigInt(64) << n;
  r.qubits = 3 * n;
  return r;
}

ResourceTable resource_table(unsigned n_min, unsigned n_max, double epsilon, double delta,
                             const ResourceBudget& budget) {
  if (n_min < 1) throw RangeError("n-min must be >= 1");
  if (n_min > n_max) throw RangeError(fmt::format("empty range: n-min {} > n-max {}", n_min, n_max));
  if (budget.word_bits < 1) throw RangeError("word size must be >= 1 bit");
  check_parameters(epsilon, delta);

  ResourceTable table;
  table.budget = budget;
  for (unsigned n = n_min; n <= n_max; ++n) {
    CostReport r = cost_report(n, epsilon, delta);
    r.wht_array_bits = BigInt(budget.word_bits) << n;
    if (!table.memory_frontier && r.wht_array_bits >= budget.ram_bits) {
      table.memory_frontier = n;
      r.memory_frontier = true;
    }
    if (!table.qubit_frontier && r.qubits > budget.qubits) {
      table.qubit_frontier = n;
      r.qubit_frontier = true;
    }
    table.rows.push_back(std::move(r));
  }
  return table;
}

void write_csv(std::ostream& out, const ResourceTable& table) {
  out << "n,t_classical,t_quantum,ratio,mem_classical_bits,qubits,frontier_flags\n";
  for (const auto& r : table.rows) {
    out << fmt::format("{},{},{:.17Lg},{:.17Lg},{},{},{}\n", r.n, r.t_classical.str(), r.t_quantum, r.ratio,
                       r.mem_classical_bits.str(), r.qubits, r.frontier_flags());
  }
}

std::vector<std::string> footnotes(const ResourceTable& table) {
  std::vector<std::string> notes;
  notes.push_back("costs use unit constants in the big-O formulas (asymptotic units, not wall-clock)");
  notes.push_back(
      "t_quantum/t_classical grows with n for fixed (epsilon, delta), so the runtime formulas have no "
      "crossover; the frontiers below are feasibility limits");
  if (table.memory_frontier) {
    notes.push_back(fmt::format("ram-frontier: n={} is the first size whose {}-bit WHT array fills {} bits",
                                *table.memory_frontier, table.budget.word_bits, table.budget.ram_bits.str()));
  } else {
    notes.push_back("ram-frontier: not reached in this range");
  }
  if (table.qubit_frontier) {
    notes.push_back(fmt::format("qubit-frontier: n={} is the first size needing more than {} qubits",
                                *table.qubit_frontier, table.budget.qubits));
  } else {
    notes.push_back("qubit-frontier: not reached in this range");
  }
  return notes;
}

}  // namespace bentga
