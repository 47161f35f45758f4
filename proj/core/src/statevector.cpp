#include "bentga/statevector.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "bentga/errors.hpp"

namespace bentga {

Statevector::Statevector(unsigned qubits, std::uint64_t basis_state) : qubits_(qubits) {
  if (qubits < 1 || qubits > kMaxStatevectorQubits) {
    throw RangeError(fmt::format("statevector supports 1..{} qubits, got {}", kMaxStatevectorQubits, qubits));
  }
  amps_.assign(std::size_t{1} << qubits, Amplitude{0.0, 0.0});
  if (basis_state >= amps_.size()) throw RangeError("basis state outside the register");
  amps_[basis_state] = 1.0;
}

void Statevector::hadamard(unsigned q) {
  const std::uint64_t bit = std::uint64_t{1} << q;
  const double s = 1.0 / std::numbers::sqrt2;
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    if (i & bit) continue;
    const Amplitude a = amps_[i];
    const Amplitude b = amps_[i | bit];
    amps_[i] = s * (a + b);
    amps_[i | bit] = s * (a - b);
  }
}

void Statevector::cnot(unsigned control, unsigned target) {
  const std::uint64_t cbit = std::uint64_t{1} << control;
  const std::uint64_t tbit = std::uint64_t{1} << target;
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    if ((i & cbit) && !(i & tbit)) std::swap(amps_[i], amps_[i | tbit]);
  }
}

void Statevector::phase_oracle(const TruthTable& f, unsigned offset) {
  const std::uint64_t mask = f.size() - 1;
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    if (f[(i >> offset) & mask]) amps_[i] = -amps_[i];
  }
}

double Statevector::norm_squared() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return s;
}

std::vector<Statevector::Amplitude> statevector_run(const GowersCircuit& c, const StatevectorOptions& options) {
  const unsigned n = c.n();
  if (c.qubit_count() > kMaxStatevectorQubits) {
    throw RangeError(fmt::format("statevector run needs 3n <= {}, got n={}", kMaxStatevectorQubits, n));
  }
  const unsigned x0 = 0;
  const unsigned a0 = n;
  const unsigned b0 = 2 * n;
  const bool probe = options.probe_x.has_value();
  if (probe && *options.probe_x >= c.oracle().size()) throw RangeError("probe state outside the X register");

  Statevector psi(c.qubit_count(), probe ? *options.probe_x : 0);
  auto fan = [&](unsigned control_offset) {
    for (unsigned i = 0; i < n; ++i) psi.cnot(control_offset + i, x0 + i);
  };

  for (CircuitStep step : GowersCircuit::steps()) {
    switch (step) {
      case CircuitStep::hadamard_all:
        for (unsigned q = probe ? n : 0; q < 3 * n; ++q) psi.hadamard(q);
        break;
      case CircuitStep::oracle_x: psi.phase_oracle(c.oracle(), x0); break;
      case CircuitStep::cnot_a_to_x: fan(a0); break;
      case CircuitStep::cnot_b_to_x: fan(b0); break;
      case CircuitStep::measure: break;
    }
  }
  return std::move(psi).release();
}

GowersEstimate statevector_estimate(const GowersCircuit& c) {
  const auto amps = statevector_run(c);
  return make_estimate(amps[0].real(), EstimateMethod::statevector, 0, 0.0);
}

}  // namespace bentga
