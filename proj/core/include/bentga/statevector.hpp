#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bentga/quantum.hpp"

namespace bentga {

inline constexpr unsigned kMaxStatevectorQubits = 24;

/// Dense state vector over up to 24 qubits; qubit q is bit q of the basis index.
class Statevector {
 public:
  using Amplitude = std::complex<double>;

  explicit Statevector(unsigned qubits, std::uint64_t basis_state = 0);

  unsigned qubits() const noexcept { return qubits_; }
  std::span<const Amplitude> amplitudes() const noexcept { return amps_; }
  std::vector<Amplitude> release() && { return std::move(amps_); }

  void hadamard(unsigned q);
  void cnot(unsigned control, unsigned target);
  /// Multiplies each basis state by (-1)^f(r) where r is the `width`-bit field at `offset`.
  void phase_oracle(const TruthTable& f, unsigned offset);

  double norm_squared() const;

 private:
  unsigned qubits_;
  std::vector<Amplitude> amps_;
};

struct StatevectorOptions {
  /// Start X in |x0> and skip both Hadamard layers on X (A and B still get theirs).
  std::optional<std::uint64_t> probe_x;
};

/// Runs every gate of GowersCircuit::steps() (measurement excluded) on a dense vector of
/// dimension 2^(3n). Throws RangeError beyond 24 qubits.
std::vector<Statevector::Amplitude> statevector_run(const GowersCircuit& c,
                                                    const StatevectorOptions& options = {});

/// Amplitude at index 0 of statevector_run, packaged as an estimate.
GowersEstimate statevector_estimate(const GowersCircuit& c);

}  // namespace bentga
