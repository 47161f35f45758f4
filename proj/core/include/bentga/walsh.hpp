#pragma once

#include <cstdint>
#include <vector>

#include "bentga/truth_table.hpp"

namespace bentga {

/// W_f(u) = sum_x (-1)^(f(x) + u.x) for every u in F_2^n.
struct WalshSpectrum {
  unsigned n = 0;
  std::vector<std::int32_t> coeffs;

  std::int32_t operator[](std::uint64_t u) const { return coeffs[u]; }
  std::int32_t max_abs() const;
  std::int32_t min_value() const;
  std::int32_t max_value() const;
  /// Sum of W(u)^2; equals 2^(2n) for every valid spectrum.
  std::uint64_t energy() const;
};

/// In-place butterfly, n * 2^n additions.
WalshSpectrum walsh_hadamard(const TruthTable& f);

}  // namespace bentga
