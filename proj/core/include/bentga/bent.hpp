#pragma once

#include <cstdint>
#include <span>

#include "bentga/truth_table.hpp"
#include "bentga/walsh.hpp"

namespace bentga {

/// |W_f(u)| == 2^(n/2) for every u. Throws ValidationError for odd n.
bool is_bent(const TruthTable& f);
bool is_bent(const WalshSpectrum& w);

/// Maiorana-McFarland function on n = 2m variables, f(x, y) = x . perm(y) + g(y),
/// where x is the low m bits of the index and y the high m bits.
/// `perm` must be a bijection of {0, ..., 2^m - 1}; `g` has m variables.
TruthTable mm_bent(unsigned n, std::span<const std::uint32_t> perm, const TruthTable& g);

/// Same construction with g = 0.
TruthTable mm_bent(unsigned n, std::span<const std::uint32_t> perm);

}  // namespace bentga
