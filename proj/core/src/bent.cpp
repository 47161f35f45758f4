#include "bentga/bent.hpp"

#include <cstdlib>
#include <vector>

#include <fmt/format.h>

#include "bentga/errors.hpp"

namespace bentga {
namespace {

void check_permutation(std::span<const std::uint32_t> perm, std::uint64_t expected) {
  if (perm.size() != expected) {
    throw ValidationError(
        fmt::format("permutation must have {} entries, got {}", expected, perm.size()));
  }
  std::vector<bool> seen(expected, false);
  for (auto p : perm) {
    if (p >= expected || seen[p]) throw ValidationError("permutation is not a bijection");
    seen[p] = true;
  }
}

TruthTable build_mm(unsigned n, std::span<const std::uint32_t> perm, const TruthTable* g) {
  if (n == 0 || n % 2 != 0) throw ValidationError(fmt::format("mm_bent needs even n, got {}", n));
  const unsigned m = n / 2;
  const std::uint64_t half = std::uint64_t{1} << m;
  check_permutation(perm, half);
  if (g != nullptr && g->n() != m) {
    throw ValidationError(fmt::format("g must have {} variables, got {}", m, g->n()));
  }
  return TruthTable::from_function(n, [&](std::uint64_t z) {
    const std::uint64_t x = z & (half - 1);
    const std::uint64_t y = z >> m;
    const bool gy = g != nullptr && (*g)[y];
    return dot(x, perm[y]) != gy;
  });
}

}  // namespace

bool is_bent(const WalshSpectrum& w) {
  if (w.n % 2 != 0) {
    throw ValidationError(fmt::format("bent functions exist only for even n, got n={}", w.n));
  }
  const std::int32_t flat = std::int32_t{1} << (w.n / 2);
  for (auto c : w.coeffs) {
    if (std::abs(c) != flat) return false;
  }
  return true;
}

bool is_bent(const TruthTable& f) {
  if (f.n() % 2 != 0) {
    throw ValidationError(fmt::format("bent functions exist only for even n, got n={}", f.n()));
  }
  return is_bent(walsh_hadamard(f));
}

TruthTable mm_bent(unsigned n, std::span<const std::uint32_t> perm, const TruthTable& g) {
  return build_mm(n, perm, &g);
}

TruthTable mm_bent(unsigned n, std::span<const std::uint32_t> perm) { return build_mm(n, perm, nullptr); }

}  // namespace bentga
