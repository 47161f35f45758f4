#include "bentga/gowers.hpp"

#include <cmath>
#include <vector>

#include <fmt/format.h>

#include "bentga/errors.hpp"

namespace bentga {

double DyadicRatio::to_double() const {
  return std::ldexp(static_cast<double>(numerator), -static_cast<int>(log2_denominator));
}

bool operator==(const DyadicRatio& a, const DyadicRatio& b) {
  // Both sides stay <= 2^max(k) because every ratio we build lies in [0, 1].
  if (a.log2_denominator <= b.log2_denominator) {
    return (a.numerator << (b.log2_denominator - a.log2_denominator)) == b.numerator;
  }
  return (b.numerator << (a.log2_denominator - b.log2_denominator)) == a.numerator;
}

GowersValue GowersValue::from_exact(DyadicRatio r) {
  GowersValue g;
  g.exact = r;
  g.u4 = r.to_double();
  g.norm = std::sqrt(std::sqrt(g.u4));
  return g;
}

GowersValue gowers_u2_from_spectrum(const WalshSpectrum& w) {
  if (w.n < 1 || w.n > kMaxVariables) {
    throw RangeError(fmt::format("spectrum route supports 1 <= n <= {}, got {}", kMaxVariables, w.n));
  }
  if (w.coeffs.size() != (std::uint64_t{1} << w.n)) {
    throw ValidationError("spectrum length must be 2^n");
  }
  WideUint sum = 0;
  for (auto c : w.coeffs) {
    const auto sq = static_cast<std::uint64_t>(static_cast<std::int64_t>(c) * c);
    sum += static_cast<WideUint>(sq) * sq;
  }
  return GowersValue::from_exact({sum, 4 * w.n});
}

GowersValue gowers_u2(const TruthTable& f) { return gowers_u2_from_spectrum(walsh_hadamard(f)); }

GowersValue gowers_u2_bruteforce(const TruthTable& f) {
  const unsigned n = f.n();
  if (n > 8) throw RangeError(fmt::format("brute-force Gowers sum supports n <= 8, got {}", n));
  const std::uint64_t size = f.size();
  std::vector<std::uint8_t> v(size);
  for (std::uint64_t x = 0; x < size; ++x) v[x] = f[x] ? 1 : 0;

  std::int64_t sum = 0;
  for (std::uint64_t x = 0; x < size; ++x) {
    for (std::uint64_t a = 0; a < size; ++a) {
      const std::uint8_t fx_fxa = v[x] ^ v[x ^ a];
      for (std::uint64_t b = 0; b < size; ++b) {
        const std::uint8_t d = fx_fxa ^ v[x ^ b] ^ v[x ^ a ^ b];
        sum += d ? -1 : 1;
      }
    }
  }
  return GowersValue::from_exact({static_cast<WideUint>(sum), 3 * n});
}

double bent_threshold_u4(unsigned n) { return std::ldexp(1.0, -static_cast<int>(n)); }

double bent_threshold_norm(unsigned n) { return std::pow(2.0, -static_cast<double>(n) / 4.0); }

}  // namespace bentga
