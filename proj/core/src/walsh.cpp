#include "bentga/walsh.hpp"

#include <algorithm>
#include <cstdlib>

namespace bentga {

WalshSpectrum walsh_hadamard(const TruthTable& f) {
  WalshSpectrum w;
  w.n = f.n();
  const std::uint64_t size = f.size();
  w.coeffs.resize(size);
  for (std::uint64_t x = 0; x < size; ++x) w.coeffs[x] = f[x] ? -1 : 1;

  auto* data = w.coeffs.data();
  for (std::uint64_t half = 1; half < size; half <<= 1) {
    for (std::uint64_t block = 0; block < size; block += 2 * half) {
      for (std::uint64_t i = block; i < block + half; ++i) {
        const std::int32_t a = data[i];
        const std::int32_t b = data[i + half];
        data[i] = a + b;
        data[i + half] = a - b;
      }
    }
  }
  return w;
}

std::int32_t WalshSpectrum::max_abs() const {
  std::int32_t m = 0;
  for (auto c : coeffs) m = std::max(m, std::abs(c));
  return m;
}

std::int32_t WalshSpectrum::min_value() const { return *std::min_element(coeffs.begin(), coeffs.end()); }

std::int32_t WalshSpectrum::max_value() const { return *std::max_element(coeffs.begin(), coeffs.end()); }

std::uint64_t WalshSpectrum::energy() const {
  std::uint64_t s = 0;
  for (auto c : coeffs) {
    const auto v = static_cast<std::int64_t>(c);
    s += static_cast<std::uint64_t>(v * v);
  }
  return s;
}

}  // namespace bentga
