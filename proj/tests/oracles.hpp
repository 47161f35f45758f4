#pragma once

// Test-only reference computations. Nothing here calls into the library's fast paths.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "bentga/truth_table.hpp"

namespace bentga::oracle {

/// W(u) = sum_x (-1)^(f(x) + popcount(u & x)), O(4^n).
inline std::vector<std::int64_t> walsh_direct(const TruthTable& f) {
  std::vector<std::int64_t> w(f.size(), 0);
  for (std::uint64_t u = 0; u < f.size(); ++u) {
    for (std::uint64_t x = 0; x < f.size(); ++x) {
      const int bit = (f[x] ? 1 : 0) ^ (__builtin_popcountll(u & x) & 1);
      w[u] += bit ? -1 : 1;
    }
  }
  return w;
}

/// sum_x,a,b (-1)^(f(x)+f(x^a)+f(x^b)+f(x^a^b)) read straight off the definition.
inline std::int64_t derivative_phase_sum(const TruthTable& f) {
  std::int64_t s = 0;
  for (std::uint64_t x = 0; x < f.size(); ++x)
    for (std::uint64_t a = 0; a < f.size(); ++a)
      for (std::uint64_t b = 0; b < f.size(); ++b)
        s += (f[x] ^ f[x ^ a] ^ f[x ^ b] ^ f[x ^ a ^ b]) ? -1 : 1;
  return s;
}

/// Non-negative decimal integer held as a digit string, supporting the two
/// operations the cost formulas need.
class Decimal {
 public:
  explicit Decimal(std::uint64_t v) {
    do {
      digits_.push_back(static_cast<char>(v % 10));
      v /= 10;
    } while (v != 0);
  }
  Decimal& times(std::uint64_t k) {
    std::uint64_t carry = 0;
    for (auto& d : digits_) {
      const std::uint64_t cur = static_cast<std::uint64_t>(d) * k + carry;
      d = static_cast<char>(cur % 10);
      carry = cur / 10;
    }
    while (carry != 0) {
      digits_.push_back(static_cast<char>(carry % 10));
      carry /= 10;
    }
    return *this;
  }
  Decimal& times_pow2(unsigned e) {
    for (unsigned i = 0; i < e; ++i) times(2);
    return *this;
  }
  std::string str() const {
    std::string s;
    for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) s.push_back(static_cast<char>('0' + *it));
    return s;
  }

 private:
  std::vector<char> digits_;  // least significant first
};

}  // namespace bentga::oracle
