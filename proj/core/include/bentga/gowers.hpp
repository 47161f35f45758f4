#pragma once

#include <cstdint>

#include "bentga/truth_table.hpp"
#include "bentga/walsh.hpp"

namespace bentga {

__extension__ typedef unsigned __int128 WideUint;

/// numerator / 2^log2_denominator, compared exactly.
struct DyadicRatio {
  WideUint numerator = 0;
  unsigned log2_denominator = 0;

  double to_double() const;
  friend bool operator==(const DyadicRatio& a, const DyadicRatio& b);
};

/// The pair (||f||_U2^4, ||f||_U2). `exact` keeps the integer form of u4 so bentness
/// checks never go through floating point.
struct GowersValue {
  double u4 = 1.0;
  double norm = 1.0;
  DyadicRatio exact;

  static GowersValue from_exact(DyadicRatio r);
};

/// u4 = 2^(-4n) sum_u W(u)^4, accumulated in 128-bit integers. Throws RangeError for n > 16.
GowersValue gowers_u2_from_spectrum(const WalshSpectrum& w);

/// WHT route: walsh_hadamard followed by gowers_u2_from_spectrum.
GowersValue gowers_u2(const TruthTable& f);

/// Literal 2^(-3n) sum_{x,a,b} (-1)^(D_{a,b} f(x)). O(8^n); throws RangeError for n > 8.
GowersValue gowers_u2_bruteforce(const TruthTable& f);

/// 2^(-n), the minimum of u4 (attained exactly by bent functions).
double bent_threshold_u4(unsigned n);
/// 2^(-n/4), the minimum of the norm.
double bent_threshold_norm(unsigned n);

}  // namespace bentga
