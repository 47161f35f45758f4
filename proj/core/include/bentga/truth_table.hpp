#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bentga {

inline constexpr unsigned kMaxVariables = 16;

/// Bit-packed truth table of f: F_2^n -> F_2.
///
/// Entry x (an n-bit little-endian integer, bit i = variable x_{i+1}) lives in
/// bit (x % 64) of word (x / 64). Bits past 2^n in the last word are always zero.
class TruthTable {
 public:
  TruthTable() = default;

  /// All-zero function on n variables; throws RangeError unless 1 <= n <= 16.
  explicit TruthTable(unsigned n);

  static TruthTable from_bits(unsigned n, std::span<const std::uint8_t> bits);
  static TruthTable from_function(unsigned n, auto&& fn) {
    TruthTable t(n);
    for (std::uint64_t x = 0; x < t.size(); ++x) {
      if (fn(x)) t.set(x, true);
    }
    return t;
  }

  unsigned n() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << n_; }

  bool operator[](std::uint64_t x) const noexcept { return (words_[x >> 6] >> (x & 63)) & 1U; }
  void set(std::uint64_t x, bool value) noexcept;
  void flip(std::uint64_t x) noexcept { words_[x >> 6] ^= std::uint64_t{1} << (x & 63); }

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> mutable_words() noexcept { return words_; }
  /// Clears any bits beyond 2^n (call after writing words directly).
  void normalize() noexcept;

  std::uint64_t weight() const noexcept;
  std::uint64_t hamming_distance(const TruthTable& other) const;

  TruthTable& operator^=(const TruthTable& other);
  friend TruthTable operator^(TruthTable a, const TruthTable& b) { return a ^= b; }
  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  unsigned n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// `n=<k> tt=<hex>`: two hex digits per 8 entries, lowest index in the lowest bit.
std::string to_text(const TruthTable& t);
std::string to_hex(const TruthTable& t);
TruthTable from_hex(unsigned n, std::string_view hex);
/// Parses the text line produced by to_text; throws ValidationError on malformed input.
TruthTable parse_text(std::string_view line);

/// Affine function a.x + c.
TruthTable affine_function(unsigned n, std::uint64_t a, bool c);
/// Inner product x_1 x_2 + x_3 x_4 + ... on even n.
TruthTable inner_product(unsigned n);

inline bool dot(std::uint64_t u, std::uint64_t x) noexcept { return __builtin_parityll(u & x) != 0; }

}  // namespace bentga
