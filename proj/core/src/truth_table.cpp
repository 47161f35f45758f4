#include "bentga/truth_table.hpp"

#include <bit>
#include <cctype>
#include <charconv>

#include <fmt/format.h>

#include "bentga/errors.hpp"

namespace bentga {
namespace {

std::size_t word_count(unsigned n) { return n >= 6 ? (std::size_t{1} << (n - 6)) : 1; }

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

}  // namespace

TruthTable::TruthTable(unsigned n) : n_(n) {
  if (n < 1 || n > kMaxVariables) {
    throw RangeError(fmt::format("truth table needs 1 <= n <= {}, got {}", kMaxVariables, n));
  }
  words_.assign(word_count(n), 0);
}

TruthTable TruthTable::from_bits(unsigned n, std::span<const std::uint8_t> bits) {
  TruthTable t(n);
  if (bits.size() != t.size()) {
    throw ValidationError(fmt::format("expected {} table entries, got {}", t.size(), bits.size()));
  }
  for (std::uint64_t x = 0; x < t.size(); ++x) {
    if (bits[x] > 1) throw ValidationError("table entries must be 0 or 1");
    t.set(x, bits[x] != 0);
  }
  return t;
}

void TruthTable::set(std::uint64_t x, bool value) noexcept {
  const std::uint64_t mask = std::uint64_t{1} << (x & 63);
  if (value) {
    words_[x >> 6] |= mask;
  } else {
    words_[x >> 6] &= ~mask;
  }
}

void TruthTable::normalize() noexcept {
  if (n_ < 6) words_[0] &= (std::uint64_t{1} << size()) - 1;
}

std::uint64_t TruthTable::weight() const noexcept {
  std::uint64_t w = 0;
  for (auto word : words_) w += static_cast<std::uint64_t>(std::popcount(word));
  return w;
}

std::uint64_t TruthTable::hamming_distance(const TruthTable& other) const {
  return (*this ^ other).weight();
}

TruthTable& TruthTable::operator^=(const TruthTable& other) {
  if (other.n_ != n_) throw ValidationError("cannot combine truth tables of different n");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

std::string to_hex(const TruthTable& t) {
  const std::uint64_t bytes = t.size() >= 8 ? t.size() / 8 : 1;
  std::string out;
  out.reserve(bytes * 2);
  for (std::uint64_t b = 0; b < bytes; ++b) {
    const auto byte = static_cast<unsigned>((t.words()[b / 8] >> ((b % 8) * 8)) & 0xFFU);
    out += fmt::format("{:02x}", byte);
  }
  return out;
}

std::string to_text(const TruthTable& t) { return fmt::format("n={} tt={}", t.n(), to_hex(t)); }

TruthTable from_hex(unsigned n, std::string_view hex) {
  TruthTable t(n);
  const std::uint64_t bytes = t.size() >= 8 ? t.size() / 8 : 1;
  if (hex.size() != bytes * 2) {
    throw ValidationError(
        fmt::format("n={} needs {} hex digits, got {}", n, bytes * 2, hex.size()));
  }
  auto words = t.mutable_words();
  for (std::uint64_t b = 0; b < bytes; ++b) {
    const int hi = hex_value(hex[2 * b]);
    const int lo = hex_value(hex[2 * b + 1]);
    if (hi < 0 || lo < 0) throw ValidationError("invalid hex digit in truth table");
    const auto byte = static_cast<std::uint64_t>(hi * 16 + lo);
    words[b / 8] |= byte << ((b % 8) * 8);
  }
  if (t.size() < 8 && (words[0] >> t.size()) != 0) {
    throw ValidationError("truth table hex sets entries beyond 2^n");
  }
  return t;
}

TruthTable parse_text(std::string_view line) {
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) {
    line.remove_suffix(1);
  }
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) {
    line.remove_prefix(1);
  }
  if (!line.starts_with("n=")) throw ValidationError("truth table text must start with 'n='");
  line.remove_prefix(2);
  unsigned n = 0;
  const auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), n);
  if (ec != std::errc{}) throw ValidationError("truth table text has a malformed n");
  line.remove_prefix(static_cast<std::size_t>(ptr - line.data()));
  if (!line.starts_with(" tt=")) throw ValidationError("truth table text must contain ' tt='");
  line.remove_prefix(4);
  if (n < 1 || n > kMaxVariables) throw ValidationError(fmt::format("unsupported n={}", n));
  return from_hex(n, line);
}

TruthTable affine_function(unsigned n, std::uint64_t a, bool c) {
  return TruthTable::from_function(n, [&](std::uint64_t x) { return dot(a, x) != c; });
}

TruthTable inner_product(unsigned n) {
  if (n % 2 != 0) throw ValidationError("inner product function needs even n");
  return TruthTable::from_function(n, [n](std::uint64_t x) {
    bool v = false;
    for (unsigned i = 0; i < n; i += 2) v ^= ((x >> i) & 1U) && ((x >> (i + 1)) & 1U);
    return v;
  });
}

}  // namespace bentga
