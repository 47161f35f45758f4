#include <doctest.h>

#include <array>
#include <cmath>
#include <numeric>

#include "bentga/bent.hpp"
#include "bentga/errors.hpp"
#include "bentga/ga.hpp"
#include "bentga/gowers.hpp"
#include "bentga/walsh.hpp"
#include "oracles.hpp"

using namespace bentga;

namespace {

TruthTable and2() {
  const std::array<std::uint8_t, 4> bits{0, 0, 0, 1};
  return TruthTable::from_bits(2, bits);
}

std::vector<std::uint32_t> identity_perm(unsigned m) {
  std::vector<std::uint32_t> p(std::size_t{1} << m);
  std::iota(p.begin(), p.end(), 0U);
  return p;
}

std::vector<std::uint32_t> rotate_perm(unsigned m) {
  std::vector<std::uint32_t> p(std::size_t{1} << m);
  for (std::uint32_t y = 0; y < p.size(); ++y) p[y] = ((y << 1) | (y >> (m - 1))) & ((1U << m) - 1);
  return p;
}

}  // namespace

TEST_CASE("walsh_hadamard small cases") {
  CHECK(walsh_hadamard(TruthTable(1)).coeffs == std::vector<std::int32_t>{2, 0});
  const auto x1 = TruthTable::from_function(1, [](std::uint64_t x) { return x == 1; });
  CHECK(walsh_hadamard(x1).coeffs == std::vector<std::int32_t>{0, 2});

  const auto w = walsh_hadamard(and2());
  const auto direct = oracle::walsh_direct(and2());
  CHECK(direct == std::vector<std::int64_t>{2, 2, 2, -2});
  CHECK(w.coeffs == std::vector<std::int32_t>{2, 2, 2, -2});
}

TEST_CASE("walsh_hadamard matches the direct sum") {
  Rng rng(11);
  for (unsigned n = 1; n <= 9; ++n) {
    for (int i = 0; i < 5; ++i) {
      const auto f = random_truth_table(n, rng);
      const auto w = walsh_hadamard(f);
      const auto d = oracle::walsh_direct(f);
      REQUIRE(w.coeffs.size() == d.size());
      for (std::size_t u = 0; u < d.size(); ++u) CHECK(w.coeffs[u] == d[u]);
    }
  }
}

TEST_CASE("Parseval and parity over random tables") {
  Rng rng(12);
  for (unsigned n = 2; n <= 10; ++n) {
    for (int i = 0; i < 1000; ++i) {
      const auto w = walsh_hadamard(random_truth_table(n, rng));
      REQUIRE(w.energy() == (std::uint64_t{1} << (2 * n)));
      REQUIRE(w.max_abs() <= (1 << n));
      for (auto c : w.coeffs) REQUIRE(c % 2 == 0);
    }
  }
}

TEST_CASE("gowers values of known functions") {
  const auto g = gowers_u2(and2());
  CHECK(g.u4 == 0.25);
  CHECK(g.norm == doctest::Approx(0.70710678118654752).epsilon(1e-15));
  CHECK(gowers_u2_bruteforce(and2()).u4 == 0.25);

  for (unsigned n = 1; n <= 10; ++n) {
    CHECK(gowers_u2(TruthTable(n)).u4 == 1.0);
    CHECK(gowers_u2(TruthTable(n)).norm == 1.0);
  }
  CHECK(gowers_u2_bruteforce(TruthTable(1)).u4 == 1.0);

  const auto ip6 = gowers_u2(inner_product(6));
  CHECK(ip6.u4 == 1.0 / 64);
  CHECK(ip6.norm == doctest::Approx(std::pow(2.0, -1.5)).epsilon(1e-14));
  CHECK(std::abs(ip6.norm - 0.3536) < 5e-5);
}

TEST_CASE("GowersValue invariants") {
  Rng rng(13);
  for (unsigned n = 1; n <= 12; ++n) {
    for (int i = 0; i < 30; ++i) {
      const auto g = gowers_u2(random_truth_table(n, rng));
      CHECK(std::abs(std::pow(g.norm, 4) - g.u4) <= 1e-12 * g.u4);
      CHECK(g.u4 >= bent_threshold_u4(n) - 1e-12);
      CHECK(g.u4 <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("spectrum and brute force agree exactly on every 3-variable function") {
  for (std::uint64_t bits = 0; bits < 256; ++bits) {
    TruthTable f(3);
    f.mutable_words()[0] = bits;
    const auto fast = gowers_u2(f);
    const auto slow = gowers_u2_bruteforce(f);
    REQUIRE(fast.exact == slow.exact);
    REQUIRE(slow.exact.numerator == static_cast<WideUint>(oracle::derivative_phase_sum(f)));
    REQUIRE(fast.u4 == slow.u4);
  }
}

TEST_CASE("spectrum and brute force agree on random 6-variable functions") {
  Rng rng(14);
  for (int i = 0; i < 100; ++i) {
    const auto f = random_truth_table(6, rng);
    REQUIRE(gowers_u2(f).exact == gowers_u2_bruteforce(f).exact);
  }
}

TEST_CASE("range errors") {
  CHECK_THROWS_AS(gowers_u2_bruteforce(TruthTable(9)), RangeError);
  WalshSpectrum big;
  big.n = 17;
  CHECK_THROWS_AS(gowers_u2_from_spectrum(big), RangeError);
  WalshSpectrum ragged;
  ragged.n = 2;
  ragged.coeffs = {4, 0, 0};
  CHECK_THROWS_AS(gowers_u2_from_spectrum(ragged), ValidationError);
}

TEST_CASE("bent iff u4 hits 2^-n, all 2-variable functions") {
  int bent = 0;
  for (std::uint64_t bits = 0; bits < 16; ++bits) {
    TruthTable f(2);
    f.mutable_words()[0] = bits;
    const bool b = is_bent(f);
    const bool at_threshold = gowers_u2(f).exact == DyadicRatio{1, 2};
    CHECK(b == at_threshold);
    bent += b ? 1 : 0;
  }
  CHECK(bent == 8);
  CHECK(is_bent(and2()));
  CHECK_FALSE(is_bent(TruthTable(2)));
  CHECK_THROWS_AS(is_bent(TruthTable(3)), ValidationError);
}

TEST_CASE("affine functions maximise the norm") {
  for (unsigned n = 1; n <= 4; ++n) {
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
      for (bool c : {false, true}) CHECK(gowers_u2(affine_function(n, a, c)).u4 == 1.0);
    }
  }
}

TEST_CASE("u4 is invariant under adding an affine function") {
  Rng rng(15);
  for (unsigned n = 2; n <= 10; ++n) {
    for (int i = 0; i < 20; ++i) {
      const auto f = random_truth_table(n, rng);
      const auto shifted = f ^ affine_function(n, rng() & (f.size() - 1), (rng() & 1U) != 0);
      CHECK(gowers_u2(f).exact == gowers_u2(shifted).exact);
    }
  }
}

TEST_CASE("Maiorana-McFarland fixtures are bent") {
  const auto ip4 = mm_bent(4, identity_perm(2));
  for (std::uint64_t z = 0; z < 16; ++z) CHECK(ip4[z] == dot(z & 3U, z >> 2));
  CHECK(is_bent(ip4));

  const auto ip6 = mm_bent(6, identity_perm(3));
  CHECK(ip6.n() == 6);
  CHECK(gowers_u2(ip6).norm == doctest::Approx(0.353553390593).epsilon(1e-11));

  Rng rng(16);
  for (int i = 0; i < 10; ++i) {
    const auto g = random_truth_table(4, rng);
    const auto f = mm_bent(8, rotate_perm(4), g);
    CHECK(is_bent(f));
    CHECK(gowers_u2(f).u4 == 1.0 / 256);
  }
  CHECK(is_bent(mm_bent(2, identity_perm(1), TruthTable(1))));
}

TEST_CASE("mm_bent validation") {
  std::vector<std::uint32_t> not_bijective{0, 1, 1, 3};
  CHECK_THROWS_AS(mm_bent(4, not_bijective), ValidationError);
  std::vector<std::uint32_t> out_of_range{0, 1, 2, 4};
  CHECK_THROWS_AS(mm_bent(4, out_of_range), ValidationError);
  CHECK_THROWS_AS(mm_bent(4, identity_perm(3)), ValidationError);
  CHECK_THROWS_AS(mm_bent(5, identity_perm(2)), ValidationError);
  CHECK_THROWS_AS(mm_bent(4, identity_perm(2), TruthTable(3)), ValidationError);
}
