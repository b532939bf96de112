#include "doctest.h"
#include "oracle.hpp"

#include "rescomp/core.hpp"

using namespace rescomp;

TEST_SUITE("core") {

TEST_CASE("validate rejects bad specs") {
  CHECK_THROWS_AS(validate(RecurrenceSpec{0, 1, 0, +1}), std::invalid_argument);
  CHECK_THROWS_AS(validate(RecurrenceSpec{0, 1, 3, 0}), std::invalid_argument);
  CHECK_THROWS_AS(validate(RecurrenceSpec{0, 1, 3, 2}), std::invalid_argument);
  CHECK_NOTHROW(validate(RecurrenceSpec{0, 1, -3, -1}));
}

TEST_CASE("modular helpers normalize negatives") {
  CHECK(mod_norm(-1, 7) == 6);
  CHECK(mod_norm(-14, 7) == 0);
  CHECK(mod_norm(13, 7) == 6);
  CHECK(mul_mod(-3, 5, 7) == -15 % 7);  // raw signed remainder
  CHECK(mod_norm(mul_mod(-3, 5, 7), 7) == 6);
  const i64 big = (i64{1} << 61) - 1;
  CHECK(mul_mod(big, big, big + 2) == oracle::mulm(big, big, big + 2));
}

TEST_CASE("generate matches the naive oracle") {
  for (i64 q : {-4LL, -1LL, 1LL, 3LL, 6LL})
    for (int sign : {+1, -1})
      for (i64 m : {2LL, 9LL, 30LL, 101LL}) {
        auto got = generate(RecurrenceSpec{2, 7, q, sign}, m, 60);
        auto want = oracle::sequence(2, 7, q, sign, m, 60);
        REQUIRE(got.size() == want.size());
        CHECK(got == want);
      }
}

TEST_CASE("trivial seed detection follows the modulus") {
  CHECK(is_trivial_seed(RecurrenceSpec{0, 0, 1, +1}, 5));
  CHECK(is_trivial_seed(RecurrenceSpec{10, 15, 1, +1}, 5));
  CHECK_FALSE(is_trivial_seed(RecurrenceSpec{10, 15, 1, +1}, 4));
  CHECK_THROWS_AS(find_period(RecurrenceSpec{7, 7, 3, +1}, 7), TrivialSeedError);
}

TEST_CASE("find_period returns the canonical cycle") {
  Period p = find_period(RecurrenceSpec{0, 1, 1, +1}, 4);
  CHECK(p.length == 6);
  CHECK(p.residues == std::vector<i64>{0, 1, 1, 2, 3, 1});

  // length and content agree with the oracle on a grid
  for (i64 q : {1LL, 2LL, 3LL, 5LL})
    for (int sign : {+1, -1})
      for (i64 m : {2LL, 7LL, 12LL, 49LL, 128LL}) {
        Period lib = find_period(RecurrenceSpec{1, 4, q, sign}, m);
        auto ref = oracle::period(1, 4, q, sign, m);
        CHECK(lib.length == static_cast<i64>(ref.size()));
        CHECK(lib.residues == oracle::min_rotation(ref));
      }
}

TEST_CASE("canonical rotation is the least rotation") {
  const std::vector<std::vector<i64>> samples = {
      {3, 1, 2}, {1, 1, 1}, {5}, {2, 1, 2, 1, 1}, {0, 9, 0, 0, 9}, {7, 7, 1, 7, 7, 1}};
  for (const auto& v : samples) {
    CHECK(canonical_rotation(v) == oracle::min_rotation(v));
    // invariance under pre-rotation
    for (std::size_t s = 0; s < v.size(); ++s) {
      std::vector<i64> rot(v.begin() + static_cast<long>(s), v.end());
      rot.insert(rot.end(), v.begin(), v.begin() + static_cast<long>(s));
      CHECK(canonical_rotation(rot) == canonical_rotation(v));
    }
  }
}

TEST_CASE("companion matrix and powers") {
  Mat2 sigma = companion_matrix(RecurrenceSpec{0, 1, 3, +1}, 5);
  CHECK(sigma.e == std::array<i64, 4>{3, 1, 1, 0});
  Mat2 tau = companion_matrix(RecurrenceSpec{0, 1, 3, -1}, 5);
  CHECK(tau.e == std::array<i64, 4>{3, 1, 4, 0});

  CHECK(companion_power(RecurrenceSpec{0, 1, 1, +1}, 0, 9).is_identity());
  // powers of the +1 matrix carry consecutive sequence values
  Mat2 p10 = companion_power(RecurrenceSpec{0, 1, 1, +1}, 10, 100);
  CHECK(p10.e == std::array<i64, 4>{89, 55, 55, 34});

  // row-state transport: (w_{n+1}, w_n) = (b, a) * M^n
  for (int sign : {+1, -1})
    for (i64 m : {7LL, 36LL}) {
      RecurrenceSpec spec{3, 4, 5, sign};
      auto w = generate(spec, m, 30);
      for (unsigned long long n : {1ULL, 7ULL, 28ULL}) {
        Mat2 pw = companion_power(spec, n, m);
        CHECK(mod_norm(mul_mod(4, pw.e[0], m) + mul_mod(3, pw.e[2], m), m) == w[n + 1]);
        CHECK(mod_norm(mul_mod(4, pw.e[1], m) + mul_mod(3, pw.e[3], m), m) == w[n]);
      }
    }
}

TEST_CASE("invariant reduction and unit detection") {
  Invariant inv = invariant_of(RecurrenceSpec{0, 1, 1, +1}, 7);
  CHECK(inv.raw == -1);
  CHECK(inv.reduced_class == std::array<i64, 2>{6, 1});
  CHECK(inv.gcd_with_modulus == 1);

  inv = invariant_of(RecurrenceSpec{2, 2, 1, +1}, 6);  // 4 + 4 - 4 = 4
  CHECK(inv.raw == 4);
  CHECK(inv.reduced_class == std::array<i64, 2>{4, 2});
  CHECK(inv.gcd_with_modulus == 2);

  inv = invariant_of(RecurrenceSpec{0, 5, 3, +1}, 5);  // -25
  CHECK(inv.gcd_with_modulus == 5);

  CHECK(to_string_i128(inv.raw) == "-25");
  CHECK(to_string_i128(0) == "0");
}

TEST_CASE("invariant alternates along the sequence") {
  for (i64 q : {1LL, 4LL})
    for (int sign : {+1, -1})
      for (i64 m : {9LL, 11LL, 16LL}) {
        RecurrenceSpec spec{1, 5, q, sign};
        auto w = generate(spec, m, 30);
        const i64 raw = invariant_of(spec, m).reduced_class[0];
        for (std::size_t n = 0; n + 2 < w.size(); ++n) {
          i64 lhs = mod_norm(mul_mod(w[n + 2], w[n], m) - mul_mod(w[n + 1], w[n + 1], m), m);
          i64 rhs = (sign > 0 && n % 2 == 1) ? mod_norm(-raw, m) : raw;
          CHECK(lhs == rhs);
        }
      }
}

}  // TEST_SUITE
