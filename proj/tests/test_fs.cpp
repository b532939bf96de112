#include "doctest.h"
#include "oracle.hpp"

#include "rescomp/core.hpp"
#include "rescomp/fs.hpp"

#include <numeric>
#include <set>

using namespace rescomp;

TEST_SUITE("fs") {

TEST_CASE("q=1, m=5: one 20-cycle and one 4-cycle") {
  FundamentalSystem fs = enumerate_fs(1, 5);
  CHECK(fs.total_terms == 24);
  REQUIRE(fs.periods.size() == 2);
  CHECK(fs.periods[0].length == 4);
  CHECK(fs.periods[0].residues == std::vector<i64>{1, 3, 4, 2});
  CHECK(fs.periods[1].length == 20);
}

TEST_CASE("term count is m^2-1 and periods partition the nonzero states") {
  for (i64 q : {1LL, 2LL, 3LL, 7LL})
    for (i64 m : {2LL, 5LL, 8LL, 9LL, 13LL}) {
      FundamentalSystem fs = enumerate_fs(q, m);
      CHECK(fs.total_terms == m * m - 1);
      i64 sum = 0;
      std::set<std::pair<i64, i64>> states;
      for (const Period& p : fs.periods) {
        sum += p.length;
        REQUIRE(p.length == static_cast<i64>(p.residues.size()));
        for (std::size_t i = 0; i < p.residues.size(); ++i) {
          auto st = std::make_pair(p.residues[i],
                                   p.residues[(i + 1) % p.residues.size()]);
          CHECK(states.insert(st).second);  // adjacent pairs never repeat
        }
      }
      CHECK(sum == fs.total_terms);
      CHECK(static_cast<i64>(states.size()) == m * m - 1);  // all nonzero states
    }
}

TEST_CASE("periods are canonical and sorted") {
  FundamentalSystem fs = enumerate_fs(2, 9);
  for (const Period& p : fs.periods)
    CHECK(p.residues == oracle::min_rotation(p.residues));
  for (std::size_t i = 1; i < fs.periods.size(); ++i) {
    const Period& x = fs.periods[i - 1];
    const Period& y = fs.periods[i];
    CHECK((x.length < y.length || (x.length == y.length && x.residues <= y.residues)));
  }
}

TEST_CASE("enumeration limits") {
  CHECK_THROWS_AS(enumerate_fs(1, kMaxFsModulus + 1), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_fs(0, 5), std::invalid_argument);
  FundamentalSystem fs = enumerate_fs(1, 1);
  CHECK(fs.total_terms == 0);
  CHECK(fs.periods.empty());
}

TEST_CASE("3-power decomposition: scaled copies plus embedded lower system") {
  for (i64 q : {1LL, 2LL, 7LL, 8LL})
    for (int n = 1; n <= 3; ++n) {
      FsDecomposition d = verify_fs_decomposition_pow3(q, n);
      CHECK(d.holds);
      CHECK(d.distinct);
      CHECK(d.counts_match);
      CHECK(d.union_matches);
      CHECK(d.unit_class_unique);
      i64 m = 1;
      for (int i = 0; i < n; ++i) m *= 3;
      CHECK(d.m == m);
      CHECK(d.total_terms == m * m - 1);
      // the embedded copy is the whole lower-level system
      CHECK(d.embedded_terms == (m / 3) * (m / 3) - 1);
      CHECK(d.scaled_terms == d.total_terms - d.embedded_terms);
    }
}

TEST_CASE("3-power decomposition hypothesis checks") {
  CHECK_THROWS_AS(verify_fs_decomposition_pow3(3, 2), HypothesisViolation);   // 3 | q
  CHECK_THROWS_AS(verify_fs_decomposition_pow3(4, 2), HypothesisViolation);   // 4 mod 9
  CHECK_THROWS_AS(verify_fs_decomposition_pow3(14, 2), HypothesisViolation);  // 5 mod 9
  CHECK_THROWS_AS(verify_fs_decomposition_pow3(1, 0), HypothesisViolation);
}

}  // TEST_SUITE
