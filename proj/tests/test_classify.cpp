#include "doctest.h"
#include "oracle.hpp"

#include "rescomp/classify.hpp"
#include "rescomp/core.hpp"

#include <algorithm>

using namespace rescomp;

namespace {

std::vector<i64> bases_of(const ClassificationResult& r) {
  std::vector<i64> out;
  for (const auto& d : r.structure) out.push_back(d.base);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("classify") {

TEST_CASE("q=2 members are 2, powers of 3, powers of 5") {
  ClassificationResult res = classify(RecurrenceSpec{0, 1, 2, +1}, 1000);
  CHECK(res.members ==
        std::vector<i64>{2, 3, 5, 9, 25, 27, 81, 125, 243, 625, 729});
  CHECK(bases_of(res) == std::vector<i64>{2, 3, 5});
  CHECK(res.evidence.size() == res.members.size());
}

TEST_CASE("constant seed (2,2) at q=2 keeps only the 3-power family") {
  ClassificationResult res = classify(RecurrenceSpec{2, 2, 2, +1}, 1000);
  CHECK(res.members == std::vector<i64>{3, 9, 27, 81, 243, 729});
  CHECK(bases_of(res) == std::vector<i64>{3});
  REQUIRE(res.structure.size() == 1);
  CHECK(res.structure[0].lift_primes == std::vector<i64>{3});
}

TEST_CASE("q=3 member set and structure") {
  ClassificationResult res = classify(RecurrenceSpec{0, 1, 3, +1}, 2000);
  CHECK(res.members == std::vector<i64>{2, 4, 5, 7, 13, 14, 25, 26, 52, 65, 91, 125,
                                        169, 182, 325, 338, 625, 676, 845, 1183, 1625});
  // every member is accounted for in evidence, in the same order
  REQUIRE(res.evidence.size() == res.members.size());
  for (std::size_t i = 0; i < res.members.size(); ++i)
    CHECK(res.evidence[i].modulus == res.members[i]);
}

TEST_CASE("members match the independent oracle") {
  for (i64 q : {-3LL, 1LL, 4LL})
    for (auto [a, b] : {std::pair<i64, i64>{0, 1}, {2, 2}}) {
      ClassificationResult res = classify(RecurrenceSpec{a, b, q, +1}, 300);
      std::vector<i64> want = oracle::complete_set(a, b, q, +1, 300);
      CHECK(res.members == want);
    }
}

TEST_CASE("expansion reproduces the sweep and extends beyond it") {
  ClassificationResult res = classify(RecurrenceSpec{0, 1, 3, +1}, 2000);
  CHECK(expand_structure(res, 2000) == res.members);
  std::vector<i64> wide = expand_structure(res, 5000);
  CHECK(std::binary_search(wide.begin(), wide.end(), 2197));   // 13^3
  CHECK(std::binary_search(wide.begin(), wide.end(), 4394));   // 2*13^3
  CHECK(std::binary_search(wide.begin(), wide.end(), 3125));   // 5^5
  CHECK(std::binary_search(wide.begin(), wide.end(), 4225));   // 25*169
  CHECK_FALSE(std::binary_search(wide.begin(), wide.end(), 2198));
}

TEST_CASE("explain inside the bound") {
  ClassificationResult res = classify(RecurrenceSpec{0, 1, 3, +1}, 2000);

  ExplainTrace t = explain(res, 52);
  CHECK(t.member);
  CHECK_FALSE(t.steps.empty());

  t = explain(res, 10);
  CHECK_FALSE(t.member);
  REQUIRE_FALSE(t.steps.empty());
  // 2 and 5 are complete, so the refutation is the walk itself
  CHECK(t.steps.front().find("incomplete") != std::string::npos);

  t = explain(res, 1);
  CHECK_FALSE(t.member);
}

TEST_CASE("explain beyond the bound walks a certified chain") {
  ClassificationResult res = classify(RecurrenceSpec{0, 1, 3, +1}, 2000);

  ExplainTrace t = explain(res, 2197);
  CHECK(t.member);
  bool has_lift = false;
  for (const auto& s : t.steps) has_lift = has_lift || s.find("lift") != std::string::npos;
  CHECK(has_lift);

  // support outside the candidate set is refutable at any size
  t = explain(res, 1999 * 1999LL);
  CHECK_FALSE(t.member);
  CHECK(t.steps.front().find("1999") != std::string::npos);

  // 2^a cap applies beyond the bound too: 2048 = 2^11
  t = explain(res, 2048);
  CHECK_FALSE(t.member);

  // a multiple of an incomplete small modulus is refuted by divisor closure
  t = explain(res, 10 * 2197);
  CHECK_FALSE(t.member);

  CHECK_THROWS_AS(explain(res, 0), std::invalid_argument);
}

TEST_CASE("explain admits when thin data cannot certify") {
  // at bound 10 the 3-power and 5-power families are separate certificates;
  // 45 = 9*5 is complete in truth but no certified chain reaches it
  ClassificationResult res = classify(RecurrenceSpec{0, 1, 1, +1}, 10);
  CHECK(res.members == std::vector<i64>{2, 3, 4, 5, 6, 7, 9, 10});
  CHECK_THROWS_AS(explain(res, 45), OutOfScopeError);
}

TEST_CASE("three-power family stays separate from mixed products: q=1") {
  // Fibonacci: 3-powers lift forever, but 3 also multiplies into 5-families
  ClassificationResult res = classify(RecurrenceSpec{0, 1, 1, +1}, 2000);
  std::vector<i64> want = oracle::complete_set(0, 1, 1, +1, 2000);
  CHECK(res.members == want);

  bool has_pure3 = false;
  for (const auto& d : res.structure)
    has_pure3 = has_pure3 || (d.base == 3 && d.lift_primes == std::vector<i64>{3});
  CHECK(has_pure3);

  std::vector<i64> wide = expand_structure(res, 7000);
  CHECK(std::binary_search(wide.begin(), wide.end(), 6561));  // 3^8
  CHECK(std::binary_search(wide.begin(), wide.end(), 6075));  // 243*25 via (45,{5}) chain
}

TEST_CASE("rejects invalid requests") {
  CHECK_THROWS_AS(classify(RecurrenceSpec{0, 1, 1, -1}, 100), std::invalid_argument);
  CHECK_THROWS_AS(classify(RecurrenceSpec{0, 1, 0, +1}, 100), std::invalid_argument);
  CHECK_THROWS_AS(classify(RecurrenceSpec{0, 1, 1, +1}, 1), std::invalid_argument);
}

}  // TEST_SUITE
