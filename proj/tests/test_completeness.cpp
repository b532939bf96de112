#include "doctest.h"
#include "oracle.hpp"

#include "rescomp/completeness.hpp"
#include "rescomp/core.hpp"
#include "rescomp/factor.hpp"

#include <numeric>

using namespace rescomp;

TEST_SUITE("completeness") {

TEST_CASE("frozen verdicts for the q=1 seed (0,1)") {
  RecurrenceSpec fib{0, 1, 1, +1};
  for (i64 m : {2LL, 3LL, 4LL, 5LL, 6LL, 7LL, 9LL, 10LL, 14LL, 20LL, 27LL})
    CHECK(complete_modulo(fib, m));
  for (i64 m : {8LL, 11LL, 12LL, 13LL, 16LL, 18LL, 21LL, 22LL})
    CHECK_FALSE(complete_modulo(fib, m));
}

TEST_CASE("frozen verdicts for the q=3 seed (0,1)") {
  RecurrenceSpec spec{0, 1, 3, +1};
  for (i64 m : {2LL, 4LL, 5LL, 7LL, 13LL, 14LL, 25LL, 26LL, 52LL, 65LL})
    CHECK(complete_modulo(spec, m));
  for (i64 m : {3LL, 8LL, 10LL, 28LL, 35LL, 6LL, 9LL})
    CHECK_FALSE(complete_modulo(spec, m));
}

TEST_CASE("report fields are mutually consistent and match the oracle") {
  RecurrenceSpec fib{0, 1, 1, +1};
  CompletenessReport rep = completeness_report(fib, 8);
  CHECK(rep.period_length == 12);
  CHECK_FALSE(rep.complete);
  CHECK(rep.missing == std::vector<i64>{4, 6});
  CHECK(std::accumulate(rep.histogram.begin(), rep.histogram.end(), i64{0}) == 12);

  rep = completeness_report(fib, 5);
  CHECK(rep.complete);
  CHECK(rep.uniform);  // every residue four times over the 20-cycle
  CHECK(rep.histogram == std::vector<i64>(5, 4));

  rep = completeness_report(fib, 4);
  CHECK(rep.complete);
  CHECK_FALSE(rep.uniform);

  for (i64 q : {1LL, 3LL, 6LL})
    for (auto [a, b] : {std::pair<i64, i64>{0, 1}, {1, 1}, {2, 2}})
      for (i64 m = 2; m <= 80; ++m) {
        RecurrenceSpec spec{a, b, q, +1};
        if (is_trivial_seed(spec, m)) continue;
        CompletenessReport r = completeness_report(spec, m);
        CHECK(r.complete == oracle::complete(a, b, q, +1, m));
        CHECK(r.uniform == oracle::uniform(a, b, q, +1, m));
        CHECK(r.histogram == oracle::histogram(a, b, q, +1, m));
      }
}

TEST_CASE("complete_modulo edge conventions") {
  CHECK(complete_modulo(RecurrenceSpec{0, 1, 1, +1}, 1));
  CHECK_FALSE(complete_modulo(RecurrenceSpec{0, 0, 1, +1}, 5));
  CHECK_FALSE(complete_modulo(RecurrenceSpec{3, 3, 2, +1}, 3));  // trivial mod 3
  CHECK_THROWS_AS(completeness_report(RecurrenceSpec{0, 0, 1, +1}, 5), TrivialSeedError);
}

TEST_CASE("candidate prime support") {
  CandidatePrimeSet c = candidate_primes(1, +1);
  CHECK(c.omega == std::vector<i64>{5});
  CHECK(c.all == std::vector<i64>{2, 3, 5, 7});

  c = candidate_primes(3, +1);
  CHECK(c.omega == std::vector<i64>{13});
  CHECK(c.all == std::vector<i64>{2, 3, 5, 7, 13});

  c = candidate_primes(2, +1);  // q^2+4 = 8
  CHECK(c.omega == std::vector<i64>{2});
  CHECK(c.all == std::vector<i64>{2, 3, 5, 7});

  CHECK_THROWS_AS(candidate_primes(2, -1), DegenerateDiscriminant);
  CHECK_THROWS_AS(candidate_primes(-2, -1), DegenerateDiscriminant);

  // every complete modulus factors over the candidate set
  for (i64 q : {1LL, 2LL, 3LL, 5LL}) {
    CandidatePrimeSet cand = candidate_primes(q, +1);
    for (i64 m = 2; m <= 400; ++m) {
      if (!complete_modulo(RecurrenceSpec{0, 1, q, +1}, m)) continue;
      for (const auto& pp : factorize(m)) {
        bool listed = false;
        for (i64 p : cand.all) listed = listed || p == pp.prime;
        CHECK(listed);
      }
    }
  }
}

TEST_CASE("unit seed reduction") {
  // (2,2) q=1: orbit mod 5 passes through (0, d) states
  auto red = reduce_to_unit_seed(RecurrenceSpec{2, 2, 1, +1}, 5);
  REQUIRE(red.has_value());
  CHECK(std::gcd(red->d, i64{5}) == 1);
  CHECK(red->base.a == 0);
  CHECK(red->base.b == 1);

  // invariant 4 is not a unit mod 6, no unit state exists
  CHECK_FALSE(reduce_to_unit_seed(RecurrenceSpec{2, 2, 1, +1}, 6).has_value());

  CHECK_THROWS_AS(reduce_to_unit_seed(RecurrenceSpec{0, 0, 1, +1}, 4), TrivialSeedError);
}

TEST_CASE("shared prime lift: q=3, p=13") {
  RecurrenceSpec spec{0, 1, 3, +1};
  LiftVerdict v = lift_shared_prime(spec, 13, 13);
  CHECK(v.applicable);
  CHECK(v.concluded_complete);
  CHECK(v.k_m == 52);
  CHECK(v.k_pm == 676);
  CHECK(v.brute_forced);
  CHECK(v.target == 169);

  // hypothesis failures are reported, not fatal
  v = lift_shared_prime(spec, 13, 5);  // 13 does not divide 5
  CHECK_FALSE(v.applicable);
  CHECK(v.failed_hypothesis == "p divides m");
  v = lift_shared_prime(spec, 2, 4);
  CHECK_FALSE(v.applicable);
  CHECK(v.failed_hypothesis == "p is odd");
  v = lift_shared_prime(spec, 5, 5);  // 5 does not divide 13
  CHECK_FALSE(v.applicable);
  CHECK(v.failed_hypothesis == "p divides q^2+4");
}

TEST_CASE("coprime prime lift: q=3, p=13 onto m=5 and m=4") {
  RecurrenceSpec spec{0, 1, 3, +1};
  LiftVerdict v = lift_coprime_prime(spec, 13, 5);
  CHECK(v.applicable);
  CHECK(v.concluded_complete);
  CHECK(v.k_m == 12);
  CHECK(v.k_pm == 156);
  CHECK(v.target == 65);

  v = lift_coprime_prime(spec, 13, 25);
  CHECK(v.applicable);
  CHECK(v.k_pm == 13 * v.k_m);
  CHECK(v.target == 325);

  // order law fails: k(4)=6 but k(52)=lcm(6,52)=156 != 13*6
  v = lift_coprime_prime(spec, 13, 4);
  CHECK_FALSE(v.applicable);
  CHECK(v.failed_hypothesis == "order law k(p*m) = p*k(m)");

  // same failure shape one level down: k(2)=3, k(26)=156 != 13*3
  v = lift_coprime_prime(spec, 13, 2);
  CHECK_FALSE(v.applicable);
  CHECK(v.failed_hypothesis == "order law k(p*m) = p*k(m)");
}

TEST_CASE("five power lift: q=3 and hypothesis failures") {
  RecurrenceSpec spec{0, 1, 3, +1};
  LiftVerdict v = lift_five_power(spec, 5);
  CHECK(v.applicable);
  CHECK(v.concluded_complete);
  CHECK(v.target == 25);
  v = lift_five_power(spec, 25);
  CHECK(v.applicable);
  CHECK(v.target == 125);

  v = lift_five_power(spec, 4);
  CHECK_FALSE(v.applicable);
  CHECK(v.failed_hypothesis == "5 divides m");
  v = lift_five_power(RecurrenceSpec{0, 1, 5, +1}, 5);
  CHECK_FALSE(v.applicable);
  CHECK(v.failed_hypothesis == "5 does not divide q");
  v = lift_five_power(RecurrenceSpec{0, 1, 1, +1}, 5);  // 5 | q^2+4
  CHECK_FALSE(v.applicable);
  CHECK(v.failed_hypothesis == "5 does not divide q^2+4");
  v = lift_five_power(RecurrenceSpec{2, 1, 3, +1}, 5);  // invariant 4+6-1 = 9 = 4 mod 5
  CHECK(v.rule == LiftRule::five_power);
  v = lift_five_power(RecurrenceSpec{1, 2, 3, +1}, 5);  // 1+6-4 = 3 mod 5: fails
  CHECK_FALSE(v.applicable);
  CHECK(v.failed_hypothesis == "seed invariant is +-1 mod 5");
}

TEST_CASE("prime power exponent rules match brute force for (0,1,q)") {
  // spot-frozen values
  CHECK(prime_power_rule(3, 2).max_exponent == 2);
  CHECK(prime_power_rule(2, 2).max_exponent == 1);
  CHECK(prime_power_rule(3, 3).max_exponent == 0);
  CHECK(prime_power_rule(4, 3).max_exponent == 1);   // 4 mod 9
  CHECK(prime_power_rule(14, 3).max_exponent == 1);  // 5 mod 9
  CHECK_FALSE(prime_power_rule(1, 3).max_exponent.has_value());
  CHECK(prime_power_rule(3, 7).max_exponent == 1);
  CHECK(prime_power_rule(5, 7).max_exponent == 0);
  CHECK(prime_power_rule(1, 5).five_route == PrimePowerRule::FiveRoute::shared_prime);
  CHECK(prime_power_rule(3, 5).five_route == PrimePowerRule::FiveRoute::five_power);
  CHECK(prime_power_rule(5, 5).five_route == PrimePowerRule::FiveRoute::brute_force);
  CHECK_THROWS_AS(prime_power_rule(3, 11), std::invalid_argument);

  for (i64 q = 1; q <= 12; ++q)
    for (i64 p : {2LL, 3LL, 7LL}) {
      PrimePowerRule rule = prime_power_rule(q, p);
      i64 pw = p;
      for (int e = 1; pw <= 2200; ++e, pw *= p) {
        bool brute = oracle::complete(0, 1, q, +1, pw);
        bool claimed = !rule.max_exponent.has_value() || e <= *rule.max_exponent;
        CHECK(brute == claimed);
      }
    }
}

TEST_CASE("stride-4 subsequences cover Z_p with the linear form") {
  SubsequenceClasses sc = subsequence_classes(1, 5);
  CHECK(sc.all_cover);
  CHECK(sc.l4_mod_p == 2);
  CHECK(sc.linear_form_holds);
  for (const auto& cls : sc.classes) CHECK(cls.size() == 5);

  sc = subsequence_classes(3, 13);
  CHECK(sc.all_cover);
  CHECK(sc.l4_mod_p == 2);
  CHECK(sc.linear_form_holds);

  CHECK_THROWS_AS(subsequence_classes(3, 5), HypothesisViolation);   // 5 nmid 13
  CHECK_THROWS_AS(subsequence_classes(2, 2), HypothesisViolation);   // p must be odd
  CHECK_THROWS_AS(subsequence_classes(3, 15), HypothesisViolation);  // not prime
}

}  // TEST_SUITE
