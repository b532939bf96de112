// Residue completeness mod m: does one period of the sequence hit every
// residue class?  This header has the exact per-modulus report, the finite
// candidate-prime set for complete moduli, reduction of a general seed to a
// unit multiple of the (0,1) seed, the three one-step lifting rules that
// push completeness from m to p*m, per-prime exponent rules, and the
// stride-4 subsequence cover used for primes dividing q^2+4.

#pragma once

#include "rescomp/core.hpp"
#include "rescomp/factor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rescomp {

// Brute-force verification is attempted only when the target modulus is at
// or below this ceiling (the state walk costs one period, which for the
// modulus sizes involved stays near-linear in m).
inline constexpr i64 kDefaultVerificationCeiling = 1'000'000;

struct CompletenessReport {
  i64 modulus = 1;
  bool complete = false;
  i64 period_length = 0;
  std::vector<i64> histogram;       // index = residue, count within one period
  std::vector<i64> missing;         // residues with count 0, ascending
  bool uniform = false;             // all residues hit equally often
  std::array<i64, 2> invariant_class{0, 0};
  i64 gcd_invariant = 1;
};

// Exact report via one full period walk.  Throws TrivialSeedError when the
// seed vanishes mod m (use complete_modulo for sweep-friendly semantics).
CompletenessReport completeness_report(const RecurrenceSpec& spec, i64 m);

// Never throws on degenerate seeds: m == 1 is complete, a vanished seed mod
// m >= 2 is not (the sequence is identically zero).
bool complete_modulo(const RecurrenceSpec& spec, i64 m);

// ---------------------------------------------------------------------------
// Candidate primes.  A modulus with a complete sequence (sign=+1) has all
// prime divisors in {2,3,5,7} union the prime divisors of q^2+4; for
// sign=-1 the set is exactly the prime divisors of q^2-4.

struct CandidatePrimeSet {
  std::vector<i64> delta;  // fixed small primes (sign=+1 only)
  std::vector<i64> omega;  // prime divisors of q^2 + sign*4
  std::vector<i64> all;    // sorted union
};

// Throws DegenerateDiscriminant for sign=-1, q=+-2 and FactorizationLimitError
// if q^2+-4 cannot be factorized.
CandidatePrimeSet candidate_primes(i64 q, int sign);

// ---------------------------------------------------------------------------
// Seed reduction.  If the orbit of (a,b) mod m passes through a state
// (0, d) with d a unit, the whole period is d times the (0,1) period and
// analysis reduces to the unit seed.  Returns the smallest such d.

struct UnitReduction {
  i64 d = 1;                  // unit multiplier
  RecurrenceSpec base;        // (0,1,q) with the same sign
};

std::optional<UnitReduction> reduce_to_unit_seed(const RecurrenceSpec& spec, i64 m);

// ---------------------------------------------------------------------------
// One-step lifting m -> p*m.  Three rules, differing in how p relates to
// q^2+4 and m:
//
//   shared_prime    p odd, p | q^2+4 and p | m
//   coprime_prime   p odd, p | q^2+4 and gcd(p, m) = 1
//   five_power      p = 5 with 5 coprime to q*(q^2+4), 5 | m, and the seed
//                   invariant congruent to +-1 mod 5
//
// All three share the computational hypothesis k(p*m) = p*k(m) and the base
// hypothesis that the sequence is complete mod m.  A failed hypothesis
// yields applicable = false with the reason named; it is not an error.
// When the target is at or below the ceiling the conclusion is also brute
// forced, and disagreement with the rule throws DisagreementError.

enum class LiftRule { shared_prime, coprime_prime, five_power };

const char* to_string(LiftRule r);

struct LiftVerdict {
  LiftRule rule = LiftRule::shared_prime;
  i64 p = 0;
  i64 m = 0;
  i64 target = 0;  // p*m
  bool applicable = false;
  std::string failed_hypothesis;  // empty when applicable
  i64 k_m = 0;                    // k(m), when the order hypothesis was evaluated
  i64 k_pm = 0;                   // k(p*m)
  bool concluded_complete = false;
  bool brute_forced = false;      // conclusion was verified under the ceiling
};

LiftVerdict lift_shared_prime(const RecurrenceSpec& spec, i64 p, i64 m,
                              i64 ceiling = kDefaultVerificationCeiling);
LiftVerdict lift_coprime_prime(const RecurrenceSpec& spec, i64 p, i64 m,
                               i64 ceiling = kDefaultVerificationCeiling);
LiftVerdict lift_five_power(const RecurrenceSpec& spec, i64 m,
                            i64 ceiling = kDefaultVerificationCeiling);

// ---------------------------------------------------------------------------
// Exponent rules for the unit seed (0,1,q), sign=+1: how far completeness
// can extend along powers of the small fixed primes.
//
//   p=2: exponent <= 2 for q odd, <= 1 for q even
//   p=3: none when 3 | q; exponent <= 1 when q = 4,5 mod 9; otherwise every
//        exponent works
//   p=7: exponent <= 1, and only when q = 1,3,4,6 mod 7
//   p=5: delegated to lifting (shared_prime route when 5 | q^2+4, five_power
//        route when 5 is coprime to q*(q^2+4)) or to brute force when 5 | q
//
// max_exponent == nullopt means unbounded.

struct PrimePowerRule {
  i64 p = 2;
  std::optional<int> max_exponent = 0;
  enum class FiveRoute { none, shared_prime, five_power, brute_force } five_route = FiveRoute::none;
  std::string condition;  // human-readable reason
};

PrimePowerRule prime_power_rule(i64 q, i64 p);

// ---------------------------------------------------------------------------
// Stride-4 subsequences mod an odd prime p | q^2+4.  The four subsequences
// w_{4n+r} of the (0,1) and (2,q) sequences each cover all of Z_p; the
// (0,1) stride-0 class follows the linear form -2nq mod p, and the (2,q)
// sequence has its index-4 term congruent to 2.

struct SubsequenceClasses {
  i64 p = 0;
  std::array<std::vector<i64>, 4> classes;  // distinct values, ascending, per r
  bool all_cover = true;                    // every class equals Z_p
  i64 l4_mod_p = 0;                         // (2,q) sequence at index 4, mod p
  bool linear_form_holds = true;            // w_{4n} = -2nq mod p for n in [0,p)
};

// Throws HypothesisViolation unless p is an odd prime dividing q^2+4.
SubsequenceClasses subsequence_classes(i64 q, i64 p);

}  // namespace rescomp
