// Integer factorization by trial division, plus small helpers shared by the
// order and completeness code.  Deliberately desk-scale: trial division up
// to kTrialDivisionLimit, after which a remaining cofactor below the limit
// squared is provably prime and anything bigger is refused.

#pragma once

#include "rescomp/core.hpp"

#include <utility>
#include <vector>

namespace rescomp {

inline constexpr i64 kTrialDivisionLimit = 1'000'000;

struct PrimePower {
  i64 prime = 2;
  int exponent = 1;
};

// Prime factorization of n >= 1, ascending primes.  Throws
// FactorizationLimitError if an uncertifiable cofactor survives trial
// division (composite or not provably prime above kTrialDivisionLimit^2).
std::vector<PrimePower> factorize(i64 n);

bool is_prime(i64 n);

// Multiplicity of p in n.
int valuation(i64 n, i64 p);

// lcm with overflow check (throws std::overflow_error past 2^62).
i64 lcm_checked(i64 x, i64 y);

}  // namespace rescomp
