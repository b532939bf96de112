// Multiplicative order k(m) of the companion matrix mod m, equivalently the
// period length of the seed (0,1) sequence.  Three routes:
//
//   order_direct      walk the (0,1) state orbit (ground truth, O(k))
//   order_lifted      k(p) by direct walk, then exact p-power lifting with
//                     every step certified by a companion_power identity
//   order_composite   factorize m and combine prime-power orders by lcm,
//                     which is the coprime composition law for k
//
// order_composite(m) == order_direct(m) for every m is a library invariant,
// exercised by the verification suite rather than assumed anywhere.

#pragma once

#include "rescomp/core.hpp"
#include "rescomp/factor.hpp"

#include <vector>

namespace rescomp {

struct OrderFactor {
  i64 prime = 2;
  int exponent = 1;
  i64 order = 1;  // k(prime^exponent)
};

enum class OrderMethod { direct, multiplicative, lifted };

struct OrderResult {
  i64 modulus = 1;
  i64 order = 1;
  OrderMethod method = OrderMethod::direct;
  std::vector<OrderFactor> factors;  // empty for method == direct
};

const char* to_string(OrderMethod m);

// Order by walking the (0,1) orbit.  m == 1 gives 1.
OrderResult order_direct(i64 q, int sign, i64 m);

// k(p^e) from k(p).  Each ratio k(p^{i+1})/k(p^i) is 1 or p; the step is
// decided by one matrix-power identity check, so the result is exact with
// no conjectured stabilization.  Requires p prime.
OrderResult order_lifted(i64 q, int sign, i64 p, int e);

// lcm of prime-power orders.  Throws FactorizationLimitError if m cannot
// be factorized.
OrderResult order_composite(i64 q, int sign, i64 m);

struct PeriodDivisibility {
  i64 period_length = 0;
  i64 order = 0;
  bool divides = false;  // period_length | order; equality iff unit invariant
};

// Every seed's period length divides k(m); with gcd(invariant, m) = 1 they
// are equal.  Both facts are asserted here, not just reported.
PeriodDivisibility period_length_divides(const RecurrenceSpec& spec, i64 m);

}  // namespace rescomp
