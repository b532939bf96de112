#include "rescomp/factor.hpp"

#include <numeric>

namespace rescomp {

std::vector<PrimePower> factorize(i64 n) {
  if (n < 1) throw std::invalid_argument("factorize expects n >= 1");
  std::vector<PrimePower> out;
  for (i64 d = 2; d <= kTrialDivisionLimit && d * d <= n; d == 2 ? d = 3 : d += 2) {
    if (n % d != 0) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.push_back({d, e});
  }
  if (n > 1) {
    // No divisor <= min(limit, sqrt(n)) remains.  If n is below limit^2 it
    // has no divisor <= sqrt(n) at all, hence is prime.
    if (n < kTrialDivisionLimit * kTrialDivisionLimit || n <= kTrialDivisionLimit) {
      out.push_back({n, 1});
    } else {
      throw FactorizationLimitError(
          "cofactor " + std::to_string(n) + " exceeds the trial division limit " +
          std::to_string(kTrialDivisionLimit));
    }
  }
  return out;
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  auto f = factorize(n);
  return f.size() == 1 && f[0].exponent == 1;
}

int valuation(i64 n, i64 p) {
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

i64 lcm_checked(i64 x, i64 y) {
  i64 g = std::gcd(x, y);
  i128 l = static_cast<i128>(x) / g * y;
  if (l > (static_cast<i128>(1) << 62))
    throw std::overflow_error("lcm exceeds 2^62");
  return static_cast<i64>(l);
}

}  // namespace rescomp
