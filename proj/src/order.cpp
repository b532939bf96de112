#include "rescomp/order.hpp"

namespace rescomp {

const char* to_string(OrderMethod m) {
  switch (m) {
    case OrderMethod::direct: return "direct";
    case OrderMethod::multiplicative: return "multiplicative";
    case OrderMethod::lifted: return "lifted";
  }
  return "?";
}

OrderResult order_direct(i64 q, int sign, i64 m) {
  RecurrenceSpec unit{0, 1, q, sign};
  validate(unit);
  if (m < 1) throw std::invalid_argument("modulus must be >= 1");
  OrderResult r;
  r.modulus = m;
  r.method = OrderMethod::direct;
  if (m == 1) {
    r.order = 1;
    return r;
  }
  // The (0,1) invariant is -1, a unit mod every m, so the orbit length is
  // exactly the matrix order.
  r.order = find_period(unit, m).length;
  if (!companion_power(unit, static_cast<unsigned long long>(r.order), m).is_identity())
    throw std::logic_error("order_direct: companion power at the computed order is not I");
  return r;
}

OrderResult order_lifted(i64 q, int sign, i64 p, int e) {
  if (!is_prime(p)) throw std::invalid_argument("order_lifted expects a prime");
  if (e < 1) throw std::invalid_argument("order_lifted expects exponent >= 1");
  RecurrenceSpec unit{0, 1, q, sign};
  i64 k = order_direct(q, sign, p).order;
  i64 pw = p;
  for (int i = 2; i <= e; ++i) {
    if (pw > (i64{1} << 62) / p) throw std::overflow_error("prime power exceeds 2^62");
    pw *= p;
    // k(p^i) is a multiple of k(p^{i-1}) and divides p*k(p^{i-1}); one
    // identity check picks between the two.
    if (!companion_power(unit, static_cast<unsigned long long>(k), pw).is_identity()) {
      k *= p;
      if (!companion_power(unit, static_cast<unsigned long long>(k), pw).is_identity())
        throw std::logic_error("order_lifted: lift step failed its identity check");
    }
  }
  OrderResult r;
  r.modulus = pw;
  r.order = k;
  r.method = OrderMethod::lifted;
  r.factors.push_back({p, e, k});
  return r;
}

OrderResult order_composite(i64 q, int sign, i64 m) {
  if (m < 1) throw std::invalid_argument("modulus must be >= 1");
  OrderResult r;
  r.modulus = m;
  r.method = OrderMethod::multiplicative;
  r.order = 1;
  if (m == 1) return r;
  for (const auto& pp : factorize(m)) {
    OrderResult part = order_lifted(q, sign, pp.prime, pp.exponent);
    r.factors.push_back({pp.prime, pp.exponent, part.order});
    r.order = lcm_checked(r.order, part.order);
  }
  return r;
}

PeriodDivisibility period_length_divides(const RecurrenceSpec& spec, i64 m) {
  PeriodDivisibility out;
  out.period_length = find_period(spec, m).length;
  out.order = order_direct(spec.q, spec.sign, m).order;
  out.divides = out.order % out.period_length == 0;
  if (!out.divides)
    throw std::logic_error("period length does not divide the matrix order");
  if (invariant_of(spec, m).gcd_with_modulus == 1 && out.period_length != out.order)
    throw std::logic_error("unit invariant but period length != matrix order");
  return out;
}

}  // namespace rescomp
