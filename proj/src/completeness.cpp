#include "rescomp/completeness.hpp"

#include "rescomp/order.hpp"

#include <algorithm>
#include <numeric>

namespace rescomp {

CompletenessReport completeness_report(const RecurrenceSpec& spec, i64 m) {
  Period per = find_period(spec, m);
  CompletenessReport rep;
  rep.modulus = m;
  rep.period_length = per.length;
  rep.histogram.assign(static_cast<std::size_t>(m), 0);
  for (i64 r : per.residues) ++rep.histogram[static_cast<std::size_t>(r)];
  for (i64 r = 0; r < m; ++r)
    if (rep.histogram[static_cast<std::size_t>(r)] == 0) rep.missing.push_back(r);
  rep.complete = rep.missing.empty();
  rep.uniform = rep.complete &&
                *std::max_element(rep.histogram.begin(), rep.histogram.end()) ==
                    *std::min_element(rep.histogram.begin(), rep.histogram.end());
  Invariant inv = invariant_of(spec, m);
  rep.invariant_class = inv.reduced_class;
  rep.gcd_invariant = inv.gcd_with_modulus;
  return rep;
}

bool complete_modulo(const RecurrenceSpec& spec, i64 m) {
  validate(spec);
  if (m < 1) throw std::invalid_argument("modulus must be >= 1");
  if (m == 1) return true;
  if (is_trivial_seed(spec, m)) return false;
  const i64 q = mod_norm(spec.q, m);
  const i64 x0 = mod_norm(spec.a, m), y0 = mod_norm(spec.b, m);
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  i64 left = m;
  i64 x = x0, y = y0;
  do {
    if (!seen[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = true;
      if (--left == 0) return true;
    }
    i64 next = mul_mod(q, y, m);
    next = spec.sign > 0 ? (next + x) % m : mod_norm(next - x, m);
    x = y;
    y = next;
  } while (x != x0 || y != y0);
  return false;
}

CandidatePrimeSet candidate_primes(i64 q, int sign) {
  RecurrenceSpec probe{0, 1, q, sign};
  validate(probe);
  if (sign < 0 && (q == 2 || q == -2))
    throw DegenerateDiscriminant("q^2-4 = 0 for q = " + std::to_string(q));
  i128 disc = static_cast<i128>(q) * q + (sign > 0 ? 4 : -4);
  if (disc < 0) disc = -disc;
  if (disc > kTrialDivisionLimit * kTrialDivisionLimit)
    throw FactorizationLimitError("q^2+-4 is too large to factorize");
  CandidatePrimeSet set;
  if (sign > 0) set.delta = {2, 3, 5, 7};
  for (const auto& pp : factorize(static_cast<i64>(disc))) set.omega.push_back(pp.prime);
  if (sign > 0)
    for (i64 p : set.omega)
      if (p == 3 || p == 7)
        throw std::logic_error("3 and 7 cannot divide q^2+4");
  set.all = set.delta;
  set.all.insert(set.all.end(), set.omega.begin(), set.omega.end());
  std::sort(set.all.begin(), set.all.end());
  set.all.erase(std::unique(set.all.begin(), set.all.end()), set.all.end());
  return set;
}

std::optional<UnitReduction> reduce_to_unit_seed(const RecurrenceSpec& spec, i64 m) {
  validate(spec);
  if (m < 1) throw std::invalid_argument("modulus must be >= 1");
  if (is_trivial_seed(spec, m))
    throw TrivialSeedError("seed is (0,0) mod " + std::to_string(m));
  // Scan one full orbit for states (0, d) with d a unit; linearity makes the
  // period d times the (0,1) period exactly when one exists.
  const i64 q = mod_norm(spec.q, m);
  const i64 x0 = mod_norm(spec.a, m), y0 = mod_norm(spec.b, m);
  i64 best = 0;
  i64 x = x0, y = y0;
  do {
    if (x == 0 && std::gcd(y, m) == 1 && (best == 0 || y < best)) best = y;
    i64 next = mul_mod(q, y, m);
    next = spec.sign > 0 ? (next + x) % m : mod_norm(next - x, m);
    x = y;
    y = next;
  } while (x != x0 || y != y0);
  if (best == 0) return std::nullopt;
  return UnitReduction{best, RecurrenceSpec{0, 1, spec.q, spec.sign}};
}

const char* to_string(LiftRule r) {
  switch (r) {
    case LiftRule::shared_prime: return "shared-prime";
    case LiftRule::coprime_prime: return "coprime-prime";
    case LiftRule::five_power: return "five-power";
  }
  return "?";
}

namespace {

// Hypotheses common to all three rules: the order law k(p*m) = p*k(m) and
// completeness mod m.  On success fills the verdict with the conclusion and
// brute-forces it below the ceiling.
void finish_lift(const RecurrenceSpec& spec, LiftVerdict& v, i64 ceiling) {
  OrderResult km = order_composite(spec.q, spec.sign, v.m);
  OrderResult kpm = order_composite(spec.q, spec.sign, v.target);
  v.k_m = km.order;
  v.k_pm = kpm.order;
  if (v.k_pm != v.p * v.k_m) {
    v.failed_hypothesis = "order law k(p*m) = p*k(m)";
    return;
  }
  if (!complete_modulo(spec, v.m)) {
    v.failed_hypothesis = "sequence is complete mod m";
    return;
  }
  v.applicable = true;
  v.concluded_complete = true;
  if (v.target <= ceiling) {
    v.brute_forced = true;
    if (complete_modulo(spec, v.target) != v.concluded_complete)
      throw DisagreementError("lift rule and brute force disagree at modulus " +
                              std::to_string(v.target));
  }
}

i128 disc_plus(i64 q) { return static_cast<i128>(q) * q + 4; }

}  // namespace

LiftVerdict lift_shared_prime(const RecurrenceSpec& spec, i64 p, i64 m, i64 ceiling) {
  validate(spec);
  if (spec.sign != 1) throw std::invalid_argument("lifting rules apply to sign=+1");
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  LiftVerdict v;
  v.rule = LiftRule::shared_prime;
  v.p = p;
  v.m = m;
  v.target = p * m;
  if (p == 2) {
    v.failed_hypothesis = "p is odd";
    return v;
  }
  if (disc_plus(spec.q) % p != 0) {
    v.failed_hypothesis = "p divides q^2+4";
    return v;
  }
  if (m % p != 0) {
    v.failed_hypothesis = "p divides m";
    return v;
  }
  finish_lift(spec, v, ceiling);
  return v;
}

LiftVerdict lift_coprime_prime(const RecurrenceSpec& spec, i64 p, i64 m, i64 ceiling) {
  validate(spec);
  if (spec.sign != 1) throw std::invalid_argument("lifting rules apply to sign=+1");
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  LiftVerdict v;
  v.rule = LiftRule::coprime_prime;
  v.p = p;
  v.m = m;
  v.target = p * m;
  if (p == 2) {
    v.failed_hypothesis = "p is odd";
    return v;
  }
  if (disc_plus(spec.q) % p != 0) {
    v.failed_hypothesis = "p divides q^2+4";
    return v;
  }
  if (m % p == 0) {
    v.failed_hypothesis = "gcd(p, m) = 1";
    return v;
  }
  finish_lift(spec, v, ceiling);
  return v;
}

LiftVerdict lift_five_power(const RecurrenceSpec& spec, i64 m, i64 ceiling) {
  validate(spec);
  if (spec.sign != 1) throw std::invalid_argument("lifting rules apply to sign=+1");
  LiftVerdict v;
  v.rule = LiftRule::five_power;
  v.p = 5;
  v.m = m;
  v.target = 5 * m;
  if (spec.q % 5 == 0) {
    v.failed_hypothesis = "5 does not divide q";
    return v;
  }
  if (disc_plus(spec.q) % 5 == 0) {
    v.failed_hypothesis = "5 does not divide q^2+4";
    return v;
  }
  if (m % 5 != 0) {
    v.failed_hypothesis = "5 divides m";
    return v;
  }
  i64 inv5 = invariant_of(spec, 5).reduced_class[0];
  if (inv5 != 1 && inv5 != 4) {
    v.failed_hypothesis = "seed invariant is +-1 mod 5";
    return v;
  }
  finish_lift(spec, v, ceiling);
  return v;
}

PrimePowerRule prime_power_rule(i64 q, i64 p) {
  if (q == 0) throw std::invalid_argument("q must be nonzero");
  PrimePowerRule rule;
  rule.p = p;
  switch (p) {
    case 2:
      if (q % 2 != 0) {
        rule.max_exponent = 2;
        rule.condition = "q odd: complete mod 2 and 4, never mod 8";
      } else {
        rule.max_exponent = 1;
        rule.condition = "q even: complete mod 2 only";
      }
      return rule;
    case 3: {
      i64 q9 = mod_norm(q, 9);
      if (q % 3 == 0) {
        rule.max_exponent = 0;
        rule.condition = "3 | q: never complete mod 3";
      } else if (q9 == 4 || q9 == 5) {
        rule.max_exponent = 1;
        rule.condition = "q = 4,5 mod 9: complete mod 3 only";
      } else {
        rule.max_exponent = std::nullopt;
        rule.condition = "gcd(q,3)=1, q != 4,5 mod 9: complete mod every 3^n";
      }
      return rule;
    }
    case 5: {
      rule.max_exponent = std::nullopt;
      if (q % 5 == 0) {
        rule.five_route = PrimePowerRule::FiveRoute::brute_force;
        rule.condition = "5 | q: decided by brute force over small exponents";
      } else if (disc_plus(q) % 5 == 0) {
        rule.five_route = PrimePowerRule::FiveRoute::shared_prime;
        rule.condition = "5 | q^2+4: lift along the shared-prime rule";
      } else {
        rule.five_route = PrimePowerRule::FiveRoute::five_power;
        rule.condition = "5 coprime to q(q^2+4): lift along the five-power rule";
      }
      return rule;
    }
    case 7: {
      i64 q7 = mod_norm(q, 7);
      if (q7 == 1 || q7 == 3 || q7 == 4 || q7 == 6) {
        rule.max_exponent = 1;
        rule.condition = "q = 1,3,4,6 mod 7: complete mod 7 only";
      } else {
        rule.max_exponent = 0;
        rule.condition = "q = 0,2,5 mod 7: never complete mod 7";
      }
      return rule;
    }
    default:
      throw std::invalid_argument("exponent rules cover p in {2,3,5,7}");
  }
}

SubsequenceClasses subsequence_classes(i64 q, i64 p) {
  if (!is_prime(p) || p == 2)
    throw HypothesisViolation("p must be an odd prime");
  if (disc_plus(q) % p != 0)
    throw HypothesisViolation(std::to_string(p) + " does not divide q^2+4");
  SubsequenceClasses out;
  out.p = p;
  const std::size_t need = static_cast<std::size_t>(4 * p + 4);
  std::vector<i64> f = generate(RecurrenceSpec{0, 1, q, +1}, p, need);
  std::vector<i64> l = generate(RecurrenceSpec{2, q, q, +1}, p, 5);
  out.l4_mod_p = l[4];
  for (int r = 0; r < 4; ++r) {
    std::vector<i64> vals;
    vals.reserve(static_cast<std::size_t>(p));
    for (i64 n = 0; n < p; ++n) vals.push_back(f[static_cast<std::size_t>(4 * n + r)]);
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    if (static_cast<i64>(vals.size()) != p) out.all_cover = false;
    out.classes[static_cast<std::size_t>(r)] = std::move(vals);
  }
  for (i64 n = 0; n < p; ++n)
    if (f[static_cast<std::size_t>(4 * n)] != mod_norm(-2 * n * q, p)) {
      out.linear_form_holds = false;
      break;
    }
  return out;
}

}  // namespace rescomp
