#include "rescomp/variant_u.hpp"

#include "rescomp/order.hpp"

#include <algorithm>
#include <numeric>

namespace rescomp {

const char* to_string(Splitting s) {
  switch (s) {
    case Splitting::split: return "split";
    case Splitting::irreducible: return "irreducible";
    case Splitting::repeated: return "repeated";
  }
  return "?";
}

namespace {

i64 pow_mod(i64 base, i64 exp, i64 m) {
  i64 acc = 1 % m;
  base = mod_norm(base, m);
  while (exp > 0) {
    if (exp & 1) acc = mul_mod(acc, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return acc;
}

}  // namespace

SplittingReport splitting_type(i64 q, i64 p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  SplittingReport rep;
  rep.p = p;
  i128 disc = static_cast<i128>(q) * q - 4;
  rep.disc_mod_p = mod_norm(static_cast<i64>(disc % p), p);
  if (p == 2) {
    // x^2 - qx + 1 mod 2 is x^2+x+1 (irreducible) for q odd, (x+1)^2 for q even.
    rep.kind = q % 2 != 0 ? Splitting::irreducible : Splitting::repeated;
    return rep;
  }
  if (rep.disc_mod_p == 0) {
    rep.kind = Splitting::repeated;
  } else {
    i64 euler = pow_mod(rep.disc_mod_p, (p - 1) / 2, p);
    rep.kind = euler == 1 ? Splitting::split : Splitting::irreducible;
  }
  return rep;
}

OrderDivisibility check_order_divisibility(const RecurrenceSpec& spec, i64 p) {
  validate(spec);
  if (spec.sign != -1)
    throw std::invalid_argument("order divisibility by splitting applies to sign=-1");
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (invariant_of(spec, p).gcd_with_modulus != 1)
    throw HypothesisViolation("seed invariant is not a unit mod " + std::to_string(p));
  OrderDivisibility out;
  out.p = p;
  out.kind = splitting_type(spec.q, p).kind;
  out.period_length = find_period(spec, p).length;
  switch (out.kind) {
    case Splitting::split: out.bound_divisor = p - 1; break;
    case Splitting::irreducible: out.bound_divisor = p + 1; break;
    case Splitting::repeated: out.bound_divisor = 0; break;
  }
  out.divides = out.bound_divisor == 0 || out.bound_divisor % out.period_length == 0;
  return out;
}

bool uniform_modulo(const RecurrenceSpec& spec, i64 m) {
  validate(spec);
  if (m < 1) throw std::invalid_argument("modulus must be >= 1");
  if (m == 1) return true;
  if (is_trivial_seed(spec, m)) return false;
  const i64 q = mod_norm(spec.q, m);
  const i64 x0 = mod_norm(spec.a, m), y0 = mod_norm(spec.b, m);
  std::vector<i64> count(static_cast<std::size_t>(m), 0);
  i64 x = x0, y = y0;
  do {
    ++count[static_cast<std::size_t>(x)];
    i64 next = mul_mod(q, y, m);
    next = spec.sign > 0 ? (next + x) % m : mod_norm(next - x, m);
    x = y;
    y = next;
  } while (x != x0 || y != y0);
  return *std::max_element(count.begin(), count.end()) ==
         *std::min_element(count.begin(), count.end());
}

namespace {

// Per-prime-power conditions.  Uniformity follows the classical criterion
// verbatim: p | q^2-4, unit invariant mod p, and for h > 1 one of p > 3,
// p = 3 with q^2 != 1 mod 9, p = 2 with q = 2 mod 4.
//
// Completeness agrees with it except where an irreducible polynomial still
// covers: at p = 2 with q odd the state walk mod 2 is the full 3-cycle over
// the nonzero pairs, so every nontrivial seed is complete mod 2 (though
// never uniformly, its histogram is 1:2) and nothing survives mod 4.  At
// p = 3 with 3 | q the recurrence collapses to u_n = -u_{n-2}, values
// {a, b, -a, -b}; that covers Z_3 exactly when one of a, b vanishes mod 3
// and the other does not, and mod 9 the 12-cycle only reaches the fiber of
// a value v when 3 does not divide its successor, which always strands at
// least four residues.  These non-uniform complete parts also break
// multiplicativity; see complete_by_rules below.
PrimePowerVerdict eval_part(const RecurrenceSpec& spec, i64 p, int h, bool for_complete) {
  PrimePowerVerdict part;
  part.p = p;
  part.h = h;
  const bool divides = (static_cast<i128>(spec.q) * spec.q - 4) % p == 0;
  const bool unit = invariant_of(spec, p).gcd_with_modulus == 1;
  const bool q_odd = mod_norm(spec.q, 2) == 1;

  if (for_complete && p == 2 && q_odd) {
    if (h == 1) {
      part.pass = unit;
      part.reason = unit ? "q odd: the nonzero states mod 2 form one covering 3-cycle"
                         : "seed vanishes mod 2";
    } else {
      part.pass = false;
      part.reason = "higher 2-powers need q = 2 mod 4";
    }
    return part;
  }
  if (for_complete && p == 3 && spec.q % 3 == 0) {
    if (h == 1) {
      const bool a_zero = mod_norm(spec.a, 3) == 0;
      const bool b_zero = mod_norm(spec.b, 3) == 0;
      part.pass = a_zero != b_zero;
      part.reason = part.pass
                        ? "3 | q: the walk mod 3 is the covering 4-cycle 0,x,0,-x"
                        : "3 | q: values mod 3 are {a, b, -a, -b}, which misses a residue";
    } else {
      part.pass = false;
      part.reason = "higher 3-powers are never complete when 3 | q";
    }
    return part;
  }
  if (!divides) {
    part.pass = false;
    part.reason = "p does not divide q^2-4";
    return part;
  }
  if (!unit) {
    part.pass = false;
    part.reason = "seed invariant is not a unit mod p";
    return part;
  }
  if (h > 1) {
    const i64 q9 = mod_norm(spec.q, 9);
    if (p == 3 && q9 * q9 % 9 == 1) {
      part.pass = false;
      part.reason = "higher 3-powers need q^2 != 1 mod 9";
      return part;
    }
    if (p == 2 && mod_norm(spec.q, 4) != 2) {
      part.pass = false;
      part.reason = "higher 2-powers need q = 2 mod 4";
      return part;
    }
  }
  part.pass = true;
  part.reason = h > 1 ? "unit invariant, higher powers allowed" : "unit invariant";
  return part;
}

RuleVerdict eval_parts(const RecurrenceSpec& spec, i64 m, bool for_complete) {
  validate(spec);
  if (spec.sign != -1)
    throw std::invalid_argument("closed-form rules apply to sign=-1");
  if (m < 1) throw std::invalid_argument("modulus must be >= 1");
  RuleVerdict v;
  v.modulus = m;
  for (const auto& pp : factorize(m)) {
    PrimePowerVerdict part = eval_part(spec, pp.prime, pp.exponent, for_complete);
    v.verdict = v.verdict && part.pass;
    v.parts.push_back(std::move(part));
  }
  return v;
}

}  // namespace

RuleVerdict complete_by_rules(const RecurrenceSpec& spec, i64 m, i64 ceiling) {
  RuleVerdict v = eval_parts(spec, m, /*for_complete=*/true);
  bool walked = false;
  // Prime-power completeness is necessary but, unlike uniformity, not quite
  // sufficient.  A covering part whose value is a pure function of the step
  // index (mod 2 with q odd: a function of n mod 3; mod 3 with 3 | q: a
  // function of n mod 4) has to synchronize with the rest of the modulus.
  // Each residue occurrence mod the rest recurs at every phase of such a
  // cycle when gcd(cycle, L) = 1 for L the period length of the rest, which
  // settles completeness (the cycle lengths 3 and 4 are coprime to each
  // other, so several free couplings compose); otherwise the phases are
  // locked and only a direct walk decides.
  if (v.verdict) {
    bool locked = false;
    auto couple = [&](i64 p, i64 cycle) {
      const i64 rest = m / p;
      if (rest == 1) return;  // nothing to synchronize with
      // All parts passed, so the invariant is a unit mod the rest and the
      // period length there equals the matrix order.
      const i64 len = order_composite(spec.q, spec.sign, rest).order;
      if (!v.note.empty()) v.note += "; ";
      if (std::gcd(len, cycle) == 1) {
        v.note += "mod-" + std::to_string(p) +
                  " cycle interleaves freely with the rest (period length " +
                  std::to_string(len) + " is coprime to " + std::to_string(cycle) + ")";
      } else {
        locked = true;
        v.note += "mod-" + std::to_string(p) + " cycle is phase-locked to the rest (gcd(" +
                  std::to_string(cycle) + ", " + std::to_string(len) + ") > 1)";
      }
    };
    // Higher powers of a locked prime never pass eval_part, so the rest is
    // exactly m / p here.
    if (mod_norm(spec.q, 2) == 1 && m % 2 == 0 && m % 4 != 0) couple(2, 3);
    if (spec.q % 3 == 0 && m % 3 == 0 && m % 9 != 0) couple(3, 4);
    if (locked) {
      if (m > ceiling)
        throw OutOfScopeError(
            "no closed form for a phase-locked covering part; modulus exceeds the ceiling");
      v.verdict = complete_modulo(spec, m);
      v.brute_forced = true;
      walked = true;
      v.note += "; decided by direct walk";
    }
  }
  if (!walked && m <= ceiling) {
    v.brute_forced = true;
    if (complete_modulo(spec, m) != v.verdict)
      throw DisagreementError("completeness rules and brute force disagree at modulus " +
                              std::to_string(m));
  }
  return v;
}

RuleVerdict uniform_by_rules(const RecurrenceSpec& spec, i64 m, i64 ceiling) {
  RuleVerdict v = eval_parts(spec, m, /*for_complete=*/false);
  if (m <= ceiling) {
    v.brute_forced = true;
    if (uniform_modulo(spec, m) != v.verdict)
      throw DisagreementError("uniformity rules and brute force disagree at modulus " +
                              std::to_string(m));
  }
  return v;
}

}  // namespace rescomp
