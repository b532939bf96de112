#include "rescomp/classify.hpp"

#include "rescomp/factor.hpp"
#include "rescomp/order.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rescomp {

namespace {

constexpr i64 kModulusGuard = i64(4) * 1000 * 1000 * 1000 * 1000 * 1000;  // 4e18

bool is_pure_power_of(i64 m, i64 p) {
  while (m % p == 0) m /= p;
  return m == 1;
}

// ---------------------------------------------------------------------------
// Tail certification.  A lift prime p extends a base modulus to an
// unbounded family base*p^e because:
//   (a) the one-step completeness rule fires at the first step (all its
//       hypotheses machine-checked, target brute-forced under the ceiling);
//   (b) k(p*base) = p*k(base) pins the p-adic growth of the matrix order,
//       and for odd p growth at a level >= 2 persists to every higher
//       level (binomial expansion of sigma^k = I + p^j*A); when p does not
//       divide the base the growth seen at level 1 must be anchored by
//       k(p^2) = p*k(p) separately;
//   (c) after the first step p divides every modulus in the chain, so the
//       shared-prime rule (or the five-power rule) applies at each level
//       with completeness carried along inductively.
// Mixing certified primes is sound: multiplying by one certified prime
// never changes any other prime's valuation in the order, so each
// certified first-step comparison is unchanged along the rest of the
// family.

struct TailCertificate {
  bool ok = false;
  bool five_route = false;
  bool coprime_first = false;
  i64 k_base = 0;
  i64 k_lift = 0;
  std::string detail;
};

TailCertificate certify_tail(const RecurrenceSpec& spec, i64 p, i64 base,
                             bool five_route, i64 ceiling) {
  TailCertificate cert;
  if (static_cast<i128>(p) * base > kModulusGuard) return cert;

  LiftVerdict first;
  if (five_route) {
    if (base % 5 != 0) return cert;
    first = lift_five_power(spec, base, ceiling);
  } else if (base % p == 0) {
    first = lift_shared_prime(spec, p, base, ceiling);
  } else {
    first = lift_coprime_prime(spec, p, base, ceiling);
  }
  if (!first.applicable || !first.concluded_complete) return cert;

  std::ostringstream os;
  cert.five_route = five_route;
  cert.coprime_first = !five_route && base % p != 0;
  cert.k_base = first.k_m;
  cert.k_lift = first.k_pm;
  os << p << ": k(" << first.target << ")=" << first.k_pm << "=" << p << "*k("
     << base << ")";
  if (cert.coprime_first) {
    // Growth was observed at level 1; persistence needs it at level >= 2.
    OrderResult o1 = order_lifted(spec.q, spec.sign, p, 1);
    OrderResult o2 = order_lifted(spec.q, spec.sign, p, 2);
    if (o2.order != p * o1.order) return cert;
    os << ", anchor k(" << p << "^2)=" << p << "*k(" << p << ")"
       << ", coprime then shared route";
  } else if (five_route) {
    os << ", five-power route (invariant +-1 mod 5)";
  } else {
    os << ", shared route";
  }
  cert.detail = os.str();
  cert.ok = true;
  return cert;
}

bool descriptor_covers(const FamilyDescriptor& d, i64 m) {
  if (m <= 0 || m % d.base != 0) return false;
  i64 r = m / d.base;
  for (i64 p : d.lift_primes)
    while (r % p == 0) r /= p;
  return r == 1;
}

std::string lift_source(const RecurrenceSpec& spec, const FamilyDescriptor& home,
                        i64 m, bool five_route_active) {
  i64 r = m / home.base;
  i64 p = 0;
  for (i64 lp : home.lift_primes)
    if (r % lp == 0) p = std::max(p, lp);
  if (p == 3) return "three-power-rule";
  if (p == 5 && five_route_active) return "lift-five";
  i64 vp = 0;
  for (i64 t = m; t % p == 0; t /= p) ++vp;
  return vp >= 2 ? "lift-shared-prime" : "lift-coprime-prime";
}

std::vector<i64> sorted_divisors(i64 m) {
  std::vector<i64> divs{1};
  for (const auto& pp : factorize(m)) {
    std::size_t n = divs.size();
    i64 pw = 1;
    for (int e = 1; e <= pp.exponent; ++e) {
      pw *= pp.prime;
      for (std::size_t i = 0; i < n; ++i) divs.push_back(divs[i] * pw);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace

ClassificationResult classify(const RecurrenceSpec& spec, i64 bound,
                              const SweepOptions& opt) {
  validate(spec);
  if (spec.sign != 1)
    throw std::invalid_argument(
        "classification covers sign=+1; the sign=-1 family has closed-form rules");
  if (bound < 2) throw std::invalid_argument("bound must be >= 2");

  ClassificationResult res;
  res.spec = spec;
  res.bound = bound;

  const std::vector<char> verdicts = complete_sweep(spec, bound, opt);
  for (i64 m = 2; m <= bound; ++m)
    if (verdicts[static_cast<std::size_t>(m - 2)]) res.members.push_back(m);

  const CandidatePrimeSet cand = candidate_primes(spec.q, spec.sign);
  const bool q_odd = mod_norm(spec.q, 2) == 1;
  const i64 q7 = mod_norm(spec.q, 7);
  const i64 q9 = mod_norm(spec.q, 9);
  const bool q7_good = q7 == 1 || q7 == 3 || q7 == 4 || q7 == 6;
  const bool unit3 = invariant_of(spec, 3).gcd_with_modulus == 1;
  const bool three_lifts = spec.q % 3 != 0 && unit3 && q9 != 4 && q9 != 5;

  // Necessary conditions every complete modulus must satisfy: prime support
  // inside the candidate set, 2-exponent <= 2 (q odd) or 1 (q even),
  // 7-exponent <= 1 and only when q^2+4 is a non-residue mod 7.
  for (i64 m : res.members) {
    for (const auto& pp : factorize(m)) {
      if (!std::binary_search(cand.all.begin(), cand.all.end(), pp.prime))
        throw DisagreementError("complete modulus " + std::to_string(m) +
                                " has prime divisor " + std::to_string(pp.prime) +
                                " outside the candidate set");
      if (pp.prime == 2 && pp.exponent > (q_odd ? 2 : 1))
        throw DisagreementError("complete modulus " + std::to_string(m) +
                                " exceeds the 2-exponent cap");
      if (pp.prime == 7 && (pp.exponent > 1 || !q7_good))
        throw DisagreementError("complete modulus " + std::to_string(m) +
                                " violates the 7-power rule");
    }
  }

  // The pure 3-power rule is an if-and-only-if for every seed: complete
  // mod 3^j exactly when 3 is coprime to q and to the invariant, and
  // j == 1 or q != 4,5 mod 9.  Check it against the sweep in full.
  for (i64 pw = 3; pw <= bound; pw *= 3) {
    const int j = pw == 3 ? 1 : 2;  // only "1" vs ">1" matters
    const bool rule = spec.q % 3 != 0 && unit3 && (j == 1 || (q9 != 4 && q9 != 5));
    if (rule != (verdicts[static_cast<std::size_t>(pw - 2)] != 0))
      throw DisagreementError("3-power rule and brute force disagree at modulus " +
                              std::to_string(pw));
    if (pw > bound / 3) break;
  }

  // Liftable primes: odd primes dividing q^2+4 (shared/coprime routes), and
  // 5 through the five-power route when 5 is coprime to q*(q^2+4).
  std::vector<i64> liftable;
  for (i64 p : cand.omega)
    if (p % 2 == 1) liftable.push_back(p);
  const bool five_route_active =
      prime_power_rule(spec.q, 5).five_route == PrimePowerRule::FiveRoute::five_power;

  std::vector<std::string> sources;
  for (i64 m : res.members) {
    const FamilyDescriptor* home = nullptr;
    for (const auto& d : res.structure)
      if (descriptor_covers(d, m)) {
        home = &d;
        break;
      }
    if (home) {
      // Bases are strictly earlier members, so coverage means m is a proper
      // product of a base and its lift primes.
      sources.push_back(lift_source(spec, *home, m, five_route_active));
      continue;
    }

    const bool pure3 = spec.q % 3 != 0 && unit3 && is_pure_power_of(m, 3);

    // Fresh base: certify tails.
    FamilyDescriptor d;
    d.base = m;
    std::vector<std::string> details;
    for (i64 p : liftable) {
      TailCertificate cert = certify_tail(spec, p, m, false, kDefaultVerificationCeiling);
      if (cert.ok) {
        d.lift_primes.push_back(p);
        details.push_back(cert.detail);
      }
    }
    if (five_route_active && m % 5 == 0) {
      TailCertificate cert = certify_tail(spec, 5, m, true, kDefaultVerificationCeiling);
      if (cert.ok) {
        d.lift_primes.push_back(5);
        details.push_back(cert.detail);
      }
    }
    std::sort(d.lift_primes.begin(), d.lift_primes.end());
    std::sort(details.begin(), details.end());

    // Evidence for the base itself.
    std::string src = "bruteforce";
    if (pure3) {
      src = "three-power-rule";
    } else if ((m == 2 || m == 4) && reduce_to_unit_seed(spec, m).has_value() &&
               (q_odd || m == 2)) {
      src = "two-power-rule";
    } else if (m == 7 && q7_good && reduce_to_unit_seed(spec, m).has_value()) {
      src = "seven-power-rule";
    }
    sources.push_back(src);

    if (m == 3 && three_lifts) {
      // Pure 3-powers form their own family: the rule covers every
      // exponent but says nothing about mixed products, so the 3-tail
      // never shares a descriptor with other lift primes.
      FamilyDescriptor pure;
      pure.base = 3;
      pure.lift_primes = {3};
      std::ostringstream os;
      os << "3: pure powers, order 8*3^(n-1), unit invariant, q mod 9 = " << q9;
      pure.conditions = os.str();
      res.structure.push_back(std::move(pure));
    }
    if (!d.lift_primes.empty() || !(m == 3 && three_lifts)) {
      std::ostringstream os;
      if (details.empty()) {
        os << "isolated: no certified lift prime";
      } else {
        for (std::size_t i = 0; i < details.size(); ++i)
          os << (i ? "; " : "") << details[i];
      }
      d.conditions = os.str();
      res.structure.push_back(std::move(d));
    }
  }

  res.evidence.reserve(res.members.size());
  for (std::size_t i = 0; i < res.members.size(); ++i)
    res.evidence.push_back({res.members[i], sources[i]});

  // Cross-validation: the descriptor expansion inside [2, bound] must
  // reproduce the brute-force member list exactly.
  const std::vector<i64> expanded = expand_structure(res, bound);
  if (expanded != res.members) {
    std::set<i64> a(expanded.begin(), expanded.end());
    std::set<i64> b(res.members.begin(), res.members.end());
    i64 witness = 0;
    for (i64 x : a)
      if (!b.count(x)) {
        witness = x;
        break;
      }
    if (witness == 0)
      for (i64 x : b)
        if (!a.count(x)) {
          witness = x;
          break;
        }
    throw DisagreementError("structure expansion and brute force disagree at modulus " +
                            std::to_string(witness));
  }
  return res;
}

std::vector<i64> expand_structure(const ClassificationResult& result, i64 limit) {
  std::set<i64> out;
  for (const auto& d : result.structure) {
    if (d.base > limit) continue;
    std::vector<i64> frontier{d.base};
    out.insert(d.base);
    while (!frontier.empty()) {
      i64 m = frontier.back();
      frontier.pop_back();
      for (i64 p : d.lift_primes) {
        if (static_cast<i128>(m) * p > limit) continue;
        i64 next = m * p;
        if (out.insert(next).second) frontier.push_back(next);
      }
    }
  }
  return {out.begin(), out.end()};
}

ExplainTrace explain(const ClassificationResult& result, i64 m) {
  if (m < 1) throw std::invalid_argument("modulus must be >= 1");
  const RecurrenceSpec& spec = result.spec;
  ExplainTrace tr;
  tr.modulus = m;

  if (m == 1) {
    tr.member = false;
    tr.steps.push_back(
        "every sequence is vacuously complete mod 1; m = 1 is excluded from K by convention");
    return tr;
  }

  auto chain_from = [&](const FamilyDescriptor& d) {
    std::ostringstream os;
    os << "base " << d.base << ": brute-forced complete (full period walk)";
    tr.steps.push_back(os.str());
    i64 cur = d.base;
    i64 r = m / d.base;
    const bool five_active =
        prime_power_rule(spec.q, 5).five_route == PrimePowerRule::FiveRoute::five_power;
    for (i64 p : d.lift_primes) {
      while (r % p == 0) {
        const i64 next = cur * p;
        const i64 k_cur = order_composite(spec.q, spec.sign, cur).order;
        const i64 k_next = order_composite(spec.q, spec.sign, next).order;
        if (k_next != p * k_cur)
          throw DisagreementError("certified chain broke at modulus " +
                                  std::to_string(next));
        const char* rule = p == 3                  ? "three-power-rule"
                           : p == 5 && five_active ? "lift-five"
                           : cur % p == 0          ? "lift-shared-prime"
                                                   : "lift-coprime-prime";
        std::ostringstream step;
        step << "times " << p << " -> " << next << " (" << rule << "): k(" << next
             << ")=" << k_next << "=" << p << "*k(" << cur << ") verified";
        tr.steps.push_back(step.str());
        cur = next;
        r /= p;
      }
    }
  };

  if (m <= result.bound) {
    tr.member = std::binary_search(result.members.begin(), result.members.end(), m);
    if (tr.member) {
      const FamilyDescriptor* home = nullptr;
      for (const auto& d : result.structure)
        if (descriptor_covers(d, m)) {
          home = &d;
          break;
        }
      if (home && home->base != m) {
        chain_from(*home);
      } else {
        tr.steps.push_back("brute-forced complete (full period walk mod " +
                           std::to_string(m) + ")");
        for (const auto& ev : result.evidence)
          if (ev.modulus == m && ev.source != "bruteforce")
            tr.steps.push_back("also certified by " + ev.source);
      }
      return tr;
    }
    // Non-member: cite the smallest incomplete divisor (divisor closure)
    // or the walk itself.
    if (is_trivial_seed(spec, m)) {
      tr.steps.push_back("the seed vanishes mod " + std::to_string(m) +
                         "; the sequence is identically zero");
      return tr;
    }
    for (i64 d : sorted_divisors(m)) {
      if (d < 2) continue;
      if (!complete_modulo(spec, d)) {
        if (d == m) {
          CompletenessReport rep = completeness_report(spec, m);
          std::ostringstream os;
          os << "brute-forced incomplete: period of length " << rep.period_length
             << " misses " << rep.missing.size() << " residue(s), first";
          for (std::size_t i = 0; i < rep.missing.size() && i < 4; ++i)
            os << " " << rep.missing[i];
          tr.steps.push_back(os.str());
        } else {
          tr.steps.push_back("divisor " + std::to_string(d) +
                             " is incomplete (full period walk)");
          tr.steps.push_back("completeness is closed under divisors, so " +
                             std::to_string(m) + " cannot be complete");
        }
        return tr;
      }
    }
    throw std::logic_error("non-member with every divisor complete");
  }

  // Beyond the bound: a certified family, or an impossibility fact.
  for (const auto& d : result.structure)
    if (descriptor_covers(d, m)) {
      tr.member = true;
      chain_from(d);
      return tr;
    }

  const CandidatePrimeSet cand = candidate_primes(spec.q, spec.sign);
  const bool q_odd = mod_norm(spec.q, 2) == 1;
  const i64 q7 = mod_norm(spec.q, 7);
  const bool q7_good = q7 == 1 || q7 == 3 || q7 == 4 || q7 == 6;
  const auto factors = factorize(m);
  for (const auto& pp : factors) {
    if (!std::binary_search(cand.all.begin(), cand.all.end(), pp.prime)) {
      tr.steps.push_back("prime " + std::to_string(pp.prime) +
                         " divides m; every complete modulus has prime divisors "
                         "among the candidate set");
      return tr;
    }
    if (pp.prime == 2 && pp.exponent > (q_odd ? 2 : 1)) {
      tr.steps.push_back("the 2-exponent exceeds its cap (" +
                         std::string(q_odd ? "2 for odd q" : "1 for even q") + ")");
      return tr;
    }
    if (pp.prime == 7 && (pp.exponent > 1 || !q7_good)) {
      tr.steps.push_back("the 7-power rule forbids this modulus");
      return tr;
    }
    if (pp.prime == 3 && spec.q % 3 == 0) {
      tr.steps.push_back("3 divides q, so the sequence mod 3 alternates between "
                         "two values and no multiple of 3 is complete");
      return tr;
    }
  }
  for (i64 d : sorted_divisors(m)) {
    if (d < 2 || d > result.bound) continue;
    if (!std::binary_search(result.members.begin(), result.members.end(), d)) {
      tr.steps.push_back("divisor " + std::to_string(d) +
                         " is below the bound and incomplete; completeness is "
                         "closed under divisors");
      return tr;
    }
  }
  throw OutOfScopeError("modulus " + std::to_string(m) +
                        " exceeds the bound and matches no certified family");
}

}  // namespace rescomp
