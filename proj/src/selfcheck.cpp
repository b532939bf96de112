#include "rescomp/selfcheck.hpp"

#include "rescomp/classify.hpp"
#include "rescomp/completeness.hpp"
#include "rescomp/core.hpp"
#include "rescomp/factor.hpp"
#include "rescomp/fs.hpp"
#include "rescomp/order.hpp"
#include "rescomp/variant_u.hpp"

#include <functional>
#include <numeric>
#include <sstream>

namespace rescomp {

namespace {

std::string witness(const char* what, i64 a, i64 b, i64 q, int sign, i64 m) {
  std::ostringstream os;
  os << what << " at seed (" << a << "," << b << ") q=" << q
     << " sign=" << (sign > 0 ? "+1" : "-1") << " m=" << m;
  return os.str();
}

std::string check_invariant_identity() {
  for (i64 q : {-3LL, -1LL, 1LL, 2LL, 3LL, 5LL})
    for (int sign : {+1, -1})
      for (auto [a, b] : {std::pair<i64, i64>{0, 1}, {1, 1}, {2, 2}, {3, 5}})
        for (i64 m : {7LL, 12LL, 25LL}) {
          RecurrenceSpec spec{a, b, q, sign};
          auto w = generate(spec, m, 40);
          const i64 raw = invariant_of(spec, m).reduced_class[0];
          for (std::size_t n = 0; n + 2 < w.size(); ++n) {
            i64 lhs = mod_norm(mul_mod(w[n + 2], w[n], m) - mul_mod(w[n + 1], w[n + 1], m), m);
            i64 rhs = raw;
            // (-sign)^n flips the class on odd n for sign=+1 and on no n
            // for sign=-1 (where -sign = +1).
            if (sign > 0 && n % 2 == 1) rhs = mod_norm(-rhs, m);
            if (lhs != rhs) return witness("invariant identity broke", a, b, q, sign, m);
          }
        }
  return {};
}

std::string check_canonical_rotation() {
  const std::vector<std::vector<i64>> samples = {
      {0, 1, 3, 10, 7}, {2, 2, 2}, {5}, {1, 0, 1, 0, 0}, {9, 9, 1, 9, 9, 1}};
  for (const auto& v : samples) {
    auto canon = canonical_rotation(v);
    // minimal among all rotations, and rotation-invariant
    std::vector<i64> best = v;
    for (std::size_t s = 0; s < v.size(); ++s) {
      std::vector<i64> rot(v.begin() + static_cast<long>(s), v.end());
      rot.insert(rot.end(), v.begin(), v.begin() + static_cast<long>(s));
      if (rot < best) best = rot;
      if (canonical_rotation(rot) != canon) return "rotation changed the canonical form";
    }
    if (canon != best) return "canonical form is not the least rotation";
  }
  return {};
}

std::string check_period_orbit_invariance() {
  for (i64 q : {1LL, 2LL, 3LL})
    for (i64 m : {5LL, 13LL, 20LL}) {
      RecurrenceSpec spec{0, 1, q, +1};
      Period p0 = find_period(spec, m);
      auto w = generate(spec, m, 6);
      RecurrenceSpec shifted{w[4], w[5], q, +1};
      if (find_period(shifted, m).residues != p0.residues)
        return witness("shifted seed left its own period", w[4], w[5], q, +1, m);
    }
  return {};
}

std::string check_companion_power() {
  for (i64 q : {1LL, 3LL, 6LL})
    for (int sign : {+1, -1})
      for (i64 m : {4LL, 9LL, 26LL}) {
        RecurrenceSpec spec{2, 5, q, sign};
        auto w = generate(spec, m, 34);
        for (unsigned long long n : {0ULL, 1ULL, 5ULL, 13ULL, 32ULL}) {
          Mat2 pw = companion_power(spec, n, m);
          // row state (w_{n+1}, w_n) = (w_1, w_0) * sigma^n
          i64 hi = mod_norm(mul_mod(spec.b, pw.e[0], m) + mul_mod(spec.a, pw.e[2], m), m);
          i64 lo = mod_norm(mul_mod(spec.b, pw.e[1], m) + mul_mod(spec.a, pw.e[3], m), m);
          if (hi != w[n + 1] || lo != w[n])
            return witness("matrix power disagrees with generation", 2, 5, q, sign, m);
        }
      }
  return {};
}

std::string check_factorization() {
  for (i64 n : {1LL, 2LL, 360LL, 1001LL, 104729LL, 999983LL * 2}) {
    i64 prod = 1;
    for (const auto& pp : factorize(n)) {
      if (!is_prime(pp.prime)) return "non-prime factor reported for " + std::to_string(n);
      for (int e = 0; e < pp.exponent; ++e) prod *= pp.prime;
      if (valuation(n, pp.prime) != pp.exponent)
        return "valuation mismatch for " + std::to_string(n);
    }
    if (prod != n) return "factor product mismatch for " + std::to_string(n);
  }
  return {};
}

std::string check_order_routes() {
  for (i64 q : {1LL, 2LL, 3LL, 7LL})
    for (int sign : {+1, -1})
      for (i64 m = 2; m <= 200; ++m) {
        i64 direct = order_direct(q, sign, m).order;
        i64 composite = order_composite(q, sign, m).order;
        if (direct != composite)
          return witness("order routes disagree", 0, 1, q, sign, m);
      }
  return {};
}

std::string check_order_coprime_lcm() {
  for (i64 q : {1LL, 3LL, 5LL})
    for (i64 m = 2; m <= 40; ++m)
      for (i64 n = m + 1; n <= 40; ++n) {
        if (std::gcd(m, n) != 1) continue;
        i64 km = order_direct(q, +1, m).order;
        i64 kn = order_direct(q, +1, n).order;
        if (order_direct(q, +1, m * n).order != lcm_checked(km, kn))
          return "k(mn) != lcm(k(m),k(n)) at q=" + std::to_string(q) + " m=" +
                 std::to_string(m) + " n=" + std::to_string(n);
      }
  return {};
}

std::string check_order_lifting() {
  for (i64 q : {1LL, 2LL, 3LL, 6LL})
    for (i64 p : {2LL, 3LL, 5LL, 7LL, 13LL})
      for (int e = 1; e <= 3; ++e) {
        i64 pe = 1;
        for (int i = 0; i < e; ++i) pe *= p;
        if (pe > 3000) continue;
        if (order_lifted(q, +1, p, e).order != order_direct(q, +1, pe).order)
          return "lifted order mismatch at q=" + std::to_string(q) + " p^e=" +
                 std::to_string(pe);
      }
  return {};
}

std::string check_period_divides_order() {
  for (i64 q : {1LL, 2LL, 3LL})
    for (auto [a, b] : {std::pair<i64, i64>{0, 1}, {1, 1}, {2, 2}, {2, 4}})
      for (i64 m = 2; m <= 100; ++m) {
        RecurrenceSpec spec{a, b, q, +1};
        if (is_trivial_seed(spec, m)) continue;
        if (!period_length_divides(spec, m).divides)
          return witness("period does not divide the order", a, b, q, +1, m);
      }
  return {};
}

std::string check_report_consistency() {
  for (i64 q : {1LL, 2LL, 3LL})
    for (auto [a, b] : {std::pair<i64, i64>{0, 1}, {1, 1}, {2, 2}})
      for (i64 m = 2; m <= 150; ++m) {
        RecurrenceSpec spec{a, b, q, +1};
        if (is_trivial_seed(spec, m)) continue;
        CompletenessReport rep = completeness_report(spec, m);
        i64 sum = 0, mn = rep.histogram[0], mx = rep.histogram[0];
        i64 missing = 0;
        for (i64 c : rep.histogram) {
          sum += c;
          mn = std::min(mn, c);
          mx = std::max(mx, c);
          if (c == 0) ++missing;
        }
        if (sum != rep.period_length) return witness("histogram sum", a, b, q, +1, m);
        if (rep.complete != rep.missing.empty()) return witness("missing list", a, b, q, +1, m);
        if (static_cast<i64>(rep.missing.size()) != missing)
          return witness("missing count", a, b, q, +1, m);
        if (rep.uniform != (mn == mx)) return witness("uniform flag", a, b, q, +1, m);
        if (rep.complete != complete_modulo(spec, m))
          return witness("complete flag", a, b, q, +1, m);
      }
  return {};
}

std::string check_divisor_closure() {
  for (i64 q : {1LL, 2LL, 3LL})
    for (auto [a, b] : {std::pair<i64, i64>{0, 1}, {2, 2}})
      for (i64 m = 2; m <= 300; ++m) {
        RecurrenceSpec spec{a, b, q, +1};
        if (!complete_modulo(spec, m)) continue;
        for (i64 d = 2; d < m; ++d)
          if (m % d == 0 && !complete_modulo(spec, d))
            return witness("divisor closure broke", a, b, q, +1, m);
      }
  return {};
}

std::string check_candidate_support() {
  for (i64 q : {1LL, 2LL, 3LL, 5LL}) {
    CandidatePrimeSet cand = candidate_primes(q, +1);
    RecurrenceSpec spec{0, 1, q, +1};
    for (i64 m = 2; m <= 400; ++m) {
      if (!complete_modulo(spec, m)) continue;
      for (const auto& pp : factorize(m)) {
        bool found = false;
        for (i64 p : cand.all) found = found || p == pp.prime;
        if (!found)
          return "complete modulus " + std::to_string(m) +
                 " outside candidate support at q=" + std::to_string(q);
      }
    }
  }
  return {};
}

std::string check_lift_rules() {
  for (i64 q : {1LL, 2LL, 3LL, 7LL}) {
    RecurrenceSpec spec{0, 1, q, +1};
    CandidatePrimeSet cand = candidate_primes(q, +1);
    for (i64 p : cand.omega) {
      if (p % 2 == 0) continue;
      for (i64 m = 2; m <= 120; ++m) {
        // the lift ops brute-verify their conclusion under the ceiling and
        // throw DisagreementError themselves on any mismatch
        LiftVerdict v = m % p == 0 ? lift_shared_prime(spec, p, m)
                                   : lift_coprime_prime(spec, p, m);
        if (v.applicable && !v.concluded_complete)
          return "applicable lift without conclusion at q=" + std::to_string(q) +
                 " p=" + std::to_string(p) + " m=" + std::to_string(m);
      }
    }
    if (prime_power_rule(q, 5).five_route == PrimePowerRule::FiveRoute::five_power)
      for (i64 m = 5; m <= 120; m += 5) lift_five_power(spec, m);
  }
  return {};
}

std::string check_prime_power_rules() {
  for (i64 q = 1; q <= 10; ++q) {
    RecurrenceSpec spec{0, 1, q, +1};
    for (i64 p : {2LL, 3LL, 7LL}) {
      PrimePowerRule rule = prime_power_rule(q, p);
      int brute_max = 0;
      bool unbounded_ok = true;
      i64 pw = p;
      for (int e = 1; pw <= 2000; ++e, pw *= p) {
        if (complete_modulo(spec, pw))
          brute_max = e;
        else {
          unbounded_ok = false;
          break;
        }
      }
      if (rule.max_exponent.has_value()) {
        if (brute_max != *rule.max_exponent)
          return "exponent cap mismatch at q=" + std::to_string(q) + " p=" +
                 std::to_string(p) + " (rule " + std::to_string(*rule.max_exponent) +
                 ", brute " + std::to_string(brute_max) + ")";
      } else if (!unbounded_ok) {
        return "rule claims unbounded exponent but brute force stopped at q=" +
               std::to_string(q) + " p=" + std::to_string(p);
      }
    }
  }
  return {};
}

std::string check_subsequence_cover() {
  for (i64 q : {1LL, 2LL, 3LL, 7LL, 8LL}) {
    for (i64 p : candidate_primes(q, +1).omega) {
      if (p % 2 == 0 || p > 50) continue;
      SubsequenceClasses sc = subsequence_classes(q, p);
      if (!sc.all_cover) return "stride-4 classes fail to cover at q=" +
                                std::to_string(q) + " p=" + std::to_string(p);
      if (!sc.linear_form_holds)
        return "linear form fails at q=" + std::to_string(q) + " p=" + std::to_string(p);
      if (sc.l4_mod_p != mod_norm(2, p))
        return "index-4 value mismatch at q=" + std::to_string(q) +
               " p=" + std::to_string(p);
    }
  }
  return {};
}

std::string check_classify_round_trip(const SweepOptions& opt) {
  for (i64 q = -6; q <= 6; ++q) {
    if (q == 0) continue;
    for (auto [a, b] : {std::pair<i64, i64>{0, 1}, {1, 1}, {2, 2}}) {
      RecurrenceSpec spec{a, b, q, +1};
      ClassificationResult res = classify(spec, 1000, opt);
      std::vector<i64> direct;
      for (i64 m = 2; m <= 1000; ++m)
        if (complete_modulo(spec, m)) direct.push_back(m);
      if (res.members != direct)
        return witness("classification members mismatch", a, b, q, +1, 1000);
    }
  }
  return {};
}

std::string check_classify_explain(const SweepOptions& opt) {
  RecurrenceSpec spec{0, 1, 3, +1};
  ClassificationResult res = classify(spec, 2000, opt);
  ExplainTrace t = explain(res, 52);
  if (!t.member || t.steps.empty()) return "m=52 should be a member with a trace";
  t = explain(res, 10);
  if (t.member) return "m=10 should not be a member";
  t = explain(res, 2197);  // 13^3, beyond the bound
  if (!t.member) return "m=13^3 should be certified by the 13-tail";
  bool lifted = false;
  for (const auto& s : t.steps) lifted = lifted || s.find("lift-") != std::string::npos;
  if (!lifted) return "the 13^3 trace should contain a lift step";
  t = explain(res, 1999 * 1999LL);
  if (t.member) return "a modulus with non-candidate support cannot be a member";
  // with thin data (bound 10, q=1) the mixed product 45 = 9*5 is uncertifiable
  ClassificationResult thin = classify(RecurrenceSpec{0, 1, 1, +1}, 10, opt);
  try {
    explain(thin, 45);
    return "an uncovered, unrefuted out-of-range modulus must raise OutOfScopeError";
  } catch (const OutOfScopeError&) {
  } catch (...) {
    return "wrong error type for uncovered modulus";
  }
  return {};
}

std::string check_fs_term_count() {
  for (i64 q : {1LL, 2LL, 3LL})
    for (i64 m : {4LL, 5LL, 7LL, 9LL, 11LL, 13LL}) {
      if (std::gcd(q, m) != 1) continue;
      FundamentalSystem fs = enumerate_fs(q, m);
      if (fs.total_terms != m * m - 1)
        return "FS term count mismatch at q=" + std::to_string(q) +
               " m=" + std::to_string(m);
      i64 sum = 0;
      for (const auto& p : fs.periods) sum += p.length;
      if (sum != fs.total_terms) return "FS period lengths do not sum";
    }
  return {};
}

std::string check_fs_pow3() {
  for (i64 q : {2LL, 7LL, 8LL})
    for (int n = 1; n <= 4; ++n) {
      FsDecomposition d = verify_fs_decomposition_pow3(q, n);
      if (!d.holds)
        return "3-power decomposition failed at q=" + std::to_string(q) +
               " n=" + std::to_string(n);
    }
  return {};
}

std::string check_u_rules_against_oracle() {
  for (i64 q = -8; q <= 8; ++q) {
    if (q == 0) continue;
    for (auto [a, b] : {std::pair<i64, i64>{0, 1}, {1, 1}, {2, 2}}) {
      RecurrenceSpec spec{a, b, q, -1};
      for (i64 m = 1; m <= 500; ++m) {
        // both ops brute-verify under the ceiling and throw on mismatch
        complete_by_rules(spec, m);
        uniform_by_rules(spec, m);
      }
    }
  }
  return {};
}

std::string check_u_multiplicativity() {
  for (i64 q : {1LL, 3LL, 5LL, 6LL})
    for (auto [a, b] : {std::pair<i64, i64>{0, 1}, {1, 1}}) {
      RecurrenceSpec spec{a, b, q, -1};
      for (i64 m = 2; m <= 200; ++m) {
        bool parts_complete = true, parts_uniform = true;
        for (const auto& pp : factorize(m)) {
          i64 pe = 1;
          for (int e = 0; e < pp.exponent; ++e) pe *= pp.prime;
          parts_complete = parts_complete && complete_modulo(spec, pe);
          parts_uniform = parts_uniform && uniform_modulo(spec, pe);
        }
        if (uniform_modulo(spec, m) != parts_uniform)
          return witness("uniformity is not multiplicative", a, b, q, -1, m);
        // the covering-but-not-uniform parts (mod 2 with q odd, mod 3 with
        // 3 | q) may phase-lock against the rest, so only whole => parts
        // holds there
        const bool anomalous = (mod_norm(q, 2) == 1 && m % 2 == 0 && m % 4 != 0 && m > 2) ||
                               (q % 3 == 0 && m % 3 == 0 && m % 9 != 0 && m > 3);
        const bool whole = complete_modulo(spec, m);
        if (!anomalous && whole != parts_complete)
          return witness("completeness multiplicativity broke", a, b, q, -1, m);
        if (anomalous && whole && !parts_complete)
          return witness("complete whole with incomplete part", a, b, q, -1, m);
      }
    }
  return {};
}

std::string check_companion_value_identity() {
  // F_{n+4} = L4*F_n - F_{n-4} where F = w(0,1,q), L = w(2,q,q), sign +1
  for (i64 q = 1; q <= 10; ++q)
    for (i64 m : {97LL, 1000LL}) {
      auto f = generate(RecurrenceSpec{0, 1, q, +1}, m, 105);
      auto l = generate(RecurrenceSpec{2, q, q, +1}, m, 5);
      for (std::size_t n = 4; n <= 100; ++n)
        if (mod_norm(f[n + 4] + f[n - 4], m) != mul_mod(l[4], f[n], m))
          return "index-shift identity fails at q=" + std::to_string(q) +
                 " m=" + std::to_string(m) + " n=" + std::to_string(n);
    }
  return {};
}

std::string check_u_order_divisibility() {
  for (i64 q : {1LL, 3LL, 4LL, 5LL}) {
    RecurrenceSpec spec{0, 1, q, -1};
    for (i64 p : {3LL, 5LL, 7LL, 11LL, 13LL, 23LL, 47LL}) {
      if (invariant_of(spec, p).gcd_with_modulus != 1) continue;
      OrderDivisibility od = check_order_divisibility(spec, p);
      if (!od.divides)
        return "period bound divisor fails at q=" + std::to_string(q) +
               " p=" + std::to_string(p);
    }
  }
  return {};
}

std::string check_sweep_kernels(const SweepOptions& opt) {
  RecurrenceSpec spec{0, 1, 3, +1};
  if (complete_sweep(spec, 2000, opt) != complete_sweep_serial(spec, 2000))
    return "parallel completeness sweep deviates from serial";
  SweepOptions one;
  one.threads = 1;
  if (complete_sweep(spec, 500, one) != complete_sweep_serial(spec, 500))
    return "single-thread completeness sweep deviates from serial";
  if (order_sweep(3, +1, 800, opt) != order_sweep_serial(3, +1, 800))
    return "parallel order sweep deviates from serial";
  if (order_sweep(1, -1, 400, opt) != order_sweep_serial(1, -1, 400))
    return "sign=-1 order sweep deviates from serial";
  return {};
}

}  // namespace

std::vector<CheckResult> run_selfcheck(const SweepOptions& opt) {
  std::vector<std::pair<std::string, std::function<std::string()>>> checks = {
      {"core/invariant-identity", check_invariant_identity},
      {"core/canonical-rotation", check_canonical_rotation},
      {"core/period-orbit-invariance", check_period_orbit_invariance},
      {"core/companion-power", check_companion_power},
      {"factor/roundtrip", check_factorization},
      {"order/direct-vs-composite", check_order_routes},
      {"order/coprime-lcm", check_order_coprime_lcm},
      {"order/prime-power-lifting", check_order_lifting},
      {"order/period-divides-order", check_period_divides_order},
      {"completeness/report-consistency", check_report_consistency},
      {"completeness/divisor-closure", check_divisor_closure},
      {"completeness/candidate-support", check_candidate_support},
      {"completeness/lift-rules", check_lift_rules},
      {"completeness/prime-power-rules", check_prime_power_rules},
      {"completeness/subsequence-cover", check_subsequence_cover},
      {"classifier/round-trip", [&] { return check_classify_round_trip(opt); }},
      {"classifier/explain-traces", [&] { return check_classify_explain(opt); }},
      {"fs/term-count", check_fs_term_count},
      {"fs/pow3-decomposition", check_fs_pow3},
      {"variant-u/rules-vs-oracle", check_u_rules_against_oracle},
      {"variant-u/index-shift-identity", check_companion_value_identity},
      {"variant-u/multiplicativity", check_u_multiplicativity},
      {"variant-u/order-divisibility", check_u_order_divisibility},
      {"sweep/parallel-vs-serial", [&] { return check_sweep_kernels(opt); }},
  };

  std::vector<CheckResult> results;
  results.reserve(checks.size());
  for (auto& [name, fn] : checks) {
    CheckResult r;
    r.name = name;
    try {
      r.detail = fn();
      r.pass = r.detail.empty();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace rescomp
