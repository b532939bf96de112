// Command-line front end: every analysis as a subcommand, text/json/csv
// output, deterministic across thread counts.
#include "CLI11.hpp"
#include "json.hpp"

#include "rescomp/classify.hpp"
#include "rescomp/completeness.hpp"
#include "rescomp/core.hpp"
#include "rescomp/factor.hpp"
#include "rescomp/fs.hpp"
#include "rescomp/order.hpp"
#include "rescomp/report_io.hpp"
#include "rescomp/selfcheck.hpp"
#include "rescomp/sweep.hpp"
#include "rescomp/variant_u.hpp"

#include <iostream>
#include <sstream>
#include <string>

namespace {

using json = nlohmann::ordered_json;
using namespace rescomp;

json spec_json(const RecurrenceSpec& spec) {
  json j;
  j["a"] = spec.a;
  j["b"] = spec.b;
  j["q"] = spec.q;
  j["sign"] = spec.sign;
  return j;
}

json envelope(const RecurrenceSpec& spec) {
  json j;
  j["schemaVersion"] = kSchemaVersion;
  j["variant"] = variant_tag(spec);
  j["spec"] = spec_json(spec);
  return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string join(const std::vector<i64>& v, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << v[i];
  }
  return os.str();
}

int run_period(const RecurrenceSpec& spec, i64 m, const std::string& format) {
  Period p = find_period(spec, m);
  if (format == "json") {
    json j = envelope(spec);
    j["period"] = {{"modulus", p.modulus}, {"length", p.length}, {"residues", p.residues}};
    emit(j);
  } else if (format == "csv") {
    std::cout << "variant,a,b,q,modulus,length,residues\n"
              << variant_tag(spec) << "," << spec.a << "," << spec.b << "," << spec.q
              << "," << p.modulus << "," << p.length << "," << join(p.residues, ";")
              << "\n";
  } else {
    std::cout << "modulus=" << p.modulus << " length=" << p.length << "\n"
              << "residues: " << join(p.residues, " ") << "\n";
  }
  return 0;
}

int run_order(const RecurrenceSpec& spec, i64 m, const std::string& format) {
  OrderResult direct = order_direct(spec.q, spec.sign, m);
  OrderResult composite = order_composite(spec.q, spec.sign, m);
  if (direct.order != composite.order)
    throw DisagreementError("direct and composite order computations disagree at m=" +
                            std::to_string(m));
  if (format == "json") {
    json j = envelope(spec);
    json factors = json::array();
    for (const auto& f : composite.factors)
      factors.push_back({{"prime", f.prime}, {"exponent", f.exponent}, {"order", f.order}});
    j["order"] = {{"modulus", m},
                  {"order", composite.order},
                  {"method", to_string(composite.method)},
                  {"factors", factors}};
    emit(j);
  } else if (format == "csv") {
    std::cout << "variant,a,b,q,modulus,order,method\n"
              << variant_tag(spec) << "," << spec.a << "," << spec.b << "," << spec.q
              << "," << m << "," << composite.order << "," << to_string(composite.method)
              << "\n";
  } else {
    std::cout << "k(" << m << ") = " << composite.order << "\n";
    for (const auto& f : composite.factors)
      std::cout << "  k(" << f.prime << "^" << f.exponent << ") = " << f.order << "\n";
  }
  return 0;
}

int run_complete(const RecurrenceSpec& spec, i64 m, i64 bound,
                 const std::string& format, const SweepOptions& opt) {
  if (m > 0) {
    CompletenessReport rep = completeness_report(spec, m);
    if (format == "json") {
      std::cout << report_json(spec, rep);
    } else if (format == "csv") {
      std::cout << reports_csv(spec, {rep});
    } else {
      std::cout << "modulus=" << rep.modulus
                << " complete=" << (rep.complete ? "yes" : "no")
                << " uniform=" << (rep.uniform ? "yes" : "no")
                << " period_length=" << rep.period_length << "\n";
      if (!rep.missing.empty()) std::cout << "missing: " << join(rep.missing, " ") << "\n";
      std::cout << "invariant: " << rep.invariant_class[0] << " (mod " << rep.modulus
                << "), alternate " << rep.invariant_class[1]
                << ", gcd=" << rep.gcd_invariant << "\n";
    }
    return 0;
  }
  // sweep mode
  auto flags = complete_sweep(spec, bound, opt);
  std::vector<i64> members;
  for (i64 mm = 2; mm <= bound; ++mm)
    if (flags[static_cast<std::size_t>(mm - 2)]) members.push_back(mm);
  if (format == "json") {
    json j = envelope(spec);
    j["bound"] = bound;
    j["members"] = members;
    emit(j);
  } else if (format == "csv") {
    std::cout << "variant,a,b,q,modulus,complete\n";
    for (i64 mm = 2; mm <= bound; ++mm)
      std::cout << variant_tag(spec) << "," << spec.a << "," << spec.b << "," << spec.q
                << "," << mm << ","
                << (flags[static_cast<std::size_t>(mm - 2)] ? 1 : 0) << "\n";
  } else {
    std::cout << "complete moduli in [2," << bound << "]: " << join(members, " ")
              << "\n";
  }
  return 0;
}

int run_classify(const RecurrenceSpec& spec, i64 bound, i64 explain_m,
                 const std::string& format, const SweepOptions& opt) {
  ClassificationResult res = classify(spec, bound, opt);
  if (explain_m > 0) {
    ExplainTrace t = explain(res, explain_m);
    if (format == "json") {
      json j = envelope(spec);
      j["explain"] = {{"modulus", t.modulus}, {"member", t.member}, {"steps", t.steps}};
      emit(j);
    } else {
      std::cout << "m=" << t.modulus << ": " << (t.member ? "member" : "not a member")
                << "\n";
      for (const auto& s : t.steps) std::cout << "  " << s << "\n";
    }
    return 0;
  }
  if (format == "json") {
    std::cout << classification_json(res);
  } else if (format == "csv") {
    std::cout << "modulus,source\n";
    for (const auto& e : res.evidence) std::cout << e.modulus << "," << e.source << "\n";
  } else {
    std::cout << classification_table(res);
  }
  return 0;
}

int run_fs(i64 q, i64 m, int pow3, const std::string& format) {
  if (pow3 > 0) {
    FsDecomposition d = verify_fs_decomposition_pow3(q, pow3);
    if (format == "json") {
      json j;
      j["schemaVersion"] = kSchemaVersion;
      j["decomposition"] = {{"q", q},
                            {"n", d.n},
                            {"modulus", d.m},
                            {"scaledCount", d.scaled_count},
                            {"scaledTerms", d.scaled_terms},
                            {"embeddedTerms", d.embedded_terms},
                            {"totalTerms", d.total_terms},
                            {"distinct", d.distinct},
                            {"countsMatch", d.counts_match},
                            {"unionMatches", d.union_matches},
                            {"unitClassUnique", d.unit_class_unique},
                            {"holds", d.holds}};
      emit(j);
    } else {
      std::cout << "q=" << q << " modulus=3^" << d.n << "=" << d.m
                << " scaled=" << d.scaled_terms << " embedded=" << d.embedded_terms
                << " total=" << d.total_terms
                << " holds=" << (d.holds ? "yes" : "no") << "\n";
    }
    return d.holds ? 0 : 3;
  }
  FundamentalSystem fs = enumerate_fs(q, m);
  if (format == "json") {
    json j;
    j["schemaVersion"] = kSchemaVersion;
    json periods = json::array();
    for (const auto& p : fs.periods)
      periods.push_back({{"length", p.length}, {"residues", p.residues}});
    j["fs"] = {{"modulus", fs.modulus},
               {"q", fs.q},
               {"totalTerms", fs.total_terms},
               {"periods", periods}};
    emit(j);
  } else if (format == "csv") {
    std::cout << "length,residues\n";
    for (const auto& p : fs.periods)
      std::cout << p.length << "," << join(p.residues, ";") << "\n";
  } else {
    std::cout << fs_dump(fs);
  }
  return 0;
}

int run_subseq(i64 q, i64 p, const std::string& format) {
  SubsequenceClasses sc = subsequence_classes(q, p);
  if (format == "json") {
    json j;
    j["schemaVersion"] = kSchemaVersion;
    json classes = json::array();
    for (const auto& c : sc.classes) classes.push_back(c);
    j["subseq"] = {{"q", q},
                   {"p", sc.p},
                   {"classes", classes},
                   {"allCover", sc.all_cover},
                   {"l4ModP", sc.l4_mod_p},
                   {"linearFormHolds", sc.linear_form_holds}};
    emit(j);
  } else {
    std::cout << "q=" << q << " p=" << sc.p << "\n";
    for (int r = 0; r < 4; ++r)
      std::cout << "  class " << r << ": " << join(sc.classes[static_cast<std::size_t>(r)], " ")
                << "\n";
    std::cout << "all classes cover: " << (sc.all_cover ? "yes" : "no")
              << ", index-4 companion value mod p: " << sc.l4_mod_p
              << ", linear form holds: " << (sc.linear_form_holds ? "yes" : "no") << "\n";
  }
  return 0;
}

void print_rule_verdict(const RecurrenceSpec& spec, const RuleVerdict& v,
                        const char* kind, const std::string& format) {
  if (format == "json") {
    json j = envelope(spec);
    json parts = json::array();
    for (const auto& p : v.parts)
      parts.push_back({{"p", p.p}, {"h", p.h}, {"pass", p.pass}, {"reason", p.reason}});
    j[kind] = {{"modulus", v.modulus},
               {"verdict", v.verdict},
               {"parts", parts},
               {"bruteForced", v.brute_forced},
               {"note", v.note}};
    emit(j);
  } else {
    const std::string label = v.verdict ? std::string(kind) : std::string("not ") + kind;
    std::cout << "m=" << v.modulus << ": " << label
              << (v.brute_forced ? " (verified by direct walk)" : " (by rules)") << "\n";
    for (const auto& p : v.parts)
      std::cout << "  " << p.p << "^" << p.h << ": " << (p.pass ? "pass" : "fail")
                << " - " << p.reason << "\n";
    if (!v.note.empty()) std::cout << "  note: " << v.note << "\n";
  }
}

int run_variant_u(const RecurrenceSpec& spec, const std::string& check, i64 m, i64 p,
                  i64 ceiling, const std::string& format) {
  if (check == "divisibility") {
    OrderDivisibility od = check_order_divisibility(spec, p);
    if (format == "json") {
      json j = envelope(spec);
      j["divisibility"] = {{"p", od.p},
                           {"kind", to_string(od.kind)},
                           {"periodLength", od.period_length},
                           {"boundDivisor", od.bound_divisor},
                           {"divides", od.divides}};
      emit(j);
    } else {
      std::cout << "p=" << od.p << " splitting=" << to_string(od.kind)
                << " period=" << od.period_length << " bound=" << od.bound_divisor
                << " divides=" << (od.divides ? "yes" : "no") << "\n";
    }
    return 0;
  }
  if (check == "uniform") {
    RuleVerdict v = uniform_by_rules(spec, m, ceiling);
    print_rule_verdict(spec, v, "uniform", format);
    return 0;
  }
  RuleVerdict v = complete_by_rules(spec, m, ceiling);
  print_rule_verdict(spec, v, "complete", format);
  return 0;
}

int run_verify(const SweepOptions& opt, const std::string& format) {
  auto results = run_selfcheck(opt);
  bool all = true;
  if (format == "json") {
    json j;
    j["schemaVersion"] = kSchemaVersion;
    json checks = json::array();
    for (const auto& r : results) {
      checks.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
      all = all && r.pass;
    }
    j["checks"] = checks;
    j["allPass"] = all;
    emit(j);
  } else {
    for (const auto& r : results) {
      std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
      if (!r.detail.empty()) std::cout << " - " << r.detail;
      std::cout << "\n";
      all = all && r.pass;
    }
    std::cout << (all ? "all checks passed" : "CHECK FAILURES PRESENT") << "\n";
  }
  return all ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"second-order linear recurrences modulo m: periods, orders, "
               "residue completeness, classification"};
  app.require_subcommand(1);

  i64 a = 0, b = 1, q = 1;
  std::string variant = "w";
  i64 mod = 0, bound = 0, explain_m = 0, p = 0, ceiling = kDefaultVerificationCeiling;
  int pow3 = 0, threads = 0;
  std::string format = "text", check = "complete";

  auto add_spec = [&](CLI::App* sub) {
    sub->add_option("--a", a, "seed term 0");
    sub->add_option("--b", b, "seed term 1");
    sub->add_option("--q", q, "recurrence coefficient (nonzero)");
    sub->add_option("--variant", variant, "w: +1 tail sign, u: -1 tail sign")
        ->check(CLI::IsMember({"w", "u"}));
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
  };

  CLI::App* sub_period = app.add_subcommand("period", "period of the seed orbit modulo m");
  add_spec(sub_period);
  add_format(sub_period);
  sub_period->add_option("--mod", mod, "modulus")->required()->check(CLI::PositiveNumber);

  CLI::App* sub_order = app.add_subcommand(
      "order", "order k(m) of the companion matrix, direct and factor-assembled");
  add_spec(sub_order);
  add_format(sub_order);
  sub_order->add_option("--mod", mod, "modulus")->required()->check(CLI::PositiveNumber);

  CLI::App* sub_complete = app.add_subcommand(
      "complete", "residue completeness report for one modulus or a sweep");
  add_spec(sub_complete);
  add_format(sub_complete);
  sub_complete->add_option("--mod", mod, "modulus")->check(CLI::PositiveNumber);
  sub_complete->add_option("--bound", bound, "sweep all moduli in [2,bound]")
      ->check(CLI::PositiveNumber);
  sub_complete->add_option("--threads", threads, "sweep thread count (0 = all)");

  CLI::App* sub_classify = app.add_subcommand(
      "classify", "structure of the set of residue-complete moduli up to a bound");
  add_spec(sub_classify);
  add_format(sub_classify);
  sub_classify->add_option("--bound", bound, "sweep bound")->required()
      ->check(CLI::PositiveNumber);
  sub_classify->add_option("--explain", explain_m, "explain membership of one modulus");
  sub_classify->add_option("--threads", threads, "sweep thread count (0 = all)");

  CLI::App* sub_fs = app.add_subcommand(
      "fs", "fundamental system of periods, or its 3-power decomposition");
  add_format(sub_fs);
  sub_fs->add_option("--q", q, "recurrence coefficient (nonzero)");
  sub_fs->add_option("--mod", mod, "modulus to enumerate")->check(CLI::PositiveNumber);
  sub_fs->add_option("--pow3", pow3, "verify the scaled+embedded split mod 3^n")
      ->check(CLI::PositiveNumber);

  CLI::App* sub_subseq = app.add_subcommand(
      "subseq", "stride-4 subsequence classes modulo an odd prime dividing q^2+4");
  add_format(sub_subseq);
  sub_subseq->add_option("--q", q, "recurrence coefficient (nonzero)");
  sub_subseq->add_option("--p", p, "odd prime dividing q^2+4")->required();

  CLI::App* sub_u = app.add_subcommand(
      "variant-u", "minus-sign recurrence: completeness/uniformity rules, order bounds");
  add_format(sub_u);
  sub_u->add_option("--a", a, "seed term 0");
  sub_u->add_option("--b", b, "seed term 1");
  sub_u->add_option("--q", q, "recurrence coefficient (nonzero)");
  sub_u->add_option("--check", check, "what to evaluate")
      ->check(CLI::IsMember({"complete", "uniform", "divisibility"}));
  sub_u->add_option("--mod", mod, "modulus")->check(CLI::PositiveNumber);
  sub_u->add_option("--p", p, "prime for --check divisibility");
  sub_u->add_option("--ceiling", ceiling, "brute-force verification ceiling");

  CLI::App* sub_verify = app.add_subcommand(
      "verify", "run the full cross-validation suite and print a pass/fail table");
  add_format(sub_verify);
  sub_verify->add_option("--threads", threads, "thread count (0 = all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  SweepOptions opt;
  opt.threads = threads;

  try {
    RecurrenceSpec spec{a, b, q, variant == "u" ? -1 : +1};
    if (*sub_period) return run_period(spec, mod, format);
    if (*sub_order) return run_order(spec, mod, format);
    if (*sub_complete) {
      if ((mod == 0) == (bound == 0))
        throw std::invalid_argument("complete needs exactly one of --mod or --bound");
      return run_complete(spec, mod, bound, format, opt);
    }
    if (*sub_classify) return run_classify(spec, bound, explain_m, format, opt);
    if (*sub_fs) {
      if ((mod == 0) == (pow3 == 0))
        throw std::invalid_argument("fs needs exactly one of --mod or --pow3");
      return run_fs(q, mod, pow3, format);
    }
    if (*sub_subseq) return run_subseq(q, p, format);
    if (*sub_u) {
      RecurrenceSpec uspec{a, b, q, -1};
      if (check == "divisibility" ? p == 0 : mod == 0)
        throw std::invalid_argument("variant-u needs --mod (or --p for divisibility)");
      return run_variant_u(uspec, check, mod, p, ceiling, format);
    }
    if (*sub_verify) return run_verify(opt, format);
    return 1;
  } catch (const DisagreementError& e) {
    std::cerr << "disagreement: " << e.what() << "\n";
    return 3;
  } catch (const HypothesisViolation& e) {
    std::cerr << "hypothesis violation: " << e.what() << "\n";
    return 2;
  } catch (const DegenerateDiscriminant& e) {
    std::cerr << "degenerate discriminant: " << e.what() << "\n";
    return 2;
  } catch (const OutOfScopeError& e) {
    std::cerr << "out of scope: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
