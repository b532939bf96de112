#include "rescomp/report_io.hpp"

#include "json.hpp"

#include <sstream>

namespace rescomp {

using json = nlohmann::ordered_json;

namespace {

json spec_json(const RecurrenceSpec& spec) {
  return json{{"a", spec.a}, {"b", spec.b}, {"q", spec.q}, {"sign", spec.sign}};
}

}  // namespace

std::string variant_tag(const RecurrenceSpec& spec) {
  return spec.sign > 0 ? "w" : "u";
}

std::string report_json(const RecurrenceSpec& spec, const CompletenessReport& rep) {
  json j;
  j["schemaVersion"] = kSchemaVersion;
  j["variant"] = variant_tag(spec);
  j["spec"] = spec_json(spec);
  json r;
  r["modulus"] = rep.modulus;
  r["complete"] = rep.complete;
  r["period_length"] = rep.period_length;
  r["histogram"] = rep.histogram;
  r["missing"] = rep.missing;
  r["uniform"] = rep.uniform;
  r["invariant_class"] = rep.invariant_class;
  r["gcd_invariant"] = rep.gcd_invariant;
  j["report"] = std::move(r);
  return j.dump(2) + "\n";
}

std::string reports_csv(const RecurrenceSpec& spec,
                        const std::vector<CompletenessReport>& reps) {
  std::ostringstream os;
  os << "variant,a,b,q,modulus,complete,period_length,uniform,gcd_invariant,"
        "invariant_lo,invariant_hi,missing_count,missing\n";
  for (const auto& rep : reps) {
    os << variant_tag(spec) << ',' << spec.a << ',' << spec.b << ',' << spec.q << ','
       << rep.modulus << ',' << (rep.complete ? 1 : 0) << ',' << rep.period_length
       << ',' << (rep.uniform ? 1 : 0) << ',' << rep.gcd_invariant << ','
       << rep.invariant_class[0] << ',' << rep.invariant_class[1] << ','
       << rep.missing.size() << ',';
    for (std::size_t i = 0; i < rep.missing.size(); ++i)
      os << (i ? ";" : "") << rep.missing[i];
    os << '\n';
  }
  return os.str();
}

std::string classification_json(const ClassificationResult& result) {
  json j;
  j["schemaVersion"] = kSchemaVersion;
  j["variant"] = variant_tag(result.spec);
  j["spec"] = spec_json(result.spec);
  j["bound"] = result.bound;
  j["members"] = result.members;
  json structure = json::array();
  for (const auto& d : result.structure) {
    structure.push_back(json{{"base", d.base},
                             {"lift_primes", d.lift_primes},
                             {"conditions", d.conditions}});
  }
  j["structure"] = std::move(structure);
  json evidence = json::array();
  for (const auto& e : result.evidence)
    evidence.push_back(json{{"modulus", e.modulus}, {"source", e.source}});
  j["evidence"] = std::move(evidence);
  return j.dump(2) + "\n";
}

std::string classification_table(const ClassificationResult& result) {
  std::ostringstream os;
  const RecurrenceSpec& s = result.spec;
  os << "seed (" << s.a << "," << s.b << ")  q=" << s.q << "  sign=" << (s.sign > 0 ? "+1" : "-1")
     << "  bound=" << result.bound << "\n";
  os << "complete moduli (" << result.members.size() << "):";
  for (i64 m : result.members) os << ' ' << m;
  os << "\nfamilies:\n";
  for (const auto& d : result.structure) {
    os << "  base " << d.base << "  lifts:";
    if (d.lift_primes.empty()) {
      os << " -";
    } else {
      for (std::size_t i = 0; i < d.lift_primes.size(); ++i)
        os << (i ? "," : " ") << d.lift_primes[i];
    }
    os << "  [" << d.conditions << "]\n";
  }
  os << "evidence:\n";
  for (const auto& e : result.evidence)
    os << "  " << e.modulus << "  " << e.source << "\n";
  return os.str();
}

std::string fs_dump(const FundamentalSystem& fs) {
  std::ostringstream os;
  os << "m=" << fs.modulus << " q=" << fs.q << " totalTerms=" << fs.total_terms << "\n";
  for (const auto& period : fs.periods) {
    for (std::size_t i = 0; i < period.residues.size(); ++i)
      os << (i ? "," : "") << period.residues[i];
    os << "\n";
  }
  return os.str();
}

}  // namespace rescomp
