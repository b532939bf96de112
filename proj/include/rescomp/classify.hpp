// Full classification of the set K of residue-complete moduli for a
// sign=+1 recurrence.  Ground truth below the bound is an exhaustive
// per-modulus walk; the structure beyond the bound is a list of family
// descriptors (base modulus, certified lift primes), where a lift prime p
// carries an unbounded exponent only when a one-step order check plus the
// odd-prime growth-persistence argument certify k(p^{j+1}*B) = p*k(p^j*B)
// for every j, so the one-step completeness rules chain indefinitely.
// The expansion of the descriptors inside [2, bound] must reproduce the
// brute-force member list exactly; any discrepancy throws
// DisagreementError rather than being smoothed over.

#pragma once

#include "rescomp/completeness.hpp"
#include "rescomp/core.hpp"
#include "rescomp/sweep.hpp"

#include <string>
#include <vector>

namespace rescomp {

struct FamilyDescriptor {
  i64 base = 1;                   // brute-force-verified complete modulus
  std::vector<i64> lift_primes;   // ascending; each certified unbounded
  std::string conditions;         // per-prime certification summary
};

struct EvidenceEntry {
  i64 modulus = 0;
  // bruteforce | lift-shared-prime | lift-coprime-prime | lift-five |
  // two-power-rule | three-power-rule | seven-power-rule
  std::string source;
};

struct ClassificationResult {
  RecurrenceSpec spec;
  i64 bound = 2;
  std::vector<i64> members;               // all complete m in [2, bound]
  std::vector<FamilyDescriptor> structure; // minimal covering descriptors
  std::vector<EvidenceEntry> evidence;     // one entry per member
};

// Exhaustive sweep + certified tails + cross-validation.  sign must be +1
// (the sign=-1 family has closed-form rules instead; see variant_u.hpp).
ClassificationResult classify(const RecurrenceSpec& spec, i64 bound,
                              const SweepOptions& opt = {});

// All moduli in [2, limit] generated by the descriptors (bases times
// products of their lift primes), sorted ascending.
std::vector<i64> expand_structure(const ClassificationResult& result, i64 limit);

struct ExplainTrace {
  i64 modulus = 0;
  bool member = false;
  std::vector<std::string> steps;
};

// Derivation trace for one modulus: a brute-force verdict below the bound
// (with a divisor witness for non-members), or a re-verified lift chain
// from a descriptor base above it.  Above the bound, moduli that no
// descriptor covers are first tested against the impossibility facts
// (candidate-prime support, exponent caps); if those cannot settle the
// question either, OutOfScopeError.
ExplainTrace explain(const ClassificationResult& result, i64 m);

}  // namespace rescomp
