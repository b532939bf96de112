// Fundamental systems: the complete set of rotation-inequivalent periods of
// w_n = q*w_{n-1} + w_{n-2} mod m, one per orbit of the state walk on the
// nonzero pairs.  With gcd(q, m) = 1 the orbits partition all m^2-1 nonzero
// states, so the term counts always sum to m^2-1.
//
// For m = 3^n (q coprime to 3, q != 4,5 mod 9) the system decomposes as the
// unit-scale copies r*C of the (0,1) period C (r coprime to 3, r < m/2)
// together with 3 times the fundamental system mod 3^{n-1}; the verifier
// below checks that decomposition exactly.

#pragma once

#include "rescomp/core.hpp"

#include <vector>

namespace rescomp {

// Orbit enumeration walks all m^2 states; refuse anything bigger.
inline constexpr i64 kMaxFsModulus = 2000;

struct FundamentalSystem {
  i64 modulus = 1;
  i64 q = 1;
  std::vector<Period> periods;  // canonical, sorted by (length, residues)
  i64 total_terms = 0;
};

// Throws std::invalid_argument for m > kMaxFsModulus.  m = 1 yields an
// empty system.
FundamentalSystem enumerate_fs(i64 q, i64 m);

struct FsDecomposition {
  i64 n = 1;
  i64 m = 3;
  i64 scaled_count = 0;    // unit-scale copies of the (0,1) period
  i64 scaled_terms = 0;
  i64 embedded_terms = 0;  // terms contributed by 3 * FS(3^{n-1})
  i64 total_terms = 0;     // enumerated FS(3^n) term count, m^2-1
  bool distinct = false;           // scaled and embedded periods pairwise distinct
  bool counts_match = false;       // scaled_terms + embedded_terms == total_terms
  bool union_matches = false;      // the union is exactly the enumerated system
  bool unit_class_unique = false;  // exactly one period has invariant class +-1,
                                   // and it is the (0,1) period itself
  bool holds = false;              // all of the above
};

// Throws HypothesisViolation unless gcd(q,3)=1, q != 4,5 mod 9, n >= 1.
FsDecomposition verify_fs_decomposition_pow3(i64 q, int n);

}  // namespace rescomp
