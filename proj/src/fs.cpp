#include "rescomp/fs.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace rescomp {

FundamentalSystem enumerate_fs(i64 q, i64 m) {
  if (q == 0) throw std::invalid_argument("q must be nonzero");
  if (m < 1) throw std::invalid_argument("modulus must be >= 1");
  if (m > kMaxFsModulus)
    throw std::invalid_argument("fundamental system enumeration is capped at m <= " +
                                std::to_string(kMaxFsModulus));
  FundamentalSystem fs;
  fs.modulus = m;
  fs.q = q;
  if (m == 1) return fs;
  const i64 qm = mod_norm(q, m);
  std::vector<bool> visited(static_cast<std::size_t>(m * m), false);
  visited[0] = true;  // (0,0), the trivial fixed point
  std::vector<i64> orbit;
  for (i64 sx = 0; sx < m; ++sx) {
    for (i64 sy = 0; sy < m; ++sy) {
      if (visited[static_cast<std::size_t>(sx * m + sy)]) continue;
      orbit.clear();
      i64 x = sx, y = sy;
      do {
        visited[static_cast<std::size_t>(x * m + y)] = true;
        orbit.push_back(x);
        i64 next = (mul_mod(qm, y, m) + x) % m;
        x = y;
        y = next;
      } while (x != sx || y != sy);
      Period p;
      p.modulus = m;
      p.length = static_cast<i64>(orbit.size());
      p.residues = canonical_rotation(orbit);
      fs.total_terms += p.length;
      fs.periods.push_back(std::move(p));
    }
  }
  std::sort(fs.periods.begin(), fs.periods.end(), [](const Period& a, const Period& b) {
    if (a.length != b.length) return a.length < b.length;
    return a.residues < b.residues;
  });
  return fs;
}

FsDecomposition verify_fs_decomposition_pow3(i64 q, int n) {
  if (n < 1) throw HypothesisViolation("n must be >= 1");
  if (q % 3 == 0) throw HypothesisViolation("gcd(q, 3) = 1 is required");
  if (i64 q9 = mod_norm(q, 9); q9 == 4 || q9 == 5)
    throw HypothesisViolation("q = 4,5 mod 9 is excluded");
  FsDecomposition out;
  out.n = n;
  i64 m = 1;
  for (int i = 0; i < n; ++i) m *= 3;
  out.m = m;

  FundamentalSystem whole = enumerate_fs(q, m);
  out.total_terms = whole.total_terms;

  RecurrenceSpec unit{0, 1, q, +1};
  Period c = find_period(unit, m);

  // Unit-scale copies r*C for r coprime to 3, 1 <= r < m/2.
  std::vector<std::vector<i64>> pieces;
  for (i64 r = 1; 2 * r < m; ++r) {
    if (r % 3 == 0) continue;
    std::vector<i64> scaled(c.residues.size());
    for (std::size_t i = 0; i < scaled.size(); ++i) scaled[i] = mul_mod(r, c.residues[i], m);
    pieces.push_back(canonical_rotation(scaled));
    out.scaled_terms += static_cast<i64>(scaled.size());
    ++out.scaled_count;
  }

  // 3 * FS(3^{n-1}): same orbits one level down, residues tripled.
  FundamentalSystem lower = enumerate_fs(q, m / 3);
  for (const Period& d : lower.periods) {
    std::vector<i64> lifted(d.residues.size());
    for (std::size_t i = 0; i < lifted.size(); ++i) lifted[i] = 3 * d.residues[i];
    pieces.push_back(canonical_rotation(lifted));
    out.embedded_terms += static_cast<i64>(lifted.size());
  }

  std::vector<std::vector<i64>> sorted_pieces = pieces;
  std::sort(sorted_pieces.begin(), sorted_pieces.end());
  out.distinct =
      std::adjacent_find(sorted_pieces.begin(), sorted_pieces.end()) == sorted_pieces.end();
  out.counts_match = out.scaled_terms + out.embedded_terms == out.total_terms &&
                     out.total_terms == m * m - 1;

  std::vector<std::vector<i64>> enumerated;
  enumerated.reserve(whole.periods.size());
  for (const Period& p : whole.periods) enumerated.push_back(p.residues);
  std::sort(enumerated.begin(), enumerated.end());
  out.union_matches = sorted_pieces == enumerated;

  // Exactly one period carries invariant class {1, m-1}: the (0,1) period.
  int unit_class_count = 0;
  bool unit_is_base = false;
  for (const Period& p : whole.periods) {
    if (p.length < 2) continue;
    Invariant inv = invariant_of({p.residues[0], p.residues[1], q, +1}, m);
    bool is_unit_class = (inv.reduced_class[0] == 1 && inv.reduced_class[1] == m - 1) ||
                         (inv.reduced_class[0] == m - 1 && inv.reduced_class[1] == 1);
    if (is_unit_class) {
      ++unit_class_count;
      if (p.residues == c.residues) unit_is_base = true;
    }
  }
  out.unit_class_unique = unit_class_count == 1 && unit_is_base;

  out.holds = out.distinct && out.counts_match && out.union_matches && out.unit_class_unique;
  return out;
}

}  // namespace rescomp
