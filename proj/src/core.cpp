#include "rescomp/core.hpp"

#include <algorithm>
#include <numeric>

namespace rescomp {

void validate(const RecurrenceSpec& spec) {
  if (spec.q == 0) throw std::invalid_argument("recurrence coefficient q must be nonzero");
  if (spec.sign != 1 && spec.sign != -1) throw std::invalid_argument("sign must be +1 or -1");
}

i64 mod_norm(i64 x, i64 m) {
  i64 r = x % m;
  return r < 0 ? r + m : r;
}

i64 mul_mod(i64 x, i64 y, i64 m) {
  return static_cast<i64>(static_cast<i128>(x) * y % m);
}

bool is_trivial_seed(const RecurrenceSpec& spec, i64 m) {
  return mod_norm(spec.a, m) == 0 && mod_norm(spec.b, m) == 0;
}

std::vector<i64> generate(const RecurrenceSpec& spec, i64 m, std::size_t n) {
  validate(spec);
  if (m < 1) throw std::invalid_argument("modulus must be >= 1");
  std::vector<i64> out;
  out.reserve(n);
  i64 x = mod_norm(spec.a, m), y = mod_norm(spec.b, m);
  i64 q = mod_norm(spec.q, m);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(x);
    i64 next = mul_mod(q, y, m);
    next = spec.sign > 0 ? (next + x) % m : mod_norm(next - x, m);
    x = y;
    y = next;
  }
  return out;
}

Mat2 companion_matrix(const RecurrenceSpec& spec, i64 m) {
  validate(spec);
  if (m < 1) throw std::invalid_argument("modulus must be >= 1");
  Mat2 r;
  r.m = m;
  r.e = {mod_norm(spec.q, m), 1 % m, mod_norm(spec.sign, m), 0};
  return r;
}

Mat2 mat_mul(const Mat2& x, const Mat2& y) {
  const i64 m = x.m;
  Mat2 r;
  r.m = m;
  r.e[0] = (mul_mod(x.e[0], y.e[0], m) + mul_mod(x.e[1], y.e[2], m)) % m;
  r.e[1] = (mul_mod(x.e[0], y.e[1], m) + mul_mod(x.e[1], y.e[3], m)) % m;
  r.e[2] = (mul_mod(x.e[2], y.e[0], m) + mul_mod(x.e[3], y.e[2], m)) % m;
  r.e[3] = (mul_mod(x.e[2], y.e[1], m) + mul_mod(x.e[3], y.e[3], m)) % m;
  return r;
}

Mat2 companion_power(const RecurrenceSpec& spec, unsigned long long exp, i64 m) {
  Mat2 base = companion_matrix(spec, m);
  Mat2 acc;
  acc.m = m;
  acc.e = {1 % m, 0, 0, 1 % m};
  while (exp > 0) {
    if (exp & 1ULL) acc = mat_mul(acc, base);
    base = mat_mul(base, base);
    exp >>= 1ULL;
  }
  return acc;
}

Invariant invariant_of(const RecurrenceSpec& spec, i64 m) {
  validate(spec);
  if (m < 1) throw std::invalid_argument("modulus must be >= 1");
  Invariant inv;
  const i128 a = spec.a, b = spec.b, q = spec.q;
  inv.raw = static_cast<i128>(spec.sign) * a * a + q * a * b - b * b;
  inv.modulus = m;
  i64 r = static_cast<i64>(inv.raw % m);
  if (r < 0) r += m;
  inv.reduced_class = {r, (m - r) % m};
  inv.gcd_with_modulus = std::gcd(r, m);
  if (inv.gcd_with_modulus == 0) inv.gcd_with_modulus = m;  // gcd(0, m)
  return inv;
}

std::string to_string_i128(i128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  std::string s;
  while (u > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

std::vector<i64> canonical_rotation(const std::vector<i64>& v) {
  const std::size_t n = v.size();
  if (n <= 1) return v;
  // Booth's least-rotation algorithm on the doubled sequence.
  std::vector<std::size_t> f(2 * n, static_cast<std::size_t>(-1));
  std::size_t k = 0;
  auto at = [&](std::size_t i) { return v[i % n]; };
  for (std::size_t j = 1; j < 2 * n; ++j) {
    i64 sj = at(j);
    std::size_t i = f[j - k - 1];
    while (i != static_cast<std::size_t>(-1) && sj != at(k + i + 1)) {
      if (sj < at(k + i + 1)) k = j - i - 1;
      i = f[i];
    }
    if (i == static_cast<std::size_t>(-1) && sj != at(k + i + 1)) {
      if (sj < at(k + i + 1)) k = j;
      f[j - k] = static_cast<std::size_t>(-1);
    } else {
      f[j - k] = i + 1;
    }
  }
  std::vector<i64> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(v[(k + i) % n]);
  return out;
}

Period find_period(const RecurrenceSpec& spec, i64 m) {
  validate(spec);
  if (m < 1) throw std::invalid_argument("modulus must be >= 1");
  if (is_trivial_seed(spec, m))
    throw TrivialSeedError("seed is (0,0) mod " + std::to_string(m));
  const i64 q = mod_norm(spec.q, m);
  const i64 x0 = mod_norm(spec.a, m), y0 = mod_norm(spec.b, m);
  std::vector<i64> res;
  i64 x = x0, y = y0;
  const i128 cap = static_cast<i128>(m) * m;
  i128 steps = 0;
  do {
    res.push_back(x);
    i64 next = mul_mod(q, y, m);
    next = spec.sign > 0 ? (next + x) % m : mod_norm(next - x, m);
    x = y;
    y = next;
    if (++steps > cap)
      throw std::logic_error("state walk exceeded m^2 steps; invertibility is broken");
  } while (x != x0 || y != y0);
  Period p;
  p.modulus = m;
  p.length = static_cast<i64>(res.size());
  p.residues = canonical_rotation(res);
  return p;
}

}  // namespace rescomp
