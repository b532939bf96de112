// Core types and modular kernels for second-order linear recurrences
//
//   sign = +1:  w_n = q*w_{n-1} + w_{n-2}
//   sign = -1:  w_n = q*w_{n-1} - w_{n-2}
//
// with seeds w_0 = a, w_1 = b, reduced mod m into [0, m).  Everything else
// in the library (orders, completeness, classification) is built on the
// primitives here: sequence generation, companion-matrix powers, the
// quadratic invariant, and period extraction with canonical rotation.

#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rescomp {

using i64 = long long;
using i128 = __int128;

// ---------------------------------------------------------------------------
// Errors.  CLI maps these onto exit codes (see tools/).

// Seed is (0,0) mod m: the sequence is identically zero and has no period
// in the sense used here.
struct TrivialSeedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A stated hypothesis of a rule does not hold for the given input.
struct HypothesisViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Trial division gave up: a cofactor above the limit could not be certified.
struct FactorizationLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// sign = -1 with q = +-2: the characteristic discriminant q^2-4 vanishes.
struct DegenerateDiscriminant : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two independent routes to the same answer disagreed.  Always a bug or a
// broken assumption; never swallowed.
struct DisagreementError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A query cannot be decided from the computed evidence.
struct OutOfScopeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------

struct RecurrenceSpec {
  i64 a = 0;      // w_0
  i64 b = 1;      // w_1
  i64 q = 1;      // coefficient, nonzero
  int sign = +1;  // +1 or -1, the sign in front of w_{n-2}
};

// Throws std::invalid_argument on q == 0 or sign not in {-1,+1}.
void validate(const RecurrenceSpec& spec);

// x mod m normalized into [0, m).  m >= 1.
i64 mod_norm(i64 x, i64 m);

// (x * y) mod m without overflow, m < 2^62.
i64 mul_mod(i64 x, i64 y, i64 m);

bool is_trivial_seed(const RecurrenceSpec& spec, i64 m);

// First n terms of the sequence mod m.  The all-zero seed is fine here;
// generation is defined for it even though period analysis is not.
std::vector<i64> generate(const RecurrenceSpec& spec, i64 m, std::size_t n);

// ---------------------------------------------------------------------------
// Companion matrix.  For sign=+1 this is [[q,1],[1,0]] (determinant -1),
// for sign=-1 it is [[q,1],[-1,0]] (determinant +1).  Multiplying the row
// state (w_{n+1}, w_n) by powers of it advances the recurrence.

struct Mat2 {
  i64 m = 1;                     // modulus
  std::array<i64, 4> e{1, 0, 0, 1};  // row-major entries
  bool is_identity() const { return e[0] == 1 % m && e[1] == 0 && e[2] == 0 && e[3] == 1 % m; }
  bool operator==(const Mat2&) const = default;
};

Mat2 companion_matrix(const RecurrenceSpec& spec, i64 m);
Mat2 mat_mul(const Mat2& x, const Mat2& y);

// Companion matrix raised to exp, mod m.  Square-and-multiply, O(log exp).
Mat2 companion_power(const RecurrenceSpec& spec, unsigned long long exp, i64 m);

// ---------------------------------------------------------------------------
// Quadratic invariant.  raw = sign*a^2 + q*a*b - b^2, computed exactly.
// Along the sequence, w_{n+2}*w_n - w_{n+1}^2 = (-sign)^n * raw: for sign=+1
// the familiar alternating form a^2+q*a*b-b^2, for sign=-1 the constant
// -a^2+q*a*b-b^2.  Membership of gcd(raw, m) in the unit group is what the
// completeness rules test.

struct Invariant {
  i128 raw = 0;
  i64 modulus = 1;
  std::array<i64, 2> reduced_class{0, 0};  // {raw mod m, -raw mod m}
  i64 gcd_with_modulus = 1;                // gcd(raw mod m, m), gcd(0,m)=m
};

Invariant invariant_of(const RecurrenceSpec& spec, i64 m);

// Decimal rendering of a 128-bit value (raw can exceed 64 bits).
std::string to_string_i128(i128 v);

// ---------------------------------------------------------------------------
// Periods.  The state walk (x,y) -> (y, q*y + sign*x) over Z_m x Z_m is
// invertible, so every nontrivial orbit is a pure cycle.  A Period stores
// one full cycle of first components in canonical form (lexicographically
// least rotation); length is the cycle length, never the modulus' square
// by construction.

struct Period {
  i64 modulus = 1;
  std::vector<i64> residues;  // canonical rotation, residues in [0, m)
  i64 length = 0;             // == residues.size()
};

// Lexicographically least rotation (Booth's algorithm, O(n)).
std::vector<i64> canonical_rotation(const std::vector<i64>& v);

// Throws TrivialSeedError when (a,b) == (0,0) mod m.  The walk is cut off
// (with a logic_error) if it ever exceeds m^2 steps, which a correct state
// walk cannot.
Period find_period(const RecurrenceSpec& spec, i64 m);

}  // namespace rescomp
