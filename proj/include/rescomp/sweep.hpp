// Bulk per-modulus scans over m = 2..bound.  The parallel kernels write
// into index-addressed arrays so results are deterministic regardless of
// thread count; the *_serial twins are the reference implementations the
// tests compare against (and the benchmark baseline).

#pragma once

#include "rescomp/core.hpp"

#include <vector>

namespace rescomp {

struct SweepOptions {
  int threads = 0;  // 0 = library default
};

// verdicts[m-2] = complete_modulo(spec, m) for m in [2, bound].
std::vector<char> complete_sweep(const RecurrenceSpec& spec, i64 bound,
                                 const SweepOptions& opt = {});
std::vector<char> complete_sweep_serial(const RecurrenceSpec& spec, i64 bound);

// orders[m-2] = order of the companion matrix mod m (period length of the
// (0,1,q) seed), computed by direct orbit walk per modulus.
std::vector<i64> order_sweep(i64 q, int sign, i64 bound, const SweepOptions& opt = {});
std::vector<i64> order_sweep_serial(i64 q, int sign, i64 bound);

}  // namespace rescomp
