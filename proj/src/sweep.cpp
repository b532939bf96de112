#include "rescomp/sweep.hpp"

#include "rescomp/completeness.hpp"
#include "rescomp/order.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rescomp {

namespace {

void check_bound(i64 bound) {
  if (bound < 2) throw std::invalid_argument("sweep bound must be >= 2");
}

}  // namespace

std::vector<char> complete_sweep_serial(const RecurrenceSpec& spec, i64 bound) {
  validate(spec);
  check_bound(bound);
  std::vector<char> out(static_cast<std::size_t>(bound - 1), 0);
  for (i64 m = 2; m <= bound; ++m)
    out[static_cast<std::size_t>(m - 2)] = complete_modulo(spec, m) ? 1 : 0;
  return out;
}

std::vector<char> complete_sweep(const RecurrenceSpec& spec, i64 bound,
                                 const SweepOptions& opt) {
  validate(spec);
  check_bound(bound);
  std::vector<char> out(static_cast<std::size_t>(bound - 1), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) \
    num_threads(opt.threads > 0 ? opt.threads : omp_get_max_threads())
  for (i64 m = 2; m <= bound; ++m)
    out[static_cast<std::size_t>(m - 2)] = complete_modulo(spec, m) ? 1 : 0;
#else
  (void)opt;
  for (i64 m = 2; m <= bound; ++m)
    out[static_cast<std::size_t>(m - 2)] = complete_modulo(spec, m) ? 1 : 0;
#endif
  return out;
}

std::vector<i64> order_sweep_serial(i64 q, int sign, i64 bound) {
  check_bound(bound);
  std::vector<i64> out(static_cast<std::size_t>(bound - 1), 0);
  for (i64 m = 2; m <= bound; ++m)
    out[static_cast<std::size_t>(m - 2)] = order_direct(q, sign, m).order;
  return out;
}

std::vector<i64> order_sweep(i64 q, int sign, i64 bound, const SweepOptions& opt) {
  check_bound(bound);
  std::vector<i64> out(static_cast<std::size_t>(bound - 1), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) \
    num_threads(opt.threads > 0 ? opt.threads : omp_get_max_threads())
  for (i64 m = 2; m <= bound; ++m)
    out[static_cast<std::size_t>(m - 2)] = order_direct(q, sign, m).order;
#else
  (void)opt;
  for (i64 m = 2; m <= bound; ++m)
    out[static_cast<std::size_t>(m - 2)] = order_direct(q, sign, m).order;
#endif
  return out;
}

}  // namespace rescomp
