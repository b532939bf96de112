// Timing comparison of the serial and parallel sweep kernels.
#include "CLI11.hpp"

#include "rescomp/core.hpp"
#include "rescomp/sweep.hpp"

#include <chrono>
#include <cstdio>

using namespace rescomp;

namespace {

template <typename F>
double time_once(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sweep kernel benchmark: serial reference vs parallel"};
  i64 q = 3, bound = 20000;
  int threads = 0;
  app.add_option("--q", q, "recurrence coefficient");
  app.add_option("--bound", bound, "sweep bound");
  app.add_option("--threads", threads, "parallel thread count (0 = all)");
  CLI11_PARSE(app, argc, argv);

  RecurrenceSpec spec{0, 1, q, +1};
  SweepOptions opt;
  opt.threads = threads;

  std::vector<char> serial_c, parallel_c;
  std::vector<i64> serial_o, parallel_o;

  double ts_c = time_once([&] { serial_c = complete_sweep_serial(spec, bound); });
  double tp_c = time_once([&] { parallel_c = complete_sweep(spec, bound, opt); });
  double ts_o = time_once([&] { serial_o = order_sweep_serial(q, +1, bound); });
  double tp_o = time_once([&] { parallel_o = order_sweep(q, +1, bound, opt); });

  const bool ok = serial_c == parallel_c && serial_o == parallel_o;
  std::printf("completeness sweep  bound=%lld  serial %.3fs  parallel %.3fs  speedup %.2fx\n",
              bound, ts_c, tp_c, tp_c > 0 ? ts_c / tp_c : 0.0);
  std::printf("order sweep         bound=%lld  serial %.3fs  parallel %.3fs  speedup %.2fx\n",
              bound, ts_o, tp_o, tp_o > 0 ? ts_o / tp_o : 0.0);
  std::printf("results identical: %s\n", ok ? "yes" : "NO");
  return ok ? 0 : 3;
}
