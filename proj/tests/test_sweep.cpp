#include "doctest.h"
#include "oracle.hpp"

#include "rescomp/core.hpp"
#include "rescomp/sweep.hpp"

using namespace rescomp;

TEST_SUITE("sweep") {

TEST_CASE("completeness sweep matches the serial kernel and the oracle") {
  for (i64 q : {1LL, 3LL}) {
    RecurrenceSpec spec{0, 1, q, +1};
    auto par = complete_sweep(spec, 400, SweepOptions{});
    auto ser = complete_sweep_serial(spec, 400);
    REQUIRE(par.size() == ser.size());
    CHECK(par == ser);
    for (i64 m = 2; m <= 400; ++m)
      CHECK(static_cast<bool>(par[static_cast<std::size_t>(m - 2)]) ==
            oracle::complete(0, 1, q, +1, m));
  }
}

TEST_CASE("sweeps accept arbitrary seeds and thread counts") {
  RecurrenceSpec spec{2, 2, 1, +1};
  auto base = complete_sweep_serial(spec, 250);
  for (int threads : {1, 2, 3, 8}) {
    SweepOptions opt;
    opt.threads = threads;
    CHECK(complete_sweep(spec, 250, opt) == base);
  }
}

TEST_CASE("order sweep matches the serial kernel and the oracle") {
  for (int sign : {+1, -1}) {
    auto par = order_sweep(3, sign, 300, SweepOptions{});
    auto ser = order_sweep_serial(3, sign, 300);
    CHECK(par == ser);
    for (i64 m = 2; m <= 300; ++m)
      CHECK(par[static_cast<std::size_t>(m - 2)] == oracle::order(3, sign, m));
  }
}

TEST_CASE("bound validation") {
  RecurrenceSpec spec{0, 1, 1, +1};
  CHECK_THROWS_AS(complete_sweep(spec, 1, SweepOptions{}), std::invalid_argument);
  CHECK_THROWS_AS(order_sweep_serial(1, +1, 0), std::invalid_argument);
  CHECK(complete_sweep(spec, 2, SweepOptions{}).size() == 1);
}

}  // TEST_SUITE
