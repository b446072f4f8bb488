#include <stdexcept>

#include "doctest.h"
#include "msgpt/dp.hpp"
#include "msgpt/formulas.hpp"
#include "msgpt/oracle.hpp"

using namespace msgpt;

TEST_CASE("T1 table") {
  CHECK(dp_t1(16, 4) == TestCount(8));
  CHECK(dp_t1(505, 3) == TestCount(24));
  for (Count n = 2; n <= 40; ++n) CHECK(dp_t1(n, 1) == TestCount(n));
  CHECK(dp_t1(1, 2, SingletonMode::kStrict).is_unreachable());
  CHECK(dp_t1(1, 2, SingletonMode::kResolvedZero) == TestCount(0));
}

TEST_CASE("two-stage d-defective table") {
  CHECK(dp_td_s2(9, 2) == TestCount(9));
  CHECK(dp_td_s2(8, 2) == TestCount(8));
  for (Count n = 4; n <= 200; ++n) CHECK(dp_td_s2(n, 1) == dp_t1(n, 2));
}

TEST_CASE("T2 table") {
  CHECK(dp_t2(8, 3) == TestCount(8));
  CHECK(dp_t2(8, 3) == oracle_t2(8, 3));
  DpEngine engine;
  for (Count n = 8; n <= 300; ++n) CHECK(engine.t2(n, 2) == engine.td_s2(n, 2));
}

TEST_CASE("witnesses follow the tie rule") {
  CHECK(dp_optimal_first_m(Family::kT1, 16, 1, 4).m == 2);
  // m = 3 ([3,3,3]), 4 ([3,2,2,2]) and 5 ([2,2,2,2,1]) all reach 9; smallest m wins.
  const PartitionWitness w = dp_optimal_first_m(Family::kTdS2, 9, 2, 2);
  CHECK(w.m == 3);
  CHECK(w.value == TestCount(9));
  CHECK(dp_optimal_first_m(Family::kTdS2, 8, 2, 2).value == TestCount(8));
}

TEST_CASE("T2 at (513, 4)") {
  DpEngine engine;
  const PartitionWitness w = engine.witness(Family::kT2, 513, 2, 4);
  CHECK(w.value == engine.t2(513, 4));
  CHECK(w.value == TestCount(33));
  CHECK(w.t2.has_value());
  CHECK(engine.t2_objective(513, 4, w.m, w.t1, *w.t2) == w.value);
  // The two-group split (505, 8) is not optimal: one group continues on 505 items.
  CHECK(engine.t2_objective(513, 4, 2, 505, 8) > w.value);
  CHECK(engine.t2_fixed_m(513, 4, 2).value >= w.value);
}

TEST_CASE("strict witness raises on unreachable values") {
  DpEngine engine(SingletonMode::kStrict);
  CHECK_THROWS_AS(engine.witness(Family::kT1, 3, 1, 2), std::domain_error);
}

// Resolved-zero may leave a stage unused, so it never costs more.
TEST_CASE("resolved-zero is never above strict in the domain") {
  DpEngine zero(SingletonMode::kResolvedZero);
  DpEngine strict(SingletonMode::kStrict);
  for (int s = 2; s <= 5; ++s) {
    for (Count n = 2 * sat_pow(2, s); n <= 1500; ++n) CHECK(zero.t2(n, s) <= strict.t2(n, s));
  }
}

TEST_CASE("growing a table does not change earlier entries") {
  DpEngine small;
  small.reserve(200, 3);
  std::vector<TestCount> before;
  for (Count n = 2; n <= 200; ++n) before.push_back(small.t2(n, 3));
  small.reserve(900, 5);
  for (Count n = 2; n <= 200; ++n) CHECK(small.t2(n, 3) == before[static_cast<std::size_t>(n - 2)]);
}

TEST_CASE("serial and parallel builds are identical") {
  DpEngine serial(SingletonMode::kResolvedZero, 1);
  DpEngine parallel(SingletonMode::kResolvedZero, 4);
  serial.reserve(2000, 5);
  parallel.reserve(2000, 5);
  for (int s = 1; s <= 5; ++s) {
    for (Count n = 2; n <= 2000; ++n) {
      CHECK(serial.t1(n, s) == parallel.t1(n, s));
      CHECK(serial.t2(n, s) == parallel.t2(n, s));
    }
  }
  for (Count n = 600; n <= 2000; n += 97) {
    const PartitionWitness a = serial.witness(Family::kT2, n, 2, 4);
    const PartitionWitness b = parallel.witness(Family::kT2, n, 2, 4);
    CHECK(a.m == b.m);
    CHECK(a.t1 == b.t1);
    CHECK(a.t2 == b.t2);
  }
}

TEST_CASE("mode and family names") {
  CHECK(parse_singleton_mode("strict") == SingletonMode::kStrict);
  CHECK(parse_singleton_mode("resolved-zero") == SingletonMode::kResolvedZero);
  CHECK_THROWS(parse_singleton_mode("lenient"));
  CHECK(parse_family(to_string(Family::kTdS2)) == Family::kTdS2);
  CHECK_THROWS(parse_family("t3"));
}
