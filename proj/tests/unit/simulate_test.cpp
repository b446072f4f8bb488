#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "msgpt/simulate.hpp"

using namespace msgpt;

TEST_CASE("traced runs") {
  const std::vector<Count> seven{7};
  const SimulationTrace a = simulate(alg1_plan(16, 4), seven);
  CHECK(a.total_tests == 8);
  CHECK(a.identified == seven);

  // Both defectives land in the first stage-1 group of size 2: 5 group
  // tests, then a size-2 group whose count is forced to 2.
  const std::vector<Count> pair{1, 2};
  const SimulationTrace b = simulate(alg3_plan(9, 2, 2), pair);
  CHECK(b.total_tests == 5);
  CHECK(b.identified == pair);
  CHECK(b.stages.front().tests == 5);
}

TEST_CASE("malformed defective sets") {
  const StrategyPlan plan = alg3_plan(9, 2, 2);
  CHECK_THROWS_AS(simulate(plan, std::vector<Count>{1}), std::invalid_argument);
  CHECK_THROWS_AS(simulate(plan, std::vector<Count>{1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(simulate(plan, std::vector<Count>{0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(simulate(plan, std::vector<Count>{3, 10}), std::invalid_argument);
}

TEST_CASE("worst cases match the counts") {
  CHECK(worst_case(alg1_plan(505, 3), 505, 1).tests == TestCount(24));
  CHECK(worst_case(alg3_plan(9, 2, 2), 9, 2).tests == TestCount(9));
  const WorstCase w = worst_case(alg3_plan(54, 2, 3), 54, 2);
  CHECK(w.tests == TestCount(18));
  CHECK(w.sets_checked == binomial(54, 2));
  CHECK(simulate(alg3_plan(54, 2, 3), w.witness).total_tests == 18);
  CHECK(worst_case(alg2_plan(5, 5, 2), 5, 5).tests == TestCount(0));
}

TEST_CASE("set budget is a hard limit") {
  CHECK_THROWS_AS(worst_case(alg2_plan(200, 4, 3), 200, 4, 1000), ResourceError);
}

TEST_CASE("binomial") {
  CHECK(binomial(9, 2) == 36);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(200, 100) == INT64_MAX);
}
