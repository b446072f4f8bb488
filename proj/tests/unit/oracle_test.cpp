#include <cstdint>
#include <vector>

#include "doctest.h"
#include "msgpt/errors.hpp"
#include "msgpt/formulas.hpp"
#include "msgpt/oracle.hpp"

using namespace msgpt;

namespace {

// Euler's pentagonal recurrence for p(n).
std::vector<std::int64_t> euler_partition_counts(int n_max) {
  std::vector<std::int64_t> p(static_cast<std::size_t>(n_max) + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    std::int64_t total = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      const std::int64_t sign = (k % 2 == 1) ? 1 : -1;
      total += sign * p[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) total += sign * p[static_cast<std::size_t>(n - g2)];
    }
    p[static_cast<std::size_t>(n)] = total;
  }
  return p;
}

}  // namespace

TEST_CASE("partition enumeration counts") {
  const auto p = euler_partition_counts(40);
  for (Count n = 1; n <= 40; ++n) {
    std::int64_t seen = 0;
    bool ordered = true;
    for_each_partition(n, 1, [&](std::span<const Count> parts) {
      ++seen;
      Count sum = 0;
      for (std::size_t k = 0; k < parts.size(); ++k) {
        sum += parts[k];
        if (k > 0 && parts[k] > parts[k - 1]) ordered = false;
      }
      if (sum != n) ordered = false;
    });
    CHECK(seen == p[static_cast<std::size_t>(n)]);
    CHECK(ordered);
  }
}

TEST_CASE("minimum part count") {
  std::int64_t seen = 0;
  for_each_partition(6, 3, [&](std::span<const Count> parts) {
    CHECK(parts.size() >= 3);
    ++seen;
  });
  // p(6) = 11, minus [6], [5,1], [4,2], [3,3].
  CHECK(seen == 7);
}

TEST_CASE("oracle values") {
  CHECK(oracle_t1(4, 2) == TestCount(4));
  CHECK(oracle_t1(2, 1) == TestCount(2));
  CHECK(oracle_t1(505 % 64, 3) == t1_closed(505 % 64, 3));
  CHECK(oracle_t2(8, 3) == TestCount(8));
  for (Count k = 2; k <= 10; ++k) CHECK(oracle_t2(2 * k, 1) == TestCount(2 * k));
}

TEST_CASE("oracle resource guards") {
  CHECK_THROWS_AS(oracle_t1(65, 2), ResourceError);
  CHECK_THROWS_AS(oracle_t2(61, 2), ResourceError);
  CHECK_THROWS_AS(oracle_t1(10, 5), ResourceError);
}

TEST_CASE("max composition product") {
  CHECK(max_composition_product(10, 3) == 36);
  CHECK(max_composition_product(3, 3) == 1);
  CHECK(max_composition_product(12, 4) == 81);
}
