#pragma once

// Brute-force ground truth for small instances. Nothing here reuses the
// reductions of dp.hpp: every integer partition of every candidate group is
// enumerated, and the adversary's reply is evaluated over all parts.

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>

#include "msgpt/dp.hpp"
#include "msgpt/test_count.hpp"

namespace msgpt {

enum class PartitionScope { kAll, kAverageOnly };

std::string_view to_string(PartitionScope scope);

struct OracleConfig {
  SingletonMode singleton = SingletonMode::kResolvedZero;
  PartitionScope scope = PartitionScope::kAll;

  std::string to_string() const;
};

inline constexpr Count kOracleT1MaxN = 64;
inline constexpr Count kOracleT2MaxN = 60;
inline constexpr int kOracleMaxS = 4;

/// Calls visit(parts) for every partition of n into parts in
/// nonincreasing order with at least `min_parts` parts.
void for_each_partition(Count n, Count min_parts,
                        const std::function<void(std::span<const Count>)>& visit);

/// Max product over all compositions of `budget` into s positive parts.
Count max_composition_product(Count budget, int s);

/// Exact minimax values, memoized per (size, stages) for one config.
/// Throws ResourceError past n <= 64 (T1) / n <= 60 (T2) or s <= 4.
class PartitionOracle {
 public:
  explicit PartitionOracle(OracleConfig config) : config_(config) {}

  TestCount t1(Count n, int s);
  TestCount t2(Count n, int s);

  const OracleConfig& config() const { return config_; }

 private:
  std::int64_t v1(Count k, int s);
  std::int64_t v2(Count k, int s);

  OracleConfig config_;
  std::map<std::pair<Count, int>, std::int64_t> memo1_;
  std::map<std::pair<Count, int>, std::int64_t> memo2_;
};

TestCount oracle_t1(Count n, int s, OracleConfig config = {SingletonMode::kStrict, PartitionScope::kAll});
TestCount oracle_t2(Count n, int s, OracleConfig config = {});

}  // namespace msgpt
