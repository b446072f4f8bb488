#pragma once

// Executable multistage partition strategies and their analysis quantities.
//
//   Algorithm 1  (d = 1): (t+1)-way average splits for the first i+1 stages,
//                t-way for the rest, with (t, i) the d = 1 bracket of n.
//   Algorithm 2  every unresolved positive group of size k with sigma stages
//                left is split into t+1 average parts, t^sigma < k <= (t+1)^sigma;
//                on the last stage every item is tested.
//   Algorithm 3  stage 1 is an average partition into dt+j+1 groups, then
//                Algorithm 2 on every positive group.

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "msgpt/dp.hpp"
#include "msgpt/formulas.hpp"
#include "msgpt/test_count.hpp"

namespace msgpt {

enum class Algorithm { kAlg1 = 1, kAlg2 = 2, kAlg3 = 3 };

Algorithm parse_algorithm(int id);

/// A live group as seen by the tester before a stage. The defective count is
/// what the outcomes so far force: exact when lo == hi.
struct CandidateGroup {
  Count size = 0;
  Count defectives_lo = 1;
  Count defectives_hi = 1;
  int stages_left = 0;

  bool count_known() const { return defectives_lo == defectives_hi; }
  bool resolved() const { return size == 1 || (count_known() && defectives_lo == size); }
};

class StrategyPlan {
 public:
  StrategyPlan(Algorithm algorithm, ProblemInstance problem);

  Algorithm algorithm() const { return algorithm_; }
  const ProblemInstance& problem() const { return problem_; }

  /// Number of average parts a live group is split into at 1-based `stage`,
  /// capped at the group size. Zero for resolved groups.
  Count split_count(int stage, const CandidateGroup& group) const;
  Partition partition(int stage, const CandidateGroup& group) const;

  /// t1_closed for Algorithm 1, md_count for Algorithm 3, h_d for Algorithm 2.
  TestCount predicted_worst_case() const;

  /// Stage-1 group count (Algorithm 3) or per-stage counts (Algorithm 1).
  const std::vector<Count>& fixed_splits() const { return fixed_splits_; }

  /// Line-oriented dump: `#` metadata lines, then one line per stage per
  /// reachable live group size:
  ///   stage k: group <id> size <n> -> parts [a,b,...]
  std::string serialize() const;

 private:
  Algorithm algorithm_;
  ProblemInstance problem_;
  std::vector<Count> fixed_splits_;
};

/// Throws std::invalid_argument when n < 2^s.
StrategyPlan alg1_plan(Count n, int s);
/// Algorithm 2 from the first stage; any n >= 2, 1 <= d <= n.
StrategyPlan alg2_plan(Count n, Count d, int s);
/// Throws std::invalid_argument when n < d 2^s.
StrategyPlan alg3_plan(Count n, Count d, int s);

/// t + 1 with t^sigma < k <= (t+1)^sigma; k itself when sigma == 1.
Count alg2_split(Count k, int stages_left);

/// Worst-case test count of Algorithm 2 on (n, d, s) when every positive
/// group's defective count is known. Memoized on (n, d, s).
class HdEvaluator {
 public:
  TestCount operator()(Count n, Count d, int s);

 private:
  std::map<std::tuple<Count, Count, int>, std::int64_t> memo_;
};

TestCount h_d(Count n, Count d, int s);

/// m + sum over the d largest parts t of average_partition(n, m) of c1(t),
/// with c1(1) = 0 and c1(t) = T1(t, s-1) in the engine's mode otherwise.
TestCount u_dm(DpEngine& engine, Count n, Count d, int s, Count m);
TestCount u_dm(Count n, Count d, int s, Count m);

}  // namespace msgpt
