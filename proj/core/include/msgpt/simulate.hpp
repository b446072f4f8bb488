#pragma once

// Exhaustive-adversary execution of a StrategyPlan.
//
// Items are numbered 1..n. Groups are contiguous item ranges, so an average
// partition of a group is a run of consecutive sub-ranges. Within a stage
// every live group is partitioned before any outcome of that stage is used.
// The tester only sees outcomes; a group's defective count counts as known
// when the frontier constraints force it (each positive group holds at least
// one defective, at most its size, and the live groups hold all defectives
// not yet identified).

#include <cstdint>
#include <span>
#include <vector>

#include "msgpt/errors.hpp"
#include "msgpt/strategy.hpp"

namespace msgpt {

struct SimulationTrace {
  struct Part {
    Count first = 0;  // first item, 1-based
    Count size = 0;
    bool positive = false;
  };
  struct GroupStep {
    Count first = 0;
    Count size = 0;
    std::vector<Part> parts;
  };
  struct Stage {
    int stage = 0;
    std::vector<GroupStep> groups;
    Count tests = 0;
    Count cumulative = 0;
  };

  std::vector<Stage> stages;
  std::vector<Count> identified;  // sorted
  Count total_tests = 0;
};

/// Throws std::invalid_argument for a malformed defective set and PlanError
/// when the plan leaves ambiguity or identifies the wrong set.
SimulationTrace simulate(const StrategyPlan& plan, std::span<const Count> defectives);

struct WorstCase {
  TestCount tests;
  std::vector<Count> witness;      // a defective set attaining `tests`
  std::int64_t sets_checked = 0;
};

inline constexpr std::int64_t kDefaultSetBudget = 10'000'000;

/// Max tests over every size-d defective set, with identification checked on
/// each. Throws ResourceError when C(n, d) exceeds `set_budget`.
WorstCase worst_case(const StrategyPlan& plan, Count n, Count d,
                     std::int64_t set_budget = kDefaultSetBudget);

/// Saturating binomial coefficient.
std::int64_t binomial(Count n, Count k);

}  // namespace msgpt
