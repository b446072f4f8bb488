#include "msgpt/simulate.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace msgpt {

namespace {

struct Live {
  Count first;
  Count size;
  Count lo = 1;
  Count hi = 1;
};

Count defectives_in(std::span<const Count> sorted, Count first, Count size) {
  const auto lo = std::lower_bound(sorted.begin(), sorted.end(), first);
  const auto hi = std::lower_bound(lo, sorted.end(), first + size);
  return static_cast<Count>(hi - lo);
}

// Tightens each live group's defective-count interval from the frontier
// constraints, then moves every group whose content is forced into
// `identified`.
void resolve(std::vector<Live>& live, std::vector<Count>& identified, Count d) {
  const Count remaining = d - static_cast<Count>(identified.size());
  const auto groups = static_cast<Count>(live.size());
  Count total_size = 0;
  for (const Live& g : live) total_size += g.size;
  for (Live& g : live) {
    g.lo = std::max<Count>(1, remaining - (total_size - g.size));
    g.hi = std::min<Count>(g.size, remaining - (groups - 1));
  }
  std::erase_if(live, [&](const Live& g) {
    const bool forced = g.size == 1 || (g.lo == g.hi && g.lo == g.size);
    if (forced) {
      for (Count item = g.first; item < g.first + g.size; ++item) identified.push_back(item);
    }
    return forced;
  });
}

Count run(const StrategyPlan& plan, std::span<const Count> defectives, SimulationTrace* trace) {
  const ProblemInstance& p = plan.problem();
  std::vector<Live> live{Live{1, p.n}};
  std::vector<Live> next;
  std::vector<Count> identified;
  Count total = 0;

  for (int stage = 1; stage <= p.s; ++stage) {
    resolve(live, identified, p.d);
    if (live.empty()) break;
    SimulationTrace::Stage record;
    record.stage = stage;
    next.clear();
    for (const Live& g : live) {
      const CandidateGroup candidate{g.size, g.lo, g.hi, p.s - stage + 1};
      const Partition parts = plan.partition(stage, candidate);
      if (parts.empty()) throw PlanError("plan left a live group untested");
      SimulationTrace::GroupStep step{g.first, g.size, {}};
      Count first = g.first;
      for (const Count size : parts) {
        const bool positive = defectives_in(defectives, first, size) > 0;
        if (positive) next.push_back(Live{first, size});
        if (trace) step.parts.push_back(SimulationTrace::Part{first, size, positive});
        first += size;
      }
      record.tests += static_cast<Count>(parts.size());
      if (trace) record.groups.push_back(std::move(step));
    }
    total += record.tests;
    if (trace) {
      record.cumulative = total;
      trace->stages.push_back(std::move(record));
    }
    live.swap(next);
  }
  resolve(live, identified, p.d);
  if (!live.empty()) {
    throw PlanError("plan leaves " + std::to_string(live.size()) + " ambiguous group(s) after stage " +
                    std::to_string(p.s) + " on " + p.to_string());
  }
  std::sort(identified.begin(), identified.end());
  if (!std::equal(identified.begin(), identified.end(), defectives.begin(), defectives.end())) {
    throw PlanError("plan identified the wrong defective set on " + p.to_string());
  }
  if (trace) {
    trace->identified = std::move(identified);
    trace->total_tests = total;
  }
  return total;
}

}  // namespace

SimulationTrace simulate(const StrategyPlan& plan, std::span<const Count> defectives) {
  const ProblemInstance& p = plan.problem();
  if (static_cast<Count>(defectives.size()) != p.d) {
    throw std::invalid_argument("simulate: defective set must have exactly d = " + std::to_string(p.d) +
                                " items");
  }
  std::vector<Count> sorted(defectives.begin(), defectives.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("simulate: defective set has repeated items");
  }
  if (!sorted.empty() && (sorted.front() < 1 || sorted.back() > p.n)) {
    throw std::invalid_argument("simulate: defective items must lie in [1, n]");
  }
  SimulationTrace trace;
  run(plan, sorted, &trace);
  return trace;
}

std::int64_t binomial(Count n, Count k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t result = 1;
  for (Count i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays exact: result = C(n-k+i-1, i-1).
    const std::int64_t g = std::gcd(result, i);
    const std::int64_t factor = (n - k + i) / (i / g);
    const std::int64_t reduced = result / g;
    if (reduced > kSaturated / std::max<std::int64_t>(1, factor)) return kSaturated;
    result = reduced * factor;
  }
  return result;
}

WorstCase worst_case(const StrategyPlan& plan, Count n, Count d, std::int64_t set_budget) {
  if (n != plan.problem().n || d != plan.problem().d) {
    throw std::invalid_argument("worst_case: (n, d) does not match the plan");
  }
  const std::int64_t sets = binomial(n, d);
  if (sets > set_budget) {
    throw ResourceError("worst_case: C(" + std::to_string(n) + ", " + std::to_string(d) + ") = " +
                        std::to_string(sets) + " exceeds the budget of " + std::to_string(set_budget));
  }

  WorstCase result;
  std::vector<Count> current(static_cast<std::size_t>(d));
  std::iota(current.begin(), current.end(), Count{1});
  Count worst = -1;
  while (true) {
    const Count tests = run(plan, current, nullptr);
    ++result.sets_checked;
    if (tests > worst) {
      worst = tests;
      result.witness = current;
    }
    // Next combination in lexicographic order.
    std::int64_t k = d - 1;
    while (k >= 0 && current[static_cast<std::size_t>(k)] == n - d + k + 1) --k;
    if (k < 0) break;
    ++current[static_cast<std::size_t>(k)];
    for (auto r = static_cast<std::size_t>(k) + 1; r < current.size(); ++r) current[r] = current[r - 1] + 1;
  }
  result.tests = TestCount(worst);
  return result;
}

}  // namespace msgpt
