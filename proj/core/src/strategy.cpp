#include "msgpt/strategy.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace msgpt {

Algorithm parse_algorithm(int id) {
  switch (id) {
    case 1: return Algorithm::kAlg1;
    case 2: return Algorithm::kAlg2;
    case 3: return Algorithm::kAlg3;
    default: throw std::invalid_argument("algorithm must be 1, 2 or 3");
  }
}

Count alg2_split(Count k, int stages_left) {
  if (k < 2) throw std::invalid_argument("alg2_split: resolved groups are never split (k < 2)");
  if (stages_left < 1) throw std::invalid_argument("alg2_split: no stages left");
  if (stages_left == 1) return k;
  // Smallest t >= 1 with (t+1)^sigma >= k.
  Count t = std::max<Count>(1, integer_root_floor(k, stages_left));
  while (t > 1 && sat_pow(t, stages_left) >= k) --t;
  while (sat_pow(t + 1, stages_left) < k) ++t;
  return t + 1;
}

StrategyPlan::StrategyPlan(Algorithm algorithm, ProblemInstance problem)
    : algorithm_(algorithm), problem_(problem) {
  switch (algorithm_) {
    case Algorithm::kAlg1: {
      const Bracket1 b = bracket_t1(problem_.n, problem_.s);
      for (int k = 1; k <= problem_.s; ++k) fixed_splits_.push_back(k <= b.i + 1 ? b.t + 1 : b.t);
      break;
    }
    case Algorithm::kAlg2:
      break;
    case Algorithm::kAlg3: {
      const BracketD b = bracket_td(problem_.n, problem_.d, problem_.s);
      fixed_splits_.push_back(problem_.d * b.t + b.j + 1);
      break;
    }
  }
}

Count StrategyPlan::split_count(int stage, const CandidateGroup& group) const {
  if (stage < 1 || stage > problem_.s) throw std::out_of_range("split_count: stage out of range");
  if (group.resolved()) return 0;
  Count m = 0;
  switch (algorithm_) {
    case Algorithm::kAlg1:
      m = fixed_splits_[static_cast<std::size_t>(stage - 1)];
      break;
    case Algorithm::kAlg2:
      m = alg2_split(group.size, problem_.s - stage + 1);
      break;
    case Algorithm::kAlg3:
      m = stage == 1 ? fixed_splits_.front() : alg2_split(group.size, problem_.s - stage + 1);
      break;
  }
  return std::min(m, group.size);
}

Partition StrategyPlan::partition(int stage, const CandidateGroup& group) const {
  const Count m = split_count(stage, group);
  if (m == 0) return {};
  return average_partition(group.size, m);
}

TestCount StrategyPlan::predicted_worst_case() const {
  switch (algorithm_) {
    case Algorithm::kAlg1: return t1_closed(problem_.n, problem_.s);
    case Algorithm::kAlg2: return h_d(problem_.n, problem_.d, problem_.s);
    case Algorithm::kAlg3: return md_count(problem_.n, problem_.d, problem_.s);
  }
  return TestCount::unreachable();
}

std::string StrategyPlan::serialize() const {
  std::ostringstream os;
  os << "# algorithm " << static_cast<int>(algorithm_) << "\n";
  os << "# instance n=" << problem_.n << " d=" << problem_.d << " s=" << problem_.s
     << (problem_.in_domain() ? "" : " (outside n >= d*2^s)") << "\n";
  os << "# predicted worst case " << predicted_worst_case() << "\n";

  std::set<Count, std::greater<>> sizes{problem_.n};
  for (int stage = 1; stage <= problem_.s && !sizes.empty(); ++stage) {
    std::set<Count, std::greater<>> next;
    int id = 0;
    for (const Count size : sizes) {
      CandidateGroup group{size, 1, std::min(size, problem_.d), problem_.s - stage + 1};
      if (stage == 1) group.defectives_lo = group.defectives_hi = problem_.d;
      os << "stage " << stage << ": group " << id++ << " size " << size << " -> ";
      const Partition parts = partition(stage, group);
      if (parts.empty()) {
        os << "resolved\n";
        continue;
      }
      os << "parts [";
      for (std::size_t k = 0; k < parts.size(); ++k) {
        os << (k ? "," : "") << parts[k];
        if (parts[k] >= 2) next.insert(parts[k]);
      }
      os << "]\n";
    }
    sizes = std::move(next);
  }
  return os.str();
}

StrategyPlan alg1_plan(Count n, int s) {
  return StrategyPlan(Algorithm::kAlg1, ProblemInstance::make(n, 1, s));
}

StrategyPlan alg2_plan(Count n, Count d, int s) {
  if (n < 2) throw std::invalid_argument("alg2_plan: need n >= 2");
  return StrategyPlan(Algorithm::kAlg2, ProblemInstance::make_out_of_domain(n, d, s));
}

StrategyPlan alg3_plan(Count n, Count d, int s) {
  return StrategyPlan(Algorithm::kAlg3, ProblemInstance::make(n, d, s));
}

TestCount HdEvaluator::operator()(Count n, Count d, int s) {
  if (n < 0 || d < 0 || d > n) throw std::invalid_argument("h_d: need 0 <= d <= n");
  if (s < 1) throw std::invalid_argument("h_d: need s >= 1");
  if (d == 0 || d == n || n <= 1) return TestCount(0);
  if (s == 1) return TestCount(n);

  const auto key = std::make_tuple(n, d, s);
  if (auto it = memo_.find(key); it != memo_.end()) return TestCount(it->second);

  const Count m = std::min(alg2_split(n, s), n);
  const Count small = n / m;
  const Count big_count = n % m;
  const Count small_count = m - big_count;

  constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::min();
  // best[x]: max total continuation cost with x defectives spread over the
  // parts folded in so far, each part holding at most its size.
  auto fold = [&](std::vector<std::int64_t> best, Count parts, Count size) {
    std::vector<std::int64_t> cost(static_cast<std::size_t>(std::min(size, d) + 1));
    for (Count c = 0; c < static_cast<Count>(cost.size()); ++c) {
      cost[static_cast<std::size_t>(c)] = (*this)(size, c, s - 1).value();
    }
    for (Count p = 0; p < parts; ++p) {
      std::vector<std::int64_t> next(best.size(), kNone);
      for (Count x = 0; x <= d; ++x) {
        if (best[static_cast<std::size_t>(x)] == kNone) continue;
        for (Count c = 0; c < static_cast<Count>(cost.size()) && x + c <= d; ++c) {
          auto& slot = next[static_cast<std::size_t>(x + c)];
          slot = std::max(slot, best[static_cast<std::size_t>(x)] + cost[static_cast<std::size_t>(c)]);
        }
      }
      best = std::move(next);
    }
    return best;
  };

  std::vector<std::int64_t> best(static_cast<std::size_t>(d + 1), kNone);
  best[0] = 0;
  best = fold(std::move(best), big_count, small + 1);
  best = fold(std::move(best), small_count, small);
  const std::int64_t worst = m + best[static_cast<std::size_t>(d)];
  memo_.emplace(key, worst);
  return TestCount(worst);
}

TestCount h_d(Count n, Count d, int s) {
  HdEvaluator eval;
  return eval(n, d, s);
}

TestCount u_dm(DpEngine& engine, Count n, Count d, int s, Count m) {
  if (s < 2) throw std::invalid_argument("u_dm: need s >= 2");
  if (m < d) throw std::invalid_argument("u_dm: need m >= d");
  if (m > n) throw std::invalid_argument("u_dm: need m <= n");
  const Count q = n / m;
  const Count r = n % m;
  TestCount total(m);
  for (Count k = 0; k < d; ++k) {
    const Count part = k < r ? q + 1 : q;
    total += part == 1 ? TestCount(0) : engine.t1(part, s - 1);
  }
  return total;
}

TestCount u_dm(Count n, Count d, int s, Count m) {
  DpEngine engine(SingletonMode::kResolvedZero);
  return u_dm(engine, n, d, s, m);
}

}  // namespace msgpt
