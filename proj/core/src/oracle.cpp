#include "msgpt/oracle.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "msgpt/errors.hpp"

namespace msgpt {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

std::int64_t add(std::int64_t a, std::int64_t b) {
  return (a >= kInf || b >= kInf) ? kInf : std::min(a + b, kInf);
}

TestCount to_count(std::int64_t v) { return v >= kInf ? TestCount::unreachable() : TestCount(v); }

void partitions_rec(Count remaining, Count max_part, Count min_parts, std::vector<Count>& parts,
                    const std::function<void(std::span<const Count>)>& visit) {
  if (remaining == 0) {
    if (static_cast<Count>(parts.size()) >= min_parts) visit(parts);
    return;
  }
  for (Count p = std::min(remaining, max_part); p >= 1; --p) {
    parts.push_back(p);
    partitions_rec(remaining - p, p, min_parts, parts, visit);
    parts.pop_back();
  }
}

void compositions_rec(Count remaining, int slots, Count product, Count& best) {
  if (slots == 1) {
    best = std::max(best, sat_mul(product, remaining));
    return;
  }
  for (Count first = 1; first <= remaining - (slots - 1); ++first) {
    compositions_rec(remaining - first, slots - 1, sat_mul(product, first), best);
  }
}

}  // namespace

std::string_view to_string(PartitionScope scope) {
  return scope == PartitionScope::kAll ? "all-partitions" : "average-only";
}

std::string OracleConfig::to_string() const {
  return std::string(msgpt::to_string(singleton)) + "/" + std::string(msgpt::to_string(scope));
}

void for_each_partition(Count n, Count min_parts,
                        const std::function<void(std::span<const Count>)>& visit) {
  if (n < 0) throw std::invalid_argument("for_each_partition: need n >= 0");
  std::vector<Count> parts;
  partitions_rec(n, n, min_parts, parts, visit);
}

Count max_composition_product(Count budget, int s) {
  if (s < 1 || budget < s) throw std::invalid_argument("max_composition_product: need budget >= s >= 1");
  Count best = 0;
  compositions_rec(budget, s, 1, best);
  return best;
}

std::int64_t PartitionOracle::v1(Count k, int s) {
  if (k == 1) return config_.singleton == SingletonMode::kStrict ? kInf : 0;
  if (s == 1) return k;
  const auto key = std::make_pair(k, s);
  if (auto it = memo1_.find(key); it != memo1_.end()) return it->second;

  std::vector<std::int64_t> below(static_cast<std::size_t>(k));
  for (Count p = 1; p < k; ++p) below[static_cast<std::size_t>(p)] = v1(p, s - 1);

  std::int64_t best = kInf;
  if (config_.scope == PartitionScope::kAverageOnly) {
    for (Count m = 2; m <= k; ++m) {
      // Every part of the m-average partition is evaluated, not only the largest.
      std::int64_t worst = 0;
      for (const Count p : average_partition(k, m)) worst = std::max(worst, below[static_cast<std::size_t>(p)]);
      best = std::min(best, add(m, worst));
    }
  } else {
    // Depth-first over nonincreasing parts. Appending parts never lowers the
    // part count or the running max, so a branch whose next completion
    // cannot beat `best` is cut.
    auto rec = [&](auto&& self, Count remaining, Count max_part, Count count, std::int64_t worst) -> void {
      if (remaining == 0) {
        if (count >= 2) best = std::min(best, add(count, worst));
        return;
      }
      if (add(count + 1, worst) >= best) return;
      for (Count p = std::min(remaining, max_part); p >= 1; --p) {
        self(self, remaining - p, p, count + 1, std::max(worst, below[static_cast<std::size_t>(p)]));
      }
    };
    rec(rec, k, k - 1, 0, 0);
  }
  memo1_.emplace(key, best);
  return best;
}

std::int64_t PartitionOracle::v2(Count k, int s) {
  if (k < 2) throw std::logic_error("oracle v2: a group holding two defectives has size >= 2");
  if (k == 2) return 0;
  if (s == 1) return k;
  const auto key = std::make_pair(k, s);
  if (auto it = memo2_.find(key); it != memo2_.end()) return it->second;

  std::vector<std::int64_t> single(static_cast<std::size_t>(k));
  std::vector<std::int64_t> both(static_cast<std::size_t>(k), 0);
  for (Count p = 1; p < k; ++p) {
    single[static_cast<std::size_t>(p)] = v1(p, s - 1);
    if (p >= 2) both[static_cast<std::size_t>(p)] = v2(p, s - 1);
  }

  // Adversary: both defectives in one part a (needs size >= 2), or one each
  // in two distinct parts a < b. Top-two of the single-defective values over
  // all parts gives the worst split without assuming monotonicity.
  struct Acc {
    Count count = 0;
    std::int64_t top1 = -1;
    std::int64_t top2 = -1;
    std::int64_t both = 0;
    Acc with(std::int64_t single_value, std::int64_t both_value) const {
      Acc next = *this;
      ++next.count;
      if (single_value > next.top1) {
        next.top2 = next.top1;
        next.top1 = single_value;
      } else if (single_value > next.top2) {
        next.top2 = single_value;
      }
      next.both = std::max(next.both, both_value);
      return next;
    }
    std::int64_t reply() const {
      const std::int64_t split = add(std::max<std::int64_t>(top1, 0), std::max<std::int64_t>(top2, 0));
      return std::max(split, both);
    }
  };

  std::int64_t best = kInf;
  if (config_.scope == PartitionScope::kAverageOnly) {
    for (Count m = 2; m <= k; ++m) {
      Acc acc;
      for (const Count p : average_partition(k, m)) {
        acc = acc.with(single[static_cast<std::size_t>(p)], both[static_cast<std::size_t>(p)]);
      }
      best = std::min(best, add(m, acc.reply()));
    }
  } else {
    auto rec = [&](auto&& self, Count remaining, Count max_part, const Acc& acc) -> void {
      if (remaining == 0) {
        if (acc.count >= 2) best = std::min(best, add(acc.count, acc.reply()));
        return;
      }
      if (add(acc.count + 1, acc.reply()) >= best) return;
      for (Count p = std::min(remaining, max_part); p >= 1; --p) {
        self(self, remaining - p, p,
             acc.with(single[static_cast<std::size_t>(p)], both[static_cast<std::size_t>(p)]));
      }
    };
    rec(rec, k, k - 1, Acc{});
  }
  memo2_.emplace(key, best);
  return best;
}

TestCount PartitionOracle::t1(Count n, int s) {
  if (n < 1 || s < 1) throw std::invalid_argument("oracle_t1: need n, s >= 1");
  if (n > kOracleT1MaxN || s > kOracleMaxS) {
    throw ResourceError("oracle_t1: limited to n <= 64, s <= 4");
  }
  return to_count(v1(n, s));
}

TestCount PartitionOracle::t2(Count n, int s) {
  if (n < 2 || s < 1) throw std::invalid_argument("oracle_t2: need n >= 2, s >= 1");
  if (n > kOracleT2MaxN || s > kOracleMaxS) {
    throw ResourceError("oracle_t2: limited to n <= 60, s <= 4");
  }
  return to_count(v2(n, s));
}

TestCount oracle_t1(Count n, int s, OracleConfig config) {
  PartitionOracle oracle(config);
  return oracle.t1(n, s);
}

TestCount oracle_t2(Count n, int s, OracleConfig config) {
  PartitionOracle oracle(config);
  return oracle.t2(n, s);
}

}  // namespace msgpt
