#pragma once

// Memoized minimax dynamic programs:
//   T1(n, s)      m + T1(ceil(n/m), s-1), minimized over m
//   Td(n, 2)      m + (sum of the d largest parts of the m-average partition)
//   T2(n, s)      m + max{ c1(t1) + c1(t2), T2(t1, s-1) }, minimized over
//                 m and over all m-partitions with largest parts t1 >= t2
//
// Tables are filled bottom-up in s; within a layer entries are independent.
// Entries are never modified once written; growing a table recomputes it
// from scratch and yields the same values.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "msgpt/formulas.hpp"
#include "msgpt/test_count.hpp"

namespace msgpt {

/// Convention for a single item with stages still to spend.
///   kStrict:       T1(1, s) = Unreachable for every s (no stage may be skipped).
///   kResolvedZero: T1(1, s) = 0 (an isolated defective needs no more tests).
/// The mode applies to every T1 value the recursions consume.
enum class SingletonMode { kResolvedZero, kStrict };

std::string_view to_string(SingletonMode mode);
SingletonMode parse_singleton_mode(std::string_view text);

enum class Family { kT1, kT2, kTdS2 };

std::string_view to_string(Family family);
Family parse_family(std::string_view text);

/// Optimal first-stage choice. For T1 and Td-s2 only `m` and `t1` (the
/// largest part of the average partition) are meaningful.
struct PartitionWitness {
  Count m = 0;
  Count t1 = 0;
  std::optional<Count> t2;
  TestCount value;
};

/// Which group the "both defectives in one group" branch continues on.
enum class BranchReading { kLargerGroup, kSmallerGroup };

class DpEngine {
 public:
  explicit DpEngine(SingletonMode mode = SingletonMode::kResolvedZero, unsigned jobs = 1);

  SingletonMode mode() const { return mode_; }

  /// Ensure tables cover n <= n_max and s <= s_max.
  void reserve(Count n_max, int s_max);

  TestCount t1(Count n, int s);
  TestCount t2(Count n, int s);
  TestCount td_s2(Count n, Count d);

  /// Recorded argmin; ties broken by smallest m, then smallest t1.
  /// Throws std::domain_error when the value is Unreachable.
  PartitionWitness witness(Family family, Count n, Count d, int s);

  /// Best T2 objective with the first-stage group count fixed to m.
  PartitionWitness t2_fixed_m(Count n, int s, Count m);

  /// m + max{ c1(t1) + c1(t2), T2(g, s-1) } where g is t1 or t2 per
  /// `reading`. Does not check that (m, t1, t2) completes to a partition.
  TestCount t2_objective(Count n, int s, Count m, Count t1, Count t2,
                         BranchReading reading = BranchReading::kLargerGroup);

  /// T1(k, s) with the singleton convention of this engine; s == 0 means
  /// "no stages left" and is only finite for k == 1 in resolved-zero mode.
  TestCount c1(Count k, int s);

  Count capacity_n() const { return cap_n_; }
  int capacity_s() const { return cap_s_; }

 private:
  struct T1Entry {
    std::int32_t value;
    std::int32_t m;
  };
  struct T2Entry {
    std::int32_t value;
    std::int32_t m;
    std::int32_t t1;
    std::int32_t t2;
  };
  // Derived from layer s-1, consumed while building layer s of T2.
  struct LayerAux {
    // min over t' >= t of max(T2(t', s-1), c1(t', s-1)); a lower bound on
    // the bracketed term of every candidate with largest part >= t.
    std::vector<std::int64_t> suffix_floor;
    // c1(k, s-1) is finite exactly for k >= c1_finite_from.
    Count c1_finite_from = 1;
    std::vector<std::int64_t> t2_prefix_max;
  };

  void rebuild(Count n_max, int s_max);
  void build_t1_layer(int s);
  void build_t2_layer(int s);
  T2Entry search_t2(Count n, int s, const LayerAux& aux, Count m_lo, Count m_hi,
                    bool prune_m) const;

  SingletonMode mode_;
  unsigned jobs_;
  Count cap_n_ = 0;
  int cap_s_ = 0;
  // Index [s][n]; layer 0 is unused.
  std::vector<std::vector<T1Entry>> t1_;
  std::vector<std::vector<T2Entry>> t2_;
  std::vector<LayerAux> aux_;
  std::map<std::pair<Count, Count>, std::pair<TestCount, Count>> td_s2_;
};

/// One-shot helpers; each builds a private engine.
TestCount dp_t1(Count n, int s, SingletonMode mode = SingletonMode::kStrict);
TestCount dp_td_s2(Count n, Count d);
TestCount dp_t2(Count n, int s, SingletonMode mode = SingletonMode::kResolvedZero);
PartitionWitness dp_optimal_first_m(Family family, Count n, Count d, int s,
                                    SingletonMode mode = SingletonMode::kResolvedZero);

}  // namespace msgpt
