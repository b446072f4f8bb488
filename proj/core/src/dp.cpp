#include "msgpt/dp.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "msgpt/parallel.hpp"

namespace msgpt {

namespace {

constexpr std::int32_t kInf = std::numeric_limits<std::int32_t>::max();
constexpr std::int64_t kInf64 = kInf;

std::int64_t add(std::int64_t a, std::int64_t b) {
  if (a >= kInf64 || b >= kInf64) return kInf64;
  return std::min(a + b, kInf64);
}

TestCount to_count(std::int64_t v) {
  return v >= kInf64 ? TestCount::unreachable() : TestCount(v);
}

Count ceil_div(Count a, Count b) { return (a + b - 1) / b; }

}  // namespace

std::string_view to_string(SingletonMode mode) {
  return mode == SingletonMode::kStrict ? "strict" : "resolved-zero";
}

SingletonMode parse_singleton_mode(std::string_view text) {
  if (text == "strict") return SingletonMode::kStrict;
  if (text == "resolved-zero") return SingletonMode::kResolvedZero;
  throw std::invalid_argument("unknown singleton mode '" + std::string(text) + "'");
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::kT1: return "T1";
    case Family::kT2: return "T2";
    case Family::kTdS2: return "Td-s2";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  if (text == "T1" || text == "t1") return Family::kT1;
  if (text == "T2" || text == "t2") return Family::kT2;
  if (text == "Td-s2" || text == "td-s2" || text == "Td2") return Family::kTdS2;
  throw std::invalid_argument("unknown family '" + std::string(text) + "'");
}

DpEngine::DpEngine(SingletonMode mode, unsigned jobs) : mode_(mode), jobs_(std::max(1u, jobs)) {}

void DpEngine::reserve(Count n_max, int s_max) {
  if (n_max < 1 || s_max < 1) throw std::invalid_argument("DpEngine::reserve: need n_max, s_max >= 1");
  if (n_max > std::numeric_limits<std::int32_t>::max() / 4) {
    throw std::length_error("DpEngine::reserve: n_max too large");
  }
  if (n_max <= cap_n_ && s_max <= cap_s_) return;
  const Count new_n = n_max <= cap_n_ ? cap_n_ : std::max<Count>({n_max, 2 * cap_n_, 64});
  rebuild(new_n, std::max(s_max, cap_s_));
}

void DpEngine::rebuild(Count n_max, int s_max) {
  cap_n_ = n_max;
  cap_s_ = s_max;
  const auto width = static_cast<std::size_t>(cap_n_ + 1);
  t1_.assign(static_cast<std::size_t>(cap_s_ + 1), std::vector<T1Entry>(width, T1Entry{kInf, 0}));
  t2_.assign(static_cast<std::size_t>(cap_s_ + 1),
             std::vector<T2Entry>(width, T2Entry{kInf, 0, 0, 0}));
  aux_.assign(static_cast<std::size_t>(cap_s_ + 1), LayerAux{});
  for (int s = 1; s <= cap_s_; ++s) {
    build_t1_layer(s);
    build_t2_layer(s);
  }
}

void DpEngine::build_t1_layer(int s) {
  auto& layer = t1_[static_cast<std::size_t>(s)];
  layer[1] = T1Entry{mode_ == SingletonMode::kStrict ? kInf : 0, 0};
  if (s == 1) {
    for (Count n = 2; n <= cap_n_; ++n) layer[static_cast<std::size_t>(n)] = T1Entry{static_cast<std::int32_t>(n), static_cast<std::int32_t>(n)};
    return;
  }
  const auto& prev = t1_[static_cast<std::size_t>(s - 1)];
  parallel_for(2, cap_n_ + 1, jobs_, [&](std::int64_t n) {
    std::int64_t best = kInf64;
    Count best_m = 0;
    for (Count m = 2; m <= n && m < best; ++m) {
      // The adversary may pick a part of either size; under the strict
      // convention the smaller part can be the costlier one.
      const std::int64_t worst = std::max(prev[static_cast<std::size_t>(ceil_div(n, m))].value,
                                          prev[static_cast<std::size_t>(n / m)].value);
      const std::int64_t v = add(m, worst);
      if (v < best) {
        best = v;
        best_m = m;
      }
    }
    layer[static_cast<std::size_t>(n)] =
        T1Entry{static_cast<std::int32_t>(best), static_cast<std::int32_t>(best_m)};
  });
}

void DpEngine::build_t2_layer(int s) {
  auto& layer = t2_[static_cast<std::size_t>(s)];
  if (s == 1) {
    layer[2] = T2Entry{0, 0, 0, 0};
    for (Count n = 3; n <= cap_n_; ++n) {
      layer[static_cast<std::size_t>(n)] = T2Entry{static_cast<std::int32_t>(n), static_cast<std::int32_t>(n), 1, 1};
    }
    return;
  }

  const auto& c1_prev = t1_[static_cast<std::size_t>(s - 1)];
  const auto& t2_prev = t2_[static_cast<std::size_t>(s - 1)];
  LayerAux& aux = aux_[static_cast<std::size_t>(s)];
  aux.suffix_floor.assign(static_cast<std::size_t>(cap_n_ + 2), kInf64);
  for (Count t = cap_n_; t >= 1; --t) {
    const std::int64_t both = t >= 2 ? t2_prev[static_cast<std::size_t>(t)].value : 0;
    const std::int64_t g = std::max<std::int64_t>(both, c1_prev[static_cast<std::size_t>(t)].value);
    aux.suffix_floor[static_cast<std::size_t>(t)] =
        std::min(g, aux.suffix_floor[static_cast<std::size_t>(t + 1)]);
  }
  aux.c1_finite_from = cap_n_ + 1;
  while (aux.c1_finite_from > 1 &&
         c1_prev[static_cast<std::size_t>(aux.c1_finite_from - 1)].value < kInf) {
    --aux.c1_finite_from;
  }
  // The (m, t1, t2) reduction reads the adversary's best split off the two
  // largest parts, which needs c1 of the previous layer to be nondecreasing
  // over the part sizes a finite candidate can use.
  const Count f = aux.c1_finite_from;
  for (Count k = 1; k < f; ++k) {
    if (c1_prev[static_cast<std::size_t>(k)].value < kInf) {
      throw std::logic_error("dp_t2: T1 layer " + std::to_string(s - 1) + " has a finite value below its finite range");
    }
  }
  for (Count k = f + 1; k <= cap_n_; ++k) {
    if (c1_prev[static_cast<std::size_t>(k)].value < c1_prev[static_cast<std::size_t>(k - 1)].value) {
      throw std::logic_error("dp_t2: T1 layer " + std::to_string(s - 1) + " is not monotone at " +
                             std::to_string(k));
    }
  }
  // Prefix maximum of T2 over admissible part sizes, an upper bound on the
  // both-in-one branch for any partition whose largest part is t.
  aux.t2_prefix_max.assign(static_cast<std::size_t>(cap_n_ + 1), 0);
  for (Count k = 2; k <= cap_n_; ++k) {
    const std::int64_t here = k >= f ? t2_prev[static_cast<std::size_t>(k)].value : 0;
    aux.t2_prefix_max[static_cast<std::size_t>(k)] =
        std::max(aux.t2_prefix_max[static_cast<std::size_t>(k - 1)], here);
  }

  layer[2] = T2Entry{0, 0, 0, 0};
  parallel_for(3, cap_n_ + 1, jobs_, [&](std::int64_t n) {
    layer[static_cast<std::size_t>(n)] = search_t2(n, s, aux, 2, n, /*prune_m=*/true);
  });
}

DpEngine::T2Entry DpEngine::search_t2(Count n, int s, const LayerAux& aux, Count m_lo,
                                      Count m_hi, bool prune_m) const {
  const auto& c1_prev = t1_[static_cast<std::size_t>(s - 1)];
  const auto& t2_prev = t2_[static_cast<std::size_t>(s - 1)];
  auto c1 = [&](Count k) -> std::int64_t { return c1_prev[static_cast<std::size_t>(k)].value; };

  // Each candidate is scored twice: with T2 of its largest part (a lower
  // bound, the largest part is always present) and with the prefix maximum
  // of T2 up to that part (an upper bound, attained by the candidate's
  // worst possible completion). The minima agree whenever T2 of the previous
  // layer is monotone where it matters, and the optimum is then exact.
  std::int64_t best = kInf64;
  std::int64_t best_lower = kInf64;
  T2Entry out{kInf, 0, 0, 0};
  auto consider = [&](Count m, Count t1, Count t2) {
    const std::int64_t split = add(c1(t1), c1(t2));
    const std::int64_t low = t1 >= 2 ? t2_prev[static_cast<std::size_t>(t1)].value : 0;
    const std::int64_t high = t1 >= 2 ? aux.t2_prefix_max[static_cast<std::size_t>(t1)] : 0;
    best_lower = std::min(best_lower, add(m, std::max(split, low)));
    const std::int64_t v = add(m, std::max(split, high));
    if (v < best) {
      best = v;
      out = T2Entry{static_cast<std::int32_t>(v), static_cast<std::int32_t>(m),
                    static_cast<std::int32_t>(t1), static_cast<std::int32_t>(t2)};
    }
  };

  for (Count m = m_lo; m <= std::min(m_hi, n); ++m) {
    if (prune_m && m >= best) break;
    for (Count t1 = ceil_div(n, m); t1 <= n - m + 1; ++t1) {
      if (add(m, aux.suffix_floor[static_cast<std::size_t>(t1)]) >= best) break;
      const Count rest = n - t1;
      if (m == 2) {
        if (rest >= aux.c1_finite_from) consider(m, t1, rest);
        continue;
      }
      // Largest of the remaining m-1 parts: at least ceil(rest/(m-1)), at most
      // t1, and leaving room for the other m-2 parts. Every part must have a
      // finite c1 (size >= f), or the adversary places one defective there.
      // c1 is nondecreasing, so the smallest admissible t2 is best.
      const Count f = aux.c1_finite_from;
      const Count t2 = std::max(ceil_div(rest, m - 1), f);
      const Count hi = std::min(t1, rest - (m - 2) * f);
      if (t2 <= hi) consider(m, t1, t2);
    }
  }
  if (best_lower < best) {
    throw std::logic_error("dp_t2: the (m, t1, t2) reduction is not exact at n = " + std::to_string(n) +
                           ", s = " + std::to_string(s) + " (" + std::string(to_string(mode_)) + ")");
  }
  return out;
}

TestCount DpEngine::c1(Count k, int s) {
  if (k < 1) throw std::invalid_argument("c1: need k >= 1");
  if (s == 0) {
    return k == 1 && mode_ == SingletonMode::kResolvedZero ? TestCount(0) : TestCount::unreachable();
  }
  return t1(k, s);
}

TestCount DpEngine::t1(Count n, int s) {
  if (n < 1 || s < 1) throw std::invalid_argument("dp_t1: need n >= 1, s >= 1");
  reserve(n, s);
  return to_count(t1_[static_cast<std::size_t>(s)][static_cast<std::size_t>(n)].value);
}

TestCount DpEngine::t2(Count n, int s) {
  if (n < 2 || s < 1) throw std::invalid_argument("dp_t2: need n >= 2, s >= 1");
  reserve(n, s);
  return to_count(t2_[static_cast<std::size_t>(s)][static_cast<std::size_t>(n)].value);
}

TestCount DpEngine::td_s2(Count n, Count d) {
  if (d < 1) throw std::invalid_argument("dp_td_s2: need d >= 1");
  if (n < 2 * d) throw std::invalid_argument("dp_td_s2: need n >= 2d");
  const auto key = std::make_pair(n, d);
  if (auto it = td_s2_.find(key); it != td_s2_.end()) return it->second.first;

  Count best = kSaturated;
  Count best_m = 0;
  for (Count m = 2; m <= n && m < best; ++m) {
    // Fewer groups than defectives: the adversary can make every group
    // positive, so every item is retested.
    const Count v = m < d ? m + n : m + average_partition_top_sum(n, m, d);
    if (v < best) {
      best = v;
      best_m = m;
    }
  }
  const TestCount value(best);
  td_s2_.emplace(key, std::make_pair(value, best_m));
  return value;
}

PartitionWitness DpEngine::witness(Family family, Count n, Count d, int s) {
  switch (family) {
    case Family::kT1: {
      const TestCount v = t1(n, s);
      if (v.is_unreachable()) throw std::domain_error("witness: T1 value is Unreachable");
      if (s == 1) return PartitionWitness{n, 1, std::nullopt, v};
      const Count m = t1_[static_cast<std::size_t>(s)][static_cast<std::size_t>(n)].m;
      return PartitionWitness{m, ceil_div(n, m), std::nullopt, v};
    }
    case Family::kTdS2: {
      const TestCount v = td_s2(n, d);
      const Count m = td_s2_.at(std::make_pair(n, d)).second;
      return PartitionWitness{m, ceil_div(n, m), std::nullopt, v};
    }
    case Family::kT2: {
      const TestCount v = t2(n, s);
      if (v.is_unreachable()) throw std::domain_error("witness: T2 value is Unreachable");
      const T2Entry& e = t2_[static_cast<std::size_t>(s)][static_cast<std::size_t>(n)];
      return PartitionWitness{e.m, e.t1, e.t2 > 0 ? std::optional<Count>(e.t2) : std::nullopt, v};
    }
  }
  throw std::logic_error("witness: bad family");
}

PartitionWitness DpEngine::t2_fixed_m(Count n, int s, Count m) {
  if (s < 2) throw std::invalid_argument("t2_fixed_m: need s >= 2");
  if (m < 2 || m > n) throw std::invalid_argument("t2_fixed_m: need 2 <= m <= n");
  reserve(n, s);
  const T2Entry e = search_t2(n, s, aux_[static_cast<std::size_t>(s)], m, m, /*prune_m=*/false);
  if (e.value == kInf) return PartitionWitness{m, 0, std::nullopt, TestCount::unreachable()};
  return PartitionWitness{e.m, e.t1, e.t2, TestCount(e.value)};
}

TestCount DpEngine::t2_objective(Count n, int s, Count m, Count t1, Count t2, BranchReading reading) {
  if (s < 2) throw std::invalid_argument("t2_objective: need s >= 2");
  if (t1 < 1 || t2 < 1 || t1 + t2 > n) throw std::invalid_argument("t2_objective: bad parts");
  reserve(n, s);
  const Count g = reading == BranchReading::kLargerGroup ? t1 : t2;
  const TestCount both = g >= 2 ? this->t2(g, s - 1) : TestCount(0);
  return TestCount(m) + max(c1(t1, s - 1) + c1(t2, s - 1), both);
}

TestCount dp_t1(Count n, int s, SingletonMode mode) {
  DpEngine engine(mode);
  return engine.t1(n, s);
}

TestCount dp_td_s2(Count n, Count d) {
  DpEngine engine;
  return engine.td_s2(n, d);
}

TestCount dp_t2(Count n, int s, SingletonMode mode) {
  DpEngine engine(mode);
  return engine.t2(n, s);
}

PartitionWitness dp_optimal_first_m(Family family, Count n, Count d, int s, SingletonMode mode) {
  DpEngine engine(mode);
  return engine.witness(family, n, d, s);
}

}  // namespace msgpt
