#pragma once

// Closed forms for the multistage group partition testing (n, d, s) problem.
//
// Every interval membership test here is an exact integer comparison. Powers
// saturate at kSaturated, which exceeds every admissible item count, so a
// saturated product still compares correctly against n.

#include <cstdint>
#include <string>
#include <vector>

#include "msgpt/test_count.hpp"

namespace msgpt {

using Count = std::int64_t;

/// A multiset of positive group sizes in nonincreasing order.
using Partition = std::vector<Count>;

inline constexpr Count kSaturated = INT64_MAX;

/// Saturating product of nonnegative integers.
Count sat_mul(Count a, Count b);
/// Saturating base^exp for base >= 0, exp >= 0.
Count sat_pow(Count base, int exp);

/// The (n, d, s) triple. `in_domain()` is the guard n >= d * 2^s under which
/// the closed forms and bounds are stated.
struct ProblemInstance {
  Count n = 0;
  Count d = 0;
  int s = 0;

  /// Validates 1 <= d <= n, s >= 1 and the domain guard; throws
  /// std::invalid_argument otherwise.
  static ProblemInstance make(Count n, Count d, int s);
  /// Same basic checks, but admits n < d * 2^s. Callers must surface
  /// `in_domain() == false` in their output.
  static ProblemInstance make_out_of_domain(Count n, Count d, int s);

  bool in_domain() const;
  std::string to_string() const;
};

/// (t, i) with t^(s-i) (t+1)^i < n <= t^(s-i-1) (t+1)^(i+1).
struct Bracket1 {
  Count t = 0;
  int i = 0;
  friend bool operator==(const Bracket1&, const Bracket1&) = default;
};

/// (t, i, j) with (dt+j) t^(s-i-1) (t+1)^i < n <= (dt+j+1) t^(s-i-1) (t+1)^i.
struct BracketD {
  Count t = 0;
  int i = 0;
  Count j = 0;

  /// The two-stage closed form is stated only for t >= 2.
  bool within_two_stage_range() const { return t >= 2; }
  friend bool operator==(const BracketD&, const BracketD&) = default;
};

Bracket1 bracket_t1(Count n, int s);
BracketD bracket_td(Count n, Count d, int s);

/// Lower and upper endpoints (exclusive, inclusive) of the interval a
/// bracket names, saturating.
Count bracket_lower(const BracketD& b, Count d, int s);
Count bracket_upper(const BracketD& b, Count d, int s);

/// T_1(n, s) = s t + i + 1. Rejects n <= 1.
TestCount t1_closed(Count n, int s);

/// Largest n solvable for d = 1 in s stages with `budget` tests:
/// q^(s-r) (q+1)^r where budget = s q + r. Throws on overflow.
Count dual_capacity(Count budget, int s);

/// T_d(n, 2) = 2dt + di + j + 1. Requires n >= 4d and a bracket with t >= 2;
/// throws std::domain_error("outside two-stage closed-form range") otherwise.
TestCount td2_closed(Count n, Count d);

/// Worst-case count of the first-stage-(dt+j+1) strategy: dst + di + j + 1.
TestCount md_count(Count n, Count d, int s);

/// ceil(d s (n/d)^(1/s)), exactly: the smallest v with d v^s >= (ds)^s n.
Count lower_bound(Count n, Count d, int s);

struct AdvisoryValue {
  Count value = 0;
  bool valid = false;  // precondition of the bound holds
};

/// lower_bound + 1; valid iff n >= d * ceil(ds/2)^s.
AdvisoryValue upper_bound(Count n, Count d, int s);

/// ceil(d ((e/2) d^(2s-3))^s), evaluated with 50 significant digits.
/// Requires d >= 2, s >= 3. Throws std::overflow_error past 63 bits.
Count threshold_n1(Count d, int s);

/// ceil((ds/(s-1))^(s(s-1)) d^((s-1)^2) / 2^s), exact rational ceiling.
Count threshold_n2(Count d, int s);

/// (n mod m) parts of ceil(n/m) followed by parts of floor(n/m).
Partition average_partition(Count n, Count m);

/// Sum of the k largest parts of average_partition(n, m), without
/// materializing it.
Count average_partition_top_sum(Count n, Count m, Count k);

/// Exact floor(x^(1/k)) for x >= 0.
Count integer_root_floor(Count x, int k);

}  // namespace msgpt
