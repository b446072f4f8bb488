#pragma once

// Figure-data sweeps and their CSV / JSON encodings.
//
// CSV layout: `#`-prefixed metadata lines (version, family, mode, domain
// note), a header `n,<label>...`, then one row per n. Cells below a series'
// definition range are empty; Unreachable values are written as `inf`.
// Output is a pure function of the spec.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "msgpt/dp.hpp"

namespace msgpt {

inline constexpr Count kDefaultResourceCap = 100000;

enum class TableFormat { kCsv, kJson };

TableFormat parse_table_format(std::string_view text);

struct SweepSpec {
  Family family = Family::kT1;
  Count n_min = 1;
  Count n_max = 0;
  std::vector<int> s_list;      // T1, T2
  std::vector<Count> d_list;    // Td-s2
  TableFormat format = TableFormat::kCsv;
  SingletonMode mode = SingletonMode::kResolvedZero;
  unsigned jobs = 1;

  /// Throws std::invalid_argument for empty ranges and ResourceError when
  /// n_max exceeds `resource_cap`.
  void validate(Count resource_cap = kDefaultResourceCap) const;
};

struct SweepSeries {
  std::string label;
  Count d = 1;
  int s = 2;
  Count defined_from = 1;  // smallest n with a value
  std::vector<TestCount> values;  // values[n - n_min]; Unreachable below defined_from

  bool defined_at(Count n) const { return n >= defined_from; }
  /// Smallest n with n >= d * 2^s.
  Count domain_from() const;
};

struct SweepTable {
  SweepSpec spec;
  std::vector<SweepSeries> series;

  TestCount at(std::size_t series_index, Count n) const;
};

SweepTable dp_sweep(const SweepSpec& spec);
SweepTable dp_sweep(const SweepSpec& spec, DpEngine& engine);

void write_csv(std::ostream& os, const SweepTable& table);
void write_json(std::ostream& os, const SweepTable& table);
void write_table(std::ostream& os, const SweepTable& table);

}  // namespace msgpt
