#include "msgpt/table.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

#include "msgpt/errors.hpp"
#include "msgpt/version.hpp"

namespace msgpt {

TableFormat parse_table_format(std::string_view text) {
  if (text == "csv") return TableFormat::kCsv;
  if (text == "json") return TableFormat::kJson;
  throw std::invalid_argument("unknown table format '" + std::string(text) + "'");
}

void SweepSpec::validate(Count resource_cap) const {
  if (n_min < 1 || n_max < n_min) throw std::invalid_argument("sweep: empty n range");
  if (n_max > resource_cap) {
    throw ResourceError("sweep: n_max = " + std::to_string(n_max) + " exceeds the resource cap " +
                        std::to_string(resource_cap));
  }
  if (family == Family::kTdS2) {
    if (d_list.empty()) throw std::invalid_argument("sweep: Td-s2 needs a nonempty d list");
    for (const Count d : d_list) {
      if (d < 1) throw std::invalid_argument("sweep: d must be >= 1");
    }
  } else {
    if (s_list.empty()) throw std::invalid_argument("sweep: T1/T2 need a nonempty s list");
    for (const int s : s_list) {
      if (s < 1 || s > 30) throw std::invalid_argument("sweep: s must lie in [1, 30]");
    }
  }
}

Count SweepSeries::domain_from() const { return sat_mul(d, sat_pow(2, s)); }

TestCount SweepTable::at(std::size_t series_index, Count n) const {
  const SweepSeries& s = series.at(series_index);
  if (n < spec.n_min || n > spec.n_max) throw std::out_of_range("SweepTable::at: n outside sweep");
  return s.values[static_cast<std::size_t>(n - spec.n_min)];
}

SweepTable dp_sweep(const SweepSpec& spec) {
  DpEngine engine(spec.mode, spec.jobs);
  return dp_sweep(spec, engine);
}

SweepTable dp_sweep(const SweepSpec& spec, DpEngine& engine) {
  spec.validate(std::max(spec.n_max, kDefaultResourceCap));
  if (engine.mode() != spec.mode) throw std::invalid_argument("dp_sweep: engine mode differs from spec");

  SweepTable table{spec, {}};
  const auto rows = static_cast<std::size_t>(spec.n_max - spec.n_min + 1);
  if (spec.family != Family::kTdS2) {
    const int s_max = *std::max_element(spec.s_list.begin(), spec.s_list.end());
    engine.reserve(spec.n_max, s_max);
  }

  auto fill = [&](SweepSeries series, auto&& value_at) {
    series.values.assign(rows, TestCount::unreachable());
    for (Count n = std::max(spec.n_min, series.defined_from); n <= spec.n_max; ++n) {
      series.values[static_cast<std::size_t>(n - spec.n_min)] = value_at(n);
    }
    table.series.push_back(std::move(series));
  };

  switch (spec.family) {
    case Family::kT1:
      for (const int s : spec.s_list) {
        fill(SweepSeries{"T1_s" + std::to_string(s), 1, s, 1, {}}, [&](Count n) { return engine.t1(n, s); });
      }
      break;
    case Family::kT2:
      for (const int s : spec.s_list) {
        fill(SweepSeries{"T2_s" + std::to_string(s), 2, s, 2, {}}, [&](Count n) { return engine.t2(n, s); });
      }
      break;
    case Family::kTdS2:
      for (const Count d : spec.d_list) {
        fill(SweepSeries{"Td_d" + std::to_string(d) + "_s2", d, 2, 2 * d, {}},
             [&](Count n) { return engine.td_s2(n, d); });
      }
      break;
  }
  return table;
}

void write_csv(std::ostream& os, const SweepTable& table) {
  const SweepSpec& spec = table.spec;
  os << "# msgpt " << kVersion << "\n";
  os << "# family=" << to_string(spec.family) << " mode=" << to_string(spec.mode) << " n=" << spec.n_min
     << ".." << spec.n_max << "\n";
  os << "# domain:";
  for (const SweepSeries& s : table.series) os << " " << s.label << ">=" << s.domain_from();
  os << " (smaller n: same recursion, outside n >= d*2^s)\n";
  os << "n";
  for (const SweepSeries& s : table.series) os << "," << s.label;
  os << "\n";
  for (Count n = spec.n_min; n <= spec.n_max; ++n) {
    os << n;
    for (const SweepSeries& s : table.series) {
      os << ",";
      if (s.defined_at(n)) os << s.values[static_cast<std::size_t>(n - spec.n_min)];
    }
    os << "\n";
  }
}

void write_json(std::ostream& os, const SweepTable& table) {
  const SweepSpec& spec = table.spec;
  nlohmann::ordered_json doc;
  doc["version"] = kVersion;
  doc["family"] = std::string(to_string(spec.family));
  doc["mode"] = std::string(to_string(spec.mode));
  doc["n_min"] = spec.n_min;
  doc["n_max"] = spec.n_max;
  nlohmann::ordered_json series = nlohmann::ordered_json::array();
  for (const SweepSeries& s : table.series) {
    nlohmann::ordered_json entry;
    entry["label"] = s.label;
    entry["d"] = s.d;
    entry["s"] = s.s;
    entry["defined_from"] = s.defined_from;
    entry["domain_from"] = s.domain_from();
    nlohmann::ordered_json values = nlohmann::ordered_json::array();
    for (Count n = spec.n_min; n <= spec.n_max; ++n) {
      const TestCount v = s.values[static_cast<std::size_t>(n - spec.n_min)];
      if (!s.defined_at(n)) values.push_back(nullptr);
      else if (v.is_finite()) values.push_back(v.value());
      else values.push_back("inf");
    }
    entry["values"] = std::move(values);
    series.push_back(std::move(entry));
  }
  doc["series"] = std::move(series);
  os << doc.dump(1) << "\n";
}

void write_table(std::ostream& os, const SweepTable& table) {
  if (table.spec.format == TableFormat::kJson) write_json(os, table);
  else write_csv(os, table);
}

}  // namespace msgpt
