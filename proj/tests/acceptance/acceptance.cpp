// Acceptance run: one PASS / FAIL line per criterion, exit 1 on any FAIL.
//
// A criterion that holds everywhere except at instances where its reference
// quantity does not describe the executable strategy prints DEVIATION with
// the instances listed; it does not fail the run.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "msgpt/audit.hpp"
#include "msgpt/formulas.hpp"
#include "msgpt/suites.hpp"
#include "msgpt/table.hpp"

using namespace msgpt;

namespace {

enum class Status { kPass, kDeviation, kFail };

struct Outcome {
  Status status = Status::kPass;
  std::string detail;
};

Outcome from_checks(const std::vector<CheckResult>& checks) {
  Outcome out;
  for (const CheckResult& c : checks) {
    if (!c.passed && c.assertable) out.status = Status::kFail;
    if (!out.detail.empty()) out.detail += " | ";
    out.detail += c.name + ": " + (c.passed ? "ok" : "FAILED") + " (" + c.detail + ")";
  }
  return out;
}

// ------------------------------------------------------------- figures

struct SeriesCheck {
  std::int64_t points = 0;
  std::int64_t failures = 0;
  std::string first;

  void expect(bool ok, const std::function<std::string()>& what) {
    ++points;
    if (ok) return;
    if (failures++ == 0) first = what();
  }
};

SweepTable sweep_figure(Family family, SingletonMode mode, std::string& csv) {
  SweepSpec spec;
  spec.family = family;
  spec.n_max = 5000;
  spec.mode = mode;
  if (family == Family::kTdS2) {
    spec.d_list = {1, 2, 3, 4, 5, 6};
  } else {
    spec.s_list = {2, 3, 4, 5, 6, 7};
  }
  spec.validate();
  SweepTable table = dp_sweep(spec);
  std::ostringstream os;
  write_csv(os, table);
  csv = os.str();
  return table;
}

std::int64_t csv_rows(const std::string& csv) {
  std::int64_t rows = 0;
  std::istringstream in(csv);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.front() != '#' && line.front() != 'n') ++rows;
  }
  return rows;
}

// lb <= v <= lb + 1, the upper side only where the root bound is stated.
void expect_envelope(SeriesCheck& check, Count n, Count d, int s, const TestCount& v, bool lower_applies) {
  const Count lb = lower_bound(n, d, s);
  const AdvisoryValue ub = upper_bound(n, d, s);
  if (lower_applies) {
    check.expect(v.is_finite() && v.value() >= lb,
                 [&] { return "lower envelope at d=" + std::to_string(d) + " s=" + std::to_string(s) +
                              " n=" + std::to_string(n); });
  }
  if (ub.valid) {
    check.expect(v.is_finite() && v.value() <= ub.value,
                 [&] { return "upper envelope at d=" + std::to_string(d) + " s=" + std::to_string(s) +
                              " n=" + std::to_string(n); });
  }
}

void expect_monotone(SeriesCheck& check, const SweepSeries& series, Count from) {
  for (Count n = from + 1; n <= 5000; ++n) {
    const TestCount a = series.values[static_cast<std::size_t>(n - 2)];
    const TestCount b = series.values[static_cast<std::size_t>(n - 1)];
    check.expect(a <= b, [&] { return series.label + " decreases at n=" + std::to_string(n); });
  }
}

Outcome figures() {
  Outcome out;
  std::ostringstream detail;

  // Figure 1 under the convention of the closed form (no stage skipped).
  std::string csv;
  SweepTable fig1 = sweep_figure(Family::kT1, SingletonMode::kStrict, csv);
  SeriesCheck c1;
  for (const SweepSeries& series : fig1.series) {
    const Count from = sat_pow(2, series.s);
    expect_monotone(c1, series, from);
    for (Count n = from; n <= 5000; ++n) {
      const TestCount v = series.values[static_cast<std::size_t>(n - 1)];
      c1.expect(v == t1_closed(n, series.s),
                [&] { return series.label + " differs from the closed form at n=" + std::to_string(n); });
      expect_envelope(c1, n, 1, series.s, v, true);
    }
  }
  detail << "fig1 strict: " << csv_rows(csv) << " rows, " << c1.points << " checks, " << c1.failures << " failures";

  std::string csv_zero;
  SweepTable fig1_zero = sweep_figure(Family::kT1, SingletonMode::kResolvedZero, csv_zero);
  std::int64_t diverge = 0;
  for (std::size_t k = 0; k < fig1.series.size(); ++k) {
    for (Count n = sat_pow(2, fig1.series[k].s); n <= 5000; ++n) {
      if (!(fig1.at(k, n) == fig1_zero.at(k, n))) ++diverge;
    }
  }
  detail << "; fig1 resolved-zero differs from it at " << diverge << " in-domain points (stage skipping)";

  SweepTable fig2 = sweep_figure(Family::kTdS2, SingletonMode::kResolvedZero, csv);
  SeriesCheck c2;
  for (const SweepSeries& series : fig2.series) {
    const Count d = series.d;
    expect_monotone(c2, series, 4 * d);
    for (Count n = 4 * d; n <= 5000; ++n) {
      const TestCount v = series.values[static_cast<std::size_t>(n - 1)];
      if (!bracket_td(n, d, 2).within_two_stage_range()) continue;
      c2.expect(v == td2_closed(n, d),
                [&] { return series.label + " differs from the closed form at n=" + std::to_string(n); });
      expect_envelope(c2, n, d, 2, v, true);
    }
  }
  detail << "; fig2: " << csv_rows(csv) << " rows, " << c2.points << " checks, " << c2.failures << " failures";

  SweepTable fig3 = sweep_figure(Family::kT2, SingletonMode::kResolvedZero, csv);
  SeriesCheck c3;
  const Count n1 = threshold_n1(2, 3);
  for (const SweepSeries& series : fig3.series) {
    const int s = series.s;
    const Count from = 2 * sat_pow(2, s);
    expect_monotone(c3, series, from);
    for (Count n = from; n <= 5000; ++n) {
      const TestCount v = series.values[static_cast<std::size_t>(n - 1)];
      c3.expect(v <= md_count(n, 2, s),
                [&] { return series.label + " exceeds the algorithm 3 count at n=" + std::to_string(n); });
      // The lower side is proved for s = 2 and, for s = 3, from n1(2,3) on.
      expect_envelope(c3, n, 2, s, v, s == 2 || (s == 3 && n >= n1));
    }
  }
  detail << "; fig3: " << csv_rows(csv) << " rows, " << c3.points << " checks, " << c3.failures << " failures";

  for (const SeriesCheck* c : {&c1, &c2, &c3}) {
    if (c->failures > 0) {
      out.status = Status::kFail;
      detail << "; first failure: " << c->first;
    }
  }
  out.detail = detail.str();
  return out;
}

// --------------------------------------------------------------- audit

Outcome audit() {
  Outcome out;
  const SuiteReport report = run_suite("paper-claims");
  const AuditReport claims = audit_claims();
  const AuditRecord* r = claims.find("t2-513-4");
  if (r == nullptr) return {Status::kFail, "no record for T2(513,4)"};

  int modes = 0;
  int readings = 0;
  for (const auto& [key, value] : r->engine_values) {
    if (key.rfind("engine[", 0) == 0) ++modes;
  }
  for (const std::string& line : r->details) {
    if (line.find("witness (m=2, t1=505, t2=8)") != std::string::npos) ++readings;
  }
  std::ostringstream detail;
  detail << "claimed " << r->claimed << ";";
  for (const auto& [key, value] : r->engine_values) detail << " " << key << "=" << value;
  detail << "; verdict " << to_string(r->verdict) << "; witness evaluated under " << modes << " modes x "
         << readings / std::max(modes, 1) << " readings; " << claims.records.size() << " claims audited";
  if (!report.passed() || modes != 2 || readings != 4 || report.appendix.find("claim=t2-513-4") == std::string::npos) {
    out.status = Status::kFail;
  }
  out.detail = detail.str();
  return out;
}

// ---------------------------------------------------------- simulation

Outcome simulation() {
  const std::vector<CheckResult> checks{check_sim_alg1(200, 4), check_sim_alg3_d2(120), check_sim_alg2(60, 3, 3)};
  Outcome out = from_checks(checks);
  // check_sim_alg2 tolerates, and lists, out-of-domain instances where the
  // simulated cost exceeds h_d; the literal equality does not hold there.
  if (out.status == Status::kPass && checks[2].detail.find("simulated > h_d") != std::string::npos) {
    out.status = Status::kDeviation;
  }
  return out;
}

struct Criterion {
  int id;
  std::string title;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const SingletonMode zero = SingletonMode::kResolvedZero;
  const SingletonMode strict = SingletonMode::kStrict;
  const Count n1 = threshold_n1(2, 3);

  const std::vector<Criterion> criteria{
      {1, "T1 closed form = dp, s in [2,7], n in [2^s,3000]",
       [] { return from_checks({check_t1_closed_vs_dp(3000, 7)}); }},
      {2, "Td(n,2) closed form = dp, d in [1,6], n <= 3000, t >= 2",
       [] { return from_checks({check_td2_closed_vs_dp(3000, 6)}); }},
      {3, "dual capacity = brute-force max product, budget <= 30, s <= 6",
       [] { return from_checks({check_dual_capacity(30, 6)}); }},
      {4, "oracles: T1 (n <= 64, s <= 4), T2 (n <= 60, s <= 3, both modes)",
       [&] {
         return from_checks({check_oracle_t1(64, 4), check_oracle_t2(60, 3, zero), check_oracle_t2(60, 3, strict)});
       }},
      {5, "exhaustive simulation of algorithms 1, 3 (d=2) and 2", simulation},
      {6, "lb <= T2 <= lb+1, d=2, s=3, n in [" + std::to_string(n1) + "," + std::to_string(n1 + 500) + "]",
       [&] { return from_checks({check_sandwich(500, zero), check_sandwich(500, strict)}); }},
      {7, "inequality suites in exact integers",
       [] {
         return from_checks({check_t1_root_bound(10000, 7), check_td2_root_bound(3000, 6), check_hd_vs_t1(500),
                             check_md_upper_envelope(5000, 4, 4), check_md_at_dts(4, 5, 6), check_sharpness(3, 50)});
       }},
      {8, "figure 1/2/3 series, n <= 5000", figures},
      {9, "claims audit including T2(513,4)", audit},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {Status::kFail, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const char* tag = out.status == Status::kPass ? "PASS" : out.status == Status::kDeviation ? "DEVIATION" : "FAIL";
    if (out.status == Status::kFail) ++failures;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << "criterion " << c.id << ": " << tag << " [" << timing << "] " << c.title << "\n    " << out.detail
              << "\n";
    std::cout.flush();
  }
  std::cout << (failures == 0 ? "acceptance: pass" : "acceptance: fail") << "\n";
  return failures == 0 ? 0 : 1;
}
