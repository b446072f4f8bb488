#pragma once

// Property suites: each check sweeps a grid, compares two independent
// computations and reports the first counterexample it finds.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "msgpt/dp.hpp"
#include "msgpt/formulas.hpp"

namespace msgpt {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;        // counterexample or summary
  std::int64_t cases = 0;
  bool assertable = true;    // diagnostics never fail a suite
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  std::string appendix;      // free text, e.g. the claims audit

  bool passed() const;
};

inline constexpr Count kNoCap = kSaturated;

struct SuiteOptions {
  Count nmax = kNoCap;  // clamps every n range below its default upper end
  unsigned jobs = 1;
};

// Closed forms against the dynamic programs.
CheckResult check_t1_closed_vs_dp(Count n_max = 3000, int s_max = 7, unsigned jobs = 1);
CheckResult check_td2_closed_vs_dp(Count n_max = 3000, Count d_max = 6);
CheckResult check_dual_capacity(Count budget_max = 30, int s_max = 6);
CheckResult check_duality(Count n_max = 3000, int s_max = 7);
CheckResult check_bracket_uniqueness(Count n_max = 100000, int s_max = 7, Count d_max = 6);
CheckResult check_closed_form_monotone(Count n_max = 3000, int s_max = 7, Count d_max = 6);

// Bounds and inequalities, all in exact integers.
CheckResult check_t1_root_bound(Count n_max = 10000, int s_max = 7);
CheckResult check_td2_root_bound(Count n_max = 3000, Count d_max = 6);
CheckResult check_md_upper_envelope(Count n_max = 5000, Count d_max = 4, int s_max = 4);
CheckResult check_md_at_dts(Count d_max = 4, int s_max = 5, Count t_max = 6);
CheckResult check_sharpness(Count t_min = 3, Count t_max = 50);
CheckResult check_sandwich(Count width = 500, SingletonMode mode = SingletonMode::kResolvedZero,
                           unsigned jobs = 1);

// Strategy lemmas and T2 structure.
CheckResult check_hd_vs_t1(Count n_max = 500);
CheckResult check_t2_below_udm(Count n_max = 300, int s_max = 4);
CheckResult check_udm_at_bracket(Count n_max = 2000, Count d_max = 4, int s_max = 4);
CheckResult check_first_m_large(Count width = 500, unsigned jobs = 1);
CheckResult check_t2_monotone(Count n_max = 3000, int s_max = 7, unsigned jobs = 1);
CheckResult check_t2_s2_matches_td(Count n_max = 3000);
CheckResult check_t2_witnesses(Count n_max = 400, int s_max = 4);

// Independent all-partitions oracles.
CheckResult check_oracle_t1(Count n_max = 64, int s_max = 4);
CheckResult check_oracle_t1_modes(Count n_max = 64, int s_max = 4);
CheckResult check_oracle_t2(Count n_max = 60, int s_max = 3, SingletonMode mode = SingletonMode::kResolvedZero);
CheckResult check_oracle_average_only(Count n_max = 40, int s_max = 3);

// Exhaustive adversary.
CheckResult check_sim_alg1(Count n_max = 200, int s_max = 4, unsigned jobs = 1);
CheckResult check_sim_alg3_d2(Count n_max = 120, unsigned jobs = 1);
CheckResult check_sim_alg2(Count n_max = 60, Count d_max = 3, int s_max = 3, unsigned jobs = 1);
CheckResult check_sim_alg3_d3(Count n_max = 60, unsigned jobs = 1);

inline constexpr std::string_view kSuiteNames[] = {"closed-forms", "bounds",     "lemmas",
                                                   "oracles",      "simulation", "paper-claims"};

/// Throws std::invalid_argument for an unknown suite name.
SuiteReport run_suite(std::string_view name, const SuiteOptions& options = {});

void write_suite_report(std::ostream& os, const SuiteReport& report);

}  // namespace msgpt
