#include "msgpt/audit.hpp"

#include <ostream>
#include <sstream>

#include "json.hpp"
#include "msgpt/dp.hpp"
#include "msgpt/formulas.hpp"
#include "msgpt/simulate.hpp"
#include "msgpt/strategy.hpp"

namespace msgpt {

namespace {

constexpr SingletonMode kModes[] = {SingletonMode::kResolvedZero, SingletonMode::kStrict};

std::string mode_key(SingletonMode mode) { return "engine[" + std::string(to_string(mode)) + "]"; }

AuditRecord audit_t2_513() {
  AuditRecord r;
  r.id = "t2-513-4";
  r.context = "worked example (n, d, s) = (513, 2, 4)";
  r.claim = "T2(513,4) = 32, reached by a first stage of m = 2 groups with largest parts 505 and 8";
  r.claimed = "32";

  bool all_match = true;
  for (const SingletonMode mode : kModes) {
    DpEngine engine(mode);
    const TestCount value = engine.t2(513, 4);
    r.engine_values.emplace_back(mode_key(mode), value.to_string());
    all_match = all_match && value == TestCount(32);

    const PartitionWitness w = engine.witness(Family::kT2, 513, 2, 4);
    std::ostringstream os;
    os << to_string(mode) << ": engine witness m=" << w.m << " t1=" << w.t1 << " t2=" << w.t2.value_or(0)
       << " value=" << w.value;
    r.details.push_back(os.str());

    std::ostringstream parts;
    parts << to_string(mode) << ": T1(505,3)=" << engine.t1(505, 3) << " T1(8,3)=" << engine.t1(8, 3)
          << " T2(505,3)=" << engine.t2(505, 3) << " T2(8,3)=" << engine.t2(8, 3);
    r.details.push_back(parts.str());

    for (const BranchReading reading : {BranchReading::kLargerGroup, BranchReading::kSmallerGroup}) {
      std::ostringstream ev;
      ev << to_string(mode) << ": witness (m=2, t1=505, t2=8) with both defectives continuing on "
         << (reading == BranchReading::kLargerGroup ? "T2(t1,3)" : "T2(t2,3)") << " -> "
         << engine.t2_objective(513, 4, 2, 505, 8, reading);
      r.details.push_back(ev.str());
    }
    const PartitionWitness best_m2 = engine.t2_fixed_m(513, 4, 2);
    std::ostringstream m2;
    m2 << to_string(mode) << ": best with m=2 is t1=" << best_m2.t1 << " t2=" << best_m2.t2.value_or(0)
       << " value=" << best_m2.value;
    r.details.push_back(m2.str());
  }
  r.verdict = all_match ? Verdict::kConfirmed : Verdict::kRefutedByEngine;
  return r;
}

AuditRecord audit_lower_bound_failure() {
  AuditRecord r;
  r.id = "lb-fails-513-2-4";
  r.context = "worked example (513, 2, 4) set against the root bound";
  r.claim = "T2(513,4) < 8 (513/2)^(1/4), so ceil(ds (n/d)^(1/s)) would not be a lower bound there";
  r.claimed = "32 < 32.02";
  const Count lb = lower_bound(513, 2, 4);
  r.engine_values.emplace_back("lower_bound", std::to_string(lb));
  bool below_everywhere = true;
  for (const SingletonMode mode : kModes) {
    const TestCount value = dp_t2(513, 4, mode);
    r.engine_values.emplace_back(mode_key(mode), value.to_string());
    // For integer T: T < ds(n/d)^{1/s} iff T < ceil(ds(n/d)^{1/s}).
    below_everywhere = below_everywhere && value.is_finite() && value.value() < lb;
  }
  r.details.push_back("md_count(513,2,4) = " + md_count(513, 2, 4).to_string());
  r.verdict = below_everywhere ? Verdict::kConfirmed : Verdict::kRefutedByEngine;
  return r;
}

AuditRecord audit_md_at_dts(Count d, Count t, int s) {
  const Count n = d * sat_pow(t, s);
  const Count expected = static_cast<Count>(s) * d * t;
  AuditRecord r;
  std::ostringstream id;
  id << "md-dts-" << d << "-" << t << "-" << s;
  r.id = id.str();
  r.context = "algorithm 3 at n = d t^s";
  r.claim = "M_d(" + std::to_string(n) + "," + std::to_string(s) + ") = s d t = " + std::to_string(expected);
  r.claimed = std::to_string(expected);
  const TestCount closed = md_count(n, d, s);
  const WorstCase sim = worst_case(alg3_plan(n, d, s), n, d);
  r.engine_values.emplace_back("md_count", closed.to_string());
  r.engine_values.emplace_back("simulated_worst_case", sim.tests.to_string());
  std::ostringstream detail;
  detail << "defective sets checked: " << sim.sets_checked << "; stage-1 groups: "
         << alg3_plan(n, d, s).fixed_splits().front();
  r.details.push_back(detail.str());
  r.verdict = closed == TestCount(expected) && sim.tests == TestCount(expected) ? Verdict::kConfirmed
                                                                                : Verdict::kRefutedByEngine;
  return r;
}

AuditRecord audit_upper_sharpness(Count t) {
  const Count n = t * (t + 1) * (t + 1) + 1;
  AuditRecord r;
  r.id = "t1-upper-sharp-t" + std::to_string(t);
  r.context = "upper bound attained at n = t(t+1)^2 + 1";
  r.claim = "T1(" + std::to_string(n) + ",3) = ceil(3 n^(1/3)) + 1";
  const Count expected = lower_bound(n, 1, 3) + 1;
  r.claimed = std::to_string(expected) + " (= 3t+3)";
  const TestCount closed = t1_closed(n, 3);
  const TestCount dp = dp_t1(n, 3);
  r.engine_values.emplace_back("t1_closed", closed.to_string());
  r.engine_values.emplace_back("dp_t1", dp.to_string());
  r.verdict = closed == TestCount(expected) && dp == TestCount(expected) ? Verdict::kConfirmed
                                                                         : Verdict::kRefutedByEngine;
  return r;
}

AuditRecord audit_lower_sharpness(Count t) {
  const Count d = 2;
  const int s = 3;
  const Count n = d * sat_pow(t, s);
  AuditRecord r;
  r.id = "t2-lower-sharp-t" + std::to_string(t);
  r.context = "lower bound attained at n = d t^s";
  r.claim = "T2(" + std::to_string(n) + ",3) = ceil(ds (n/d)^(1/s)) = d s t";
  r.claimed = std::to_string(d * s * t);
  const Count threshold = threshold_n1(d, s);
  for (const SingletonMode mode : kModes) {
    r.engine_values.emplace_back(mode_key(mode), dp_t2(n, s, mode).to_string());
  }
  r.engine_values.emplace_back("lower_bound", std::to_string(lower_bound(n, d, s)));
  r.engine_values.emplace_back("md_count", md_count(n, d, s).to_string());
  r.details.push_back("threshold n1(2,3) = " + std::to_string(threshold));
  if (n < threshold) {
    r.details.push_back("n below n1: the bound is not claimed here");
    r.verdict = Verdict::kOutOfRange;
    return r;
  }
  bool ok = true;
  for (const SingletonMode mode : kModes) ok = ok && dp_t2(n, s, mode) == TestCount(d * s * t);
  r.verdict = ok ? Verdict::kConfirmed : Verdict::kRefutedByEngine;
  return r;
}

AuditRecord audit_two_stage_optimality(Count n, Count d) {
  AuditRecord r;
  r.id = "alg3-optimal-s2-n" + std::to_string(n) + "-d" + std::to_string(d);
  r.context = "algorithm 3 is optimal for two stages";
  r.claim = "M_d(n,2) = Td(n,2) at n=" + std::to_string(n) + ", d=" + std::to_string(d);
  r.claimed = td2_closed(n, d).to_string();
  r.engine_values.emplace_back("md_count", md_count(n, d, 2).to_string());
  r.engine_values.emplace_back("dp_td_s2", dp_td_s2(n, d).to_string());
  r.engine_values.emplace_back("simulated_worst_case", worst_case(alg3_plan(n, d, 2), n, d).tests.to_string());
  const bool ok = md_count(n, d, 2) == td2_closed(n, d) && dp_td_s2(n, d) == td2_closed(n, d);
  r.verdict = ok ? Verdict::kConfirmed : Verdict::kRefutedByEngine;
  return r;
}

}  // namespace

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kConfirmed: return "confirmed";
    case Verdict::kRefutedByEngine: return "refuted-by-engine";
    case Verdict::kOutOfRange: return "out-of-range";
  }
  return "?";
}

const AuditRecord* AuditReport::find(std::string_view id) const {
  for (const AuditRecord& r : records) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

AuditReport audit_claims() {
  AuditReport report;
  report.records.push_back(audit_t2_513());
  report.records.push_back(audit_lower_bound_failure());
  report.records.push_back(audit_md_at_dts(2, 3, 3));
  report.records.push_back(audit_md_at_dts(1, 4, 3));
  report.records.push_back(audit_md_at_dts(3, 2, 2));
  report.records.push_back(audit_upper_sharpness(3));
  report.records.push_back(audit_upper_sharpness(10));
  report.records.push_back(audit_lower_sharpness(3));
  report.records.push_back(audit_lower_sharpness(11));
  report.records.push_back(audit_two_stage_optimality(9, 2));
  report.records.push_back(audit_two_stage_optimality(100, 3));
  return report;
}

void write_audit_text(std::ostream& os, const AuditReport& report) {
  for (const AuditRecord& r : report.records) {
    os << "claim=" << r.id << " context=\"" << r.context << "\" claimed=\"" << r.claimed << "\"";
    for (const auto& [key, value] : r.engine_values) os << " " << key << "=" << value;
    os << " verdict=" << to_string(r.verdict) << "\n";
    os << "  statement: " << r.claim << "\n";
    for (const std::string& line : r.details) os << "  detail: " << line << "\n";
  }
}

void write_audit_json(std::ostream& os, const AuditReport& report) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const AuditRecord& r : report.records) {
    nlohmann::ordered_json entry;
    entry["claim"] = r.id;
    entry["context"] = r.context;
    entry["statement"] = r.claim;
    entry["claimed"] = r.claimed;
    nlohmann::ordered_json values;
    for (const auto& [key, value] : r.engine_values) values[key] = value;
    entry["engine"] = std::move(values);
    entry["details"] = r.details;
    entry["verdict"] = std::string(to_string(r.verdict));
    doc.push_back(std::move(entry));
  }
  os << doc.dump(1) << "\n";
}

}  // namespace msgpt
