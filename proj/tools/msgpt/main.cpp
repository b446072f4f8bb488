// msgpt: exact values, figure tables, strategies, simulation and property
// suites for the multistage group partition testing problem.
//
// Exit status: 0 ok, 1 an asserted property failed, 2 usage or resource error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "msgpt/audit.hpp"
#include "msgpt/dp.hpp"
#include "msgpt/errors.hpp"
#include "msgpt/formulas.hpp"
#include "msgpt/simulate.hpp"
#include "msgpt/strategy.hpp"
#include "msgpt/suites.hpp"
#include "msgpt/table.hpp"
#include "msgpt/version.hpp"

namespace {

using namespace msgpt;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

// Raised for refusals that are not bugs: out-of-domain requests and the like.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Count resource_cap() {
  if (const char* env = std::getenv("MSGPT_RESOURCE_CAP")) {
    try {
      const long long v = std::stoll(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("MSGPT_RESOURCE_CAP must be a positive integer");
  }
  return kDefaultResourceCap;
}

void check_cap(Count n, const char* what) {
  const Count cap = resource_cap();
  if (n > cap) {
    throw ResourceError(std::string(what) + ": n = " + std::to_string(n) + " exceeds the resource cap " +
                        std::to_string(cap) + " (set MSGPT_RESOURCE_CAP to raise it)");
  }
}

struct Common {
  std::string mode = "resolved-zero";
  unsigned jobs = 1;

  SingletonMode singleton() const { return parse_singleton_mode(mode); }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--mode", c.mode, "Singleton convention")
      ->check(CLI::IsMember({"strict", "resolved-zero"}))
      ->capture_default_str();
  cmd->add_option("--jobs", c.jobs, "Worker threads (0 = all cores)")->capture_default_str();
}

unsigned resolve_jobs(unsigned jobs) {
  return jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : jobs;
}

std::string join(const Partition& parts) {
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < parts.size(); ++k) os << (k ? "," : "") << parts[k];
  os << "]";
  return os.str();
}

// Prints a long partition as runs, e.g. [257x1,256x1].
std::string runs(const Partition& parts) {
  if (parts.size() <= 12) return join(parts);
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < parts.size();) {
    std::size_t e = k;
    while (e < parts.size() && parts[e] == parts[k]) ++e;
    os << (k ? "," : "") << parts[k] << "x" << (e - k);
    k = e;
  }
  os << "]";
  return os.str();
}

std::ostream& open_output(const std::string& path, std::unique_ptr<std::ofstream>& file) {
  if (path.empty() || path == "-") return std::cout;
  file = std::make_unique<std::ofstream>(path, std::ios::binary);
  if (!*file) throw UsageError("cannot open '" + path + "' for writing");
  return *file;
}

// ------------------------------------------------------------------ exact

struct ExactArgs {
  Count n = 0, d = 1;
  int s = 2;
  Common common;
};

int cmd_exact(const ExactArgs& a) {
  const SingletonMode mode = a.common.singleton();
  const ProblemInstance p = ProblemInstance::make_out_of_domain(a.n, a.d, a.s);
  check_cap(a.n, "exact");
  DpEngine engine(mode);
  TestCount closed;
  TestCount dp;
  std::string bracket;
  if (a.d == 1) {
    const Bracket1 b = bracket_t1(a.n, a.s);
    bracket = "t=" + std::to_string(b.t) + " i=" + std::to_string(b.i);
    closed = t1_closed(a.n, a.s);
    dp = engine.t1(a.n, a.s);
  } else if (a.s == 2) {
    const BracketD b = bracket_td(a.n, a.d, 2);
    try {
      closed = td2_closed(a.n, a.d);
    } catch (const std::exception& e) {
      throw UsageError(std::string(e.what()) + "; use `msgpt dp` for " + p.to_string());
    }
    bracket = "t=" + std::to_string(b.t) + " i=" + std::to_string(b.i) + " j=" + std::to_string(b.j);
    dp = engine.td_s2(a.n, a.d);
  } else {
    throw UsageError("no closed form for " + p.to_string() +
                     " (closed forms cover d = 1, or s = 2 with bracket t >= 2); use `msgpt dp`");
  }
  std::cout << "instance " << p.to_string() << (p.in_domain() ? "" : " (outside n >= d*2^s)") << "\n"
            << "mode " << to_string(mode) << "\n"
            << "bracket " << bracket << "\n"
            << "closed_form " << closed << "\n"
            << "dp " << dp << "\n";
  if (!(closed == dp)) {
    std::cout << "MISMATCH closed form and dp disagree\n";
    return kExitFailed;
  }
  std::cout << "value " << closed << "\n";
  return kExitOk;
}

// ------------------------------------------------------------------ dp

struct DpArgs {
  Count n = 0, d = 1;
  int s = 2;
  Common common;
};

int cmd_dp(const DpArgs& a) {
  const SingletonMode mode = a.common.singleton();
  const ProblemInstance p = ProblemInstance::make_out_of_domain(a.n, a.d, a.s);
  if (a.d >= 3 && a.s >= 3) {
    throw UsageError("not recursively computable: for d >= 3 and s >= 3 the recursion needs the cost of "
                     "groups holding between 2 and d-1 defectives, which has no known recursion. "
                     "`msgpt strategy --alg 3` gives an upper bound");
  }
  check_cap(a.n, "dp");
  DpEngine engine(mode, resolve_jobs(a.common.jobs));
  const Family family = a.d == 1 ? Family::kT1 : (a.d == 2 ? Family::kT2 : Family::kTdS2);

  std::cout << "instance " << p.to_string() << (p.in_domain() ? "" : " (outside n >= d*2^s)") << "\n"
            << "mode " << to_string(mode) << "\n"
            << "family " << to_string(family) << "\n";
  TestCount value = family == Family::kT1   ? engine.t1(a.n, a.s)
                    : family == Family::kT2 ? engine.t2(a.n, a.s)
                                            : engine.td_s2(a.n, a.d);
  std::cout << "value " << value << "\n";
  if (value.is_finite()) {
    const PartitionWitness w = engine.witness(family, a.n, a.d, a.s);
    std::cout << "witness m=" << w.m << " t1=" << w.t1;
    if (w.t2) std::cout << " t2=" << *w.t2;
    if (family != Family::kT2) std::cout << " parts=" << runs(average_partition(a.n, w.m));
    std::cout << "\n";
  }
  if (a.d <= a.n && a.s >= 1) {
    std::cout << "lower_bound " << lower_bound(a.n, a.d, a.s) << " valid=" << (p.in_domain() ? "yes" : "no")
              << "\n";
    const AdvisoryValue ub = upper_bound(a.n, a.d, a.s);
    std::cout << "upper_bound " << ub.value << " valid=" << (ub.valid ? "yes" : "no") << "\n";
  }
  if (p.in_domain()) std::cout << "md_count " << md_count(a.n, a.d, a.s) << "\n";
  if (a.n == 513 && a.d == 2 && a.s == 4) {
    std::cout << "note the claimed value for this instance is 32 via (m, t1, t2) = (2, 505, 8); "
              << "`msgpt verify paper-claims` evaluates it under both conventions\n";
  }
  return kExitOk;
}

// ------------------------------------------------------------------ table

struct TableArgs {
  std::string family = "t1";
  int figure = 0;
  Count n_min = 1;
  Count n_max = 5000;
  std::vector<int> s_list;
  std::vector<Count> d_list;
  std::string format = "csv";
  std::string out;
  Common common;
};

int cmd_table(TableArgs a) {
  SweepSpec spec;
  switch (a.figure) {
    case 0: spec.family = parse_family(a.family); break;
    case 1: spec.family = Family::kT1; break;
    case 2: spec.family = Family::kTdS2; break;
    case 3: spec.family = Family::kT2; break;
    default: throw UsageError("--figure must be 1, 2 or 3");
  }
  if (a.figure != 0 && a.s_list.empty() && spec.family != Family::kTdS2) a.s_list = {2, 3, 4, 5, 6, 7};
  if (a.figure != 0 && a.d_list.empty() && spec.family == Family::kTdS2) a.d_list = {1, 2, 3, 4, 5, 6};
  spec.n_min = a.n_min;
  spec.n_max = a.n_max;
  spec.s_list = a.s_list;
  spec.d_list = a.d_list;
  spec.format = parse_table_format(a.format);
  spec.mode = a.common.singleton();
  spec.jobs = resolve_jobs(a.common.jobs);
  spec.validate(resource_cap());
  const SweepTable table = dp_sweep(spec);
  std::unique_ptr<std::ofstream> file;
  std::ostream& os = open_output(a.out, file);
  write_table(os, table);
  return kExitOk;
}

// ------------------------------------------------------------------ strategy

struct StrategyArgs {
  int alg = 3;
  Count n = 0, d = 1;
  int s = 2;
  std::string out;
  Common common;
};

StrategyPlan make_plan(int alg, Count n, Count d, int s) {
  switch (parse_algorithm(alg)) {
    case Algorithm::kAlg1:
      if (d != 1) throw UsageError("algorithm 1 handles d = 1 only");
      return alg1_plan(n, s);
    case Algorithm::kAlg2: return alg2_plan(n, d, s);
    case Algorithm::kAlg3: return alg3_plan(n, d, s);
  }
  throw UsageError("unknown algorithm");
}

int cmd_strategy(const StrategyArgs& a) {
  const StrategyPlan plan = make_plan(a.alg, a.n, a.d, a.s);
  std::unique_ptr<std::ofstream> file;
  std::ostream& os = open_output(a.out, file);
  os << "# mode " << to_string(a.common.singleton()) << "\n";
  if (plan.algorithm() == Algorithm::kAlg1) os << "# splits " << join(plan.fixed_splits()) << "\n";
  if (plan.algorithm() == Algorithm::kAlg3) os << "# stage-1 m " << plan.fixed_splits().front() << "\n";
  os << plan.serialize();
  return kExitOk;
}

// ------------------------------------------------------------------ simulate

struct SimulateArgs {
  int alg = 3;
  Count n = 0, d = 1;
  int s = 2;
  std::vector<Count> defectives;
  bool worst = false;
  std::int64_t budget = kDefaultSetBudget;
  Common common;
};

int cmd_simulate(const SimulateArgs& a) {
  const StrategyPlan plan = make_plan(a.alg, a.n, a.d, a.s);
  std::cout << "instance " << plan.problem().to_string() << " algorithm " << a.alg << "\n"
            << "mode " << to_string(a.common.singleton()) << "\n";
  if (a.worst) {
    const WorstCase w = worst_case(plan, a.n, a.d, a.budget);
    std::cout << "sets_checked " << w.sets_checked << "\n"
              << "worst_case " << w.tests << "\n"
              << "witness " << join(w.witness) << "\n"
              << "predicted " << plan.predicted_worst_case() << "\n";
    return kExitOk;
  }
  if (a.defectives.empty()) throw UsageError("give --defectives or --worst");
  const SimulationTrace trace = simulate(plan, a.defectives);
  for (const auto& stage : trace.stages) {
    std::cout << "stage " << stage.stage << ": tests " << stage.tests << " cumulative " << stage.cumulative << "\n";
    for (const auto& g : stage.groups) {
      std::cout << "  group " << g.first << ".." << g.first + g.size - 1 << " ->";
      for (const auto& part : g.parts) {
        std::cout << " " << part.first << ".." << part.first + part.size - 1 << (part.positive ? "+" : "-");
      }
      std::cout << "\n";
    }
  }
  std::cout << "identified " << join(trace.identified) << "\n"
            << "total_tests " << trace.total_tests << "\n";
  return kExitOk;
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
  std::string suite;
  Count nmax = kNoCap;
  bool json = false;
  Common common;
};

int cmd_verify(const VerifyArgs& a) {
  std::cout << "# msgpt " << kVersion << " verify " << a.suite << "\n";
  if (a.suite == "paper-claims" && a.json) {
    write_audit_json(std::cout, audit_claims());
    return kExitOk;
  }
  SuiteOptions options;
  options.nmax = a.nmax;
  options.jobs = resolve_jobs(a.common.jobs);
  const SuiteReport report = run_suite(a.suite, options);
  write_suite_report(std::cout, report);
  return report.passed() ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multistage group partition testing: exact values, tables, strategies and checks"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  int status = kExitOk;
  std::function<int()> action;

  ExactArgs exact;
  auto* c_exact = app.add_subcommand("exact", "Closed-form value with a dp cross-check");
  c_exact->add_option("--n", exact.n)->required();
  c_exact->add_option("--d", exact.d)->capture_default_str();
  c_exact->add_option("--s", exact.s)->required();
  add_common(c_exact, exact.common);
  c_exact->callback([&] { action = [&] { return cmd_exact(exact); }; });

  DpArgs dp;
  auto* c_dp = app.add_subcommand("dp", "Optimal value by dynamic programming, witness and bounds");
  c_dp->add_option("--n", dp.n)->required();
  c_dp->add_option("--d", dp.d)->capture_default_str();
  c_dp->add_option("--s", dp.s)->required();
  add_common(c_dp, dp.common);
  c_dp->callback([&] { action = [&] { return cmd_dp(dp); }; });

  TableArgs table;
  auto* c_table = app.add_subcommand("table", "Sweep a family over n and write CSV or JSON");
  c_table->add_option("--family", table.family, "t1, t2 or td-s2")->capture_default_str();
  c_table->add_option("--figure", table.figure, "Preset: 1 = T1 s=2..7, 2 = Td-s2 d=1..6, 3 = T2 s=2..7");
  c_table->add_option("--n-min", table.n_min)->capture_default_str();
  c_table->add_option("--n-max", table.n_max)->capture_default_str();
  c_table->add_option("--s", table.s_list, "Stage counts")->delimiter(',');
  c_table->add_option("--d", table.d_list, "Defective counts (td-s2)")->delimiter(',');
  c_table->add_option("--format", table.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  c_table->add_option("--out", table.out, "Output file (default stdout)");
  add_common(c_table, table.common);
  c_table->callback([&] { action = [&] { return cmd_table(table); }; });

  StrategyArgs strategy;
  auto* c_strategy = app.add_subcommand("strategy", "Serialize the plan of algorithm 1, 2 or 3");
  c_strategy->add_option("--alg", strategy.alg)->required()->check(CLI::Range(1, 3));
  c_strategy->add_option("--n", strategy.n)->required();
  c_strategy->add_option("--d", strategy.d)->capture_default_str();
  c_strategy->add_option("--s", strategy.s)->required();
  c_strategy->add_option("--out", strategy.out, "Output file (default stdout)");
  add_common(c_strategy, strategy.common);
  c_strategy->callback([&] { action = [&] { return cmd_strategy(strategy); }; });

  SimulateArgs sim;
  auto* c_sim = app.add_subcommand("simulate", "Run a plan against a defective set, or against all of them");
  c_sim->add_option("--alg", sim.alg)->required()->check(CLI::Range(1, 3));
  c_sim->add_option("--n", sim.n)->required();
  c_sim->add_option("--d", sim.d)->capture_default_str();
  c_sim->add_option("--s", sim.s)->required();
  c_sim->add_option("--defectives", sim.defectives, "Comma-separated items in 1..n")->delimiter(',');
  c_sim->add_flag("--worst", sim.worst, "Enumerate every defective set");
  c_sim->add_option("--budget", sim.budget, "Largest number of sets --worst may enumerate")->capture_default_str();
  add_common(c_sim, sim.common);
  c_sim->callback([&] { action = [&] { return cmd_simulate(sim); }; });

  VerifyArgs verify;
  auto* c_verify = app.add_subcommand("verify", "Run a property suite");
  c_verify->add_option("suite", verify.suite)
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>(std::begin(kSuiteNames), std::end(kSuiteNames))));
  c_verify->add_option("--nmax", verify.nmax, "Clamp every n range of the suite");
  c_verify->add_flag("--json", verify.json, "paper-claims only: emit the audit as JSON");
  add_common(c_verify, verify.common);
  c_verify->callback([&] { action = [&] { return cmd_verify(verify); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    status = action();
  } catch (const PlanError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return status;
}
