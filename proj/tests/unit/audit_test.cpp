#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "msgpt/audit.hpp"
#include "msgpt/suites.hpp"

using namespace msgpt;

TEST_CASE("audit of the (513, 2, 4) example") {
  const AuditReport report = audit_claims();
  const AuditRecord* r = report.find("t2-513-4");
  REQUIRE(r != nullptr);
  CHECK(r->claimed == "32");
  CHECK(r->verdict == Verdict::kRefutedByEngine);
  int readings = 0;
  for (const std::string& line : r->details) {
    if (line.find("both defectives continuing on") != std::string::npos) ++readings;
  }
  CHECK(readings == 4);  // two readings under each of two modes

  std::ostringstream text;
  write_audit_text(text, report);
  CHECK(text.str().find("claim=t2-513-4") != std::string::npos);
  CHECK(text.str().find("engine[strict]=33") != std::string::npos);
  CHECK(text.str().find("engine[resolved-zero]=33") != std::string::npos);

  std::ostringstream json;
  write_audit_json(json, report);
  const auto doc = nlohmann::json::parse(json.str());
  CHECK(doc.size() == report.records.size());
}

TEST_CASE("confirmed claims") {
  const AuditReport report = audit_claims();
  CHECK(report.find("md-dts-2-3-3")->verdict == Verdict::kConfirmed);
  CHECK(report.find("t1-upper-sharp-t3")->verdict == Verdict::kConfirmed);
  CHECK(report.find("t2-lower-sharp-t3")->verdict == Verdict::kOutOfRange);
  CHECK(report.find("missing") == nullptr);
}

TEST_CASE("suites") {
  CHECK_THROWS(run_suite("nonsense"));
  SuiteOptions quick;
  quick.nmax = 300;
  const SuiteReport closed = run_suite("closed-forms", quick);
  CHECK(closed.passed());
  CHECK(run_suite("oracles", quick).passed());

  SuiteReport broken;
  broken.checks.push_back({"diagnostic", false, "info only", 1, false});
  CHECK(broken.passed());
  broken.checks.push_back({"assertion", false, "counterexample", 1, true});
  CHECK_FALSE(broken.passed());

  std::ostringstream os;
  write_suite_report(os, closed);
  CHECK(os.str().find("suite closed-forms: pass") != std::string::npos);
}
