#include <sstream>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "msgpt/errors.hpp"
#include "msgpt/table.hpp"

using namespace msgpt;

namespace {

std::string render(const SweepSpec& spec) {
  std::ostringstream os;
  write_table(os, dp_sweep(spec));
  return os.str();
}

}  // namespace

TEST_CASE("sweep validation") {
  SweepSpec spec;
  spec.family = Family::kT1;
  spec.n_max = 100;
  spec.s_list = {2, 3};
  CHECK_NOTHROW(spec.validate());
  spec.n_max = kDefaultResourceCap + 1;
  CHECK_THROWS_AS(spec.validate(), ResourceError);
  spec.n_max = 100;
  spec.s_list.clear();
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec.s_list = {2};
  spec.n_min = 200;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
}

TEST_CASE("CSV output is byte-identical across runs and worker counts") {
  SweepSpec spec;
  spec.family = Family::kT2;
  spec.n_max = 800;
  spec.s_list = {2, 3, 4};
  const std::string first = render(spec);
  CHECK(first == render(spec));
  spec.jobs = 4;
  CHECK(first == render(spec));
  CHECK(first.find("mode=resolved-zero") != std::string::npos);
  CHECK(first.find("n,T2_s2,T2_s3,T2_s4\n") != std::string::npos);
}

TEST_CASE("table values and layout") {
  SweepSpec spec;
  spec.family = Family::kTdS2;
  spec.n_min = 4;
  spec.n_max = 30;
  spec.d_list = {1, 2};
  const SweepTable table = dp_sweep(spec);
  REQUIRE(table.series.size() == 2);
  CHECK(table.at(1, 9) == TestCount(9));
  CHECK(table.series[1].domain_from() == 8);

  spec.format = TableFormat::kJson;
  const std::string json = render(spec);
  CHECK(json.front() == '{');
  CHECK(parse_table_format("json") == TableFormat::kJson);
  CHECK_THROWS(parse_table_format("xml"));
}

TEST_CASE("strict cells below the range are written as inf") {
  SweepSpec spec;
  spec.family = Family::kT1;
  spec.n_max = 10;
  spec.s_list = {3};
  spec.mode = SingletonMode::kStrict;
  const std::string csv = render(spec);
  CHECK(csv.find("\n1,inf\n") != std::string::npos);
  CHECK(csv.find("mode=strict") != std::string::npos);
}
