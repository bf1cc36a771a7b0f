#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hflkit/complex_json.hpp"
#include "hflkit/graded_complex.hpp"
#include "hflkit/longitude.hpp"
#include "hflkit/report.hpp"

using namespace hflkit;
using nlohmann::json;

namespace {

const CheckResult* find_check(const ReportDocument& doc, const std::string& name) {
  for (const CheckResult& c : doc.checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("parse_format") {
  CHECK(parse_format("json") == OutputFormat::Json);
  CHECK(parse_format("table") == OutputFormat::Table);
  CHECK_THROWS_AS(parse_format("yaml"), std::invalid_argument);
}

TEST_CASE("hfl command") {
  const ReportDocument doc = cmd_hfl(1, std::nullopt);
  CHECK(doc.all_passed());
  CHECK(doc.result["computed"].size() == 4);
  CHECK(doc.result["agreement"] == true);
  REQUIRE(find_check(doc, "closed_form_agreement") != nullptr);

  const ReportDocument empty = cmd_hfl(1, HalfInt::from_twice(5));
  CHECK(empty.result["computed"].empty());
  CHECK(empty.all_passed());

  CHECK_THROWS_AS(cmd_hfl(0, std::nullopt), std::invalid_argument);
  CHECK_THROWS_AS(cmd_hfl(2, HalfInt::from_int(1)), std::invalid_argument);
}

TEST_CASE("JSON output is byte-stable") {
  const std::string a = render(cmd_hfl(3, std::nullopt), OutputFormat::Json);
  const std::string b = render(cmd_hfl(3, std::nullopt), OutputFormat::Json);
  CHECK(a == b);
  CHECK(render(cmd_verify(3), OutputFormat::Json) == render(cmd_verify(3), OutputFormat::Json));
  CHECK(a.back() == '\n');
}

TEST_CASE("whitehead command") {
  const ReportDocument doc = cmd_whitehead(2);
  CHECK(doc.all_passed());
  CHECK(doc.result["total_rank"] == 8);
  CHECK(find_check(doc, "expected_table") != nullptr);
  CHECK(find_check(doc, "total_rank_4n") != nullptr);
  CHECK_THROWS_AS(cmd_whitehead(0), std::invalid_argument);
}

TEST_CASE("alexander commands") {
  CHECK(cmd_alexander_torus(2).result["polynomial"]["text"] == "t^-2 - t^-1 + 1 - t + t^2");
  const ReportDocument sat = cmd_alexander_satellite("t^-1 - 1 + t", "1", 0);
  CHECK(sat.result["polynomial"]["text"] == "1");
  CHECK(sat.result["unit"] == true);
  CHECK_THROWS_AS(cmd_alexander_satellite("1 + 2t", "1", 1), std::invalid_argument);
  CHECK_THROWS_AS(cmd_alexander_satellite("t^", "1", 1), std::invalid_argument);
}

TEST_CASE("kauffman commands") {
  CHECK(cmd_kauffman(3, false).result["count"] == 7);
  const ReportDocument listed = cmd_kauffman(1, true);
  REQUIRE(listed.result["states"].size() == 3);
  CHECK(listed.result["states"][0]["index"] == 1);
  CHECK(cmd_kauffman_pd("X(4,2,5,1), X(8,6,1,5), X(6,3,7,4), X(2,7,3,8)", false).result["count"] == 5);
  CHECK_THROWS_AS(cmd_kauffman(0, false), std::invalid_argument);
  CHECK_THROWS_AS(cmd_kauffman_pd("X(1,2,3)", false), std::invalid_argument);
}

TEST_CASE("complex and homology commands round-trip") {
  const ReportDocument c = cmd_complex(2, HalfInt::from_twice(-1));
  const ReportDocument h = cmd_homology(c.result["complex"]);
  CHECK(h.result["homology"] == to_json(homology(build_hfl_complex(2, HalfInt::from_twice(-1)))));
  CHECK(h.result["homology"] == cmd_hfl(2, HalfInt::from_twice(-1)).result["computed"]);
}

TEST_CASE("homology rejects malformed complexes") {
  json bad = {
      {"generators", {{{"label", "a"}, {"spinc", "1/2"}, {"maslov", 0}}, {{"label", "b"}, {"spinc", "1/2"}, {"maslov", 0}}}},
      {"differential", {{{"from", 0}, {"to", 1}, {"coefficient", "1"}}}}};
  CHECK_THROWS_AS(cmd_homology(bad), MalformedComplex);
  CHECK_THROWS_AS(cmd_homology(json{{"generators", 3}}), std::invalid_argument);
}

TEST_CASE("verify command") {
  const ReportDocument doc = cmd_verify(4);
  CHECK(doc.all_passed());
  CHECK(doc.result["failed"] == 0);
  CHECK(doc.result["passed"].get<int>() == static_cast<int>(doc.checks.size()));
  CHECK_THROWS_AS(cmd_verify(0), std::invalid_argument);
}

TEST_CASE("table rendering mentions every check") {
  const ReportDocument doc = cmd_whitehead(1);
  const std::string text = render(doc, OutputFormat::Table);
  for (const CheckResult& c : doc.checks) CHECK(text.find(c.name) != std::string::npos);
}
