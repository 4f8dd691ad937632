#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fwid/report.hpp"

using namespace fwid;

namespace {

VerificationReport sample_report(const std::string& name = "dougall-4f3-special", std::uint64_t trials = 12) {
  TrialConfig cfg;
  cfg.identity = name;
  cfg.trials = trials;
  cfg.seed = 3;
  return verify_identity(cfg);
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("JSON roundtrip") {
  auto rep = sample_report();
  std::string text = to_json(rep);
  CHECK(nlohmann::json::accept(text));
  CHECK(report_from_json(text) == rep);
  CHECK(text.find("\"re\": ") != std::string::npos);
  auto j = nlohmann::json::parse(text);
  CHECK(j.at("records").size() == 12);
}

TEST_CASE("JSON key order and number format") {
  auto rep = sample_report();
  std::string text = to_json(rep);
  auto pos = [&](const char* k) { return text.find(std::string("\"") + k + "\""); };
  CHECK(pos("identity") < pos("tool_version"));
  CHECK(pos("tool_version") < pos("config"));
  CHECK(pos("config") < pos("aggregate"));
  CHECK(pos("aggregate") < pos("records"));
  CHECK(pos("records") < pos("wall_time_s"));
  // rel_err carries 17 significant digits in scientific notation
  auto at = text.find("\"rel_err\": ");
  REQUIRE(at != std::string::npos);
  std::string num = text.substr(at + 11, text.find(',', at) - at - 11);
  CAPTURE(num);
  CHECK(num.find('e') != std::string::npos);
  auto dot = num.find('.');
  CHECK(num.find('e') - dot - 1 == 16);
}

TEST_CASE("reports with errors and failures stay valid JSON") {
  auto rep = sample_report("example1", 5);
  TrialRecord err;
  err.trial = 5;
  err.outcome = Outcome::Error;
  err.error = "PoleError";
  err.message = "quote \" and backslash \\";
  rep.records.push_back(err);
  rep.aggregate = aggregate_records(rep.records);
  std::string text = to_json(rep);
  CHECK(nlohmann::json::accept(text));
  CHECK(report_from_json(text) == rep);
  std::vector<VerificationReport> both{rep, sample_report()};
  std::string all = to_json(both);
  CHECK(nlohmann::json::accept(all));
  CHECK(reports_from_json(all) == both);
}

TEST_CASE("CSV has a header and one row per trial") {
  auto rep = sample_report();
  std::string csv = to_csv(rep);
  CHECK(count_lines(csv) == rep.config.trials + 1);
  CHECK(csv.rfind("identity,trial,outcome,rel_err,", 0) == 0);
  std::vector<VerificationReport> two{rep, rep};
  CHECK(count_lines(to_csv(two)) == 2 * rep.config.trials + 1);
}

TEST_CASE("table ends with a summary line") {
  auto rep = sample_report();
  std::string t = to_table(rep);
  CHECK(t.find("summary: 12/12 pass") != std::string::npos);
  std::vector<VerificationReport> v{rep};
  CHECK(to_table(v).find("summary: 1/1 identities pass") != std::string::npos);
}

TEST_CASE("writing to disk") {
  auto rep = sample_report();
  std::string path = "fwid_report_test.json";
  write_report(rep, path, ReportFormat::Json);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(report_from_json(ss.str()) == rep);
  std::remove(path.c_str());
  try {
    write_report(rep, "/nonexistent-dir/x.json", ReportFormat::Csv);
    FAIL("expected IoError");
  } catch (const IoError& e) {
    CHECK(std::string(e.what()).find("/nonexistent-dir/x.json") != std::string::npos);
  }
}

TEST_CASE("reproducible bytes") {
  auto a = sample_report(), b = sample_report();
  CHECK(strip_wall_time(to_json(a)) == strip_wall_time(to_json(b)));
  CHECK_THROWS_AS(report_from_json("{\"identity\": 1}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}
