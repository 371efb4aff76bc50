#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "extcauchy/errors.hpp"
#include "extcauchy/verify.hpp"

using namespace extcauchy;
using nlohmann::json;

namespace {

SweepConfig one_cell() {
  SweepConfig c;
  c.a_values = {1.0};
  c.m_values = {1.0};
  c.k_values = {0};
  c.pairs = {{2, 4}};
  c.tolerance = 1e-8;
  return c;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "extcauchy_test_verify";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("pass rule mixes relative and absolute tolerance") {
  CHECK(passes(10.0, 5e-8, 5e-9, 1e-8));
  CHECK_FALSE(passes(10.0, 5e-7, 5e-8, 1e-8));
  CHECK(passes(0.1, 5e-9, 5e-8, 1e-8));
  CHECK_FALSE(passes(0.1, 5e-8, 5e-7, 1e-8));
  CHECK_FALSE(passes(2.0, 5e-9, 2.5e-8, 1e-8));
  CHECK(oracle_tolerance(1e-8) == doctest::Approx(1e-11));
  CHECK(oracle_tolerance(1e-10) == kMinRelTol);
}

TEST_CASE("verify_one at the pi/4 point") {
  const VerificationRecord r = verify_one({1.0, 1.0, 0, 2, 4}, 1e-8);
  CHECK(r.pass);
  CHECK_FALSE(r.error.has_value());
  CHECK(std::abs(r.closed_form - kPi / 4.0) < 1e-14);
  CHECK(std::abs(r.oracle - kPi / 4.0) < 1e-12);
  CHECK(r.id == "theorem");
  CHECK(r.oracle_nodes > 0);
  CHECK(r.wall_time_ms >= 0.0);
}

TEST_CASE("verify_one tags degenerate pairs instead of throwing") {
  VerificationRecord r;
  CHECK_NOTHROW(r = verify_one({1.0, 1.0, 0, 2, 6}, 1e-8));
  CHECK_FALSE(r.pass);
  REQUIRE(r.error.has_value());
  CHECK(r.error->starts_with("DegenerateParameters"));
}

TEST_CASE("verify_one on the non-integer families") {
  CHECK(verify_one({1.0, 1.0, DLogDeriv{}, 2, 4}, 1e-8).pass);
  CHECK(verify_one({2.0, 0.25, DLogDeriv{}, 4, 6}, 1e-8).pass);
  CHECK(verify_one({3.0, 0.5, KNegOne{}, 2, 4}, 1e-8).pass);
  const VerificationRecord none = verify_one({1.0, 0.7, DLogDeriv{}, 2, 4}, 1e-8);
  REQUIRE(none.error.has_value());
  CHECK(none.error->starts_with("DomainError"));
}

TEST_CASE("verify_example on e13") {
  const VerificationRecord r = verify_example(ExampleId::e13, {}, 1e-9);
  CHECK(r.pass);
  CHECK(r.closed_form.real() == doctest::Approx(0.8813735870).epsilon(1e-9));
  CHECK(r.oracle.real() == doctest::Approx(0.8813735870).epsilon(1e-9));
  CHECK(r.id == "e13");
}

TEST_CASE("e10 closed form differs from its integral by 2 pi i g(a pi)") {
  ExampleParams p;
  p.a = cplx(1.0, 1.0);
  const VerificationRecord r = verify_example(ExampleId::e10, p, 1e-7);
  CHECK_FALSE(r.error.has_value());
  CHECK_FALSE(r.pass);
  const cplx t = p.a * kPi;
  const cplx g = std::exp(0.5 * t) / ((1.0 + std::exp(2.0 * t)) * (1.0 + std::exp(4.0 * t)));
  const cplx gap = r.closed_form - r.oracle;
  CHECK(std::abs(gap - 2.0 * kPi * kI * g) < 1e-12);
}

TEST_CASE("sweep summaries") {
  SweepConfig c = one_cell();
  SweepReport single = run_sweep(c, Execution::Serial, nullptr);
  CHECK(single.summary.total == 1);
  CHECK(single.summary.passed == 1);
  CHECK(single.summary.failed == 0);
  CHECK(single.summary.errored == 0);

  c.pairs = {{2, 6}};
  std::ostringstream out;
  SweepReport empty = run_sweep(c, Execution::Parallel, &out);
  CHECK(empty.summary.total == 0);
  CHECK(empty.summary.passed == 0);
  CHECK(empty.summary.failed == 0);
  CHECK(empty.summary.errored == 0);
  REQUIRE(empty.summary.degenerate_pairs.size() == 1);
  const auto lines = lines_of(out.str());
  REQUIRE(lines.size() == 1);
  CHECK(json::parse(lines[0])["error"].get<std::string>().starts_with("DegenerateParameters"));
}

TEST_CASE("a degenerate pair leaves the other cells untouched") {
  SweepConfig with = one_cell();
  with.m_values = {0.5, 1.0};
  with.k_values = {0, 1};
  SweepConfig without = with;
  with.pairs = {{2, 6}, {2, 4}, {4, 6}};
  without.pairs = {{2, 4}, {4, 6}};
  const SweepReport a = run_sweep(with, Execution::Parallel, nullptr);
  const SweepReport b = run_sweep(without, Execution::Parallel, nullptr);
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].closed_form == b.records[i].closed_form);
    CHECK(a.records[i].oracle == b.records[i].oracle);
  }
  CHECK(a.summary.passed == 8);
}

TEST_CASE("errored cells are isolated") {
  SweepConfig c = one_cell();
  c.k_values = {0, DLogDeriv{}, 2};
  c.m_values = {0.7};
  const SweepReport r = run_sweep(c, Execution::Parallel, nullptr);
  CHECK(r.summary.total == 3);
  CHECK(r.summary.errored == 1);
  CHECK(r.summary.passed == 2);
  CHECK(r.records[1].error.has_value());
  CHECK(r.records[0].closed_form == verify_one({1.0, 0.7, 0, 2, 4}, 1e-8).closed_form);
}

TEST_CASE("serial and parallel sweeps are bit-identical and ordered") {
  SweepConfig c;
  c.a_values = {0.5, 2.0};
  c.m_values = {0.25, cplx(1.0, 0.5)};
  c.k_values = {0, 3, DLogDeriv{}};
  c.pairs = {{2, 4}, {4, 8}};
  c.tolerance = 1e-8;
  std::ostringstream serial_out, parallel_out;
  const SweepReport s = run_sweep(c, Execution::Serial, &serial_out);
  const SweepReport p = run_sweep(c, Execution::Parallel, &parallel_out);
  REQUIRE(s.records.size() == 24);
  REQUIRE(p.records.size() == s.records.size());
  for (std::size_t i = 0; i < s.records.size(); ++i) {
    CHECK(s.records[i].closed_form == p.records[i].closed_form);
    CHECK(s.records[i].oracle == p.records[i].oracle);
    CHECK(s.records[i].error == p.records[i].error);
  }
  const auto sl = lines_of(serial_out.str()), pl = lines_of(parallel_out.str());
  REQUIRE(sl.size() == pl.size());
  for (std::size_t i = 0; i < sl.size(); ++i) {
    json a = json::parse(sl[i]), b = json::parse(pl[i]);
    a.erase("wall_time_ms");
    b.erase("wall_time_ms");
    CHECK(a == b);
  }
}

TEST_CASE("config parsing") {
  const json j = json::parse(R"({
    "a_values": [0.5, 1],
    "m_values": [0.25, [1.0, 0.5]],
    "k_values": [0, 3, "dlog", "kneg1"],
    "pairs": [[2, 4], [4, 6]],
    "tolerance": 1e-7,
    "output_path": "out.jsonl"
  })");
  const SweepConfig c = sweep_config_from_json(j);
  CHECK(c.a_values.size() == 2);
  CHECK(c.m_values[1] == cplx(1.0, 0.5));
  CHECK(std::get<int>(c.k_values[1]) == 3);
  CHECK(std::holds_alternative<DLogDeriv>(c.k_values[2]));
  CHECK(std::holds_alternative<KNegOne>(c.k_values[3]));
  CHECK(c.pairs[1] == std::pair{4, 6});
  CHECK(c.tolerance == 1e-7);
  CHECK(c.output_path == "out.jsonl");

  json bad = j;
  bad["tolerance"] = 1e-13;
  CHECK_THROWS_AS(sweep_config_from_json(bad), DomainError);
  bad = j;
  bad["a_values"] = json::array();
  CHECK_THROWS_AS(sweep_config_from_json(bad), DomainError);
  bad = j;
  bad["k_values"] = {"half"};
  CHECK_THROWS_AS(sweep_config_from_json(bad), DomainError);
  bad = j;
  bad["m_values"] = {json::array({1, 2, 3})};
  CHECK_THROWS_AS(sweep_config_from_json(bad), DomainError);
  bad = j;
  bad.erase("pairs");
  CHECK_THROWS_AS(sweep_config_from_json(bad), DomainError);
}

TEST_CASE("k parsing") {
  CHECK(std::get<int>(parse_korder("12")) == 12);
  CHECK(std::holds_alternative<DLogDeriv>(parse_korder("dlog")));
  CHECK(std::holds_alternative<KNegOne>(parse_korder("kneg1")));
  CHECK_THROWS_AS(parse_korder("1.5"), DomainError);
  CHECK_THROWS_AS(parse_korder(""), DomainError);
}

TEST_CASE("record serialisation") {
  const json j = to_json(verify_one({2.0, cplx(0.5, 0.1), 1, 2, 8}, 1e-8));
  for (const char* key : {"id", "spec", "closed_form", "oracle", "abs_diff", "rel_diff", "tolerance", "pass",
                          "oracle_error_estimate", "wall_time_ms", "error"})
    CHECK(j.contains(key));
  CHECK(j["spec"]["m"] == json::array({0.5, 0.1}));
  CHECK(j["spec"]["k"] == 1);
  CHECK(complex_from_json(j["closed_form"]) == complex_from_json(j["closed_form"]));
  CHECK(complex_from_json(json(2.5)) == cplx(2.5, 0.0));

  const json e = to_json(verify_example(ExampleId::e8, {}, 1e-6));
  CHECK(e["id"] == "e8");
  CHECK(e["params"]["u"] == 0.5);
  CHECK(e["params"]["alpha"] == 2);
}

TEST_CASE("file output and CSV projection") {
  const auto dir = scratch_dir();
  SweepConfig c = one_cell();
  c.pairs = {{2, 6}, {2, 4}};
  c.output_path = (dir / "report.jsonl").string();
  c.csv_path = (dir / "report.csv").string();
  run_sweep(c);

  std::ifstream in(c.output_path);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  REQUIRE(lines.size() == 3);
  CHECK(json::parse(lines[1])["pass"] == true);
  CHECK(json::parse(lines[2])["summary"]["passed"] == 1);

  std::ifstream csv(c.csv_path);
  std::string header, row;
  std::getline(csv, header);
  std::getline(csv, row);
  CHECK(header == csv_header());
  CHECK(row.starts_with("theorem,2,4,"));
}

TEST_CASE("unwritable output raises OutputIOError") {
  SweepConfig c = one_cell();
  c.output_path = "/nonexistent-dir/report.jsonl";
  CHECK_THROWS_AS(run_sweep(c), OutputIOError);
}
