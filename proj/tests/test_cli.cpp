#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "quotdeg/report.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
  const char* bin = std::getenv("QUOTDEG_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "QUOTDEG_BIN must point at the CLI binary");
  const std::string cmd = std::string(bin) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buffer{};
  size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("degree d=3 agrees across methods") {
  const auto r = run("degree --d 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("total degree = 128") != std::string::npos);
  CHECK(r.output.find("oracle_agreement") != std::string::npos);
}

TEST_CASE("degree d=0 bott only") {
  const auto r = run("degree --d 0 --method bott");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("total degree = 2") != std::string::npos);
}

TEST_CASE("non-increasing weights exit 1") {
  const auto r = run("degree --d 3 --weights 0,1,2,2");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("weights must be strictly increasing") != std::string::npos);
}

TEST_CASE("bad flags exit 1") {
  CHECK(run("degree").exit_code == 1);
  CHECK(run("degree --d -2").exit_code == 1);
  CHECK(run("frobnicate").exit_code == 1);
  CHECK(run("degree --d 1 --method fast").exit_code == 1);
}

TEST_CASE("json report round-trips byte-identically") {
  const auto r = run("degree --d 1 --per-component --format json");
  CHECK(r.exit_code == 0);
  const auto report = quotdeg::Report::from_json(r.output);
  CHECK(report.total_degree == 8);
  CHECK(report.d == 1);
  REQUIRE(report.per_component.has_value());
  CHECK(report.per_component->size() == 12);
  CHECK(report.to_json() == r.output);
}

TEST_CASE("components listing") {
  const auto d3 = run("components --d 3");
  CHECK(d3.exit_code == 0);
  CHECK(d3.output.find("components = 24") != std::string::npos);
  CHECK(d3.output.find("euler characteristic = 120") != std::string::npos);

  const auto d0 = run("components --d 0");
  CHECK(d0.exit_code == 0);
  CHECK(d0.output.find("components = 6") != std::string::npos);
  CHECK(d0.output.find("point") != std::string::npos);

  const auto d4 = run("components --d 4");
  CHECK(d4.exit_code == 0);
  CHECK(d4.output.find("components = 30") != std::string::npos);
  CHECK(d4.output.find("euler characteristic = 210") != std::string::npos);
}

TEST_CASE("vi command") {
  const auto r = run("vi --k 2 --n 4 --d 3 --insertions 1x16");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "128\n");

  const auto r0 = run("vi --k 2 --n 4 --d 0 --insertions 1x4");
  CHECK(r0.exit_code == 0);
  CHECK(r0.output == "2\n");

  const auto bad = run("vi --k 2 --n 4 --d 1 --insertions 1x7");
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("selection rule") != std::string::npos);
  CHECK(bad.output.find("8") != std::string::npos);

  const auto json = run("vi --k 2 --n 4 --d 1 --insertions 1x8 --format json");
  CHECK(json.exit_code == 0);
  CHECK(json.output.find("\"value\": \"8\"") != std::string::npos);
  CHECK(json.output.find("\"path\": \"exact\"") != std::string::npos);
}

TEST_CASE("degree with jobs and per-component text") {
  const auto r = run("degree --d 2 --method bott --per-component --jobs 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("total degree = 32") != std::string::npos);
  CHECK(r.output.find("b:2") != std::string::npos);
}

TEST_CASE("precision env var reaches the float path") {
  const char* bin = std::getenv("QUOTDEG_BIN");
  REQUIRE(bin != nullptr);
  const std::string cmd = std::string("QUOTDEG_PRECISION_BITS=256 ") + bin +
                          " vi --k 2 --n 3 --d 0 --insertions 1,1 --format json 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buffer{};
  size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    output.append(buffer.data(), got);
  REQUIRE(WEXITSTATUS(pclose(pipe)) == 0);
  CHECK(output.find("\"value\": \"1\"") != std::string::npos);
  CHECK(output.find("\"path\": \"float\"") != std::string::npos);
  CHECK(output.find("\"precision_bits\": 256") != std::string::npos);
}

TEST_CASE("selftest quick") {
  const auto r = run("selftest --quick");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("FAIL") == std::string::npos);

  const auto j = run("selftest --quick --json");
  CHECK(j.exit_code == 0);
  CHECK(j.output.find("\"pass\": true") != std::string::npos);
}
