#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "rabbit/cli.hpp"

using namespace rabbit;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("classify") {
  CHECK(run({"classify", "z"}).out == "A3\n");
  CHECK(run({"classify", ""}).out == "R3\n");
  CHECK(run({"classify"}).out == "R3\n");
  CHECK(run({"classify", "z x^2"}).out == "coA3\n");
  CHECK(run({"classify", "x^89", "--algorithm", "prefix"}).out == "A3\n");
  CHECK(run({"classify", "x^-77", "--algorithm", "whole-word"}).out == "coR3\n");
}

TEST_CASE("classify trace goes to the diagnostic stream") {
  const Run r = run({"classify", "x^3", "--trace"});
  CHECK(r.code == 0);
  CHECK(r.out == "coA3\n");
  CHECK(r.err.find("psi: x^3") != std::string::npos);
  CHECK(r.err.find("P: x^3  [case2(x^3)]") != std::string::npos);
}

TEST_CASE("parse failures exit with 1") {
  const Run r = run({"classify", "x^"});
  CHECK(r.code == 1);
  CHECK(r.err.find("position 2") != std::string::npos);
  CHECK(run({"classify", "q"}).code == 1);
  CHECK(run({"classify", "z", "--algorithm", "fast"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"power", "12a"}).code == 1);
  CHECK(run({"power", "3", "--family", "n5"}).code == 1);
  CHECK(run({"census", "--format", "xml"}).code == 1);
}

TEST_CASE("power") {
  CHECK(run({"power", "89", "--family", "n3"}).out == "108_9 → A3\n");
  CHECK(run({"power", "-77", "--family", "n3"}).out == "…88804_9 → coR3\n");
  CHECK(run({"power", "3", "--family", "nGeq4"}).out == "3_9 → Kn1\n");
  CHECK(run({"power", "0"}).out == "0_9 → R3\n");
  const Run r = run({"power", "-77", "--crosscheck"});
  CHECK(r.code == 0);
  CHECK(r.err.find("prefix: coR3") != std::string::npos);
  const std::string huge = "1" + std::string(1000, '0');
  const Run big = run({"power", huge, "--crosscheck"});
  CHECK(big.code == 0);
  CHECK(big.err.find("skipped") != std::string::npos);
  CHECK(run({"power", huge, "--family", "nGeq4", "--crosscheck"}).code == 0);
}

TEST_CASE("census") {
  const Run r = run({"census", "--max-len", "9", "--algorithm", "both", "--workers", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.size() > 30);
  CHECK(r.out.substr(r.out.rfind('\n', r.out.size() - 2) + 1) == "9,7341,6802,12495,12727,39365\n");
  CHECK(r.err.find("census:") != std::string::npos);
  CHECK(run({"census", "--max-len", "4", "--workers", "1"}).out ==
        run({"census", "--max-len", "4", "--workers", "3"}).out);
  CHECK(run({"census", "--max-len", "2", "--format", "table"}).out.find("total") !=
        std::string::npos);
}

TEST_CASE("census to a file") {
  const auto path = std::filesystem::temp_directory_path() / "rabbit_census_test.csv";
  const Run r = run({"census", "--max-len", "3", "--output", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text.find("3,11,8,12,22,53\n") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("nucleus") {
  const Run r = run({"nucleus"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("{id, x, x^-1, x^-1 z^-1, z x}, verified at depth k = ", 0) == 0);
  CHECK(run({"nucleus", "--budget", "2"}).code == 2);
}

TEST_CASE("selftest subset") {
  const Run r = run({"selftest", "--only", "2", "5", "6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("[PASS] 2.") != std::string::npos);
  CHECK(r.out.find("[PASS] 5.") != std::string::npos);
  CHECK(r.out.find("[PASS] 6.") != std::string::npos);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
  CHECK(run({"selftest", "--only", "9"}).code == 1);
}
