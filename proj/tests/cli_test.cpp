// End-to-end tests of the command-line tool. The harness receives the tool's
// path as the first plain argument and drives it through a shell, checking
// exit codes and captured streams.
#define DOCTEST_CONFIG_IMPLEMENT
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "visco/material_file.hpp"

namespace {

std::string g_tool;

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const char* path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run_tool(const std::string& args) {
  const std::string cmd = "\"" + g_tool + "\" " + args + " >cli_test.out 2>cli_test.err";
  const int status = std::system(cmd.c_str());
  RunResult r;
  if (WIFEXITED(status)) r.code = WEXITSTATUS(status);
  r.out = slurp("cli_test.out");
  r.err = slurp("cli_test.err");
  return r;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

// "key ... = value" lines from the limit report
std::string report_value(const std::string& out, const std::string& key) {
  std::istringstream lines(out);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.rfind(key, 0) != 0) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) return {};
    auto start = line.find_first_not_of(' ', eq + 1);
    return start == std::string::npos ? std::string{} : line.substr(start);
  }
  return {};
}

const char* kSls =
    R"({"kind":"relaxation","name":"sls","newtonian":0.0,"equilibrium":1.0,)"
    R"("atoms":[{"rate":1.0,"weight":1.0}]})";

const char* kMaxwell =
    R"({"kind":"relaxation","name":"maxwell","newtonian":0.0,"equilibrium":0.0,)"
    R"("atoms":[{"rate":1.0,"weight":1.0}]})";

const char* kAffineCreep =
    R"({"kind":"creep","name":"affine","offset":1.0,"flow":1.0,"atoms":[]})";

const char* kRampCreep =
    R"({"kind":"creep","name":"ramp","offset":0.0,"flow":1.0,"atoms":[]})";

const char* kElastic =
    R"({"kind":"relaxation","name":"spring","newtonian":0.0,"equilibrium":4.0,"atoms":[]})";

}  // namespace

TEST_CASE("convert writes the dual of the solid model") {
  write_file("sls.json", kSls);
  const RunResult r = run_tool("convert sls.json -o sls_dual.json");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "interlacing: poles=1 atoms=1 count=ok alternation=ok"));
  CHECK(report_value(r.out, "h_at_inf") == "1");
  CHECK(report_value(r.out, "f0_at_zero") == "2");

  const visco::MaterialRecord rec = visco::read_material_file("sls_dual.json");
  CHECK(rec.name == "sls-dual");
  REQUIRE(!rec.is_relaxation());
  CHECK(rec.creep().offset() == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(rec.creep().flow() == 0.0);
  REQUIRE(rec.creep().spectrum().size() == 1);
  CHECK(rec.creep().spectrum().atoms()[0].rate == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("convert twice restores the original record") {
  write_file("sls.json", kSls);
  REQUIRE(run_tool("convert sls.json -o sls_dual.json").code == 0);
  REQUIRE(run_tool("convert sls_dual.json -o sls_back.json").code == 0);
  const visco::MaterialRecord back = visco::read_material_file("sls_back.json");
  CHECK(back.name == "sls");
  REQUIRE(back.is_relaxation());
  CHECK(back.relaxation().newtonian() == 0.0);
  CHECK(back.relaxation().equilibrium() == doctest::Approx(1.0).epsilon(1e-8));
  REQUIRE(back.relaxation().spectrum().size() == 1);
  CHECK(back.relaxation().spectrum().atoms()[0].rate == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(back.relaxation().spectrum().atoms()[0].weight == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("convert turns a pure ramp creep into a newtonian modulus") {
  write_file("ramp.json", kRampCreep);
  const RunResult r = run_tool("convert ramp.json -o ramp_dual.json");
  CHECK(r.code == 0);
  const visco::MaterialRecord rec = visco::read_material_file("ramp_dual.json");
  REQUIRE(rec.is_relaxation());
  CHECK(rec.relaxation().newtonian() == 1.0);
  CHECK(rec.relaxation().equilibrium() == 0.0);
  CHECK(rec.relaxation().spectrum().empty());
}

TEST_CASE("convert rejects invalid files with a named diagnostic") {
  write_file("negative.json",
             R"({"kind":"relaxation","name":"bad","newtonian":0,"equilibrium":1,)"
             R"("atoms":[{"rate":1.0,"weight":-1.0}]})");
  const RunResult r = run_tool("convert negative.json -o out.json");
  CHECK(r.code == 2);
  CHECK(contains(r.err, "NegativeWeight"));
}

TEST_CASE("convert escalates precision loss to a numerical failure") {
  write_file("stiff.json",
             R"({"kind":"relaxation","name":"stiff","newtonian":0,"equilibrium":1,)"
             R"("atoms":[{"rate":1.0,"weight":1.0},{"rate":1.0000000000001,"weight":1.0}]})");
  const RunResult r = run_tool("convert stiff.json -o stiff_dual.json");
  CHECK(r.code == 3);
  CHECK(contains(r.err, "precision"));
}

TEST_CASE("verify passes a self-converted model") {
  write_file("sls.json", kSls);
  const RunResult r = run_tool("verify sls.json");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "duality residual"));
  CHECK(contains(r.out, "pass"));
  CHECK(!contains(r.out, "FAIL"));
}

TEST_CASE("verify flags a mismatched pair but still prints the table") {
  write_file("sls.json", kSls);
  write_file("affine.json", kAffineCreep);
  const RunResult r = run_tool("verify sls.json --dual affine.json");
  CHECK(r.code == 1);
  CHECK(contains(r.out, "duality residual"));
  CHECK(contains(r.out, "FAIL"));
}

TEST_CASE("verify rejects two models of the same kind") {
  write_file("sls.json", kSls);
  write_file("maxwell.json", kMaxwell);
  const RunResult r = run_tool("verify sls.json --dual maxwell.json");
  CHECK(r.code == 2);
}

TEST_CASE("verify rejects a malformed pgrid") {
  write_file("sls.json", kSls);
  CHECK(run_tool("verify sls.json --pgrid 1:2").code == 2);
  CHECK(run_tool("verify sls.json --step 0").code == 2);
}

TEST_CASE("sample prints exact CSV for the affine creep") {
  write_file("affine.json", kAffineCreep);
  const RunResult r = run_tool("sample affine.json --t 1:3:3");
  CHECK(r.code == 0);
  CHECK(r.out == "t,value\n1,2\n2,3\n3,4\n");
}

TEST_CASE("sample of an elastic modulus is constant") {
  write_file("spring.json", kElastic);
  const RunResult r = run_tool("sample spring.json --t 1:2:2");
  CHECK(r.code == 0);
  CHECK(r.out == "t,value\n1,4\n2,4\n");
}

TEST_CASE("sample honors log spacing") {
  write_file("affine.json", kAffineCreep);
  const RunResult r = run_tool("sample affine.json --t 0.01:100:5 --log");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("t,value\n0.01,", 0) == 0);
  CHECK(contains(r.out, "\n100,"));
}

TEST_CASE("sample input validation") {
  write_file("affine.json", kAffineCreep);
  write_file("sls.json", kSls);
  CHECK(run_tool("sample affine.json --t 1:2:0").code == 2);
  CHECK(run_tool("sample sls.json --t 0:1:4").code == 2);
  CHECK(run_tool("sample affine.json --t nonsense").code == 2);
}

TEST_CASE("limits reports the fluid dichotomy") {
  write_file("maxwell.json", kMaxwell);
  const RunResult r = run_tool("limits maxwell.json");
  CHECK(r.code == 0);
  CHECK(report_value(r.out, "f_inf") == "0");
  CHECK(report_value(r.out, "h_at_inf") == "inf");
  CHECK(report_value(r.out, "flow_b") == "1");

  write_file("sls.json", kSls);
  const RunResult solid = run_tool("limits sls.json");
  CHECK(report_value(solid.out, "h_at_inf") == "1");
  CHECK(report_value(solid.out, "h_at_zero") == "0.5");
}

TEST_CASE("limits flags the newtonian trigger for a zero creep offset") {
  write_file("dashpot.json",
             R"({"kind":"relaxation","name":"dashpot","newtonian":2.0,"equilibrium":0.0,)"
             R"("atoms":[]})");
  const RunResult r = run_tool("limits dashpot.json");
  CHECK(r.code == 0);
  CHECK(report_value(r.out, "h_at_zero") == "0");
  CHECK(report_value(r.out, "h_slope_at_zero") == "0.5");
  CHECK(contains(r.out, "newtonian term present"));
}

TEST_CASE("usage errors exit with the validation code") {
  CHECK(run_tool("").code == 2);
  CHECK(run_tool("frobnicate in.json").code == 2);
  write_file("affine.json", kAffineCreep);
  CHECK(run_tool("sample affine.json --t 1:2:2 --bogus").code == 2);
  CHECK(run_tool("convert missing-file.json -o out.json").code == 2);
  CHECK(run_tool("--help").code == 0);
}

int run_harness(int argc, char** argv) {
  std::vector<char*> rest;
  rest.push_back(argv[0]);
  for (int i = 1; i < argc; ++i) {
    if (g_tool.empty() && argv[i][0] != '-')
      g_tool = argv[i];
    else
      rest.push_back(argv[i]);
  }
  if (g_tool.empty()) {
    std::fprintf(stderr, "usage: cli_test <path-to-viscodual> [doctest options]\n");
    return 1;
  }
  doctest::Context ctx(static_cast<int>(rest.size()), rest.data());
  return ctx.run();
}

int main(int argc, char** argv) { return run_harness(argc, argv); }
