#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "defcalc/model_io.hpp"
#include "defcalc/report.hpp"
#include "doctest.h"

using namespace defcalc;

namespace {

std::string model_dir() { return DEFCALC_MODEL_DIR; }
std::string cli_path() { return DEFCALC_CLI_PATH; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("shipped fixtures are in canonical form and round-trip") {
  for (const char* name : {"sl2", "sl2_adjoint", "abelian2", "sl2_omega", "cx3",
                           "cx3_rank2", "cxy3"}) {
    CAPTURE(name);
    std::string text = slurp(model_dir() + "/" + std::string(name) + ".model");
    ModelFile m = parse_model(text);
    CHECK(serialize_model(m) == text);
    // idempotency once more through a full cycle
    CHECK(serialize_model(parse_model(serialize_model(m))) == text);
  }
}

TEST_CASE("sl2 fixture parses to the expected Lie model") {
  ModelFile m = parse_model(slurp(model_dir() + "/sl2.model"));
  REQUIRE(m.lie_algebra.has_value());
  CHECK(m.lie_algebra->dim == 3);
  CHECK(m.lie_algebra->labels == std::vector<std::string>{"h", "e", "f"});
  CHECK(m.lie_algebra->bracket[0][1] == Vec{0, 2, 0});
  // antisymmetric fill of the unwritten order
  CHECK(m.lie_algebra->bracket[1][0] == Vec{0, -2, 0});
  REQUIRE(m.representation.has_value());
  CHECK(m.representation->target_dim == 2);
  CHECK(m.representation->action[1].at(0, 1) == 1);  // e . v = u
  CHECK(validate_lie(*m.lie_algebra).ok());
  CHECK(validate_rep(*m.lie_algebra, *m.representation).ok());
}

TEST_CASE("noncanonical input normalizes to canonical form") {
  std::string text =
      "# comment\n"
      "[lie_algebra]\n"
      "basis a b\n"
      "bracket b   a = 2/4 b   # reduced and reordered on output\n";
  ModelFile m = parse_model(text);
  CHECK(m.lie_algebra->bracket[1][0] == Vec{0, Q(1, 2)});
  CHECK(m.lie_algebra->bracket[0][1] == Vec{0, Q(-1, 2)});
  std::string canon = serialize_model(m);
  CHECK(canon ==
        "[lie_algebra]\n"
        "basis a b\n"
        "bracket a b = -1/2 b\n");
  CHECK(serialize_model(parse_model(canon)) == canon);
}

TEST_CASE("dg_algebra unit products are implied") {
  std::string text =
      "[dg_algebra]\n"
      "basis one a\n"
      "degree a = 1\n"
      "unit = one\n";
  ModelFile m = parse_model(text);
  REQUIRE(m.dg_algebra.has_value());
  CHECK(m.dg_algebra->mul(Vec{0, 1}, m.dg_algebra->unit_vec()) == Vec{0, 1});
  CHECK(m.dg_algebra->product[1][1] == Vec{0, 0});
}

TEST_CASE("parse errors carry line and column") {
  auto expect_error = [](const std::string& text, int line, const std::string& what) {
    try {
      parse_model(text);
      FAIL_CHECK("no error for: ", text);
    } catch (const ModelError& e) {
      CHECK(e.line == line);
      CHECK(std::string(e.what()).find(what) != std::string::npos);
    }
  };
  expect_error("[lie_algebra]\nbasis a\nbracket a a = 1 q\n", 3, "undeclared label 'q'");
  expect_error("[lie_algebra]\nbasis a\nbracket a a = 1/0 a\n", 3, "invalid scalar '1/0'");
  expect_error("[lie_algebra]\nbasis a\nfrobnicate a\n", 3, "unknown key 'frobnicate'");
  expect_error("[widgets]\n", 1, "unknown section 'widgets'");
  expect_error("[lie_algebra]\nbasis a a\n", 2, "duplicate label 'a'");
  expect_error("[lie_algebra]\nbracket a a = 1 a\n", 2, "basis must be declared");
  expect_error("[lie_algebra]\nbasis a\nbracket a a 1 a\n", 3, "expected '='");
  expect_error("bracket a a = 1 a\n", 1, "expected section header");
  expect_error("[representation]\nbasis u\naction x u = 1 u\n", 3,
               "requires [lie_algebra]");
  expect_error("[lie_algebra]\nbasis a\nbracket a a = 1 a\nbracket a a = 0\n", 4,
               "duplicate entry");
}

TEST_CASE("column positions point at the offending token") {
  try {
    parse_model("[lie_algebra]\nbasis a b\nbracket a b = 1 a 3/0 b\n");
    FAIL_CHECK("no error");
  } catch (const ModelError& e) {
    CHECK(e.line == 3);
    CHECK(e.col == 19);
  }
}

TEST_CASE("report json has a stable shape") {
  Report r;
  r.command = "validate";
  r.digest = fnv1a_digest("abc");
  r.results["dims"] = OrderedJson::object();
  r.add("first", true);
  r.add("second", false, "why");
  CHECK_FALSE(r.all_pass());
  std::string dumped = r.to_json().dump();
  CHECK(dumped.find("\"command\":\"validate\"") != std::string::npos);
  CHECK(dumped.find("\"status\":\"fail\"") != std::string::npos);
  // key order is insertion order, not alphabetical
  CHECK(dumped.find("\"command\"") < dumped.find("\"digest\""));
  CHECK(dumped.find("\"digest\"") < dumped.find("\"results\""));
  CHECK(fnv1a_digest("abc") == fnv1a_digest("abc"));
  CHECK(fnv1a_digest("abc") != fnv1a_digest("abd"));
}

TEST_CASE("cli exit codes: pass, check failure, input error") {
  RunResult ok = run_cli("validate --model " + model_dir() + "/sl2.model");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("all pass") != std::string::npos);

  // a bracket table that violates Jacobi fails validation but parses fine
  std::string bad = std::string(P_tmpdir) + "/defcalc_bad_model.txt";
  std::ofstream(bad) << "[lie_algebra]\nbasis a b c\n"
                        "bracket a b = 1 c\nbracket b c = 1 a\nbracket a c = 1 c\n";
  RunResult fail = run_cli("validate --model " + bad);
  CHECK(fail.exit_code == 1);
  CHECK(fail.out.find("[fail]") != std::string::npos);
  std::remove(bad.c_str());

  RunResult missing = run_cli("validate --model /nonexistent.model");
  CHECK(missing.exit_code == 2);
  RunResult unknown = run_cli("transmogrify --model x");
  CHECK(unknown.exit_code == 2);
}

TEST_CASE("cli reruns are byte-identical") {
  for (std::string args :
       {"validate --model " + model_dir() + "/sl2_omega.model",
        "deform --model " + model_dir() + "/abelian2.model --m 2",
        "trace-form --model " + model_dir() + "/sl2_omega.model --eta 1"}) {
    CAPTURE(args);
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
  }
}

TEST_CASE("deform on the abelian fixture reports the dimension-6 ring") {
  RunResult r = run_cli("deform --model " + model_dir() + "/abelian2.model --m 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"ring_dim\": 6") != std::string::npos);
}

TEST_CASE("trace-form on the omega fixture reports vanishing dtau") {
  RunResult r = run_cli("trace-form --model " + model_dir() + "/sl2_omega.model");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("dtau composite vanishes") != std::string::npos);
  CHECK(r.out.find("[fail]") == std::string::npos);
}

TEST_CASE("json report lands at the requested path") {
  std::string dst = std::string(P_tmpdir) + "/defcalc_report.json";
  RunResult r = run_cli("cohomology --model " + model_dir() + "/abelian2.model --json " + dst);
  CHECK(r.exit_code == 0);
  std::string body = slurp(dst);
  auto j = OrderedJson::parse(body);
  CHECK(j["command"] == "cohomology");
  CHECK(j["all_pass"] == true);
  CHECK(j["results"]["lie"].is_object());
  CHECK(j["results"]["lie"]["1"] == 2);
  std::remove(dst.c_str());
}
