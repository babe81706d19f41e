#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int rc = -1;
  std::string out;  // stdout and stderr interleaved
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string("\"") + EULERSUM_BIN + "\" " + args + " 2>&1";
  RunResult r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("list shows the whole registry") {
  const RunResult r = run("list");
  CHECK(r.rc == 0);
  CHECK(r.out.find("T1.k1") != std::string::npos);
  CHECK(r.out.find("D8") != std::string::npos);
  CHECK(r.out.find("67/8*zeta(3)") != std::string::npos);

  const RunResult j = run("list --format json");
  CHECK(j.rc == 0);
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed.is_array());
  CHECK(parsed.size() == 31);
}

TEST_CASE("show prints one identity") {
  const RunResult r = run("show T1.k4");
  CHECK(r.rc == 0);
  CHECK(r.out.find("67/8*zeta(3) - 2*pi*Cl2(1/2*pi)") != std::string::npos);
  CHECK(r.out.find("rhs value:") != std::string::npos);
  CHECK(run("show nope").rc == 2);
}

TEST_CASE("verify single identity") {
  const RunResult r = run("verify T1.k1 --format json");
  CHECK(r.rc == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["id"] == "T1.k1");
  CHECK(j["pass"] == true);

  const RunResult tight = run("verify T1.k1 --tol 1e-30");
  CHECK(tight.rc == 1);
  CHECK(tight.out.find("FAIL") != std::string::npos);

  CHECK(run("verify").rc == 2);
  CHECK(run("verify T1.k1 --all").rc == 2);
  CHECK(run("verify bogus").rc == 2);
}

TEST_CASE("verify all is reproducible across job counts") {
  const RunResult a = run("verify --all --format csv --jobs 1");
  const RunResult b = run("verify --all --format csv --jobs 2");
  CHECK(a.rc == 0);
  CHECK(b.rc == 0);
  CHECK(count_lines(a.out) == 48);
  CHECK(a.out == b.out);
}

TEST_CASE("closed-form printer") {
  const RunResult r = run("theorem1 --k 1");
  CHECK(r.rc == 0);
  CHECK(r.out.find("2*zeta(3)") != std::string::npos);
  CHECK(r.out.find("2.404113806319") != std::string::npos);

  const RunResult alt = run("theorem1 --k 4");
  CHECK(alt.rc == 0);
  CHECK(alt.out.find("67/8*zeta(3) - 2*pi*Cl2(1/2*pi)") != std::string::npos);

  CHECK(run("theorem1 --k 0").rc == 2);
}

TEST_CASE("constants all match their references") {
  const RunResult r = run("constants");
  CHECK(r.rc == 0);
  CHECK(r.out.find("zeta(3)") != std::string::npos);
  CHECK(r.out.find(" NO") == std::string::npos);
}

TEST_CASE("oracle runner") {
  const RunResult r = run("oracle psi");
  CHECK(r.rc == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(run("oracle nope").rc == 2);
}

TEST_CASE("transform subcommands") {
  const RunResult f = run("mellin forward --k 3 --z 0.5");
  CHECK(f.rc == 0);
  CHECK(f.out.find("96") != std::string::npos);

  const RunResult x = run("mellin factor");
  CHECK(x.rc == 0);
  CHECK(x.out.find("abs_diff") != std::string::npos);
}

TEST_CASE("config file steers the engine") {
  {
    std::ofstream cfg("tmp_cfg_ok.ini");
    cfg << "# cutoff override\n";
    cfg << "direct_cutoff = 2000\n";
  }
  const RunResult r = run("--config tmp_cfg_ok.ini verify T1.k1 --format json");
  CHECK(r.rc == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["terms_used"] == 2000);

  {
    std::ofstream cfg("tmp_cfg_bad.ini");
    cfg << "banana = 7\n";
  }
  CHECK(run("--config tmp_cfg_bad.ini verify T1.k1").rc == 2);
  CHECK(run("--config no_such_file.ini list").rc == 2);
}
