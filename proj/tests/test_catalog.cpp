#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <set>
#include <sstream>
#include <string>

#include "doctest.h"
#include "eulersum/catalog.hpp"
#include "eulersum/closed_form.hpp"
#include "eulersum/errors.hpp"
#include "json.hpp"

using namespace eulersum;

namespace {

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("registry shape") {
  const auto& ids = catalog();
  CHECK(ids.size() == 31);
  CHECK(ids.front().id == "T1.k1");
  CHECK(ids.back().id == "D8");
  std::set<std::string> seen;
  for (const auto& ident : ids) {
    CHECK(seen.insert(ident.id).second);
    CHECK(!ident.description.empty());
    CHECK((ident.dimensionality == 1 || ident.dimensionality == 2));
    const bool is_2d = std::holds_alternative<Summand2D>(ident.lhs);
    CHECK(is_2d == (ident.dimensionality == 2));
  }
  CHECK(&find_identity("G2") != nullptr);
  CHECK_THROWS_AS(find_identity("nope"), UnknownIdentity);
}

TEST_CASE("closed forms match the registry literals exactly") {
  // The general formula and the transcribed right-hand sides agree as exact
  // rational combinations, not just numerically.
  for (int k : {1, 2, 3, 4, 6}) {
    CAPTURE(k);
    char id[16];
    std::snprintf(id, sizeof id, "T1.k%d", k);
    CHECK(cf_equal(theorem1_closed_form(k, false), find_identity(id).rhs));
  }
  for (int k : {1, 2, 3}) {
    CAPTURE(k);
    char id[16];
    std::snprintf(id, sizeof id, "A1.k%d", k);
    CHECK(cf_equal(theorem1_closed_form(k, true), find_identity(id).rhs));
  }
  CHECK(cf_render(theorem1_closed_form(1, false)) == "2*zeta(3)");
  CHECK(cf_render(theorem1_closed_form(2, false)) == "11/4*zeta(3)");
  CHECK(cf_render(theorem1_closed_form(4, false)) ==
        "67/8*zeta(3) - 2*pi*Cl2(1/2*pi)");
}

TEST_CASE("single verification runs and reports honestly") {
  const VerificationReport r = verify("T1.k1");
  CHECK(r.pass);
  CHECK(r.abs_diff <= r.tolerance);
  CHECK(r.rhs_value == doctest::Approx(2.0 * 1.2020569031595943).epsilon(1e-14));
  CHECK(!r.strategy.empty());
  CHECK(r.terms_used > 0);

  // An unreachable tolerance must come back as a failure, not a hang: the
  // engine floors its internal target, so the sum itself still lands and
  // the judgment fails on abs_diff alone.
  const VerificationReport tight = verify("T1.k1", 1e-30);
  CHECK(!tight.pass);
  CHECK(tight.abs_diff > tight.tolerance);
  CHECK(tight.tolerance == doctest::Approx(1e-30));

  const VerificationReport loose = verify("D1", 1e-3);
  CHECK(loose.pass);
  CHECK(loose.tolerance == doctest::Approx(1e-3));
}

TEST_CASE("full verification is deterministic under threading") {
  const auto r1 = verify_all(1);
  const auto r2 = verify_all(2);
  const auto r4 = verify_all(4);
  REQUIRE(r1.size() == 47);
  REQUIRE(r2.size() == r1.size());
  REQUIRE(r4.size() == r1.size());
  for (size_t i = 0; i < r1.size(); ++i) {
    CAPTURE(r1[i].id);
    CHECK(r1[i].id == r2[i].id);
    CHECK(r1[i].id == r4[i].id);
    CHECK(r1[i].lhs_value == r2[i].lhs_value);
    CHECK(r1[i].lhs_value == r4[i].lhs_value);
    CHECK(r1[i].terms_used == r2[i].terms_used);
    CHECK(r1[i].strategy == r2[i].strategy);
    CHECK(r1[i].pass == r2[i].pass);
    CHECK(r1[i].pass);
  }
  // 31 registry rows first, then the coherence rows in k order.
  CHECK(r1[0].id == "T1.k1");
  CHECK(r1[30].id == "D8");
  CHECK(r1[31].id == "thm.k1");
  CHECK(r1[32].id == "thm.k1.alt");
  CHECK(r1[46].id == "thm.k8.alt");

  // Serializations drop wall time, so equal runs give equal bytes.
  CHECK(reports_json(r1) == reports_json(r2));
  CHECK(reports_csv(r1) == reports_csv(r4));
}

TEST_CASE("report serializations") {
  std::vector<VerificationReport> rows;
  for (const char* id : {"T1.k1", "R1", "G1"}) rows.push_back(verify(id));

  const std::string nd = reports_json(rows);
  CHECK(count_lines(nd) == 3);
  std::istringstream in(nd);
  std::string line;
  while (std::getline(in, line)) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j.contains("id"));
    CHECK(j.contains("lhs"));
    CHECK(j.contains("rhs"));
    CHECK(j.contains("abs_diff"));
    CHECK(j.contains("pass"));
    CHECK(!j.contains("seconds"));
  }

  const std::string csv = reports_csv(rows);
  CHECK(count_lines(csv) == 4);
  CHECK(csv.rfind("id,", 0) == 0);

  const std::string txt = reports_text(rows);
  CHECK(txt.find("T1.k1") != std::string::npos);
  CHECK(txt.find("3 rows, 0 failed") != std::string::npos);

  const auto cat = nlohmann::json::parse(catalog_json());
  CHECK(cat.is_array());
  CHECK(cat.size() == 31);
  CHECK(cat[0].contains("id"));
  CHECK(cat[0].contains("rhs"));
}
