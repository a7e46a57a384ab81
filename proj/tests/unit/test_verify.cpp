#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "lol/verify.hpp"

namespace lol::verify {
namespace {

std::vector<std::string> ids(const std::vector<CheckReport>& rs) {
  std::vector<std::string> out;
  for (const auto& r : rs) out.push_back(r.id);
  return out;
}

TEST(Catalog, IdsAreUniqueSortedAndAnchored) {
  std::set<std::string> seen;
  std::string prev;
  for (const auto& c : catalog()) {
    EXPECT_TRUE(seen.insert(c.id).second) << c.id;
    EXPECT_LT(prev, c.id);
    EXPECT_FALSE(c.anchor.empty()) << c.id;
    EXPECT_EQ(c.id.rfind("C-", 0), 0u) << c.id;
    prev = c.id;
  }
}

TEST(Catalog, HeavyChecksAreTheCensusAndDoubleCosets) {
  std::set<std::string> heavy;
  for (const auto& c : catalog())
    if (c.heavy) heavy.insert(c.id);
  EXPECT_EQ(heavy, (std::set<std::string>{"C-class-census", "C-lemma-jordan-block-double-cosets"}));
}

TEST(Runner, GlobFilterSelectsWittChecks) {
  const auto rs = run_checks({"C-witt-*", false, 2});
  EXPECT_EQ(ids(rs), (std::vector<std::string>{"C-witt-ring-laws-F2", "C-witt-ring-laws-F3", "C-witt-ring-laws-F4",
                                               "C-witt-zp2"}));
  EXPECT_EQ(exit_code(rs), 0);
}

TEST(Runner, UnknownIdRaises) {
  try {
    run_checks({"C-no-such-check", false, 1});
    FAIL() << "expected UnknownCheck";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownCheck);
  }
  EXPECT_TRUE(run_checks({"C-no-such-*", false, 1}).empty());
}

TEST(Runner, HeavyChecksAreSkippedByDefault) {
  const auto rs = run_checks({"C-class-census", false, 1});
  ASSERT_EQ(rs.size(), 1u);
  EXPECT_EQ(rs[0].status, Status::Skipped);
  EXPECT_EQ(exit_code(rs), 0);
}

TEST(Runner, ReportsAreDeterministicWithoutTiming) {
  const RunOptions opts{"C-restrict-*", false, 3};
  const json a = reports_json(run_checks(opts), false);
  const json b = reports_json(run_checks({opts.filter, false, 1}), false);
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_EQ(a["summary"]["pass"], 2);
}

TEST(Runner, ReportShape) {
  const auto rs = run_checks({"C-lift-split-F3", false, 1});
  ASSERT_EQ(rs.size(), 1u);
  const json j = report_json(rs[0]);
  for (const char* k : {"id", "anchor", "status", "evidence", "ms"}) EXPECT_TRUE(j.contains(k)) << k;
  EXPECT_EQ(j["status"], "pass");
  EXPECT_NE(markdown_digest(rs).find("C-lift-split-F3"), std::string::npos);
}

TEST(Runner, ExceptionsBecomeFailures) {
  const CheckSpec bad{"C-test-throws", "test", "", false, [](Recorder&) { throw Error(ErrorCode::Singular, "x"); }};
  const auto r = run_check(bad, false);
  EXPECT_EQ(r.status, Status::Fail);
  EXPECT_EQ(exit_code({r}), 1);
  EXPECT_NE(markdown_digest({r}).find("Singular"), std::string::npos);
}

TEST(Witnesses, ReloadAndResubstitute) {
  const json report = reports_json(run_checks({"C-lemma-jordan-iii", false, 1}));
  EXPECT_TRUE(reverify_report(json::parse(report.dump())).empty());

  json tampered = report;
  auto& ws = tampered["checks"][0]["evidence"]["witnesses"];
  ASSERT_FALSE(ws.empty());
  ws[0]["result"]["m"] = "1,0,0,0,0;0,1,0,0,0;0,0,1,0,0;0,0,0,1,0;0,0,0,0,1";
  EXPECT_EQ(reverify_report(tampered).size(), 1u);
}

TEST(Witnesses, BicyclicVerdictsResubstitute) {
  const json report = reports_json(run_checks({"C-restrict-k-bigger-f2", false, 1}));
  bool any = false;
  for (const auto& w : report["checks"][0]["evidence"]["witnesses"]) {
    any = any || w["kind"] == "bicyclic";
    EXPECT_FALSE(reverify_witness(w).has_value());
  }
  EXPECT_TRUE(any);
}

TEST(Splitting, BrokenRelationRaises) {
  auto cases = splitting_cases();
  auto it = std::find_if(cases.begin(), cases.end(), [](const SplittingCase& c) { return c.name == "iv"; });
  ASSERT_NE(it, cases.end());
  SplittingCase c = *it;
  // Naive lifts I + E12, I + E23 over Z/4 reduce correctly but square to I + 2 E_ij.
  c.lifts = {Mat::identity(c.ring, 3) + Mat::unit(c.ring, 3, 1, 2), Mat::identity(c.ring, 3) + Mat::unit(c.ring, 3, 2, 3)};
  Recorder rec;
  try {
    splitting_check(rec, c);
    FAIL() << "expected RelationFailure";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RelationFailure);
  }
}

TEST(Splitting, PositiveCasesPass) {
  for (const auto& c : splitting_cases()) {
    Recorder rec;
    splitting_check(rec, c);
    EXPECT_TRUE(rec.passed()) << c.name << rec.evidence().dump();
  }
}

TEST(Signatures, FiveByFiveClasses) {
  const auto sigs = all_signatures(5);
  EXPECT_EQ(sigs.size(), 74u);
  for (const auto& s : sigs) EXPECT_EQ(signature(rational_form(s)), s) << s.to_string();
  EXPECT_EQ(all_signatures(2).size(), 6u);
  EXPECT_EQ(all_signatures(3).size(), 14u);
}

}  // namespace
}  // namespace lol::verify
