#include <gtest/gtest.h>

#include <sstream>

#include "fractree/verify.hpp"

using namespace fractree;

namespace {

const DiscrepancyReport& suite() {
  static const DiscrepancyReport report = verify_suite();
  return report;
}

} // namespace

TEST(VerifySuite, NoMismatches) {
  const auto& r = suite();
  for (const auto& c : r.checks) {
    EXPECT_NE(c.verdict, Verdict::Mismatch) << c.id << ": " << c.value_a << " vs " << c.value_b << " " << c.note;
  }
  EXPECT_TRUE(r.ok());
  EXPECT_GE(r.count(Verdict::Informational), 4U);
  EXPECT_GT(r.count(Verdict::Match), 300U);
}

TEST(VerifySuite, CoversEveryModule) {
  for (const auto& [module, k] : suite().coverage()) EXPECT_GT(k, 0U) << module;
}

TEST(VerifySuite, SortedUniqueIds) {
  const auto& checks = suite().checks;
  for (std::size_t k = 1; k < checks.size(); ++k) EXPECT_LT(checks[k - 1].id, checks[k].id);
}

TEST(VerifySuite, KeyChecks) {
  const auto& r = suite();
  const Check* big = r.find("spanning.closed_vs_oracle(cycle,3,2,3)");
  ASSERT_NE(big, nullptr);
  EXPECT_EQ(big->verdict, Verdict::Match);
  const Check* published = r.find("clustering.published_value(wheel,5,2,1)");
  ASSERT_NE(published, nullptr);
  EXPECT_EQ(published->verdict, Verdict::Informational);
  EXPECT_EQ(published->value_a, "829/1932");
  EXPECT_EQ(published->value_b, "815/1932");
  EXPECT_EQ(published->difference, "1/138");
  const Check* entropy = r.find("sequences.printed_wheel_entropy(wheel,4,2)");
  ASSERT_NE(entropy, nullptr);
  EXPECT_EQ(entropy->verdict, Verdict::Informational);
  EXPECT_FALSE(entropy->difference.empty());
  for (const auto& known : kKnownDiscrepancies) {
    const Check* c = r.find(known.id);
    ASSERT_NE(c, nullptr) << known.id;
    EXPECT_EQ(c->verdict, Verdict::Informational) << known.id;
  }
}

TEST(Allowlist, ChangedValuesBecomeMismatch) {
  DiscrepancyReport r;
  detail::CheckRecorder rec(r);
  const std::string id = "clustering.published_value(wheel,5,2,1)";
  rec.run(id, "clustering", "wheel,5,2,1", [](Check& c) {
    c.value_a = "829/1932";
    c.value_b = "815/1932";
    return false;
  });
  rec.run(id, "clustering", "wheel,5,2,1", [](Check& c) {
    c.value_a = "830/1932";
    c.value_b = "815/1932";
    return false;
  });
  rec.run("clustering.unlisted", "clustering", "", [](Check&) { return false; });
  rec.run("clustering.throws", "clustering", "", [](Check&) -> bool { throw std::runtime_error("boom"); });
  ASSERT_EQ(r.checks.size(), 4U);
  EXPECT_EQ(r.checks[0].verdict, Verdict::Informational);
  EXPECT_EQ(r.checks[1].verdict, Verdict::Mismatch);
  EXPECT_EQ(r.checks[2].verdict, Verdict::Mismatch);
  EXPECT_EQ(r.checks[3].verdict, Verdict::Mismatch);
  EXPECT_NE(r.checks[3].note.find("boom"), std::string::npos);
  EXPECT_FALSE(r.ok());
}

TEST(Report, JsonSummaryAndTable) {
  const auto& r = suite();
  const json j = r.to_json();
  EXPECT_EQ(j["summary"]["total"], r.checks.size());
  EXPECT_EQ(j["summary"]["mismatch"], 0);
  EXPECT_EQ(j["checks"].size(), r.checks.size());
  EXPECT_EQ(j["checks"][0]["id"], r.checks[0].id);
  EXPECT_TRUE(j["checks"][0].contains("wall_seconds"));
  std::ostringstream a;
  std::ostringstream b;
  r.write_table(a);
  verify_suite().write_table(b);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_NE(a.str().find("0 mismatch"), std::string::npos);
}
