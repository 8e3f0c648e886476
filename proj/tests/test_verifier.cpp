#include <gtest/gtest.h>

#include "recip/error.hpp"
#include "recip/oracle.hpp"
#include "recip/verifier.hpp"

using namespace recip;

namespace {

const Record* find(const Report& r, const std::string& instance) {
  for (const auto& rec : r.records)
    if (rec.body.value("instance", "") == instance) return &rec;
  return nullptr;
}

}  // namespace

TEST(Oracle, EulerAndEnumeration) {
  EXPECT_EQ(oracle::pow_mod(2, 18, 73), 1);
  EXPECT_EQ(oracle::pow_mod(2, 10, 41), 40);
  EXPECT_EQ(oracle::legendre(2, 7), 1);
  EXPECT_EQ(oracle::legendre(14, 7), 0);
  EXPECT_EQ(oracle::quartic(2, 73), 1);
  EXPECT_EQ(oracle::quartic(2, 41), -1);
  EXPECT_EQ(oracle::quartic(5, 29), -1);
  EXPECT_EQ(oracle::quartic_2(17), 1);
  EXPECT_EQ(oracle::quartic_2(25), -1);
  EXPECT_EQ(oracle::square_roots(5, 29), (std::vector<std::int64_t>{11, 18}));
  // (2 + sqrt 5)/29 with sqrt 5 = 11: (13/29) = +1
  EXPECT_EQ(oracle::legendre_sqrt(2, 1, 1, 5, 29), 1);
  // p | a^2 - m b^2: ((2a)/p)
  EXPECT_EQ(oracle::legendre_sqrt(3, 1, 1, 9, 7), oracle::legendre(6, 7));
}

TEST(Law, GaussSpotValues) {
  const auto r = run_law("gauss2", 100);
  EXPECT_TRUE(r.pass());
  for (auto [p, want] : {std::pair{73, 1}, {41, -1}, {89, 1}}) {
    const Record* rec = find(r, "p=" + std::to_string(p));
    ASSERT_NE(rec, nullptr) << p;
    EXPECT_EQ(rec->body["lhs"], want) << p;
    EXPECT_EQ(rec->body["rhs"], want) << p;
  }
  EXPECT_EQ(find(r, "p=73")->body["data"]["b"], 8);
  EXPECT_EQ(find(r, "p=41")->body["data"]["b"], 4);
}

TEST(Law, BurdeSpotValue) {
  const auto r = run_law("burde", 20);
  const Record* rec = find(r, "p=13,q=17");
  ASSERT_NE(rec, nullptr);
  EXPECT_EQ(rec->body["lhs"], -1);
  EXPECT_EQ(rec->body["rhs"], -1);
  EXPECT_EQ(rec->body["closed"], -1);
  EXPECT_EQ(rec->body["data"]["e"], -5);
  EXPECT_TRUE(rec->pass);

  for (const char* alt : {"burde_half", "burde_i"}) {
    const auto ra = run_law(alt, 20);
    EXPECT_TRUE(ra.pass()) << alt;
    for (const auto& x : ra.records)
      if (x.body["data"]["p"] == 13 && x.body["data"]["q"] == 17) EXPECT_EQ(x.body["lhs"], -1) << alt;
  }
}

TEST(Law, ScholzSpotValue) {
  const auto r = run_law("scholz", 30);
  const Record* rec = find(r, "p=5,q=29");
  ASSERT_NE(rec, nullptr);
  EXPECT_EQ(rec->body["data"]["t"], "2");
  EXPECT_EQ(rec->body["data"]["u"], "1");
  EXPECT_EQ(rec->body["lhs"], 1);
  EXPECT_EQ(rec->body["rhs"], 1);
  EXPECT_TRUE(rec->pass);
}

TEST(Law, AllPassAtModerateBound) {
  for (const auto& name : law_names()) {
    const auto r = run_law(name, 120);
    EXPECT_TRUE(r.pass()) << name;
    EXPECT_FALSE(r.records.empty()) << name;
  }
}

TEST(Law, UnknownName) {
  try {
    run_law("cubic", 100);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownLaw);
  }
}

TEST(DCampaign, SmallRunAndDeterminism) {
  const auto a = run_d_campaign(50, 10, 1);
  EXPECT_EQ(a.summary["accepted"], 10);
  EXPECT_TRUE(a.pass());
  EXPECT_EQ(a.to_jsonl(), run_d_campaign(50, 10, 1).to_jsonl());
  EXPECT_NE(a.to_jsonl(), run_d_campaign(50, 10, 2).to_jsonl());
  for (std::size_t i = 1; i < a.records.size(); ++i) EXPECT_LT(a.records[i - 1].key, a.records[i].key);
}

TEST(DCampaign, TinyBound) {
  const auto r = run_d_campaign(2, 1, 1);
  EXPECT_TRUE(r.pass());
  EXPECT_GT(r.summary["attempts"].get<long>(), 0);
}

TEST(Example28, FoundAndVerified) {
  const auto oct = find_example28(kExample28DefaultBound, 1);
  ASSERT_TRUE(oct.has_value());
  for (long x : {oct->a, oct->b, oct->c, oct->d}) EXPECT_EQ(oracle::legendre(x, oct->p), -1);
  EXPECT_EQ(oracle::legendre(oct->a, oct->r), 1);
  EXPECT_EQ(oracle::legendre(oct->b, oct->q), 1);
  EXPECT_EQ(oracle::legendre(oct->c, oct->s), -1);
  const auto r = search_example28(kExample28DefaultBound, 1);
  ASSERT_TRUE(r.pass());
  EXPECT_EQ(r.records[0].body["lhs"], -1);
  EXPECT_EQ(r.records[0].body["delta"], -1);
  EXPECT_TRUE(r.records[0].body["relation_vanishes"].get<bool>());
}

TEST(Example28, ExhaustedBelowTinyBound) {
  const auto r = search_example28(20, 1);
  EXPECT_FALSE(r.pass());
  EXPECT_NE(r.records[0].body["error"].get<std::string>().find("SEARCH_EXHAUSTED"), std::string::npos);
}

TEST(Thm210Campaign, SmallRun) {
  const auto r = run_thm210_campaign(100, 20, 5);
  EXPECT_TRUE(r.pass());
  EXPECT_GE(r.records.size(), 15u);
  EXPECT_EQ(r.to_jsonl(), run_thm210_campaign(100, 20, 5).to_jsonl());
  for (const auto& rec : r.records)
    if (rec.body["kind"] == "permuted_pair") EXPECT_EQ(rec.body["lhs"], 1);
}
