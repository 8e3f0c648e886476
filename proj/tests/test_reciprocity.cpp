#include <gtest/gtest.h>

#include <random>

#include "brute.hpp"
#include "recip/error.hpp"
#include "recip/local_symbols.hpp"
#include "recip/reciprocity.hpp"

using namespace recip;

namespace {

SquareClass sc(long v) { return SquareClass(v); }
Triple tri(long b, long a, long c) { return {sc(b), sc(a), sc(c)}; }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Ok;
}

std::vector<long> squarefree_values(long bound) {
  std::vector<long> out;
  for (long n = -bound; n <= bound; ++n)
    if (brute::squarefree(n)) out.push_back(n);
  return out;
}

}  // namespace

TEST(Domain, Examples) {
  EXPECT_TRUE(in_domain(tri(2, 17, 17)).accepted);
  auto w = in_domain(tri(-1, 3, 3));
  EXPECT_FALSE(w.accepted);
  ASSERT_FALSE(w.failed_symbols.empty());
  bool at3 = false;
  for (const auto& f : w.failed_symbols) at3 |= f.place == Place::prime(3);
  EXPECT_TRUE(at3);
  EXPECT_TRUE(in_domain(tri(-1, 5, 5)).accepted);
  EXPECT_FALSE(in_domain(tri(3, 3, 3)).accepted);
  EXPECT_EQ(code_of([] { f1(tri(-1, 3, 3)); }), ErrorCode::NotInDomain);
}

TEST(F, Examples) {
  EXPECT_EQ(f1(tri(73, 73, 2)).value, Sign::plus());
  EXPECT_EQ(f1(tri(41, 41, 2)).value, Sign::minus());
  EXPECT_EQ(f1(tri(-5, 5, 29)).value, Sign::minus());
  EXPECT_EQ(f2(tri(2, 17, 17)).value, Sign::minus());
  EXPECT_EQ(f2(tri(3, 13, 13)).value, Sign::plus());
  EXPECT_EQ(f2(tri(13, -221, 17)).value, Sign::plus());
  EXPECT_EQ(f(tri(-1, 5, 5)), Sign::minus());
  EXPECT_EQ(f(tri(2, 73, 73)), Sign::plus());
  EXPECT_EQ(f(tri(1, 1, 1)), Sign::plus());
}

TEST(F, GaussCriterionAgainstEuler) {
  for (long p : primes_up_to(600)) {
    if (p % 8 != 1) continue;
    long e = 1;
    for (long i = 0; i < (p - 1) / 4; ++i) e = e * 2 % p;
    EXPECT_EQ(f1(tri(p, p, 2)).value.value(), e == 1 ? 1 : -1) << p;
  }
}

TEST(Special, Examples) {
  EXPECT_EQ(special1(sc(5), sc(29)), Sign::minus());
  EXPECT_EQ(special1(sc(17), sc(1)), Sign::plus());
  EXPECT_EQ(special1(sc(17), sc(13)), Sign::minus());
  EXPECT_EQ(special2(sc(2), sc(17)), Sign::minus());
  EXPECT_EQ(special2(sc(3), sc(1)), Sign::plus());
  EXPECT_EQ(special2(sc(-1), sc(5)), Sign::minus());
  EXPECT_EQ(special3(sc(2), sc(17)), Sign::plus());
  EXPECT_EQ(special3(sc(3), sc(13)), Sign::minus());
  EXPECT_EQ(special3(sc(7), sc(1)), Sign::plus());
}

TEST(Chi, Examples) {
  std::vector<Triple> one{tri(2, 17, 17)};
  EXPECT_EQ(chi(one), Sign::minus());
  std::vector<Triple> two{tri(2, 17, 17), tri(2, 17, 17)};
  EXPECT_EQ(chi(two), Sign::plus());
  EXPECT_EQ(chi(std::vector<Triple>{}), Sign::plus());
}

TEST(Delta, Examples) {
  EXPECT_EQ(delta_place(SymMonomial(sc(-1), sc(-1), sc(-1)), Place::infinity()), Sign::minus());
  EXPECT_EQ(delta_place(SymMonomial(sc(3), sc(3), sc(3)), Place::prime(3)), Sign::minus());
  EXPECT_EQ(delta_place(SymMonomial(sc(-2), sc(-2), sc(3)), Place::prime(2)), Sign::plus());
  EXPECT_EQ(delta(SymSum{}), Sign::plus());
  EXPECT_EQ(delta(SymSum{SymMonomial(sc(-1), sc(-1), sc(-1))}), Sign::plus());
}

TEST(Delta, MonomialOracle) {
  std::mt19937_64 rng(21);
  auto values = squarefree_values(200);
  for (int i = 0; i < 500; ++i) {
    auto A = sc(values[rng() % values.size()]), B = sc(values[rng() % values.size()]);
    SymSum s{SymMonomial(A, A, B)};
    for (const auto& v : relevant_places(s)) EXPECT_EQ(delta_place(SymMonomial(A, A, B), v), hilbert(A, B, v));
    EXPECT_EQ(delta(s), Sign::plus());
  }
}

TEST(Delta, TwoAdicExtension) {
  EXPECT_EQ(delta_place(SymMonomial(sc(-2), sc(3), sc(6)), Place::prime(2)), Sign::plus());
}

TEST(F, SmallDomainExhaustive) {
  // Every D triple with entries of absolute value at most 30: f1 = f2, all
  // permutations agree, and every redundant branch agrees.
  auto values = squarefree_values(30);
  int checked = 0;
  for (long b : values)
    for (long a : values)
      for (long c : values) {
        if (!(b <= a && a <= c)) continue;
        Triple t = tri(b, a, c);
        if (!in_domain(t).accepted) continue;
        auto r = f_checked(t);
        ASSERT_TRUE(r.agree) << t.to_string();
        EXPECT_TRUE(r.first.alternatives_agree()) << t.to_string();
        EXPECT_TRUE(r.second.alternatives_agree()) << t.to_string();
        for (const auto& p : permutations(t)) ASSERT_EQ(f(p), r.value) << t.to_string() << " vs " << p.to_string();
        ++checked;
      }
  EXPECT_GT(checked, 100);
}

TEST(Thm210, OctupleCharacter) {
  std::vector<Triple> gens{tri(2, 17, 17), tri(17, 2, 17)};
  auto r = verify_210(gens);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.chi_value, Sign::plus());
  EXPECT_TRUE(verify_210(std::vector<Triple>{}).pass);
}
