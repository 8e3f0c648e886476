#include <gtest/gtest.h>

#include <random>

#include "brute.hpp"
#include "recip/conic.hpp"
#include "recip/error.hpp"

using namespace recip;

namespace {

SquareClass sc(long v) { return SquareClass(v); }

ConicSolution sol(long x, long y, long z) { return {Rational(x), Rational(y), Rational(z)}; }

}  // namespace

TEST(LocallySolvable, Values) {
  EXPECT_TRUE(locally_solvable(sc(2), sc(7)));
  EXPECT_TRUE(locally_solvable(sc(1), sc(-15)));
  EXPECT_FALSE(locally_solvable(sc(3), sc(5)));
  EXPECT_FALSE(locally_solvable(sc(-1), sc(-1)));
}

TEST(SolveConic, Values) {
  EXPECT_EQ(solve_conic(sc(2), sc(7)), sol(3, 1, 1));
  EXPECT_EQ(solve_conic(sc(1), sc(1)), sol(1, 0, 1));
  EXPECT_EQ(solve_conic(sc(13), sc(3)), sol(4, 1, 1));
  try {
    solve_conic(sc(3), sc(5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSolvable);
  }
}

TEST(SolveConic, RandomLocallySolvable) {
  std::mt19937_64 rng(8);
  int solved = 0;
  while (solved < 200) {
    long a = static_cast<long>(rng() % 1001) - 500, b = static_cast<long>(rng() % 1001) - 500;
    if (!brute::squarefree(a) || !brute::squarefree(b)) continue;
    if (!locally_solvable(sc(a), sc(b))) continue;
    auto s = solve_conic(sc(a), sc(b));
    EXPECT_TRUE(satisfies(s, Rational(a), Rational(b))) << a << " " << b;
    EXPECT_TRUE(is_primitive(s));
    ++solved;
  }
}

TEST(SolveConic, LocalSolvabilityMatchesExistence) {
  // Small forms: a point exists iff the scan finds one within a generous box.
  for (long a = -30; a <= 30; ++a)
    for (long b = -30; b <= 30; ++b) {
      if (!brute::squarefree(a) || !brute::squarefree(b)) continue;
      bool found = false;
      for (long y = 0; y <= 40 && !found; ++y)
        for (long z = 0; z <= 40 && !found; ++z) {
          if (y == 0 && z == 0) continue;
          long v = a * y * y + b * z * z;
          if (v < 0) continue;
          long r = static_cast<long>(std::sqrt(static_cast<double>(v)));
          while (r * r > v) --r;
          while ((r + 1) * (r + 1) <= v) ++r;
          found = r * r == v;
        }
      EXPECT_EQ(locally_solvable(sc(a), sc(b)), found) << a << " " << b;
    }
}

TEST(LegendreDescent, LargeCoefficients) {
  std::mt19937_64 rng(12);
  int solved = 0;
  while (solved < 100) {
    Int a = Int(static_cast<long>(rng() % 8'000'000'000ULL)) - 4'000'000'000L;
    Int b = Int(static_cast<long>(rng() % 8'000'000'000ULL)) - 4'000'000'000L;
    if (a == 0 || b == 0) continue;
    SquareClass ca = SquareClass::of(Rational(a)), cb = SquareClass::of(Rational(b));
    if (!locally_solvable(ca, cb)) continue;
    auto s = legendre_descent(ca.value(), cb.value());
    ASSERT_TRUE(s.x * s.x == Rational(ca.value()) * s.y * s.y + Rational(cb.value()) * s.z * s.z);
    auto p = solve_conic(ca, cb);
    EXPECT_TRUE(satisfies(p, Rational(ca.value()), Rational(cb.value())));
    EXPECT_TRUE(is_primitive(p));
    ++solved;
  }
}

TEST(Primitive, TwoPowerScaling) {
  ConicSolution s{Rational(3, 2), Rational(1, 2), Rational(1, 2)};
  EXPECT_TRUE(is_primitive(s));
  EXPECT_FALSE(is_primitive(sol(6, 3, 3)));
  EXPECT_TRUE(is_primitive(sol(6, 2, 2)));
  EXPECT_FALSE(is_primitive({Rational(1, 3), Rational(1), Rational(0)}));
  EXPECT_EQ(primitive_integer(s), sol(3, 1, 1));
}

TEST(ConicSolutions, DistinctAndValid) {
  for (auto [a, b] : std::vector<std::pair<long, long>>{{2, 7}, {17, -1}, {13, 3}, {5, 29}, {-2, 17}}) {
    auto all = conic_solutions(sc(a), sc(b), 6);
    EXPECT_GE(all.size(), 2u);
    for (const auto& s : all) {
      EXPECT_TRUE(satisfies(s, Rational(a), Rational(b)));
      EXPECT_TRUE(is_primitive(s));
    }
  }
}
