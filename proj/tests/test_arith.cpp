#include <gtest/gtest.h>

#include <random>

#include "brute.hpp"
#include "recip/arith.hpp"
#include "recip/error.hpp"

using namespace recip;

TEST(Factorize, SmallValues) {
  auto f = factorize(12);
  EXPECT_EQ(f.sign, 1);
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0].prime, 2);
  EXPECT_EQ(f.factors[0].exponent, 2);
  EXPECT_EQ(f.factors[1].prime, 3);
  EXPECT_EQ(f.factors[1].exponent, 1);

  auto u = factorize(-1);
  EXPECT_EQ(u.sign, -1);
  EXPECT_TRUE(u.factors.empty());

  auto g = factorize(221);
  ASSERT_EQ(g.factors.size(), 2u);
  EXPECT_EQ(g.factors[0].prime, 13);
  EXPECT_EQ(g.factors[1].prime, 17);
}

TEST(Factorize, Reassembles) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    long n = static_cast<long>(rng() % 2'000'000) - 1'000'000;
    if (n == 0) continue;
    EXPECT_EQ(factorize(n).reassemble(), n);
  }
  Int big("1000000000039");  // prime just above the bound
  EXPECT_EQ(factorize(big).reassemble(), big);
}

TEST(Factorize, CompositeBeyondBound) {
  Int n = Int("1000000000039") * Int("1000000000061");
  try {
    factorize(n);
    FAIL() << "expected Unfactored";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Unfactored);
  }
}

TEST(Legendre, Values) {
  EXPECT_EQ(legendre(3, 11), 1);
  EXPECT_EQ(legendre(1, 13), 1);
  EXPECT_EQ(legendre(2, 5), -1);
  EXPECT_EQ(legendre(22, 11), 0);
  EXPECT_THROW(legendre(3, 9), Error);
  EXPECT_THROW(legendre(3, 2), Error);
}

TEST(Legendre, MatchesEnumeration) {
  for (long p : primes_up_to(200)) {
    if (p == 2) continue;
    for (long a = -40; a <= 40; ++a) EXPECT_EQ(legendre(a, p), brute::legendre(a, p)) << a << " " << p;
  }
}

TEST(Legendre, Multiplicative) {
  std::mt19937_64 rng(11);
  auto primes = primes_up_to(500);
  for (int i = 0; i < 500; ++i) {
    long p = primes[1 + rng() % (primes.size() - 1)];
    long a = static_cast<long>(rng() % 10000) - 5000;
    long b = static_cast<long>(rng() % 10000) - 5000;
    if (a % p == 0 || b % p == 0) continue;
    EXPECT_EQ(legendre(a, p) * legendre(b, p), legendre(Int(a) * b, p));
  }
}

TEST(Jacobi, Values) {
  EXPECT_EQ(jacobi(2, 15), 1);
  EXPECT_EQ(jacobi(5, 1), 1);
  EXPECT_EQ(jacobi(3, 35), 1);
  EXPECT_THROW(jacobi(3, 10), Error);
  EXPECT_THROW(jacobi(3, -5), Error);
}

TEST(Jacobi, ProductOfLegendre) {
  for (long n = 1; n <= 10000; n += 2) {
    auto f = factorize(n);
    for (long a : {-7L, 2L, 3L, 10L, 1234L}) {
      int expect = 1;
      for (const auto& pp : f.factors)
        for (int e = 0; e < pp.exponent; ++e) expect *= legendre(a, pp.prime);
      ASSERT_EQ(jacobi(a, n), expect) << a << " " << n;
    }
  }
}

TEST(SquareClass, SquarefreePart) {
  EXPECT_EQ(squarefree_part(Rational(12)).value(), 3);
  EXPECT_EQ(squarefree_part(Rational(-18)).value(), -2);
  EXPECT_EQ(squarefree_part(Rational(5, 8)).value(), 10);
  EXPECT_THROW(squarefree_part(Rational(0)), Error);
}

TEST(SquareClass, InvariantUnderSquares) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    Rational q(static_cast<long>(rng() % 2000) - 1000, static_cast<long>(rng() % 300) + 1);
    Rational r(static_cast<long>(rng() % 60) + 1, static_cast<long>(rng() % 60) + 1);
    if (q == 0) continue;
    q.canonicalize();
    r.canonicalize();
    EXPECT_EQ(squarefree_part(q * r * r), squarefree_part(q));
  }
}

TEST(SquareClass, GroupLaw) {
  SquareClass a(6), b(-10), one(1);
  EXPECT_EQ((a * b).value(), -15);
  EXPECT_EQ(a * a, one);
  EXPECT_EQ(a * one, a);
  EXPECT_THROW(SquareClass(12), Error);
  EXPECT_THROW(SquareClass(0), Error);
}

TEST(TwoAdicSplit, Values) {
  auto a = two_adic_split(Rational(-12));
  EXPECT_EQ(a.valuation, 2);
  EXPECT_EQ(a.unit, -3);
  auto b = two_adic_split(Rational(7));
  EXPECT_EQ(b.valuation, 0);
  auto c = two_adic_split(Rational(5, 8));
  EXPECT_EQ(c.valuation, -3);
  EXPECT_EQ(c.unit, 5);
}

TEST(SumTwoSquares, Values) {
  EXPECT_EQ(sum_two_squares(13), std::make_pair(Int(3), Int(2)));
  EXPECT_EQ(sum_two_squares(73), std::make_pair(Int(3), Int(8)));
  EXPECT_EQ(sum_two_squares(41), std::make_pair(Int(5), Int(4)));
  EXPECT_THROW(sum_two_squares(7), Error);
  EXPECT_THROW(sum_two_squares(21), Error);
  for (long p : primes_up_to(5000)) {
    if (p % 4 != 1) continue;
    auto [a, b] = sum_two_squares(p);
    EXPECT_EQ(a * a + b * b, p);
    EXPECT_EQ(mod_small(a, 2), 1);
    EXPECT_EQ(mod_small(b, 2), 0);
  }
}

TEST(PellNeg, Values) {
  auto s5 = pell_neg(5);
  EXPECT_EQ(s5.t, 2);
  EXPECT_EQ(s5.u, 1);
  auto s13 = pell_neg(13);
  EXPECT_EQ(s13.t, 18);
  EXPECT_EQ(s13.u, 5);
  auto s29 = pell_neg(29);
  EXPECT_EQ(s29.t, 70);
  EXPECT_EQ(s29.u, 13);
  EXPECT_THROW(pell_neg(7), Error);
  for (long p : primes_up_to(1000)) {
    if (p % 4 != 1) continue;
    auto s = pell_neg(p);
    EXPECT_EQ(s.t * s.t - p * s.u * s.u, -1) << p;
  }
}

TEST(SqrtModPrime, Roots) {
  for (long p : primes_up_to(300)) {
    if (p == 2) continue;
    for (long a = 1; a < p; ++a) {
      if (brute::legendre(a, p) != 1) continue;
      Int r = sqrt_mod_prime(a, p);
      EXPECT_EQ(mod(r * r - a, p), 0);
    }
  }
}
