#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "recip/error.hpp"
#include "recip/number.hpp"

namespace recip {

inline constexpr std::uint64_t kDefaultTrialBound = 1'000'000'000'000ULL;

struct PrimePower {
  Int prime;
  int exponent;
};

struct Factorization {
  int sign = 1;
  std::vector<PrimePower> factors;  // ascending, distinct primes

  Int reassemble() const;
  std::vector<Int> primes() const;
};

/// Trial division by primes up to sqrt(bound). A surviving cofactor above
/// `bound` raises Error(Unfactored).
Factorization factorize(const Int& n, std::uint64_t bound = kDefaultTrialBound);

/// Deterministic for n < 3.3e24 (fixed Miller-Rabin bases); larger inputs
/// fall back to GMP's test with 40 rounds.
bool is_prime(const Int& n);

/// Odd primes up to `limit`, ascending (2 included when limit >= 2).
std::vector<long> primes_up_to(long limit);

int jacobi(const Int& a, const Int& n);
int legendre(const Int& a, const Int& p);

Int pow_mod(const Int& base, const Int& exp, const Int& m);

/// A square root of a modulo the odd prime p (Tonelli-Shanks). Requires
/// legendre(a, p) != -1. Returns the smaller of the two roots.
Int sqrt_mod_prime(const Int& a, const Int& p);

/// A nonzero squarefree integer; the canonical representative of a class in
/// Q^x / (Q^x)^2.
class SquareClass {
 public:
  SquareClass() : value_(1) {}
  /// Throws Error(ZeroInput) for 0 and Error(Domain) if not squarefree.
  explicit SquareClass(const Int& value);
  explicit SquareClass(long value) : SquareClass(Int(value)) {}

  static SquareClass of(const Rational& q);  // squarefree part
  static SquareClass unchecked(const Int& value);

  const Int& value() const { return value_; }
  int sign() const { return sgn(value_); }
  bool is_one() const { return value_ == 1; }

  SquareClass operator*(const SquareClass& o) const;

  bool operator==(const SquareClass& o) const { return value_ == o.value_; }
  bool operator!=(const SquareClass& o) const { return value_ != o.value_; }
  bool operator<(const SquareClass& o) const { return value_ < o.value_; }

  std::string to_string() const { return recip::to_string(value_); }

 private:
  Int value_;
};

SquareClass squarefree_part(const Rational& q);

struct TwoAdicSplit {
  int valuation;
  Rational unit;
};
TwoAdicSplit two_adic_split(const Rational& q);

/// p = a^2 + b^2 with a odd, b even, both positive.
std::pair<Int, Int> sum_two_squares(const Int& p);

struct PellSolution {
  Int t;
  Int u;
  Int p;
};

/// Minimal positive (t, u) with t^2 - p u^2 = -1 for a prime p = 1 (mod 4).
PellSolution pell_neg(const Int& p);

}  // namespace recip
