#pragma once

// Exact integer and rational types plus the small helpers every module needs:
// p-adic valuations, residues of p-integral rationals, and the +-1 sign type
// that all symbols take values in.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace recip {

using Int = mpz_class;
using Rational = mpq_class;

/// Parses "n" or "n/d" (decimal, optional sign). Throws Error(BadArgument).
Rational parse_rational(const std::string& text);
Int parse_int(const std::string& text);

std::string to_string(const Int& n);
std::string to_string(const Rational& q);

/// Non-negative remainder.
Int mod(const Int& a, const Int& m);
long mod_small(const Int& a, long m);

/// Valuation of a nonzero integer at p.
int valuation(const Int& n, const Int& p);
int valuation(const Rational& q, const Int& p);
int valuation2(const Int& n);
int valuation2(const Rational& q);

bool is_p_integral(const Rational& q, const Int& p);

/// Residue of a p-integral rational modulo m, where every prime factor of m
/// is coprime to the denominator. Throws Error(Domain) otherwise.
Int residue(const Rational& q, const Int& m);

Int isqrt(const Int& n);
bool is_square(const Int& n);

/// +1 or -1; closed under multiplication.
class Sign {
 public:
  constexpr Sign() = default;
  static constexpr Sign plus() { return Sign(1); }
  static constexpr Sign minus() { return Sign(-1); }
  static Sign from_int(int v);
  static constexpr Sign from_bit(bool negative) { return negative ? minus() : plus(); }

  constexpr int value() const { return v_; }
  constexpr bool is_minus() const { return v_ < 0; }

  constexpr Sign operator*(Sign o) const { return Sign(v_ * o.v_); }
  constexpr Sign& operator*=(Sign o) {
    v_ *= o.v_;
    return *this;
  }
  constexpr Sign operator-() const { return Sign(-v_); }
  constexpr bool operator==(const Sign&) const = default;

 private:
  constexpr explicit Sign(int v) : v_(v) {}
  int v_ = 1;
};

/// A place of Q: a prime number or the archimedean place.
class Place {
 public:
  static Place infinity() { return Place(); }
  /// Verifies primality; throws Error(BadPrime).
  static Place prime(const Int& p);

  bool is_infinite() const { return infinite_; }
  bool is_two() const { return !infinite_ && p_ == 2; }
  const Int& p() const { return p_; }

  std::string to_string() const;

  bool operator==(const Place& o) const { return infinite_ == o.infinite_ && p_ == o.p_; }
  bool operator<(const Place& o) const;

 private:
  Place() = default;
  bool infinite_ = true;
  Int p_ = 0;
};

}  // namespace recip
