#pragma once

// The GF(2) spaces V = Q^x/(Q^x)^2 and V_p, degree-3 symmetric (S^3) and
// cyclic-symmetric (S'^3) monomials and sums, the maps
//   tau: A.B.C -> A(.)B(.)C + B(.)A(.)C      rho: A(.)B(.)C -> A.B.C
// and GF(2) solving for tau-preimages.
//
// Sums are formal: a SymSum is a set of monomials with coefficient 1. Two
// formal sums can represent the same element (6.5.5 = 2.5.5 + 3.5.5), so
// equality in the algebra goes through canonical(), which rewrites a sum in
// the monomial basis generated by -1 and the primes involved.

#include <array>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "recip/arith.hpp"
#include "recip/number.hpp"

namespace recip {

/// Image of a class in V_v as a GF(2) vector:
///   v = inf  dim 1: [negative]
///   v odd    dim 2: [valuation mod 2, unit is a non-residue]
///   v = 2    dim 3: exponents (r1, r2, r3) over the basis -2, 3, 6
struct LocalSquareClass {
  Place place = Place::infinity();
  int dim = 1;
  std::array<std::uint8_t, 3> bits{};

  LocalSquareClass operator+(const LocalSquareClass& o) const;
  bool is_zero() const { return bits[0] == 0 && bits[1] == 0 && bits[2] == 0; }
  bool operator==(const LocalSquareClass& o) const = default;
};

LocalSquareClass localize(const Rational& a, const Place& v);
LocalSquareClass localize(const SquareClass& a, const Place& v);

/// (-2)^r1 3^r2 6^r3 for the exponent triple of a class in V_2.
Int two_adic_basis_product(const std::array<std::uint8_t, 3>& exponents);

/// A.B.C in S^3(V): an unordered multiset, stored sorted.
class SymMonomial {
 public:
  SymMonomial(SquareClass a, SquareClass b, SquareClass c);
  const std::array<SquareClass, 3>& classes() const { return c_; }
  bool operator==(const SymMonomial& o) const { return c_ == o.c_; }
  bool operator<(const SymMonomial& o) const { return c_ < o.c_; }
  std::string to_string() const;

 private:
  std::array<SquareClass, 3> c_;
};

/// A(.)B(.)C in S'^3(V): stored as its lexicographically least rotation.
class CycMonomial {
 public:
  CycMonomial(SquareClass a, SquareClass b, SquareClass c);
  const std::array<SquareClass, 3>& classes() const { return c_; }
  bool operator==(const CycMonomial& o) const { return c_ == o.c_; }
  bool operator<(const CycMonomial& o) const { return c_ < o.c_; }
  std::string to_string() const;

 private:
  std::array<SquareClass, 3> c_;
};

template <class Monomial>
class Gf2Sum {
 public:
  Gf2Sum() = default;
  Gf2Sum(std::initializer_list<Monomial> terms) {
    for (const auto& m : terms) toggle(m);
  }

  void toggle(const Monomial& m) {
    auto [it, inserted] = terms_.insert(m);
    if (!inserted) terms_.erase(it);
  }
  Gf2Sum& operator+=(const Gf2Sum& o) {
    for (const auto& m : o.terms_) toggle(m);
    return *this;
  }
  Gf2Sum operator+(const Gf2Sum& o) const {
    Gf2Sum r = *this;
    r += o;
    return r;
  }

  const std::set<Monomial>& terms() const { return terms_; }
  bool formally_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool operator==(const Gf2Sum& o) const { return terms_ == o.terms_; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& m : terms_) {
      if (!s.empty()) s += " + ";
      s += m.to_string();
    }
    return s;
  }

 private:
  std::set<Monomial> terms_;
};

using SymSum = Gf2Sum<SymMonomial>;
using CycSum = Gf2Sum<CycMonomial>;

CycSum tau(const SymSum& s);
SymSum rho(const CycSum& c);

/// Rewrites a sum over the basis monomials of -1 and the primes dividing its
/// entries; two sums are equal in the algebra iff their canonical forms are.
SymSum canonical(const SymSum& s);
CycSum canonical(const CycSum& c);
bool is_zero(const SymSum& s);
bool is_zero(const CycSum& c);

/// Some eta with tau(eta) = c, written over the basis monomials; among all
/// preimages, the lexicographically least coefficient vector under the
/// monomial order. Error(NotInKernel) if rho(c) != 0.
SymSum tau_preimage(const CycSum& c);

struct ExactnessRanks {
  int dim = 0;       // dimension of the subspace of V
  int sym_dim = 0;   // dim S^3
  int cyc_dim = 0;   // dim S'^3
  int rank_tau = 0;
  int rank_rho = 0;
};

/// Ranks of tau and rho restricted to the subspace of V generated by the
/// given classes.
ExactnessRanks exactness_ranks(std::span<const SquareClass> generators);

}  // namespace recip
