#pragma once

// Rational points on x^2 - a y^2 = b z^2 for square classes a, b.

#include <string>
#include <vector>

#include "recip/arith.hpp"
#include "recip/number.hpp"

namespace recip {

/// A point with 2-power denominators, primitive in Z[1/2].
struct ConicSolution {
  Rational x, y, z;

  bool operator==(const ConicSolution& o) const = default;
  std::string to_string() const;
};

/// True iff (a, b)_v = 1 at infinity, 2 and every odd prime dividing ab.
bool locally_solvable(const SquareClass& a, const SquareClass& b);

bool satisfies(const ConicSolution& s, const Rational& a, const Rational& b);

/// Not all zero, every denominator a power of 2, and the odd part of the
/// gcd of the cleared coordinates is 1.
bool is_primitive(const ConicSolution& s);

/// Integer coordinates with gcd 1 after clearing denominators and removing
/// common factors (including powers of 2); sign made canonical so that the
/// first nonzero coordinate is positive.
ConicSolution primitive_integer(const ConicSolution& s);

/// Upper bound on max(|y|, |z|) for the exhaustive scan. Beyond it,
/// solve_conic switches to Legendre descent.
inline constexpr long kConicScanLimit = 160;

/// First primitive integer solution in the scan order (max(y, z), then y,
/// then z; y, z >= 0; x = isqrt >= 0) when one exists with max(y, z) within
/// the scan limit, otherwise the descent solution made primitive.
/// Error(NotSolvable) when the conic has no rational point.
ConicSolution solve_conic(const SquareClass& a, const SquareClass& b);

/// Up to `count` pairwise distinct primitive integer solutions (distinct up
/// to sign of each coordinate): the scan solutions first, then reflections
/// of the first solution in small vectors.
std::vector<ConicSolution> conic_solutions(const SquareClass& a, const SquareClass& b, std::size_t count);

/// Legendre descent; exposed for tests. Returns an integer solution of
/// x^2 = a y^2 + b z^2, not necessarily primitive.
ConicSolution legendre_descent(const Int& a, const Int& b);

}  // namespace recip
