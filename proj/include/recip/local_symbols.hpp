#pragma once

// Local symbols at every place of Q: the Hilbert symbol, the extended
// Legendre symbol ((a + b sqrt m)/p), the extended 2-adic Hilbert symbol
// ((a + b sqrt m, c))_2 evaluated through a mod-16 approximation of the
// 2-adic square root, and rational / 2-adic quartic residue symbols.

#include "recip/arith.hpp"
#include "recip/number.hpp"

namespace recip {

/// (a, b)_v. Depends only on the square classes of a and b.
Sign hilbert(const Rational& a, const Rational& b, const Place& v);
Sign hilbert(const SquareClass& a, const SquareClass& b, const Place& v);

/// Residue mod 16 of the square root of m that is 1 mod 4, where m is a
/// 2-adic unit = 1 (mod 8). Equals (3 - m)/2 mod 16.
int sqrt2_mod16(const Rational& m);

/// The square root of the 2-adic unit m = 1 (mod 8) that is 1 mod 4,
/// reduced mod 2^bits (Hensel lifting). bits >= 3.
Int two_adic_sqrt(const Rational& m, int bits);

struct Ext2Evaluation {
  Sign value;
  bool degenerate = false;  // a^2 - m b^2 = 0, value is ((2a, c))_2
  bool tie = false;         // both signs reached the minimal valuation
  Sign tie_other;           // value for the rejected sign when tie is set
  Rational approximant;     // a +- b * (3 - m)/2 actually fed to the symbol
};

/// ((a + b sqrt m, c))_2 for m a square in Q_2 and (a^2 - m b^2, c)_2 = 1, or
/// a^2 - m b^2 = 0 with a != 0. The value is checked against both square
/// roots of m computed to full precision; disagreement is Error(Internal).
Ext2Evaluation hilbert_ext2_detail(const Rational& a, const Rational& b, const Rational& m, const Rational& c);
Sign hilbert_ext2(const Rational& a, const Rational& b, const Rational& m, const Rational& c);

/// ((a + b sqrt m)/p) for p an odd prime and p-integral a, b, m with
/// (m/p) = ((a^2 - m b^2)/p) = 1, or p | a^2 - m b^2 and p does not divide a
/// (then the value is ((2a)/p)).
Sign legendre_ext(const Rational& a, const Rational& b, const Rational& m, const Int& p);

/// Rational quartic residue symbol (m/p)_4 for p = 1 (mod 4), (m/p) = 1.
Sign quartic_mod_p(const Int& m, const Int& p);

/// <a/2>_4 on 2-adic units a = 1 (mod 8): +1 iff a = 1 (mod 16).
Sign quartic_2(const Rational& a);

/// <B/C>_4: product of (B/p)_4 over odd p | C, times <B/2>_4 when C is even.
Sign quartic_composite(const SquareClass& b, const SquareClass& c);

}  // namespace recip
