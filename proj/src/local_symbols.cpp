#include "recip/local_symbols.hpp"

#include <algorithm>
#include <optional>

namespace recip {

namespace {

struct LocalParts {
  int valuation;
  Int unit_residue;  // unit part reduced mod `modulus`
};

// Strips p from numerator and denominator and reduces the unit mod `modulus`.
LocalParts local_parts(const Rational& q, const Int& p, const Int& modulus) {
  Int num = q.get_num();
  Int den = q.get_den();
  int v = 0;
  while (mpz_divisible_p(num.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  while (mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    --v;
  }
  return {v, residue(Rational(num, den), modulus)};
}

std::optional<int> ord2(const Rational& q) {
  if (q == 0) return std::nullopt;
  return valuation2(q);
}

Rational times_pow2(const Rational& q, int k) {
  Rational r = q;
  if (k > 0) mpq_mul_2exp(r.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(k));
  if (k < 0) mpq_div_2exp(r.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-k));
  return r;
}

// Writes m = 4^k u with u a 2-adic unit = 1 (mod 8).
std::pair<int, Rational> split_two_adic_square(const Rational& m) {
  if (m == 0) throw Error(ErrorCode::NotTwoAdicSquare, "m = 0");
  auto [v, u] = two_adic_split(m);
  if (v % 2 != 0 || residue(u, 8) != 1)
    throw Error(ErrorCode::NotTwoAdicSquare, to_string(m) + " is not a square in Q_2");
  return {v / 2, u};
}

}  // namespace

Sign hilbert(const Rational& a, const Rational& b, const Place& v) {
  if (a == 0 || b == 0) throw Error(ErrorCode::ZeroInput, "hilbert symbol with zero argument");
  if (v.is_infinite()) return Sign::from_bit(sgn(a) < 0 && sgn(b) < 0);
  const Int& p = v.p();
  if (p == 2) {
    auto [alpha, u] = local_parts(a, 2, 8);
    auto [beta, w] = local_parts(b, 2, 8);
    auto eps = [](const Int& x) { return x == 3 || x == 7 ? 1 : 0; };
    auto omega = [](const Int& x) { return x == 3 || x == 5 ? 1 : 0; };
    int e = eps(u) * eps(w) + (alpha & 1) * omega(w) + (beta & 1) * omega(u);
    return Sign::from_bit(e & 1);
  }
  auto [alpha, u] = local_parts(a, p, p);
  auto [beta, w] = local_parts(b, p, p);
  Sign s;
  if ((alpha & 1) && (beta & 1) && mod_small(p, 4) == 3) s = -s;
  if (beta & 1) s *= Sign::from_int(jacobi(u, p));
  if (alpha & 1) s *= Sign::from_int(jacobi(w, p));
  return s;
}

Sign hilbert(const SquareClass& a, const SquareClass& b, const Place& v) {
  return hilbert(Rational(a.value()), Rational(b.value()), v);
}

int sqrt2_mod16(const Rational& m) {
  if (m == 0 || valuation2(m) != 0 || residue(m, 8) != 1)
    throw Error(ErrorCode::NotTwoAdicSquare, to_string(m) + " is not a 2-adic unit = 1 mod 8");
  long m32 = residue(m, 32).get_si();
  return static_cast<int>((((3 - m32) / 2) % 16 + 16) % 16);
}

Int two_adic_sqrt(const Rational& m, int bits) {
  if (bits < 3) throw Error(ErrorCode::BadArgument, "two_adic_sqrt needs at least 3 bits");
  if (m == 0 || valuation2(m) != 0 || residue(m, 8) != 1)
    throw Error(ErrorCode::NotTwoAdicSquare, to_string(m) + " is not a 2-adic unit = 1 mod 8");
  Int modulus = Int(1) << bits;
  Int u = residue(m, modulus);
  Int r = 1;
  for (int i = 3; i < bits; ++i) {
    Int next = Int(1) << (i + 1);
    if (mod(r * r - u, next) != 0) r += Int(1) << (i - 1);
  }
  return mod(r, modulus);
}

Ext2Evaluation hilbert_ext2_detail(const Rational& a, const Rational& b, const Rational& m, const Rational& c) {
  if (c == 0) throw Error(ErrorCode::ZeroInput, "hilbert_ext2 with c = 0");
  if (a == 0 && b == 0) throw Error(ErrorCode::ZeroInput, "hilbert_ext2 with a = b = 0");
  const Place two = Place::prime(2);
  Ext2Evaluation out;
  if (b == 0) {
    out.value = hilbert(a, c, two);
    out.approximant = a;
    return out;
  }
  auto [k, u] = split_two_adic_square(m);
  const Rational bb = times_pow2(b, k);  // a + b sqrt(m) = a + bb sqrt(u)
  const Rational norm = a * a - u * bb * bb;
  if (norm == 0) {
    if (a == 0) throw Error(ErrorCode::UndefinedSymbol, "degenerate symbol with a = 0");
    out.degenerate = true;
    out.approximant = 2 * a;
    out.value = hilbert(out.approximant, c, two);
    return out;
  }
  if (hilbert(norm, c, two).is_minus())
    throw Error(ErrorCode::UndefinedSymbol, "((" + to_string(a) + " + " + to_string(b) + " sqrt " + to_string(m) +
                                                ", " + to_string(c) + "))_2: (a^2 - m b^2, c)_2 = -1");

  const Rational s = (3 - u) / 2;
  const Rational plus = a + bb * s;
  const Rational minus = a - bb * s;
  auto op = ord2(plus);
  auto om = ord2(minus);
  bool take_plus;
  if (!op) take_plus = false;
  else if (!om) take_plus = true;
  else take_plus = *op <= *om;
  out.tie = op && om && *op == *om;
  out.approximant = take_plus ? plus : minus;
  out.value = hilbert(out.approximant, c, two);
  if (out.tie) out.tie_other = hilbert(take_plus ? minus : plus, c, two);

  // Both square roots, to enough precision that the approximation error is
  // a square factor: ord(bb (r - rK)) >= ord(a +- bb r) + 3 for both signs.
  const int ord_n = valuation2(norm);
  const int ord_b = valuation2(bb);
  const int low = a == 0 ? ord_b : std::min(valuation2(a), ord_b);
  const int bits = std::max(6, ord_n - low - ord_b + 6);
  const Int r = two_adic_sqrt(u, bits);
  const Sign with_plus = hilbert(a + bb * Rational(r), c, two);
  const Sign with_minus = hilbert(a - bb * Rational(r), c, two);
  if (with_plus != out.value || with_minus != out.value)
    throw Error(ErrorCode::Internal, "root dependence in ((" + to_string(a) + " + " + to_string(b) + " sqrt " +
                                         to_string(m) + ", " + to_string(c) + "))_2");
  return out;
}

Sign hilbert_ext2(const Rational& a, const Rational& b, const Rational& m, const Rational& c) {
  return hilbert_ext2_detail(a, b, m, c).value;
}

Sign legendre_ext(const Rational& a, const Rational& b, const Rational& m, const Int& p) {
  if (p < 3 || mod_small(p, 2) == 0 || !is_prime(p))
    throw Error(ErrorCode::BadModulus, "legendre_ext modulus must be an odd prime, got " + to_string(p));
  for (const Rational* q : {&a, &b, &m})
    if (!is_p_integral(*q, p))
      throw Error(ErrorCode::UndefinedSymbol, to_string(*q) + " is not " + to_string(p) + "-integral");
  const Int ar = residue(a, p);
  const Int br = residue(b, p);
  const Int mr = residue(m, p);
  if (br == 0) {
    if (ar == 0) throw Error(ErrorCode::UndefinedSymbol, "a = b = 0 mod " + to_string(p));
    return Sign::from_int(jacobi(ar, p));
  }
  const Int norm = mod(ar * ar - mr * br * br, p);
  if (norm == 0) {
    if (ar == 0) throw Error(ErrorCode::UndefinedSymbol, to_string(p) + " divides both a and a^2 - m b^2");
    return Sign::from_int(jacobi(2 * ar, p));
  }
  if (jacobi(mr, p) != 1)
    throw Error(ErrorCode::UndefinedSymbol, "(" + to_string(m) + "/" + to_string(p) + ") != 1");
  if (jacobi(norm, p) != 1)
    throw Error(ErrorCode::UndefinedSymbol, "((a^2 - m b^2)/" + to_string(p) + ") = -1");
  const Int root = sqrt_mod_prime(mr, p);
  const int v1 = jacobi(ar + br * root, p);
  const int v2 = jacobi(ar - br * root, p);
  if (v1 != v2)
    throw Error(ErrorCode::Internal, "legendre_ext root dependence at p = " + to_string(p));
  return Sign::from_int(v1);
}

Sign quartic_mod_p(const Int& m, const Int& p) {
  if (!is_prime(p) || mod_small(p, 4) != 1)
    throw Error(ErrorCode::BadModulus, "quartic symbol needs a prime = 1 mod 4, got " + to_string(p));
  if (jacobi(m, p) != 1)
    throw Error(ErrorCode::NotQuadraticResidue, "(" + to_string(m) + "/" + to_string(p) + ") != 1");
  const Int e = pow_mod(mod(m, p), (p - 1) / 4, p);
  if (e == 1) return Sign::plus();
  if (e == p - 1) return Sign::minus();
  throw Error(ErrorCode::Internal, "Euler criterion gave " + to_string(e));
}

Sign quartic_2(const Rational& a) {
  if (a == 0 || valuation2(a) != 0)
    throw Error(ErrorCode::Domain, to_string(a) + " is not a 2-adic unit");
  const Int r = residue(a, 16);
  if (r == 1) return Sign::plus();
  if (r == 9) return Sign::minus();
  throw Error(ErrorCode::Domain, to_string(a) + " is not 1 mod 8");
}

Sign quartic_composite(const SquareClass& b, const SquareClass& c) {
  Sign s;
  for (const Int& p : factorize(c.value()).primes()) {
    if (p == 2) {
      s *= quartic_2(Rational(b.value()));
    } else {
      if (jacobi(b.value(), p) != 1)
        throw Error(ErrorCode::NotQuadraticResidue, "(" + b.to_string() + "/" + to_string(p) + ") != 1");
      s *= quartic_mod_p(b.value(), p);
    }
  }
  return s;
}

}  // namespace recip
