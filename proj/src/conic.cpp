#include "recip/conic.hpp"

#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <tuple>

#include "recip/error.hpp"
#include "recip/local_symbols.hpp"

namespace recip {

std::string ConicSolution::to_string() const {
  return "(" + recip::to_string(x) + ", " + recip::to_string(y) + ", " + recip::to_string(z) + ")";
}

bool locally_solvable(const SquareClass& a, const SquareClass& b) {
  const Rational ra(a.value()), rb(b.value());
  if (hilbert(ra, rb, Place::infinity()).is_minus()) return false;
  if (hilbert(ra, rb, Place::prime(2)).is_minus()) return false;
  for (const SquareClass* c : {&a, &b})
    for (const Int& p : factorize(c->value()).primes())
      if (p != 2 && hilbert(ra, rb, Place::prime(p)).is_minus()) return false;
  return true;
}

bool satisfies(const ConicSolution& s, const Rational& a, const Rational& b) {
  return s.x * s.x - a * s.y * s.y == b * s.z * s.z;
}

namespace {

bool is_power_of_two(const Int& n) { return n > 0 && mpz_popcount(n.get_mpz_t()) == 1; }

Int lcm_den(const ConicSolution& s) {
  Int l = 1;
  for (const Rational* q : {&s.x, &s.y, &s.z}) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q->get_den_mpz_t());
  return l;
}

std::tuple<Int, Int, Int> cleared(const ConicSolution& s) {
  const Int l = lcm_den(s);
  auto scale = [&](const Rational& q) { return Int(q.get_num() * (l / q.get_den())); };
  return {scale(s.x), scale(s.y), scale(s.z)};
}

Int gcd3(const Int& a, const Int& b, const Int& c) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

// Integer square root of a non-negative 64-bit value when it is a perfect square.
std::optional<std::int64_t> exact_sqrt(std::int64_t v) {
  if (v < 0) return std::nullopt;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  if (r * r != v) return std::nullopt;
  return r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

// All primitive scan solutions with max(y, z) <= limit, in scan order, up to
// `count` of them.
std::vector<ConicSolution> scan(const Int& a, const Int& b, long limit, std::size_t count) {
  std::vector<ConicSolution> out;
  const long double bound = static_cast<long double>(std::int64_t{1} << 60);
  const bool small = Int(abs(a)).get_d() * limit * limit < bound / 4 && Int(abs(b)).get_d() * limit * limit < bound / 4;
  for (long n = 1; n <= limit && out.size() < count; ++n) {
    for (long y = 0; y <= n && out.size() < count; ++y) {
      const long z_lo = y == n ? 0 : n;
      for (long z = z_lo; z <= n && out.size() < count; ++z) {
        if (small) {
          const std::int64_t v = a.get_si() * y * y + b.get_si() * z * z;
          auto x = exact_sqrt(v);
          if (!x || gcd64(gcd64(*x, y), z) != 1) continue;
          out.push_back({Rational(Int(static_cast<long>(*x))), Rational(y), Rational(z)});
        } else {
          const Int v = a * y * y + b * z * z;
          if (v < 0 || !is_square(v)) continue;
          const Int x = isqrt(v);
          if (gcd3(x, Int(y), Int(z)) != 1) continue;
          out.push_back({Rational(x), Rational(y), Rational(z)});
        }
      }
    }
  }
  return out;
}

// Some t with t^2 = a (mod |b|) for squarefree b, via CRT over its primes.
Int sqrt_mod_squarefree(const Int& a, const Int& b) {
  Int modulus = 1, t = 0;
  for (const Int& p : factorize(b).primes()) {
    Int r;
    const Int ar = mod(a, p);
    if (p == 2 || ar == 0) {
      r = mod(ar, p);
    } else {
      if (legendre(ar, p) != 1) throw Error(ErrorCode::NotSolvable, recip::to_string(a) + " is not a square mod " + recip::to_string(p));
      r = sqrt_mod_prime(ar, p);
    }
    // t' = t (mod modulus), t' = r (mod p)
    Int inv;
    mpz_invert(inv.get_mpz_t(), Int(mod(modulus, p)).get_mpz_t(), p.get_mpz_t());
    const Int k = mod((r - t) * inv, p);
    t += modulus * k;
    modulus *= p;
  }
  return t;
}

}  // namespace

bool is_primitive(const ConicSolution& s) {
  if (s.x == 0 && s.y == 0 && s.z == 0) return false;
  for (const Rational* q : {&s.x, &s.y, &s.z})
    if (!is_power_of_two(q->get_den())) return false;
  auto [x, y, z] = cleared(s);
  Int g = gcd3(x, y, z);
  while (mpz_even_p(g.get_mpz_t())) g /= 2;
  return g == 1;
}

ConicSolution primitive_integer(const ConicSolution& s) {
  if (s.x == 0 && s.y == 0 && s.z == 0) throw Error(ErrorCode::BadSolution, "zero point");
  auto [x, y, z] = cleared(s);
  const Int g = gcd3(x, y, z);
  x /= g;
  y /= g;
  z /= g;
  const Int& lead = x != 0 ? x : (y != 0 ? y : z);
  if (lead < 0) {
    x = -x;
    y = -y;
    z = -z;
  }
  return {Rational(x), Rational(y), Rational(z)};
}

ConicSolution legendre_descent(const Int& a, const Int& b) {
  if (a == 0 || b == 0) throw Error(ErrorCode::ZeroInput, "descent on a degenerate form");
  if (a < 0 && b < 0) throw Error(ErrorCode::NotSolvable, "x^2 = a y^2 + b z^2 with a, b < 0");
  if (a == 1) return {Rational(1), Rational(1), Rational(0)};
  if (b == 1) return {Rational(1), Rational(0), Rational(1)};
  if (a == -b) return {Rational(0), Rational(1), Rational(1)};
  if (abs(a) > abs(b)) {
    auto s = legendre_descent(b, a);
    return {s.x, s.z, s.y};
  }
  const Int babs = abs(b);
  Int t = sqrt_mod_squarefree(a, babs);
  if (2 * t > babs) t -= babs;
  const Int k = (t * t - a) / b;
  if (k == 0) throw Error(ErrorCode::Internal, "descent reached t^2 = a");
  const Rational kq(k);
  const SquareClass kc = SquareClass::of(kq);
  const Int m = isqrt(k / kc.value());  // k = k' m^2
  const auto s = legendre_descent(a, kc.value());
  const Rational x1 = s.x, y1 = s.y, z1 = s.z;
  return {Rational(t) * x1 + Rational(a) * y1, x1 + Rational(t) * y1, Rational(kc.value() * m) * z1};
}

ConicSolution solve_conic(const SquareClass& a, const SquareClass& b) {
  if (!locally_solvable(a, b))
    throw Error(ErrorCode::NotSolvable, "x^2 - " + a.to_string() + " y^2 = " + b.to_string() + " z^2 has no rational point");
  auto found = scan(a.value(), b.value(), kConicScanLimit, 1);
  if (!found.empty()) return found.front();
  auto s = primitive_integer(legendre_descent(a.value(), b.value()));
  if (!satisfies(s, Rational(a.value()), Rational(b.value())))
    throw Error(ErrorCode::Internal, "descent produced a non-solution " + s.to_string());
  return s;
}

std::vector<ConicSolution> conic_solutions(const SquareClass& a, const SquareClass& b, std::size_t count) {
  if (!locally_solvable(a, b))
    throw Error(ErrorCode::NotSolvable, "x^2 - " + a.to_string() + " y^2 = " + b.to_string() + " z^2 has no rational point");
  const Rational ra(a.value()), rb(b.value());
  std::vector<ConicSolution> out;
  std::set<std::tuple<Int, Int, Int>> seen;
  auto add = [&](const ConicSolution& s) {
    const auto p = primitive_integer(s);
    auto key = std::make_tuple(Int(abs(p.x.get_num())), Int(abs(p.y.get_num())), Int(abs(p.z.get_num())));
    if (out.size() < count && seen.insert(key).second) out.push_back(p);
  };
  for (const auto& s : scan(a.value(), b.value(), 48, count)) add(s);
  if (out.empty()) add(solve_conic(a, b));

  // Reflection in w: P' = Q(w) P - 2 B(P, w) w stays on Q = 0.
  const ConicSolution base = out.front();
  auto q = [&](const Rational& x, const Rational& y, const Rational& z) -> Rational { return x * x - ra * y * y - rb * z * z; };
  for (int i = -3; i <= 3 && out.size() < count; ++i)
    for (int j = -3; j <= 3 && out.size() < count; ++j)
      for (int k = -3; k <= 3 && out.size() < count; ++k) {
        const Rational wx(i), wy(j), wz(k);
        const Rational qw = q(wx, wy, wz);
        if (qw == 0) continue;
        const Rational bw = base.x * wx - ra * base.y * wy - rb * base.z * wz;
        ConicSolution r{qw * base.x - 2 * bw * wx, qw * base.y - 2 * bw * wy, qw * base.z - 2 * bw * wz};
        if (r.x == 0 && r.y == 0 && r.z == 0) continue;
        add(r);
      }
  return out;
}

}  // namespace recip
