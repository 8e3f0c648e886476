#include "recip/arith.hpp"

#include <algorithm>
#include <array>

namespace recip {

namespace {

constexpr long kSieveLimit = 1'000'000;

struct PrimeTable {
  std::vector<bool> composite;
  std::vector<long> primes;

  PrimeTable() : composite(kSieveLimit + 1, false) {
    composite[0] = composite[1] = true;
    for (long i = 2; i * i <= kSieveLimit; ++i)
      if (!composite[i])
        for (long j = i * i; j <= kSieveLimit; j += i) composite[j] = true;
    for (long i = 2; i <= kSieveLimit; ++i)
      if (!composite[i]) primes.push_back(i);
  }
};

const PrimeTable& prime_table() {
  static const PrimeTable table;
  return table;
}

bool miller_rabin(const Int& n) {
  Int d = n - 1;
  int s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++s;
  }
  static const std::array<int, 12> bases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (int b : bases) {
    Int x = pow_mod(Int(b), d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

void push_factor(Factorization& f, const Int& p, int e) {
  if (e > 0) f.factors.push_back({p, e});
}

}  // namespace

Int Factorization::reassemble() const {
  Int n = sign;
  for (const auto& pp : factors) {
    Int t;
    mpz_pow_ui(t.get_mpz_t(), pp.prime.get_mpz_t(), static_cast<unsigned long>(pp.exponent));
    n *= t;
  }
  return n;
}

std::vector<Int> Factorization::primes() const {
  std::vector<Int> out;
  out.reserve(factors.size());
  for (const auto& pp : factors) out.push_back(pp.prime);
  return out;
}

Factorization factorize(const Int& n, std::uint64_t bound) {
  if (n == 0) throw Error(ErrorCode::ZeroInput, "factorize(0)");
  Factorization f;
  f.sign = n < 0 ? -1 : 1;
  Int m = abs(n);
  const auto& table = prime_table();
  const long divisor_limit = isqrt(Int(std::to_string(bound))).get_si();

  std::size_t i = 0;
  // Wide cofactor: divide in GMP until it fits a machine word.
  for (; i < table.primes.size() && !mpz_fits_ulong_p(m.get_mpz_t()); ++i) {
    const long p = table.primes[i];
    if (p > divisor_limit || Int(p) * p > m) break;
    int e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(p));
      ++e;
    }
    if (e > 0) f.factors.push_back({Int(p), e});
  }
  if (mpz_fits_ulong_p(m.get_mpz_t())) {
    unsigned long r = m.get_ui();
    for (; i < table.primes.size(); ++i) {
      const long p = table.primes[i];
      if (p > divisor_limit) break;
      auto up = static_cast<unsigned long>(p);
      if (up * up > r) break;
      int e = 0;
      while (r % up == 0) {
        r /= up;
        ++e;
      }
      if (e > 0) f.factors.push_back({Int(p), e});
    }
    m = Int(r);
  }
  if (m > 1) {
    if (!is_prime(m))
      throw Error(ErrorCode::Unfactored,
                  "composite cofactor " + to_string(m) + " of " + to_string(n) + " beyond trial bound");
    push_factor(f, m, 1);
  }
  return f;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n <= kSieveLimit) return !prime_table().composite[n.get_ui()];
  if (mpz_even_p(n.get_mpz_t())) return false;
  static const Int deterministic_limit("3317044064679887385961981", 10);
  if (n < deterministic_limit) return miller_rabin(n);
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::vector<long> primes_up_to(long limit) {
  const auto& table = prime_table();
  if (limit > kSieveLimit) throw Error(ErrorCode::BadArgument, "prime limit too large");
  auto end = std::upper_bound(table.primes.begin(), table.primes.end(), limit);
  return {table.primes.begin(), end};
}

int jacobi(const Int& a_in, const Int& n_in) {
  if (n_in < 1 || mpz_even_p(n_in.get_mpz_t()))
    throw Error(ErrorCode::BadModulus, "jacobi modulus must be odd and positive, got " + to_string(n_in));
  Int a = mod(a_in, n_in);
  Int n = n_in;
  int t = 1;
  while (a != 0) {
    auto v = mpz_scan1(a.get_mpz_t(), 0);
    a >>= static_cast<mp_bitcnt_t>(v);
    long n8 = mod_small(n, 8);
    if ((v & 1) && (n8 == 3 || n8 == 5)) t = -t;
    std::swap(a, n);
    if (mod_small(a, 4) == 3 && mod_small(n, 4) == 3) t = -t;
    a = mod(a, n);
  }
  return n == 1 ? t : 0;
}

int legendre(const Int& a, const Int& p) {
  if (p < 3 || mpz_even_p(p.get_mpz_t()) || !is_prime(p))
    throw Error(ErrorCode::BadModulus, "legendre modulus must be an odd prime, got " + to_string(p));
  return jacobi(a, p);
}

Int pow_mod(const Int& base, const Int& exp, const Int& m) {
  Int r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
  return r;
}

Int sqrt_mod_prime(const Int& a_in, const Int& p) {
  Int a = mod(a_in, p);
  if (a == 0) return 0;
  if (p == 2) return a;
  if (legendre(a, p) != 1)
    throw Error(ErrorCode::NotQuadraticResidue, to_string(a) + " is not a square mod " + to_string(p));
  Int r;
  if (mod_small(p, 4) == 3) {
    r = pow_mod(a, (p + 1) / 4, p);
  } else {
    Int q = p - 1;
    unsigned long s = 0;
    while (mpz_even_p(q.get_mpz_t())) {
      q >>= 1;
      ++s;
    }
    Int z = 2;
    while (jacobi(z, p) != -1) ++z;
    Int c = pow_mod(z, q, p);
    Int t = pow_mod(a, q, p);
    r = pow_mod(a, (q + 1) / 2, p);
    unsigned long m = s;
    while (t != 1) {
      unsigned long i = 0;
      Int t2 = t;
      while (t2 != 1) {
        t2 = t2 * t2 % p;
        ++i;
      }
      Int b = c;
      for (unsigned long j = 0; j + i + 1 < m; ++j) b = b * b % p;
      m = i;
      c = b * b % p;
      t = t * c % p;
      r = r * b % p;
    }
  }
  Int other = p - r;
  return r < other ? r : other;
}

SquareClass::SquareClass(const Int& value) : value_(value) {
  if (value == 0) throw Error(ErrorCode::ZeroInput, "square class of 0");
  for (const auto& pp : factorize(value).factors)
    if (pp.exponent > 1) throw Error(ErrorCode::Domain, recip::to_string(value) + " is not squarefree");
}

SquareClass SquareClass::unchecked(const Int& value) {
  SquareClass c;
  c.value_ = value;
  return c;
}

SquareClass SquareClass::of(const Rational& q) { return squarefree_part(q); }

SquareClass SquareClass::operator*(const SquareClass& o) const {
  Int g = gcd(value_, o.value_);
  return unchecked((value_ / g) * (o.value_ / g));
}

SquareClass squarefree_part(const Rational& q) {
  if (q == 0) throw Error(ErrorCode::ZeroInput, "squarefree part of 0");
  // n/d and n*d differ by the square d^2.
  Int n = q.get_num() * q.get_den();
  Factorization f = factorize(n);
  Int s = f.sign;
  for (const auto& pp : f.factors)
    if (pp.exponent % 2 == 1) s *= pp.prime;
  return SquareClass::unchecked(s);
}

TwoAdicSplit two_adic_split(const Rational& q) {
  if (q == 0) throw Error(ErrorCode::ZeroInput, "two_adic_split(0)");
  int v = valuation2(q);
  Rational u = q;
  if (v > 0) mpq_div_2exp(u.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(v));
  if (v < 0) mpq_mul_2exp(u.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-v));
  return {v, u};
}

std::pair<Int, Int> sum_two_squares(const Int& p) {
  if (!is_prime(p) || mod_small(p, 4) != 1)
    throw Error(ErrorCode::BadPrime, to_string(p) + " is not a prime = 1 mod 4");
  for (Int a = 1; a * a < p; a += 2) {
    Int r = p - a * a;
    if (is_square(r)) return {a, isqrt(r)};
  }
  throw Error(ErrorCode::Internal, "no two-squares representation for " + to_string(p));
}

PellSolution pell_neg(const Int& p) {
  if (!is_prime(p) || mod_small(p, 4) != 1)
    throw Error(ErrorCode::BadPrime, to_string(p) + " is not a prime = 1 mod 4");
  // Convergents h/k of the continued fraction of sqrt(p).
  const Int a0 = isqrt(p);
  Int m = 0, d = 1, a = a0;
  Int h_prev = 1, h = a0;
  Int k_prev = 0, k = 1;
  for (long step = 0; step < 10'000'000; ++step) {
    if (h * h - p * k * k == -1) return {h, k, p};
    m = d * a - m;
    d = (p - m * m) / d;
    a = (a0 + m) / d;
    Int h_next = a * h + h_prev;
    Int k_next = a * k + k_prev;
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
  }
  throw Error(ErrorCode::SearchExhausted, "negative Pell equation for " + to_string(p));
}

}  // namespace recip
