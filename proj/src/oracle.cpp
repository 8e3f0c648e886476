#include "recip/oracle.hpp"

namespace recip::oracle {

namespace {

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

std::int64_t reduce(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

}  // namespace

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) {
  std::int64_t r = 1 % m;
  base = reduce(base, m);
  while (exp > 0) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) { return pow_mod(a, p - 2, p); }

int legendre(std::int64_t a, std::int64_t p) {
  const std::int64_t e = pow_mod(a, (p - 1) / 2, p);
  if (e == 0) return 0;
  return e == 1 ? 1 : -1;
}

int quartic(std::int64_t a, std::int64_t p) {
  const std::int64_t e = pow_mod(a, (p - 1) / 4, p);
  if (e == 1) return 1;
  if (e == p - 1) return -1;
  return 0;
}

int quartic_2(std::int64_t a) {
  const std::int64_t r = reduce(a, 16);
  if (r == 1) return 1;
  if (r == 9) return -1;
  return 0;
}

std::vector<std::int64_t> square_roots(std::int64_t m, std::int64_t p) {
  std::vector<std::int64_t> out;
  m = reduce(m, p);
  for (std::int64_t x = 0; x < p; ++x)
    if (mulmod(x, x, p) == m) out.push_back(x);
  return out;
}

int legendre_sqrt(std::int64_t a_num, std::int64_t b_num, std::int64_t den, std::int64_t m, std::int64_t p) {
  const std::int64_t inv = inverse_mod(reduce(den, p), p);
  const std::int64_t a = mulmod(reduce(a_num, p), inv, p);
  const std::int64_t b = mulmod(reduce(b_num, p), inv, p);
  const std::int64_t norm = reduce(mulmod(a, a, p) - mulmod(reduce(m, p), mulmod(b, b, p), p), p);
  if (b != 0 && norm == 0) return a == 0 ? 0 : legendre(2 * a, p);
  const auto roots = square_roots(m, p);
  if (roots.empty()) return 0;
  int value = 0;
  for (std::int64_t r : roots) {
    const int v = legendre(a + mulmod(b, r, p), p);
    if (v == 0 || (value != 0 && v != value)) return 0;
    value = v;
  }
  return value;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace recip::oracle
