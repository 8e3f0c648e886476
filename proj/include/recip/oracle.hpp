#pragma once

// Independent word-size oracles for the law corpus: Euler's criterion,
// enumerated square roots mod p, and residue tests mod 16. Nothing here
// calls into the symbol, conic or reciprocity code.

#include <cstdint>
#include <vector>

namespace recip::oracle {

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m);
std::int64_t inverse_mod(std::int64_t a, std::int64_t p);

/// a^((p-1)/2) mod p mapped to {-1, 0, 1}.
int legendre(std::int64_t a, std::int64_t p);

/// a^((p-1)/4) mod p mapped to +-1; requires p = 1 mod 4 and (a/p) = 1.
int quartic(std::int64_t a, std::int64_t p);

/// +1 if a = 1 (mod 16), -1 if a = 9 (mod 16); a = 1 (mod 8).
int quartic_2(std::int64_t a);

/// Every x in [0, p) with x^2 = m (mod p), by enumeration.
std::vector<std::int64_t> square_roots(std::int64_t m, std::int64_t p);

/// ((num/den + (b_num/den) sqrt m)/p) over every enumerated root of m,
/// with the degenerate value ((2a)/p) when p | a^2 - m b^2. Returns 0 if
/// the roots disagree or the symbol is undefined.
int legendre_sqrt(std::int64_t a_num, std::int64_t b_num, std::int64_t den, std::int64_t m, std::int64_t p);

bool is_prime(std::int64_t n);

}  // namespace recip::oracle
