#include "recip/number.hpp"

#include <cctype>

#include "recip/arith.hpp"
#include "recip/error.hpp"

namespace recip {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Ok: return "OK";
    case ErrorCode::ZeroInput: return "ZERO_INPUT";
    case ErrorCode::BadModulus: return "BAD_MODULUS";
    case ErrorCode::BadPrime: return "BAD_PRIME";
    case ErrorCode::Unfactored: return "UNFACTORED";
    case ErrorCode::NotTwoAdicSquare: return "NOT_2ADIC_SQUARE";
    case ErrorCode::UndefinedSymbol: return "UNDEFINED_SYMBOL";
    case ErrorCode::NotQuadraticResidue: return "NOT_QUADRATIC_RESIDUE";
    case ErrorCode::Domain: return "DOMAIN";
    case ErrorCode::NotSolvable: return "NOT_SOLVABLE";
    case ErrorCode::SearchExhausted: return "SEARCH_EXHAUSTED";
    case ErrorCode::NotInDomain: return "NOT_IN_DOMAIN";
    case ErrorCode::NoAlpha2Case: return "NO_ALPHA2_CASE";
    case ErrorCode::F1F2Mismatch: return "F1_F2_MISMATCH";
    case ErrorCode::NotInKernel: return "NOT_IN_KERNEL";
    case ErrorCode::UnknownLaw: return "UNKNOWN_LAW";
    case ErrorCode::BadSolution: return "BAD_SOLUTION";
    case ErrorCode::BadArgument: return "BAD_ARGUMENT";
    case ErrorCode::Internal: return "INTERNAL";
  }
  return "UNKNOWN";
}

namespace {

bool valid_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string strip_plus(std::string_view s) {
  return std::string(!s.empty() && s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

Int parse_int(const std::string& text) {
  if (!valid_integer_text(text)) throw Error(ErrorCode::BadArgument, "not an integer: '" + text + "'");
  return Int(strip_plus(text), 10);
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den) || den[0] == '-')
    throw Error(ErrorCode::BadArgument, "not a rational: '" + text + "'");
  Int d(strip_plus(den), 10);
  if (d == 0) throw Error(ErrorCode::BadArgument, "zero denominator: '" + text + "'");
  Rational q(Int(strip_plus(num), 10), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Int& n) { return n.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Int mod(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

long mod_small(const Int& a, long m) {
  return static_cast<long>(mpz_fdiv_ui(a.get_mpz_t(), static_cast<unsigned long>(m)));
}

int valuation(const Int& n, const Int& p) {
  if (n == 0) throw Error(ErrorCode::ZeroInput, "valuation of 0");
  if (p == 2) return valuation2(n);
  Int rest = n;
  int v = 0;
  while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

int valuation(const Rational& q, const Int& p) {
  return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

int valuation2(const Int& n) {
  if (n == 0) throw Error(ErrorCode::ZeroInput, "valuation of 0");
  return static_cast<int>(mpz_scan1(n.get_mpz_t(), 0));
}

int valuation2(const Rational& q) { return valuation2(q.get_num()) - valuation2(q.get_den()); }

bool is_p_integral(const Rational& q, const Int& p) {
  return !mpz_divisible_p(q.get_den().get_mpz_t(), p.get_mpz_t());
}

Int residue(const Rational& q, const Int& m) {
  if (q.get_den() == 1) return mod(q.get_num(), m);
  Int inv;
  if (mpz_invert(inv.get_mpz_t(), q.get_den().get_mpz_t(), m.get_mpz_t()) == 0)
    throw Error(ErrorCode::Domain, "denominator of " + to_string(q) + " not invertible mod " + to_string(m));
  return mod(q.get_num() * inv, m);
}

Int isqrt(const Int& n) {
  if (n < 0) throw Error(ErrorCode::Domain, "isqrt of negative");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_square(const Int& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

Sign Sign::from_int(int v) {
  if (v == 1) return plus();
  if (v == -1) return minus();
  throw Error(ErrorCode::Internal, "sign value " + std::to_string(v));
}

Place Place::prime(const Int& p) {
  if (!is_prime(p)) throw Error(ErrorCode::BadPrime, recip::to_string(p) + " is not prime");
  Place place;
  place.infinite_ = false;
  place.p_ = p;
  return place;
}

std::string Place::to_string() const { return infinite_ ? "inf" : recip::to_string(p_); }

bool Place::operator<(const Place& o) const {
  // Finite places ascending, infinity last.
  if (infinite_ != o.infinite_) return !infinite_;
  return p_ < o.p_;
}

}  // namespace recip
