#include "recip/reciprocity.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "recip/error.hpp"
#include "recip/local_symbols.hpp"

namespace recip {

std::string Triple::to_string() const { return "(" + B.to_string() + ", " + A.to_string() + ", " + C.to_string() + ")"; }

std::vector<Triple> permutations(const Triple& t) {
  return {{t.B, t.A, t.C}, {t.B, t.C, t.A}, {t.A, t.B, t.C}, {t.A, t.C, t.B}, {t.C, t.B, t.A}, {t.C, t.A, t.B}};
}

bool LocalFactor::alternatives_agree() const {
  return std::all_of(alternatives.begin(), alternatives.end(), [&](const auto& a) { return a.second == value; });
}

bool Evaluation::alternatives_agree() const {
  return std::all_of(factors.begin(), factors.end(), [](const LocalFactor& f) { return f.alternatives_agree(); });
}

namespace {

long mod8(const SquareClass& c) { return mod_small(c.value(), 8); }

std::set<Int> odd_primes_of(std::initializer_list<const SquareClass*> classes) {
  std::set<Int> out;
  for (const SquareClass* c : classes)
    for (const Int& p : factorize(c->value()).primes())
      if (p != 2) out.insert(p);
  return out;
}

std::vector<Int> odd_primes_of(const SquareClass& c) {
  std::vector<Int> out;
  for (const Int& p : factorize(c.value()).primes())
    if (p != 2) out.push_back(p);
  return out;
}

bool divides(const Int& p, const SquareClass& c) { return mpz_divisible_p(c.value().get_mpz_t(), p.get_mpz_t()) != 0; }

void require_domain(const Triple& t) {
  auto w = in_domain(t);
  if (!w.accepted) throw Error(ErrorCode::NotInDomain, t.to_string() + ": " + w.reason);
}

Rational q(const SquareClass& c) { return Rational(c.value()); }

const Place& two() {
  static const Place p = Place::prime(2);
  return p;
}

// A candidate row or branch of a factor definition.
struct Row {
  std::string tag;
  bool applies;
  bool zero_argument;
  std::function<Sign()> eval;
};

// First usable applicable row gives the value; later applicable rows are
// evaluated as alternatives.
LocalFactor resolve(const Place& place, const std::vector<Row>& rows, const char* what) {
  LocalFactor out;
  out.place = place;
  bool have = false;
  for (const auto& row : rows) {
    if (!row.applies) continue;
    if (row.zero_argument) {
      out.skipped.push_back(row.tag + ": argument is 0");
      continue;
    }
    Sign v;
    try {
      v = row.eval();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::UndefinedSymbol) throw;
      out.skipped.push_back(row.tag + ": " + e.what());
      continue;
    }
    if (!have) {
      out.value = v;
      out.case_tag = row.tag;
      have = true;
    } else {
      out.alternatives.emplace_back(row.tag, v);
    }
  }
  if (!have)
    throw Error(ErrorCode::NoAlpha2Case, std::string("no usable case for ") + what + " at " + place.to_string());
  return out;
}

ConicSolution checked_solution(const std::optional<ConicSolution>& sol, const SquareClass& a, const SquareClass& b) {
  if (!sol) return solve_conic(a, b);
  if (!satisfies(*sol, q(a), q(b)))
    throw Error(ErrorCode::BadSolution, sol->to_string() + " does not solve x^2 - " + a.to_string() + " y^2 = " +
                                            b.to_string() + " z^2");
  if (!is_primitive(*sol)) throw Error(ErrorCode::BadSolution, sol->to_string() + " is not primitive in Z[1/2]");
  return *sol;
}

LocalFactor infinite_factor(const SquareClass& C, const Rational& x) {
  LocalFactor out;
  out.place = Place::infinity();
  if (C.sign() > 0) {
    out.case_tag = "C>0";
    out.inputs = "1";
    return out;
  }
  if (x == 0) throw Error(ErrorCode::Internal, "C < 0 with x = 0");
  out.case_tag = "C<0";
  out.inputs = "sgn(" + to_string(x) + ")";
  out.value = Sign::from_bit(sgn(x) < 0);
  return out;
}

}  // namespace

DomainWitness in_domain(const Triple& t) {
  DomainWitness w;
  std::vector<Place> places{Place::infinity(), two()};
  for (const Int& p : odd_primes_of({&t.A, &t.B, &t.C})) places.push_back(Place::prime(p));
  const std::array<std::tuple<const char*, const SquareClass*, const SquareClass*>, 3> pairs{
      {{"A,B", &t.A, &t.B}, {"A,C", &t.A, &t.C}, {"B,C", &t.B, &t.C}}};
  for (const auto& v : places)
    for (const auto& [name, x, y] : pairs) {
      Sign s = hilbert(*x, *y, v);
      if (s.is_minus()) w.failed_symbols.push_back({name, v, s});
    }
  mpz_gcd(w.triple_gcd.get_mpz_t(), t.A.value().get_mpz_t(), t.B.value().get_mpz_t());
  mpz_gcd(w.triple_gcd.get_mpz_t(), w.triple_gcd.get_mpz_t(), t.C.value().get_mpz_t());
  w.some_one_mod_4 = mod_small(t.A.value(), 4) == 1 || mod_small(t.B.value(), 4) == 1 || mod_small(t.C.value(), 4) == 1;
  if (!w.failed_symbols.empty()) {
    const auto& f = w.failed_symbols.front();
    w.reason = "(" + f.pair + ")_" + f.place.to_string() + " = -1";
  } else if (w.triple_gcd != 1) {
    w.reason = "gcd(A, B, C) = " + to_string(w.triple_gcd);
  } else if (!w.some_one_mod_4) {
    w.reason = "none of A, B, C is 1 mod 4";
  }
  w.accepted = w.reason.empty();
  return w;
}

std::pair<SquareClass, SquareClass> f1_conic(const Triple& t) { return {t.A, t.B}; }

std::pair<SquareClass, SquareClass> f2_conic(const Triple& t) {
  return {t.B, SquareClass::unchecked(Int(-1)) * t.A * t.B * t.C};
}

Evaluation f1(const Triple& t, const std::optional<ConicSolution>& sol) {
  require_domain(t);
  const auto& [A, B, C] = std::tie(t.A, t.B, t.C);
  Evaluation ev;
  ev.solution = checked_solution(sol, A, B);
  const Rational &x = ev.solution.x, &y = ev.solution.y, &z = ev.solution.z;

  ev.factors.push_back(infinite_factor(C, x));

  for (const Int& p : odd_primes_of(C)) {
    std::vector<Row> rows{
        {"p!|A", !divides(p, A), false, [&] { return legendre_ext(x, y, q(A), p); }},
        {"p!|B", !divides(p, B), false, [&] { return legendre_ext(2 * x, 2 * z, q(B), p); }},
    };
    auto f = resolve(Place::prime(p), rows, "alpha_p");
    f.inputs = f.case_tag == "p!|A" ? "((" + to_string(x) + " + " + to_string(y) + " sqrt " + A.to_string() + ")/" +
                                          to_string(p) + ")"
                                    : "((2(" + to_string(x) + " + " + to_string(z) + " sqrt " + B.to_string() + "))/" +
                                          to_string(p) + ")";
    ev.factors.push_back(std::move(f));
  }

  const long a8 = mod8(A), b8 = mod8(B), c8 = mod8(C);
  const Rational fiveB = 5 * q(B);
  std::vector<Row> rows{
      {"C=1 mod 8", c8 == 1, false, [] { return Sign::plus(); }},
      {"A=1 mod 8", a8 == 1, false, [&] { return hilbert_ext2(x, y, q(A), q(C)); }},
      {"B=1 mod 8", b8 == 1, false, [&] { return hilbert_ext2(2 * x, 2 * z, q(B), q(C)); }},
      {"A=C=5 mod 8", a8 == 5 && c8 == 5, z == 0, [&] { return hilbert(z, Rational(5), two()); }},
      {"B=C=5 mod 8", b8 == 5 && c8 == 5, y == 0, [&] { return -hilbert(y, Rational(5), two()); }},
      {"A=B=5,C=7 mod 8", a8 == 5 && b8 == 5 && c8 == 7, false,
       [&] { return -hilbert_ext2(3 * x, z, fiveB, Rational(-1)); }},
      {"A=B=5,C=3 mod 8", a8 == 5 && b8 == 5 && c8 == 3, false,
       [&] { return -hilbert_ext2(5 * x, z, fiveB, Rational(3)); }},
  };
  auto f2adic = resolve(two(), rows, "alpha_2");
  f2adic.inputs = f2adic.case_tag;
  ev.factors.push_back(std::move(f2adic));

  for (const auto& f : ev.factors) ev.value *= f.value;
  return ev;
}

Evaluation f2(const Triple& t, const std::optional<ConicSolution>& sol) {
  require_domain(t);
  const auto& [A, B, C] = std::tie(t.A, t.B, t.C);
  const auto [cb, D] = f2_conic(t);
  Evaluation ev;
  ev.solution = checked_solution(sol, cb, D);
  const Rational &x = ev.solution.x, &y = ev.solution.y, &z = ev.solution.z;

  ev.factors.push_back(infinite_factor(C, x));

  for (const Int& p : odd_primes_of(C)) {
    std::vector<Row> rows{
        {"p!|A", !divides(p, A), false, [&] { return legendre_ext(x, Rational(0), Rational(1), p); }},
        {"p!|B", !divides(p, B), false, [&] { return legendre_ext(2 * x, 2 * y, q(B), p); }},
    };
    auto f = resolve(Place::prime(p), rows, "beta_p");
    f.inputs = f.case_tag == "p!|A" ? "(" + to_string(x) + "/" + to_string(p) + ")"
                                    : "((2(" + to_string(x) + " + " + to_string(y) + " sqrt " + B.to_string() + "))/" +
                                          to_string(p) + ")";
    ev.factors.push_back(std::move(f));
  }

  const long a8 = mod8(A), b8 = mod8(B), c8 = mod8(C);
  const Rational E = -q(D);  // squarefree part of ABC
  std::vector<Row> rows{
      {"C=1 mod 8", c8 == 1, false, [] { return Sign::plus(); }},
      {"A=1 mod 8", a8 == 1, x == 0, [&] { return hilbert(x, q(C), two()); }},
      {"B=1 mod 8", b8 == 1, false, [&] { return hilbert_ext2(2 * x, 2 * y, q(B), q(C)); }},
      {"A=C=5 mod 8", a8 == 5 && c8 == 5, false, [&] { return hilbert_ext2(y, z, E / q(B), Rational(5)); }},
      {"B=C=5 mod 8", b8 == 5 && c8 == 5, z == 0, [&] { return -hilbert(z, Rational(5), two()); }},
      {"A=B=5 mod 8", a8 == 5 && b8 == 5, false, [&] { return hilbert_ext2(-10 * x, -2 * y, 5 * q(B), q(C)); }},
  };
  auto f2adic = resolve(two(), rows, "beta_2");
  f2adic.inputs = f2adic.case_tag;
  ev.factors.push_back(std::move(f2adic));

  for (const auto& f : ev.factors) ev.value *= f.value;
  return ev;
}

FResult f_checked(const Triple& t) {
  FResult r{.value = Sign::plus(), .first = f1(t), .second = f2(t)};
  r.value = r.first.value;
  r.agree = r.first.value == r.second.value;
  const auto [a, b] = f1_conic(t);
  auto sols = conic_solutions(a, b, 2);
  for (const auto& s : sols) {
    if (primitive_integer(s) == primitive_integer(r.first.solution)) continue;
    r.f1_alternate = f1(t, s);
    r.agree = r.agree && r.f1_alternate->value == r.value;
    break;
  }
  return r;
}

Sign f(const Triple& t) {
  auto r = f_checked(t);
  if (!r.agree)
    throw Error(ErrorCode::F1F2Mismatch, t.to_string() + ": f1 = " + std::to_string(r.first.value.value()) +
                                             ", f2 = " + std::to_string(r.second.value.value()));
  return r.value;
}

Sign special1(const SquareClass& A, const SquareClass& C) {
  const SquareClass minusA = SquareClass::unchecked(-A.value());
  require_domain({minusA, A, C});
  Sign s;
  for (const Int& p : odd_primes_of(C)) s *= quartic_mod_p(A.value(), p);
  const long a8 = mod8(A), c8 = mod8(C);
  if (c8 == 1) return s;
  if (a8 == 1) return s * hilbert_ext2(Rational(0), Rational(1), q(A), q(C));
  if (a8 == 7) return s * hilbert_ext2(Rational(0), Rational(2), -q(A), q(C));
  if (a8 == 5 && c8 == 5) return s;
  if (a8 == 3 && c8 == 5) return -s;
  throw Error(ErrorCode::NoAlpha2Case, "special case 1 table has no row for A = " + A.to_string() + ", C = " + C.to_string());
}

Sign special2(const SquareClass& B, const SquareClass& C) {
  require_domain({B, C, C});
  return quartic_composite(B, C);
}

Sign special3(const SquareClass& B, const SquareClass& C) {
  const SquareClass A = SquareClass::unchecked(Int(-1)) * B * C;
  require_domain({B, A, C});
  Int g;
  const Int twoB = 2 * B.value();
  mpz_gcd(g.get_mpz_t(), C.value().get_mpz_t(), twoB.get_mpz_t());
  const long n8 = mod_small(C.value() / g, 8);
  Sign s = Sign::from_bit(n8 == 3 || n8 == 5);
  const long b8 = mod8(B);
  if (b8 == 1) s *= hilbert(Rational(2), q(C), two());
  if (b8 == 5) s *= hilbert(Rational(-2), q(C), two());
  return s;
}

Sign chi(std::span<const Triple> gens) {
  Sign s;
  for (const auto& t : gens) s *= f(t);
  return s;
}

CycSum presentation(std::span<const Triple> gens) {
  CycSum xi;
  for (const auto& t : gens) xi.toggle(CycMonomial(t.B, t.A, t.C));
  return xi;
}

Sign delta_place(const SymMonomial& m, const Place& v) {
  const auto& [A, B, C] = m.classes();
  const auto a = localize(A, v), b = localize(B, v), c = localize(C, v);
  if (v.is_infinite()) return Sign::from_bit(a.bits[0] && b.bits[0] && c.bits[0]);
  if (v.is_two()) {
    int e = 0;
    for (int j = 0; j < 3; ++j) e ^= a.bits[j] & b.bits[j] & c.bits[j];
    return Sign::from_bit(e);
  }
  // bits[0] = valuation r, s, t; bits[1] = (unit/p) = -1
  const int r = a.bits[0], s = b.bits[0], t = c.bits[0];
  const int la = a.bits[1], lb = b.bits[1], lc = c.bits[1];
  const int minus_one = mod_small(v.p(), 4) == 3;
  const int e = (minus_one & r & s & t) ^ (la & s & t) ^ (lb & r & t) ^ (lc & r & s) ^ (r & lb & lc) ^ (s & lc & la) ^
                (t & la & lb);
  return Sign::from_bit(e);
}

std::vector<Place> relevant_places(const SymSum& s) {
  std::set<Int> primes;
  for (const auto& m : s.terms())
    for (const auto& c : m.classes())
      for (const Int& p : factorize(c.value()).primes())
        if (p != 2) primes.insert(p);
  std::vector<Place> out{Place::infinity(), two()};
  for (const Int& p : primes) out.push_back(Place::prime(p));
  return out;
}

Sign delta(const SymSum& s) {
  Sign out;
  const auto places = relevant_places(s);
  for (const auto& m : s.terms())
    for (const auto& v : places) out *= delta_place(m, v);
  return out;
}

Thm210Report verify_210(std::span<const Triple> gens) {
  for (const auto& t : gens) require_domain(t);
  Thm210Report r;
  r.xi = presentation(gens);
  r.eta = tau_preimage(r.xi);
  r.chi_value = chi(gens);
  r.delta_value = delta(r.eta);
  r.pass = r.chi_value == r.delta_value;
  return r;
}

}  // namespace recip
