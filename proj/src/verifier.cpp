#include "recip/verifier.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "recip/error.hpp"
#include "recip/gf2_linalg.hpp"
#include "recip/local_symbols.hpp"
#include "recip/oracle.hpp"

namespace recip {

using nlohmann::json;

bool Report::pass() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const Record& r) { return !r.pass; }));
}

void Report::sort_records() {
  std::sort(records.begin(), records.end(), [](const Record& a, const Record& b) { return a.key < b.key; });
}

std::string Report::to_jsonl() const {
  std::string out;
  for (const auto& r : records) out += r.body.dump() + "\n";
  json tail{{"campaign", campaign}, {"params", params}, {"summary", summary},
            {"records", records.size()}, {"failures", failures()}, {"pass", pass()}};
  out += tail.dump() + "\n";
  return out;
}

nlohmann::json factor_json(const LocalFactor& f) {
  json j{{"place", f.place.to_string()}, {"value", f.value.value()}, {"case", f.case_tag}, {"inputs", f.inputs}};
  if (!f.alternatives.empty()) {
    json alts = json::array();
    for (const auto& [tag, v] : f.alternatives) alts.push_back({{"case", tag}, {"value", v.value()}});
    j["alternatives"] = alts;
  }
  if (!f.skipped.empty()) j["skipped"] = f.skipped;
  return j;
}

nlohmann::json evaluation_json(const Evaluation& e) {
  json factors = json::array();
  for (const auto& f : e.factors) factors.push_back(factor_json(f));
  return {{"value", e.value.value()}, {"solution", e.solution.to_string()}, {"factors", factors}};
}

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  std::uint64_t below(std::uint64_t n) { return g_() % n; }
  long in_range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

 private:
  std::mt19937_64 g_;
};

bool squarefree(long n) { return n != 0 && SquareClass::of(Rational(n)).value() == n; }

long draw_squarefree(Rng& rng, long bound) {
  for (;;) {
    const long n = rng.in_range(-bound, bound);
    if (squarefree(n)) return n;
  }
}

SquareClass sc(long n) { return SquareClass(Int(n)); }

std::string join(const std::vector<Triple>& gens) {
  std::string s;
  for (const auto& t : gens) s += (s.empty() ? "" : " + ") + t.to_string();
  return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------------------
// D campaign

struct DStats {
  long generic = 0, structured = 0, attempts = 0;
  long mismatches = 0, symmetry_failures = 0;
  long multi_solution = 0, solution_failures = 0;
  long branch_checked = 0, branch_failures = 0;
  long two_adic_checked = 0, two_adic_failures = 0;
  long zero_skips = 0;
  std::map<std::string, long> special_applicable, special_failures;
  long errors = 0;
};

void tally_branches(const Evaluation& e, DStats& st, bool& ok, std::vector<std::string>& notes) {
  for (const auto& f : e.factors) {
    st.zero_skips += static_cast<long>(f.skipped.size());
    if (f.alternatives.empty()) continue;
    const bool agree = f.alternatives_agree();
    if (f.place.is_two()) {
      ++st.two_adic_checked;
      if (!agree) ++st.two_adic_failures;
    } else {
      ++st.branch_checked;
      if (!agree) ++st.branch_failures;
    }
    if (!agree) {
      ok = false;
      notes.push_back("branch disagreement at " + f.place.to_string() + " on " + e.solution.to_string());
    }
  }
}

std::vector<ConicSolution> variants(const ConicSolution& s) {
  const Rational two(2), half(1, 2);
  return {{s.x * two, s.y * two, s.z * two},
          {s.x * half, s.y * half, s.z * half},
          {s.x * 4, s.y * 4, s.z * 4},
          {-s.x, s.y, s.z},
          {s.x, -s.y, s.z},
          {s.x, s.y, -s.z},
          {-s.x, -s.y, -s.z}};
}

Record check_d_triple(const Triple& t, const std::string& kind, DStats& st) {
  json body{{"campaign", "d"}, {"kind", kind}, {"instance", t.to_string()}};
  bool ok = true;
  std::vector<std::string> notes;
  try {
    const FResult base = f_checked(t);
    const Sign value = base.first.value;
    body["lhs"] = base.first.value.value();
    body["rhs"] = base.second.value.value();
    body["f1"] = evaluation_json(base.first);
    body["f2"] = evaluation_json(base.second);
    if (base.first.value != base.second.value) {
      ok = false;
      ++st.mismatches;
      notes.push_back("f1 != f2");
    }
    tally_branches(base.first, st, ok, notes);
    tally_branches(base.second, st, ok, notes);

    // Permutation symmetry
    json perms = json::object();
    bool symmetric = true;
    for (const auto& p : permutations(t)) {
      if (p == t) continue;
      const FResult r = f_checked(p);
      perms[p.to_string()] = {{"f1", r.first.value.value()}, {"f2", r.second.value.value()}};
      tally_branches(r.first, st, ok, notes);
      tally_branches(r.second, st, ok, notes);
      if (r.first.value != r.second.value) {
        ++st.mismatches;
        ok = false;
        notes.push_back("f1 != f2 on " + p.to_string());
      }
      if (r.first.value != value || r.second.value != value) symmetric = false;
    }
    body["permutations"] = perms;
    if (!symmetric) {
      ++st.symmetry_failures;
      ok = false;
      notes.push_back("permutation changes f");
    }

    // Other solutions, 2-power scalings and sign changes.
    bool invariant = true;
    json sols = json::array();
    auto check_solutions = [&](const std::pair<SquareClass, SquareClass>& conic, bool first) {
      const auto found = conic_solutions(conic.first, conic.second, 3);
      for (const auto& s : found) {
        std::vector<ConicSolution> all{s};
        for (const auto& v : variants(s)) all.push_back(v);
        for (const auto& v : all) {
          const Evaluation e = first ? f1(t, v) : f2(t, v);
          tally_branches(e, st, ok, notes);
          if (e.value != value) {
            invariant = false;
            notes.push_back(std::string(first ? "f1" : "f2") + " changes on solution " + v.to_string());
          }
        }
        sols.push_back({{"function", first ? "f1" : "f2"}, {"solution", s.to_string()}});
      }
      return found.size();
    };
    const std::size_t n1 = check_solutions(f1_conic(t), true);
    check_solutions(f2_conic(t), false);
    body["solutions"] = sols;
    if (n1 >= 2) ++st.multi_solution;
    if (!invariant) {
      ++st.solution_failures;
      ok = false;
    }

    // Special cases on every ordering that has the shape.
    json specials = json::array();
    const SquareClass minus_one(-1);
    std::set<std::string> seen;
    for (const auto& p : permutations(t)) {
      if (!seen.insert(p.to_string()).second) continue;
      auto check = [&](const std::string& name, Sign closed) {
        ++st.special_applicable[name];
        const bool good = closed == value;
        if (!good) {
          ++st.special_failures[name];
          ok = false;
          notes.push_back(name + " closed form differs on " + p.to_string());
        }
        specials.push_back({{"case", name}, {"ordering", p.to_string()}, {"closed", closed.value()}, {"pass", good}});
      };
      if (p.B == minus_one * p.A) check("special1", special1(p.A, p.C));
      if (p.A == p.C) check("special2", special2(p.B, p.C));
      if (p.A == minus_one * p.B * p.C) check("special3", special3(p.B, p.C));
    }
    if (!specials.empty()) body["special"] = specials;
  } catch (const Error& e) {
    ok = false;
    ++st.errors;
    body["error"] = e.what();
    if (e.code() == ErrorCode::F1F2Mismatch) ++st.mismatches;
  }
  if (!notes.empty()) body["failures"] = notes;
  body["pass"] = ok;
  return {kind + "|" + t.to_string(), ok, body};
}

// Seeded rejection sampler over D. `shape` builds a candidate from three
// squarefree draws.
using Shape = std::function<Triple(long, long, long)>;

std::vector<Triple> sample_d(Rng& rng, long bound, long count, const Shape& shape, long& attempts) {
  std::vector<Triple> out;
  std::set<std::string> seen;
  const long limit = std::max(200000L, 2000 * count);
  for (long i = 0; i < limit && static_cast<long>(out.size()) < count; ++i) {
    ++attempts;
    const long x = draw_squarefree(rng, bound), y = draw_squarefree(rng, bound), z = draw_squarefree(rng, bound);
    const Triple t = shape(x, y, z);
    if (!in_domain(t).accepted) continue;
    if (!seen.insert(t.to_string()).second) continue;
    out.push_back(t);
  }
  return out;
}

Triple generic_shape(long x, long y, long z) { return {sc(x), sc(y), sc(z)}; }

}  // namespace

Report run_d_campaign(long bound, int count, std::uint64_t seed) {
  if (bound < 2 || count < 1) throw Error(ErrorCode::BadArgument, "need bound >= 2 and count >= 1");
  Report rep;
  rep.campaign = "d";
  rep.params = {{"bound", bound}, {"count", count}, {"seed", seed}};
  Rng rng(seed);
  DStats st;

  long generic_attempts = 0;
  const auto generic = sample_d(rng, bound, count, generic_shape, generic_attempts);
  st.generic = static_cast<long>(generic.size());
  for (const auto& t : generic) rep.records.push_back(check_d_triple(t, "generic", st));

  const SquareClass minus_one(-1);
  const std::vector<std::pair<std::string, Shape>> shapes{
      {"special1", [&](long a, long, long c) { return Triple{minus_one * sc(a), sc(a), sc(c)}; }},
      {"special2", [&](long b, long, long c) { return Triple{sc(b), sc(c), sc(c)}; }},
      {"special3", [&](long b, long, long c) { return Triple{sc(b), minus_one * sc(b) * sc(c), sc(c)}; }},
  };
  const long per_shape = std::max(1, count / 10);
  long structured_attempts = 0;
  for (const auto& [name, shape] : shapes) {
    for (const auto& t : sample_d(rng, bound, per_shape, shape, structured_attempts)) {
      rep.records.push_back(check_d_triple(t, name, st));
      ++st.structured;
    }
  }
  st.attempts = generic_attempts;
  rep.sort_records();

  rep.summary = {
      {"accepted", st.generic},
      {"attempts", generic_attempts},
      {"acceptance_rate", generic_attempts ? static_cast<double>(st.generic) / static_cast<double>(generic_attempts) : 0.0},
      {"structured", st.structured},
      {"structured_attempts", structured_attempts},
      {"f1_f2_mismatches", st.mismatches},
      {"symmetry_failures", st.symmetry_failures},
      {"multi_solution_triples", st.multi_solution},
      {"solution_failures", st.solution_failures},
      {"branch_checked", st.branch_checked},
      {"branch_failures", st.branch_failures},
      {"two_adic_rows_checked", st.two_adic_checked},
      {"two_adic_row_failures", st.two_adic_failures},
      {"rows_skipped", st.zero_skips},
      {"special_applicable", st.special_applicable},
      {"special_failures", st.special_failures},
      {"errors", st.errors},
  };
  return rep;
}

// ---------------------------------------------------------------------------
// Classical laws

namespace {

using std::int64_t;

struct Decomposition {
  int64_t a, b;  // p = a^2 + b^2, a odd, b even, both positive
};

Decomposition two_squares(int64_t p) {
  const auto [a, b] = sum_two_squares(Int(static_cast<long>(p)));
  const Decomposition d{a.get_si(), b.get_si()};
  if (d.a * d.a + d.b * d.b != p) throw Error(ErrorCode::Internal, "bad two-squares decomposition");
  return d;
}

ConicSolution point(int64_t x, int64_t y, int64_t z) {
  return {Rational(Int(static_cast<long>(x))), Rational(Int(static_cast<long>(y))), Rational(Int(static_cast<long>(z)))};
}

Triple triple(int64_t b, int64_t a, int64_t c) { return {sc(static_cast<long>(b)), sc(static_cast<long>(a)), sc(static_cast<long>(c))}; }

int64_t red(int64_t a, int64_t p) { return ((a % p) + p) % p; }

struct LawCase {
  std::string instance;
  json data;
  Triple t;
  ConicSolution sol;
  bool use_f2 = false;
  int closed = 0;  // closed form of the law, from the oracles
  int rhs = 0;     // product of quartic symbols, from the oracles
};

std::vector<int64_t> primes_below(int64_t n) {
  std::vector<int64_t> out;
  for (int64_t p = 3; p < n; ++p)
    if (oracle::is_prime(p)) out.push_back(p);
  return out;
}

std::vector<int64_t> primes_1_mod_4(int64_t n) {
  std::vector<int64_t> out;
  for (int64_t p : primes_below(n))
    if (p % 4 == 1) out.push_back(p);
  return out;
}

int quartic_pair(int64_t p, int64_t q) { return oracle::quartic(p, q) * oracle::quartic(q, p); }

std::string pq(int64_t p, int64_t q) { return "p=" + std::to_string(p) + ",q=" + std::to_string(q); }

std::vector<LawCase> law_gauss2(int64_t max_prime, long&) {
  std::vector<LawCase> out;
  for (int64_t p : primes_below(max_prime)) {
    if (p % 8 != 1) continue;
    const auto [a, b] = two_squares(p);
    out.push_back({"p=" + std::to_string(p), {{"p", p}, {"a", a}, {"b", b}}, triple(p, p, 2), point(p, b, a), false,
                   b % 8 == 0 ? 1 : -1, oracle::quartic(2, p)});
  }
  return out;
}

std::vector<LawCase> law_lehmer(int64_t max_prime, long&) {
  std::vector<LawCase> out;
  for (int64_t p : primes_1_mod_4(max_prime)) {
    const auto [a, b] = two_squares(p);
    for (int64_t q : primes_below(max_prime)) {
      if (q == p || oracle::legendre(q, p) != 1) continue;
      const int64_t qs = q % 4 == 1 ? q : -q;
      out.push_back({pq(p, q), {{"p", p}, {"q", q}, {"q_star", qs}, {"a", a}, {"b", b}}, triple(p, p, qs), point(p, b, a),
                     false, oracle::legendre_sqrt(p, b, 1, p, q), oracle::quartic(red(qs, p), p)});
    }
  }
  return out;
}

// Ordered pairs p != q, both 1 mod 4, (p/q) = 1.
template <class F>
void for_pairs(int64_t max_prime, bool ordered, F&& f) {
  const auto ps = primes_1_mod_4(max_prime);
  for (int64_t p : ps)
    for (int64_t q : ps) {
      if (p == q || (!ordered && p > q)) continue;
      if (oracle::legendre(p, q) != 1) continue;
      f(p, q);
    }
}

std::vector<LawCase> law_burde(int64_t max_prime, long&) {
  std::vector<LawCase> out;
  for_pairs(max_prime, true, [&](int64_t p, int64_t q) {
    const auto [a, b] = two_squares(p);
    const auto [c, d] = two_squares(q);
    const int64_t e = a * c - b * d, f = a * d + b * c;
    out.push_back({pq(p, q), {{"p", p}, {"q", q}, {"a", a}, {"b", b}, {"c", c}, {"d", d}, {"e", e}, {"f", f}},
                   triple(p * q, p, q), point(e, 1, f), true, oracle::legendre(e, q), quartic_pair(p, q)});
  });
  return out;
}

std::vector<LawCase> law_burde_half(int64_t max_prime, long&) {
  std::vector<LawCase> out;
  for_pairs(max_prime, false, [&](int64_t p, int64_t q) {
    const auto [a, b] = two_squares(p);
    const auto [c, d] = two_squares(q);
    const json data{{"p", p}, {"q", q}, {"a", a}, {"b", b}, {"c", c}, {"d", d}};
    const int rhs = quartic_pair(p, q);
    out.push_back({pq(p, q) + ",half(a+sqrt p)/q", data, triple(p, p * q, q), point(a, 1, b), true,
                   oracle::legendre_sqrt(a, 1, 2, p, q), rhs});
    out.push_back({pq(p, q) + ",(b+sqrt p)/q", data, triple(p, p * q, q), point(b, 1, a), true,
                   oracle::legendre_sqrt(b, 1, 1, p, q), rhs});
    out.push_back({pq(p, q) + ",half(c+sqrt q)/p", data, triple(q, p * q, p), point(c, 1, d), true,
                   oracle::legendre_sqrt(c, 1, 2, q, p), rhs});
    out.push_back({pq(p, q) + ",(d+sqrt q)/p", data, triple(q, p * q, p), point(d, 1, c), true,
                   oracle::legendre_sqrt(d, 1, 1, q, p), rhs});
  });
  return out;
}

std::vector<LawCase> law_burde_i(int64_t max_prime, long&) {
  std::vector<LawCase> out;
  for_pairs(max_prime, false, [&](int64_t p, int64_t q) {
    const auto [a, b] = two_squares(p);
    const auto [c, d] = two_squares(q);
    const json data{{"p", p}, {"q", q}, {"a", a}, {"b", b}, {"c", c}, {"d", d}};
    const int rhs = quartic_pair(p, q);
    out.push_back({pq(p, q) + ",(a+b i)/q", data, triple(p, -1, q), point(a, b, 1), false,
                   oracle::legendre_sqrt(a, b, 1, -1, q), rhs});
    out.push_back({pq(p, q) + ",(c+d i)/p", data, triple(q, -1, p), point(c, d, 1), false,
                   oracle::legendre_sqrt(c, d, 1, -1, p), rhs});
  });
  return out;
}

int jacobi_minus_one(int64_t e) {
  const int64_t n = e < 0 ? -e : e;
  return n % 4 == 1 ? 1 : -1;
}

std::vector<LawCase> law_ex55(int64_t max_prime, long& skipped) {
  std::vector<LawCase> out;
  for_pairs(max_prime, false, [&](int64_t p0, int64_t q0) {
    int64_t p = p0, q = q0;
    if (p % 8 != q % 8 && p % 8 == 1) std::swap(p, q);  // p = 5, q = 1 (mod 8)
    const auto s = solve_conic(sc(static_cast<long>(q)), sc(static_cast<long>(p)));  // e^2 - q g^2 = p f^2
    int64_t e = s.x.get_num().get_si(), g = s.y.get_num().get_si(), f = s.z.get_num().get_si();
    if (p % 8 == 5 && q % 8 == 5 && f % 2 != 0) {
      std::swap(p, q);
      std::swap(f, g);
    }
    if (p % 8 == 5 && q % 8 == 5 && (f % 2 != 0 || g % 2 == 0)) {
      ++skipped;
      return;
    }
    if (e * e != p * f * f + q * g * g) throw Error(ErrorCode::Internal, "bad e^2 = p f^2 + q g^2");
    const int sign = ((f * g / 2) % 2 == 0) ? 1 : -1;
    out.push_back({pq(p, q), {{"p", p}, {"q", q}, {"e", e}, {"f", f}, {"g", g}}, triple(p, q, -1), point(e, g, f), false,
                   sign * jacobi_minus_one(e), quartic_pair(p, q)});
  });
  return out;
}

std::vector<LawCase> law_ex56(int64_t max_prime, long& skipped) {
  std::vector<LawCase> out;
  for_pairs(max_prime, true, [&](int64_t p, int64_t q) {
    for (int64_t s = 1; q * s * s < p; ++s) {
      const int64_t r2 = p - q * s * s;
      int64_t r = 0;
      while ((r + 1) * (r + 1) <= r2) ++r;
      if (r * r != r2) continue;
      const int closed = (s % 2 == 0) ? 1 : oracle::legendre(2, q);
      out.push_back({pq(p, q), {{"p", p}, {"q", q}, {"r", r}, {"s", s}}, triple(p, q, -1), point(p, r, s), true, closed,
                     quartic_pair(p, q)});
      return;
    }
    ++skipped;
  });
  return out;
}

std::vector<LawCase> law_scholz(int64_t max_prime, long&) {
  std::vector<LawCase> out;
  for_pairs(max_prime, true, [&](int64_t p, int64_t q) {
    const PellSolution pell = pell_neg(Int(static_cast<long>(p)));
    if (pell.t * pell.t - p * pell.u * pell.u != -1) throw Error(ErrorCode::Internal, "bad Pell solution");
    const int64_t t = mod(pell.t, Int(static_cast<long>(q))).get_si();
    const int64_t u = mod(pell.u, Int(static_cast<long>(q))).get_si();
    LawCase c{pq(p, q), {{"p", p}, {"q", q}, {"t", recip::to_string(pell.t)}, {"u", recip::to_string(pell.u)}},
              triple(-1, p, q), {Rational(pell.t), Rational(pell.u), Rational(1)}, false,
              oracle::legendre_sqrt(t, u, 1, p, q), quartic_pair(p, q)};
    out.push_back(std::move(c));
  });
  return out;
}

std::vector<LawCase> law_sqrt2(int64_t max_prime, long&) {
  std::vector<LawCase> out;
  for (int64_t p : primes_below(max_prime)) {
    if (p % 8 != 1) continue;
    out.push_back({"p=" + std::to_string(p), {{"p", p}}, triple(-1, 2, p), point(1, 1, 1), false,
                   oracle::legendre_sqrt(1, 1, 1, 2, p), oracle::quartic(2, p) * oracle::quartic_2(p)});
  }
  return out;
}

using LawFn = std::vector<LawCase> (*)(int64_t, long&);

const std::map<std::string, LawFn, std::less<>>& law_table() {
  static const std::map<std::string, LawFn, std::less<>> table{
      {"gauss2", law_gauss2}, {"lehmer", law_lehmer}, {"burde", law_burde},   {"burde_half", law_burde_half},
      {"burde_i", law_burde_i}, {"ex55", law_ex55},   {"ex56", law_ex56},     {"scholz", law_scholz},
      {"sqrt2", law_sqrt2},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& law_names() {
  static const std::vector<std::string> names{"gauss2", "lehmer", "burde", "burde_half", "burde_i",
                                              "ex55",   "ex56",   "scholz", "sqrt2"};
  return names;
}

Report run_law(std::string_view law, long max_prime) {
  const auto it = law_table().find(law);
  if (it == law_table().end()) throw Error(ErrorCode::UnknownLaw, std::string(law));
  if (max_prime < 5) throw Error(ErrorCode::BadArgument, "max_prime must be at least 5");
  Report rep;
  rep.campaign = "law";
  rep.params = {{"law", std::string(law)}, {"max_prime", max_prime}};
  long skipped = 0;
  const auto cases = it->second(max_prime, skipped);
  for (const auto& c : cases) {
    json body{{"campaign", "law"}, {"law", std::string(law)}, {"instance", c.instance}, {"data", c.data},
              {"triple", c.t.to_string()}, {"solution", c.sol.to_string()}, {"closed", c.closed}, {"rhs", c.rhs}};
    bool ok = false;
    try {
      const Evaluation e = c.use_f2 ? f2(c.t, c.sol) : f1(c.t, c.sol);
      const Sign generic = f(c.t);
      body["lhs"] = e.value.value();
      body["f"] = generic.value();
      body["trace"] = evaluation_json(e);
      ok = c.closed != 0 && c.rhs != 0 && e.value.value() == c.rhs && generic.value() == c.rhs && c.closed == c.rhs;
    } catch (const Error& e) {
      body["error"] = e.what();
    }
    body["pass"] = ok;
    rep.records.push_back({c.instance, ok, body});
  }
  rep.sort_records();
  rep.summary = {{"instances", cases.size()}, {"skipped", skipped}};
  return rep;
}

// ---------------------------------------------------------------------------
// Prime octuple search

std::vector<Triple> Octuple::triples() const {
  auto t = [](long b, long a) { return Triple{sc(b), sc(a), sc(a)}; };
  return {t(a * d, p * q), t(b * d, p * r), t(c * d, p * s),        t(a, r * s),
          t(b, q * s),     t(c, q * r),     t(a * b * c * d, p * q * r * s)};
}

std::optional<Octuple> find_example28(long prime_bound, std::uint64_t seed) {
  std::vector<long> mod4, odd;
  for (long n = 3; n < prime_bound; ++n)
    if (oracle::is_prime(n)) {
      odd.push_back(n);
      if (n % 4 == 1) mod4.push_back(n);
    }
  if (mod4.size() < 4) return std::nullopt;
  Rng rng(seed);
  // Legendre patterns of a, b, c, d over (p, q, r, s).
  static constexpr int kPattern[4][4] = {{-1, -1, 1, 1}, {-1, 1, -1, 1}, {-1, 1, 1, -1}, {-1, -1, -1, -1}};
  for (int attempt = 0; attempt < 2000; ++attempt) {
    std::vector<long> pick = mod4;
    for (std::size_t i = 0; i < 4; ++i) std::swap(pick[i], pick[i + rng.below(pick.size() - i)]);
    std::array<long, 4> m{pick[0], pick[1], pick[2], pick[3]};
    std::sort(m.begin(), m.end());
    std::array<long, 4> chosen{};
    bool ok = true;
    const std::size_t offset = rng.below(odd.size());
    for (int k = 0; k < 4 && ok; ++k) {
      ok = false;
      for (std::size_t j = 0; j < odd.size(); ++j) {
        const long x = odd[(offset + j) % odd.size()];
        if (std::find(m.begin(), m.end(), x) != m.end()) continue;
        if (std::find(chosen.begin(), chosen.begin() + k, x) != chosen.begin() + k) continue;
        bool match = true;
        for (int i = 0; i < 4 && match; ++i) match = oracle::legendre(x, m[i]) == kPattern[k][i];
        if (match) {
          chosen[k] = x;
          ok = true;
          break;
        }
      }
    }
    if (ok) return Octuple{m[0], m[1], m[2], m[3], chosen[0], chosen[1], chosen[2], chosen[3]};
  }
  return std::nullopt;
}

namespace {

json octuple_json(const Octuple& o) {
  return {{"p", o.p}, {"q", o.q}, {"r", o.r}, {"s", o.s}, {"a", o.a}, {"b", o.b}, {"c", o.c}, {"d", o.d}};
}

SymSum symmetric_relation(const std::vector<Triple>& gens) {
  SymSum s;
  for (const auto& t : gens) s.toggle(SymMonomial(t.B, t.A, t.C));
  return s;
}

}  // namespace

Report search_example28(long prime_bound, std::uint64_t seed) {
  Report rep;
  rep.campaign = "example28";
  rep.params = {{"bound", prime_bound}, {"seed", seed}};
  const auto oct = find_example28(prime_bound, seed);
  json body{{"campaign", "example28"}, {"instance", "example28"}, {"rhs", -1}};
  bool ok = false;
  if (!oct) {
    body["error"] = std::string(error_name(ErrorCode::SearchExhausted)) + ": no octuple below " + std::to_string(prime_bound);
    rep.summary = {{"found", false}};
  } else {
    body["octuple"] = octuple_json(*oct);
    const auto gens = oct->triples();
    try {
      bool all_in_d = true;
      Sign product, closed;
      json triples = json::array();
      for (const auto& t : gens) {
        const bool in_d = in_domain(t).accepted;
        all_in_d = all_in_d && in_d;
        const Sign v = f(t);
        const Sign s2 = special2(t.B, t.C);
        product *= v;
        closed *= s2;
        triples.push_back({{"triple", t.to_string()}, {"in_domain", in_d}, {"f", v.value()}, {"special2", s2.value()}});
      }
      const bool relation = is_zero(symmetric_relation(gens));
      const auto thm = verify_210(gens);
      body["triples"] = triples;
      body["relation_vanishes"] = relation;
      body["lhs"] = product.value();
      body["special2_product"] = closed.value();
      body["chi"] = thm.chi_value.value();
      body["delta"] = thm.delta_value.value();
      body["eta"] = thm.eta.to_string();
      ok = all_in_d && relation && product.is_minus() && closed.is_minus() && thm.pass && thm.delta_value.is_minus();
    } catch (const Error& e) {
      body["error"] = e.what();
    }
    rep.summary = {{"found", true}, {"octuple", octuple_json(*oct)}};
  }
  body["pass"] = ok;
  rep.records.push_back({"example28", ok, body});
  return rep;
}

// ---------------------------------------------------------------------------
// chi o tau = delta campaign

namespace {

Record thm210_record(const std::string& kind, const std::vector<Triple>& gens) {
  json body{{"campaign", "thm210"}, {"kind", kind}, {"instance", join(gens)}, {"generators", gens.size()}};
  bool ok = false;
  try {
    const auto r = verify_210(gens);
    body["lhs"] = r.chi_value.value();
    body["rhs"] = r.delta_value.value();
    body["eta"] = r.eta.to_string();
    ok = r.pass;
  } catch (const Error& e) {
    body["error"] = e.what();
  }
  body["pass"] = ok;
  return {kind + "|" + join(gens), ok, body};
}

// Kernel combinations of rho over a pool of small D triples.
std::vector<std::vector<Triple>> kernel_instances(Rng& rng, long want) {
  long attempts = 0;
  const auto pool = sample_d(rng, 15, 120, [](long x, long y, long z) {
    return x == 1 || y == 1 || z == 1 ? Triple{sc(-1), sc(-1), sc(-1)} : generic_shape(x, y, z);
  }, attempts);
  std::map<SymMonomial, std::size_t> index;
  std::vector<std::vector<std::size_t>> columns;
  for (const auto& t : pool) {
    std::vector<std::size_t> col;
    const SymSum expanded = canonical(SymSum{SymMonomial(t.B, t.A, t.C)});
    for (const auto& m : expanded.terms()) {
      auto [it, _] = index.emplace(m, index.size());
      col.push_back(it->second);
    }
    columns.push_back(col);
  }
  gf2::Matrix mat(index.size(), pool.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (std::size_t r : columns[j]) mat.flip(r, j);
  const auto kernel = mat.kernel();
  std::vector<std::vector<Triple>> out;
  if (kernel.empty()) return out;
  std::set<std::string> seen;
  for (long i = 0; i < 20 * want && static_cast<long>(out.size()) < want; ++i) {
    gf2::BitVector v(pool.size());
    const std::size_t terms = 1 + rng.below(3);
    for (std::size_t k = 0; k < terms; ++k) v ^= kernel[rng.below(kernel.size())];
    std::vector<Triple> gens;
    for (std::size_t j = 0; j < pool.size(); ++j)
      if (v.get(j)) gens.push_back(pool[j]);
    if (gens.empty() || !seen.insert(join(gens)).second) continue;
    out.push_back(gens);
  }
  return out;
}

}  // namespace

Report run_thm210_campaign(long bound, int count, std::uint64_t seed) {
  if (bound < 2 || count < 1) throw Error(ErrorCode::BadArgument, "need bound >= 2 and count >= 1");
  Report rep;
  rep.campaign = "thm210";
  rep.params = {{"bound", bound}, {"count", count}, {"seed", seed}};
  Rng rng(seed);
  std::map<std::string, long> kinds;
  auto add = [&](const std::string& kind, const std::vector<Triple>& gens) {
    Record r = thm210_record(kind, gens);
    if (std::any_of(rep.records.begin(), rep.records.end(), [&](const Record& o) { return o.key == r.key; })) return;
    ++kinds[kind];
    rep.records.push_back(std::move(r));
  };

  const long n_pairs = std::max(1L, count * 35L / 100), n_split = std::max(1L, count / 4L), n_burde = std::max(1L, count * 15L / 100);
  const long n_kernel = std::max(1L, count - n_pairs - n_split - n_burde);

  long attempts = 0;
  for (const auto& t : sample_d(rng, bound, n_pairs, generic_shape, attempts)) {
    const auto perms = permutations(t);
    add("permuted_pair", {t, perms[1 + rng.below(5)]});
  }

  // A (.) BC (.) D = A (.) B (.) D + A (.) C (.) D
  const long split_bound = std::min(bound, 60L);
  long split_found = 0;
  for (long i = 0; i < 400000 && split_found < n_split; ++i) {
    const long a = draw_squarefree(rng, split_bound), b = draw_squarefree(rng, split_bound);
    const long c = draw_squarefree(rng, split_bound), d = draw_squarefree(rng, split_bound);
    const Triple t1{sc(a), sc(b), sc(d)}, t2{sc(a), sc(c), sc(d)}, t3{sc(a), sc(b) * sc(c), sc(d)};
    if (t3.A.is_one() || !in_domain(t1).accepted || !in_domain(t2).accepted || !in_domain(t3).accepted) continue;
    add("splitting", {t1, t2, t3});
    ++split_found;
  }

  // p (.) p (.) q + p (.) q (.) q + p (.) pq (.) q
  std::vector<long> ps;
  for (long n = 5; n <= std::max(bound, 200L); ++n)
    if (n % 4 == 1 && oracle::is_prime(n)) ps.push_back(n);
  std::vector<std::pair<long, long>> pairs;
  for (long p : ps)
    for (long q : ps)
      if (p != q && oracle::legendre(p, q) == 1) pairs.emplace_back(p, q);
  for (long i = 0; i < n_burde && !pairs.empty(); ++i) {
    const auto [p, q] = pairs[rng.below(pairs.size())];
    add("burde", {Triple{sc(p), sc(p), sc(q)}, Triple{sc(p), sc(q), sc(q)}, Triple{sc(p), sc(p * q), sc(q)}});
  }

  for (const auto& gens : kernel_instances(rng, n_kernel)) add("kernel", gens);

  if (const auto oct = find_example28(kExample28DefaultBound, seed)) add("example28", oct->triples());
  for (long i = 1; i <= std::max(1L, count / 20L); ++i)
    if (const auto oct = find_example28(kExample28DefaultBound, seed + static_cast<std::uint64_t>(i))) add("octuple", oct->triples());

  rep.sort_records();
  rep.summary = {{"instances", rep.records.size()}, {"kinds", kinds}};
  return rep;
}

}  // namespace recip
