#include "recip/gf2_spaces.hpp"

#include <algorithm>
#include <map>

#include "recip/error.hpp"
#include "recip/gf2_linalg.hpp"

namespace recip {

LocalSquareClass LocalSquareClass::operator+(const LocalSquareClass& o) const {
  if (!(place == o.place)) throw Error(ErrorCode::BadArgument, "adding local classes at different places");
  LocalSquareClass r = *this;
  for (int i = 0; i < 3; ++i) r.bits[i] ^= o.bits[i];
  return r;
}

LocalSquareClass localize(const Rational& a, const Place& v) {
  if (a == 0) throw Error(ErrorCode::ZeroInput, "localize(0)");
  LocalSquareClass out;
  out.place = v;
  if (v.is_infinite()) {
    out.dim = 1;
    out.bits[0] = sgn(a) < 0;
    return out;
  }
  const Int& p = v.p();
  const int val = valuation(a, p);
  Rational unit = a;
  Int pk;
  mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(std::abs(val)));
  if (val > 0) unit /= pk;
  if (val < 0) unit *= pk;
  if (p == 2) {
    // u = 3^e3 7^e7 in (Z/8)^x; -2 -> (1, 7), 3 -> (0, 3), 6 -> (1, 3).
    const long u = residue(unit, 8).get_si();
    const int e3 = (u == 3 || u == 5) ? 1 : 0;
    const int e7 = (u == 7 || u == 5) ? 1 : 0;
    const int r1 = e7;
    const int r3 = (val - r1) & 1;
    const int r2 = (e3 - r3) & 1;
    out.dim = 3;
    out.bits = {static_cast<std::uint8_t>(r1), static_cast<std::uint8_t>(r2), static_cast<std::uint8_t>(r3)};
    return out;
  }
  out.dim = 2;
  out.bits[0] = static_cast<std::uint8_t>(val & 1);
  out.bits[1] = jacobi(residue(unit, p), p) == -1;
  return out;
}

LocalSquareClass localize(const SquareClass& a, const Place& v) { return localize(Rational(a.value()), v); }

Int two_adic_basis_product(const std::array<std::uint8_t, 3>& exponents) {
  Int r = 1;
  if (exponents[0]) r *= -2;
  if (exponents[1]) r *= 3;
  if (exponents[2]) r *= 6;
  return r;
}

SymMonomial::SymMonomial(SquareClass a, SquareClass b, SquareClass c) : c_{std::move(a), std::move(b), std::move(c)} {
  std::sort(c_.begin(), c_.end());
}

std::string SymMonomial::to_string() const {
  return c_[0].to_string() + "." + c_[1].to_string() + "." + c_[2].to_string();
}

CycMonomial::CycMonomial(SquareClass a, SquareClass b, SquareClass c) : c_{std::move(a), std::move(b), std::move(c)} {
  std::array<SquareClass, 3> best = c_;
  for (int k = 1; k < 3; ++k) {
    std::array<SquareClass, 3> rot{c_[k], c_[(k + 1) % 3], c_[(k + 2) % 3]};
    if (rot < best) best = rot;
  }
  c_ = best;
}

std::string CycMonomial::to_string() const {
  return c_[0].to_string() + "(.)" + c_[1].to_string() + "(.)" + c_[2].to_string();
}

CycSum tau(const SymSum& s) {
  CycSum out;
  for (const auto& m : s.terms()) {
    const auto& [a, b, c] = m.classes();
    out.toggle(CycMonomial(a, b, c));
    out.toggle(CycMonomial(b, a, c));
  }
  return out;
}

SymSum rho(const CycSum& c) {
  SymSum out;
  for (const auto& m : c.terms()) {
    const auto& [a, b, d] = m.classes();
    out.toggle(SymMonomial(a, b, d));
  }
  return out;
}

namespace {

// Square classes as GF(2) vectors over the atoms -1, p1 < p2 < ...
class AtomBasis {
 public:
  void add(const SquareClass& c) {
    if (c.sign() < 0) atoms_.insert(Int(-1));
    for (const Int& p : factorize(c.value()).primes()) atoms_.insert(p);
  }

  std::vector<SquareClass> atoms() const {
    std::vector<SquareClass> out;
    for (const Int& a : atoms_) out.push_back(SquareClass::unchecked(a));
    return out;
  }

  std::vector<SquareClass> decompose(const SquareClass& c) const {
    std::vector<SquareClass> out;
    if (c.sign() < 0) out.push_back(SquareClass::unchecked(Int(-1)));
    for (const Int& p : factorize(c.value()).primes()) out.push_back(SquareClass::unchecked(p));
    return out;
  }

 private:
  std::set<Int> atoms_;
};

template <class Monomial>
AtomBasis basis_of(const Gf2Sum<Monomial>& s) {
  AtomBasis b;
  for (const auto& m : s.terms())
    for (const auto& c : m.classes()) b.add(c);
  return b;
}

template <class Monomial>
Gf2Sum<Monomial> expand(const Gf2Sum<Monomial>& s, const AtomBasis& basis) {
  Gf2Sum<Monomial> out;
  for (const auto& m : s.terms()) {
    const auto& [a, b, c] = m.classes();
    const auto da = basis.decompose(a);
    const auto db = basis.decompose(b);
    const auto dc = basis.decompose(c);
    for (const auto& x : da)
      for (const auto& y : db)
        for (const auto& z : dc) out.toggle(Monomial(x, y, z));
  }
  return out;
}

std::vector<SymMonomial> sym_basis(const std::vector<SquareClass>& atoms) {
  std::vector<SymMonomial> out;
  const std::size_t n = atoms.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) out.emplace_back(atoms[i], atoms[j], atoms[k]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CycMonomial> cyc_basis(const std::vector<SquareClass>& atoms) {
  std::set<CycMonomial> seen;
  for (const auto& a : atoms)
    for (const auto& b : atoms)
      for (const auto& c : atoms) seen.emplace(a, b, c);
  return {seen.begin(), seen.end()};
}

template <class Monomial>
gf2::BitVector coordinates(const Gf2Sum<Monomial>& expanded, const std::map<Monomial, std::size_t>& index) {
  gf2::BitVector v(index.size());
  for (const auto& m : expanded.terms()) v.flip(index.at(m));
  return v;
}

template <class Monomial>
std::map<Monomial, std::size_t> index_of(const std::vector<Monomial>& monomials) {
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < monomials.size(); ++i) index.emplace(monomials[i], i);
  return index;
}

}  // namespace

SymSum canonical(const SymSum& s) { return expand(s, basis_of(s)); }
CycSum canonical(const CycSum& c) { return expand(c, basis_of(c)); }
bool is_zero(const SymSum& s) { return canonical(s).formally_zero(); }
bool is_zero(const CycSum& c) { return canonical(c).formally_zero(); }

SymSum tau_preimage(const CycSum& c) {
  if (!is_zero(rho(c))) throw Error(ErrorCode::NotInKernel, "rho(" + c.to_string() + ") != 0");
  const AtomBasis basis = basis_of(c);
  const auto atoms = basis.atoms();
  const auto syms = sym_basis(atoms);
  const auto cycs = cyc_basis(atoms);
  const auto cyc_index = index_of(cycs);

  gf2::Matrix m(cycs.size(), syms.size());
  for (std::size_t j = 0; j < syms.size(); ++j) {
    const auto col = coordinates(tau(SymSum{syms[j]}), cyc_index);
    for (std::size_t i = col.find_next(0); i < col.size(); i = col.find_next(i + 1)) m.set(i, j);
  }
  const auto target = coordinates(expand(c, basis), cyc_index);
  const auto x = m.solve_lexmin(target);
  if (!x) throw Error(ErrorCode::Internal, "no tau-preimage for " + c.to_string() + " although rho vanishes");
  SymSum eta;
  for (std::size_t j = x->find_next(0); j < x->size(); j = x->find_next(j + 1)) eta.toggle(syms[j]);
  return eta;
}

ExactnessRanks exactness_ranks(std::span<const SquareClass> generators) {
  AtomBasis atoms_only;
  for (const auto& g : generators) atoms_only.add(g);
  const auto atoms = atoms_only.atoms();
  const auto atom_index = [&] {
    std::map<Int, std::size_t> idx;
    for (std::size_t i = 0; i < atoms.size(); ++i) idx.emplace(atoms[i].value(), i);
    return idx;
  }();

  // Echelon basis of the span of the generators, kept as square classes.
  std::vector<gf2::BitVector> rows;
  std::vector<SquareClass> classes;
  std::vector<std::size_t> leads;
  for (const auto& g : generators) {
    gf2::BitVector v(atoms.size());
    for (const auto& a : atoms_only.decompose(g)) v.flip(atom_index.at(a.value()));
    SquareClass cls = g;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (v.get(leads[i])) {
        v ^= rows[i];
        cls = cls * classes[i];
      }
    if (!v.any()) continue;
    const std::size_t lead = v.find_next(0);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i].get(lead)) {
        rows[i] ^= v;
        classes[i] = classes[i] * cls;
      }
    rows.push_back(std::move(v));
    classes.push_back(cls);
    leads.push_back(lead);
  }

  ExactnessRanks out;
  out.dim = static_cast<int>(classes.size());
  const auto syms = sym_basis(classes);
  const auto cycs = cyc_basis(classes);
  out.sym_dim = static_cast<int>(syms.size());
  out.cyc_dim = static_cast<int>(cycs.size());

  const auto sym_atoms = index_of(sym_basis(atoms));
  const auto cyc_atoms = index_of(cyc_basis(atoms));
  gf2::Matrix tau_m(syms.size(), cyc_atoms.size());
  for (std::size_t j = 0; j < syms.size(); ++j)
    tau_m.row(j) = coordinates(expand(tau(SymSum{syms[j]}), atoms_only), cyc_atoms);
  gf2::Matrix rho_m(cycs.size(), sym_atoms.size());
  for (std::size_t j = 0; j < cycs.size(); ++j)
    rho_m.row(j) = coordinates(expand(rho(CycSum{cycs[j]}), atoms_only), sym_atoms);
  out.rank_tau = static_cast<int>(tau_m.rank());
  out.rank_rho = static_cast<int>(rho_m.rank());
  return out;
}

}  // namespace recip
