#pragma once

// The domain D of admissible triples (B, A, C), the functions f1 and f2 with
// their per-place factors, the closed forms for the three special shapes,
// the character chi on generator lists and the local maps delta_v.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "recip/arith.hpp"
#include "recip/conic.hpp"
#include "recip/gf2_spaces.hpp"
#include "recip/number.hpp"

namespace recip {

/// Argument order follows f(B, A, C).
struct Triple {
  SquareClass B, A, C;

  bool operator==(const Triple& o) const = default;
  std::string to_string() const;
};

/// The six reorderings of (B, A, C).
std::vector<Triple> permutations(const Triple& t);

struct HilbertCheck {
  std::string pair;  // "A,B", "A,C" or "B,C"
  Place place;
  Sign value;
};

struct DomainWitness {
  bool accepted = false;
  std::vector<HilbertCheck> failed_symbols;  // condition 1
  Int triple_gcd;                            // condition 2
  bool some_one_mod_4 = false;               // condition 3
  std::string reason;                        // first failing condition, empty if accepted
};

DomainWitness in_domain(const Triple& t);

/// One factor of the f1 / f2 product.
struct LocalFactor {
  Place place = Place::infinity();
  Sign value;
  std::string case_tag;  // the table row or branch that fired
  std::string inputs;    // the symbol actually evaluated
  // Every other row / branch that also applied, with its value.
  // All of them are expected to equal `value`.
  std::vector<std::pair<std::string, Sign>> alternatives;
  // Rows that applied by their congruence condition but were not usable
  // (argument identically zero or symbol undefined), with the reason.
  std::vector<std::string> skipped;

  bool alternatives_agree() const;
};

struct Evaluation {
  Sign value;
  ConicSolution solution;
  std::vector<LocalFactor> factors;

  bool alternatives_agree() const;
};

/// Error(NotInDomain) unless t is in D. `sol` must solve the relevant conic
/// and be primitive in Z[1/2] (Error(BadSolution) otherwise); when absent,
/// solve_conic supplies it.
Evaluation f1(const Triple& t, const std::optional<ConicSolution>& sol = std::nullopt);
Evaluation f2(const Triple& t, const std::optional<ConicSolution>& sol = std::nullopt);

/// Coefficients (a, b) of the conic x^2 - a y^2 = b z^2 used by f1 and f2.
std::pair<SquareClass, SquareClass> f1_conic(const Triple& t);
std::pair<SquareClass, SquareClass> f2_conic(const Triple& t);

struct FResult {
  Sign value;          // f1 value
  Evaluation first;    // f1
  Evaluation second;   // f2
  std::optional<Evaluation> f1_alternate;  // f1 on a second conic solution
  bool agree = true;   // f1 == f2 and the alternate (if any) agrees
};

/// Computes f1 and f2 and, when a second conic solution exists, f1 again on
/// it. Never throws on disagreement; `agree` records it.
FResult f_checked(const Triple& t);

/// The common value; Error(F1F2Mismatch) when f_checked disagrees.
Sign f(const Triple& t);

/// f1(-A, A, C): product of (A/p)_4 over odd p | C times the 2-adic row.
Sign special1(const SquareClass& A, const SquareClass& C);
/// f2(B, C, C) = <B/C>_4.
Sign special2(const SquareClass& B, const SquareClass& C);
/// f2(B, -BC, C) = (-1)^((n^2 - 1)/8) beta_2, n = C/(C, 2B).
Sign special3(const SquareClass& B, const SquareClass& C);

/// Product of f over the generators (each must lie in D).
Sign chi(std::span<const Triple> gens);

/// The generated element sum B (.) A (.) C of S'^3(V).
CycSum presentation(std::span<const Triple> gens);

/// delta_v on a monomial, from the closed forms at infinity, odd p and 2
/// (extended to all of S^3(V_2) by (-2).3.6 -> 1).
Sign delta_place(const SymMonomial& m, const Place& v);

/// Places where some monomial entry is not a unit: infinity, 2 and every
/// odd prime dividing an entry.
std::vector<Place> relevant_places(const SymSum& s);

/// Product of delta_place over monomials and relevant places.
Sign delta(const SymSum& s);

struct Thm210Report {
  bool pass = false;
  Sign chi_value;
  Sign delta_value;
  CycSum xi;
  SymSum eta;
};

/// chi(gens) against delta(tau_preimage(xi)). Error(NotInKernel) when
/// rho(xi) != 0, Error(NotInDomain) for a generator outside D.
Thm210Report verify_210(std::span<const Triple> gens);

}  // namespace recip
