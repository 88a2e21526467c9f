#pragma once

// Dense univariate polynomials over a finite field, with the toolbox used
// for elimination: resultants, gcds, squarefree decomposition and
// distinct/equal-degree factorization.

#include <cstdint>
#include <string>
#include <vector>

#include "cuspcodes/ffield.hpp"

namespace cuspcodes {

class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(Field field) : field_(std::move(field)) {}
  UPoly(Field field, std::vector<Fel> coeffs);

  static UPoly constant(const Fel& c);
  static UPoly x(const Field& f);
  /// Coefficients given as integers, low degree first.
  static UPoly from_ints(const Field& f, std::initializer_list<std::int64_t> coeffs);

  const Field& field() const noexcept { return field_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<Fel>& coeffs() const noexcept { return c_; }
  Fel coeff(std::size_t i) const;
  Fel lc() const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
  UPoly operator*(const Fel& s) const;
  UPoly operator-() const;

  /// Quotient and remainder; divisor nonzero.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
  UPoly operator%(const UPoly& d) const { return divmod(d).second; }
  UPoly operator/(const UPoly& d) const { return divmod(d).first; }

  UPoly monic() const;
  UPoly derivative() const;
  Fel eval(const Fel& x) const;
  UPoly pow(unsigned e) const;
  /// this^e mod m.
  UPoly powmod(u64 e, const UPoly& m) const;
  /// this^(p^times) mod m, by repeated p-th powering.
  UPoly frobenius_mod(const UPoly& m, unsigned times = 1) const;
  /// Maps every coefficient into `target` (see Fel::embed).
  UPoly embed(const Field& target) const;

  friend bool operator==(const UPoly& a, const UPoly& b);

  std::string to_string(char var = 'x') const;

 private:
  void normalize();
  void check_same(const UPoly& o) const;

  Field field_;
  std::vector<Fel> c_;  // low to high, no trailing zeros
};

/// Monic gcd (zero if both are zero).
UPoly gcd(const UPoly& a, const UPoly& b);

/// Res(f, g) = lc(f)^deg(g) * prod_{f(a)=0} g(a).
Fel up_resultant(const UPoly& f, const UPoly& g);

struct SquarefreeFactor {
  UPoly factor;  // monic, squarefree
  unsigned multiplicity;
};

/// f = lc(f) * prod factor^multiplicity with pairwise coprime squarefree
/// factors, sorted by multiplicity. Handles multiplicities divisible by p.
std::vector<SquarefreeFactor> up_squarefree(const UPoly& f);

/// Squarefree kernel f / gcd(f, f') made monic; handles p-th powers.
UPoly squarefree_part(const UPoly& f);

/// Monic irreducible factors of a squarefree monic polynomial, sorted by
/// degree then coefficients. Splitting randomness comes from `seed`.
std::vector<UPoly> irreducible_factors(const UPoly& squarefree, u64 seed);

struct Root {
  Fel value;        // lives in the residue field of its minimal polynomial
  unsigned degree;  // minimal field degree over the coefficient field
};

struct RootsResult {
  std::vector<Root> roots;
  /// Irreducible factors whose degree exceeded the budget.
  std::vector<UPoly> unresolved;
  bool budget_exceeded() const noexcept { return !unresolved.empty(); }
};

/// All roots in extensions of degree <= ext_budget. Each irreducible factor
/// g of degree d > 1 yields its d conjugate roots in F_p[t]/(g). Requires a
/// prime coefficient field for d > 1.
RootsResult up_roots(const UPoly& f, unsigned ext_budget, u64 seed = 0);

/// Like up_roots but throws BudgetExceeded when any factor is unresolved.
std::vector<Root> up_roots_strict(const UPoly& f, unsigned ext_budget, u64 seed = 0);

}  // namespace cuspcodes
