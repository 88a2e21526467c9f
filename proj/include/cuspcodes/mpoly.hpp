#pragma once

// Sparse polynomials in x0..x3 over a finite field.

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cuspcodes/ffield.hpp"
#include "cuspcodes/upoly.hpp"

namespace cuspcodes {

constexpr int kVars = 4;
using Exponent = std::array<std::uint16_t, kVars>;

unsigned total_degree(const Exponent& e) noexcept;

/// Graded lexicographic order with x0 > x1 > x2 > x3; `operator()` sorts
/// larger monomials first.
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const noexcept;
};

using Point4 = std::array<Fel, kVars>;

class MPoly {
 public:
  using TermMap = std::map<Exponent, Fel, GrlexGreater>;

  MPoly() = default;
  explicit MPoly(Field field) : field_(std::move(field)) {}

  static MPoly constant(const Fel& c);
  static MPoly constant(const Field& f, std::int64_t c);
  static MPoly monomial(const Fel& c, const Exponent& e);
  static MPoly variable(const Field& f, int i);

  const Field& field() const noexcept { return field_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int total_degree() const noexcept;
  bool is_homogeneous() const noexcept;
  /// Highest power of x_var appearing; -1 for zero.
  int degree_in(int var) const noexcept;
  /// Leading term in graded lexicographic order.
  const std::pair<const Exponent, Fel>& leading_term() const;
  Fel coeff(const Exponent& e) const;

  void add_term(const Exponent& e, const Fel& c);

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly operator*(const Fel& s) const;
  MPoly operator-() const;
  MPoly pow(unsigned e) const;

  friend bool operator==(const MPoly& a, const MPoly& b);

  /// Value at a point whose coordinates live in this field or an extension
  /// of its prime field.
  Fel eval(const Point4& pt) const;
  /// Formal partial derivative with respect to x_var.
  MPoly diff(int var) const;

  /// Coefficients of x_var^0, x_var^1, ... as polynomials free of x_var.
  std::vector<MPoly> coefficients_in(int var) const;
  static MPoly from_coefficients_in(int var, const std::vector<MPoly>& coeffs, const Field& f);

  /// Sets x_var to `value` (a base-field element).
  MPoly substitute(int var, const Fel& value) const;
  /// f(M y): x_i = sum_j M[i][j] y_j, all entries in the base field.
  MPoly linear_change(const std::array<std::array<Fel, kVars>, kVars>& m) const;

  /// The univariate polynomial in x_var obtained by fixing the other
  /// coordinates to `pt` (entries at `var` ignored). Result lives over the
  /// field of the point coordinates.
  UPoly restrict_to_var(int var, const Point4& pt) const;

  /// Text as "c*x0^a*x1^b + ..." for diagnostics.
  std::string to_string() const;

 private:
  void check_same(const MPoly& o) const;

  Field field_;
  TermMap terms_;
};

enum class MPolyOp { Add, Sub, Mul };
MPoly mp_arith(const MPoly& a, const MPoly& b, MPolyOp op);

Fel mp_eval(const MPoly& f, const Point4& pt);
MPoly mp_diff(const MPoly& f, int var);

/// Parses the line-based sparse grammar: `<coeff> <e0> <e1> <e2> <e3>` per
/// line, `#` comments, blank lines ignored, duplicate exponents summed.
MPoly mp_parse(std::string_view text, const Field& field, bool require_homogeneous = false);

/// Inverse of mp_parse for prime-field polynomials, terms in graded
/// lexicographic order, one per line.
std::string mp_format(const MPoly& f);

/// q with q * den == num; throws NotDivisible otherwise.
MPoly mp_divide_exact(const MPoly& num, const MPoly& den);

/// Resultant with respect to x_var, computed by the subresultant PRS over
/// the coefficient ring of polynomials in the remaining variables.
MPoly mp_resultant(const MPoly& a, const MPoly& b, int var);

/// Random homogeneous polynomial with every monomial coefficient uniform.
MPoly random_homogeneous(const Field& f, unsigned degree, std::uint64_t seed);

/// Projective point with coordinates in some finite field, first nonzero
/// coordinate equal to one.
struct ProjPoint {
  Point4 coords;
  unsigned degree = 1;  // minimal field degree over the prime field

  std::string to_string() const;
};

ProjPoint normalize_point(const Point4& pt, unsigned degree);
/// Orders points by field degree, field modulus, then coordinates.
bool point_less(const ProjPoint& a, const ProjPoint& b);
bool point_equal(const ProjPoint& a, const ProjPoint& b);

}  // namespace cuspcodes
