#pragma once

// Exact arithmetic in F_p and F_{p^k} = F_p[t]/(m(t)).

#include <cstdint>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "cuspcodes/error.hpp"

namespace cuspcodes {

using u64 = std::uint64_t;

class FieldCtx;
using Field = std::shared_ptr<const FieldCtx>;

/// Residue vectors of length k, low degree first.
using Residues = boost::container::small_vector<u64, 2>;

bool is_prime(u64 n) noexcept;

/// Immutable description of a finite field of characteristic p >= 5.
class FieldCtx {
 public:
  /// Prime field for k == 1; otherwise a deterministic seeded search for a
  /// monic irreducible modulus of degree k.
  static Field make(u64 p, unsigned k = 1, u64 seed = 0);

  /// Extension with an explicit monic modulus (coefficients low to high,
  /// length k + 1). Irreducibility is verified.
  static Field with_modulus(u64 p, std::vector<u64> modulus);

  u64 characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return k_; }
  bool is_prime_field() const noexcept { return k_ == 1; }
  /// Empty for prime fields.
  const std::vector<u64>& modulus() const noexcept { return modulus_; }

  /// Number of elements as a double (may exceed 2^64 for large k).
  double order_approx() const noexcept;

  std::string describe() const;

  // Scalar residue arithmetic mod p.
  u64 add(u64 a, u64 b) const noexcept {
    u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  u64 sub(u64 a, u64 b) const noexcept { return a >= b ? a - b : a + (p_ - b); }
  u64 neg(u64 a) const noexcept { return a == 0 ? 0 : p_ - a; }
  u64 mul(u64 a, u64 b) const noexcept {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  u64 pow(u64 a, u64 e) const noexcept;
  u64 inv(u64 a) const;
  u64 reduce(std::int64_t v) const noexcept;

  // Element arithmetic on residue vectors (length k).
  Residues mul_elems(const Residues& a, const Residues& b) const;
  Residues inv_elem(const Residues& a) const;

  /// True iff `m` (monic, low to high) is irreducible over F_p.
  static bool is_irreducible(u64 p, const std::vector<u64>& m);

 private:
  FieldCtx(u64 p, unsigned k, std::vector<u64> modulus) : p_(p), k_(k), modulus_(std::move(modulus)) {}

  u64 p_;
  unsigned k_;
  std::vector<u64> modulus_;
};

/// Element of a finite field. Always stored reduced, so equality is
/// coefficient-wise.
class Fel {
 public:
  Fel() = default;
  Fel(Field field, Residues c);

  static Fel zero(const Field& f);
  static Fel one(const Field& f);
  static Fel from_int(const Field& f, std::int64_t v);
  static Fel from_residue(const Field& f, u64 v);
  /// The class of t in F_p[t]/(m); only meaningful for extensions.
  static Fel generator(const Field& f);
  /// Element whose base-p digits are the coefficients; 0 <= index < q.
  static Fel from_index(const Field& f, u64 index);

  const Field& field() const noexcept { return field_; }
  const FieldCtx& ctx() const { return *field_; }
  const Residues& residues() const noexcept { return c_; }
  bool valid() const noexcept { return static_cast<bool>(field_); }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  /// True when the element lies in the prime subfield.
  bool in_prime_field() const noexcept;
  /// Residue of the constant coefficient.
  u64 residue() const noexcept { return c_.empty() ? 0 : c_[0]; }

  Fel operator-() const;
  Fel& operator+=(const Fel& o);
  Fel& operator-=(const Fel& o);
  Fel& operator*=(const Fel& o);
  Fel& operator/=(const Fel& o);
  friend Fel operator+(Fel a, const Fel& b) { return a += b; }
  friend Fel operator-(Fel a, const Fel& b) { return a -= b; }
  friend Fel operator*(Fel a, const Fel& b) { return a *= b; }
  friend Fel operator/(Fel a, const Fel& b) { return a /= b; }

  Fel inv() const;
  Fel pow(u64 e) const;
  /// a^p.
  Fel frobenius() const;
  /// The unique b with b^p = a.
  Fel pth_root() const;

  /// Maps the element into `target`. Supported when both share the field
  /// or this element lies in the prime subfield of the same characteristic.
  Fel embed(const Field& target) const;

  friend bool operator==(const Fel& a, const Fel& b) noexcept;
  friend bool operator<(const Fel& a, const Fel& b) noexcept;

  std::string to_string() const;

 private:
  void check_same(const Fel& o) const;

  Field field_;
  Residues c_;
};

std::ostream& operator<<(std::ostream& os, const Fel& a);

enum class FelOp { Add, Sub, Mul, Div, Inv, Pow };

/// Dispatching form of the element operations; `exponent` is used by Pow.
Fel fel_arith(const Fel& a, const Fel& b, FelOp op, u64 exponent = 0);

bool same_field(const Field& a, const Field& b) noexcept;

}  // namespace cuspcodes
