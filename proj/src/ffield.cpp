#include "cuspcodes/ffield.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cuspcodes/rng.hpp"

namespace cuspcodes {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::SmallCharacteristic: return "SmallCharacteristic";
    case ErrorCode::IrreducibleSearchExhausted: return "IrreducibleSearchExhausted";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::MixedDegreeError: return "MixedDegreeError";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorCode::ChartMisses: return "ChartMisses";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::DegreeNotDivisibleBy3: return "DegreeNotDivisibleBy3";
    case ErrorCode::PartitionMismatch: return "PartitionMismatch";
    case ErrorCode::DegreeConstraintViolated: return "DegreeConstraintViolated";
    case ErrorCode::ZeroLambda: return "ZeroLambda";
    case ErrorCode::CharacteristicDividesDegree: return "CharacteristicDividesDegree";
    case ErrorCode::NotSingular: return "NotSingular";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotExtended: return "NotExtended";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BadPairing: return "BadPairing";
    case ErrorCode::DegreeMismatchUnderPermutation: return "DegreeMismatchUnderPermutation";
    case ErrorCode::NotASubPartition: return "NotASubPartition";
    case ErrorCode::Unsupported: return "Unsupported";
  }
  return "Unknown";
}

namespace {

using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Dense polynomials over F_p used while the field itself is being built.
using RawPoly = std::vector<u64>;

void trim(RawPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

RawPoly raw_mul(const RawPoly& a, const RawPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  RawPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  trim(r);
  return r;
}

// Remainder of a modulo a nonzero b.
RawPoly raw_mod(RawPoly a, const RawPoly& b, u64 p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const u64 lc_inv = powmod(b.back(), p - 2, p);
  while (a.size() >= b.size()) {
    const u64 q = mulmod(a.back(), lc_inv, p);
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = (a[shift + i] + p - mulmod(q, b[i], p)) % p;
    trim(a);
  }
  return a;
}

RawPoly raw_gcd(RawPoly a, RawPoly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RawPoly r = raw_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^times) mod m, by repeated p-th powering.
RawPoly raw_frobenius_x(const RawPoly& m, u64 p, unsigned times) {
  RawPoly x = raw_mod(RawPoly{0, 1}, m, p);
  for (unsigned t = 0; t < times; ++t) {
    RawPoly r{1};
    RawPoly base = x;
    u64 e = p;
    while (e) {
      if (e & 1) r = raw_mod(raw_mul(r, base, p), m, p);
      base = raw_mod(raw_mul(base, base, p), m, p);
      e >>= 1;
    }
    x = std::move(r);
  }
  return x;
}

}  // namespace

bool is_prime(u64 n) noexcept {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for 64-bit integers.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool FieldCtx::is_irreducible(u64 p, const std::vector<u64>& m) {
  if (m.size() < 2 || m.back() != 1) return false;
  const unsigned k = static_cast<unsigned>(m.size() - 1);
  if (k == 1) return true;
  RawPoly mod(m.begin(), m.end());
  // x^(p^k) == x mod m
  RawPoly xk = raw_frobenius_x(mod, p, k);
  if (!(xk.size() == 2 && xk[0] == 0 && xk[1] == 1)) return false;
  // gcd(x^(p^d) - x, m) == 1 for every proper divisor d of k
  RawPoly cur = raw_mod(RawPoly{0, 1}, mod, p);
  for (unsigned d = 1; d < k; ++d) {
    // cur <- cur^p mod m
    RawPoly r{1};
    RawPoly base = cur;
    u64 e = p;
    while (e) {
      if (e & 1) r = raw_mod(raw_mul(r, base, p), mod, p);
      base = raw_mod(raw_mul(base, base, p), mod, p);
      e >>= 1;
    }
    cur = r;
    if (k % d != 0) continue;
    RawPoly diff = cur;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    RawPoly g = raw_gcd(mod, diff, p);
    if (g.size() > 1) return false;
  }
  return true;
}

Field FieldCtx::make(u64 p, unsigned k, u64 seed) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
  if (p < 5) throw Error(ErrorCode::SmallCharacteristic, "characteristic " + std::to_string(p) + " < 5");
  if (p >= (1ULL << 62)) throw Error(ErrorCode::Unsupported, "characteristic must be below 2^62");
  if (k == 0) throw Error(ErrorCode::Unsupported, "extension degree must be >= 1");
  if (k == 1) return Field(new FieldCtx(p, 1, {}));
  Rng rng(derive_seed(seed, {p, k}));
  std::uniform_int_distribution<u64> coeff(0, p - 1);
  const unsigned budget = 200 * k + 200;
  for (unsigned attempt = 0; attempt < budget; ++attempt) {
    std::vector<u64> m(k + 1, 0);
    m[k] = 1;
    for (unsigned i = 0; i < k; ++i) m[i] = coeff(rng);
    if (m[0] == 0) continue;
    if (is_irreducible(p, m)) return Field(new FieldCtx(p, k, std::move(m)));
  }
  throw Error(ErrorCode::IrreducibleSearchExhausted,
              "no irreducible modulus of degree " + std::to_string(k) + " found");
}

Field FieldCtx::with_modulus(u64 p, std::vector<u64> modulus) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
  if (p < 5) throw Error(ErrorCode::SmallCharacteristic, "characteristic " + std::to_string(p) + " < 5");
  for (auto& c : modulus) c %= p;
  trim(modulus);
  if (modulus.size() < 2 || modulus.back() != 1)
    throw Error(ErrorCode::ReducibleModulus, "modulus must be monic of degree >= 1");
  const unsigned k = static_cast<unsigned>(modulus.size() - 1);
  if (k == 1) return Field(new FieldCtx(p, 1, {}));
  if (!is_irreducible(p, modulus)) throw Error(ErrorCode::ReducibleModulus, "modulus is reducible");
  return Field(new FieldCtx(p, k, std::move(modulus)));
}

double FieldCtx::order_approx() const noexcept { return std::pow(static_cast<double>(p_), k_); }

std::string FieldCtx::describe() const {
  std::ostringstream os;
  os << "F_" << p_;
  if (k_ > 1) {
    os << "^" << k_ << " mod ";
    bool first = true;
    for (std::size_t i = modulus_.size(); i-- > 0;) {
      if (modulus_[i] == 0) continue;
      if (!first) os << "+";
      first = false;
      if (i == 0 || modulus_[i] != 1) os << modulus_[i];
      if (i >= 1) os << "t";
      if (i >= 2) os << "^" << i;
    }
  }
  return os.str();
}

u64 FieldCtx::pow(u64 a, u64 e) const noexcept { return powmod(a, e, p_); }

u64 FieldCtx::inv(u64 a) const {
  if (a % p_ == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return powmod(a, p_ - 2, p_);
}

u64 FieldCtx::reduce(std::int64_t v) const noexcept {
  const auto m = static_cast<std::int64_t>(p_);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return static_cast<u64>(r);
}

Residues FieldCtx::mul_elems(const Residues& a, const Residues& b) const {
  if (k_ == 1) return Residues{mul(a[0], b[0])};
  std::vector<u128> prod(2 * k_ - 1, 0);
  // accumulate without reducing every step; each product < p^2 < 2^124
  for (unsigned i = 0; i < k_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < k_; ++j) {
      prod[i + j] += static_cast<u128>(a[i]) * b[j];
      if (prod[i + j] >= (static_cast<u128>(1) << 125)) prod[i + j] %= p_;
    }
  }
  std::vector<u64> r(prod.size());
  for (std::size_t i = 0; i < prod.size(); ++i) r[i] = static_cast<u64>(prod[i] % p_);
  // reduce by the monic modulus: t^k = -sum m_i t^i
  for (std::size_t d = r.size(); d-- > k_;) {
    const u64 c = r[d];
    if (c == 0) continue;
    r[d] = 0;
    for (unsigned i = 0; i < k_; ++i) {
      if (modulus_[i] == 0) continue;
      r[d - k_ + i] = sub(r[d - k_ + i], mul(c, modulus_[i]));
    }
  }
  return Residues(r.begin(), r.begin() + k_);
}

Residues FieldCtx::inv_elem(const Residues& a) const {
  if (k_ == 1) return Residues{inv(a[0])};
  // extended Euclid on (a, modulus)
  RawPoly r0(modulus_.begin(), modulus_.end());
  RawPoly r1(a.begin(), a.end());
  trim(r1);
  if (r1.empty()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  RawPoly s0{}, s1{1};
  while (r1.size() > 1) {
    // q, r = divmod(r0, r1)
    RawPoly rem = r0;
    RawPoly q(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 0, 0);
    const u64 li = inv(r1.back());
    while (rem.size() >= r1.size()) {
      const u64 c = mul(rem.back(), li);
      const std::size_t shift = rem.size() - r1.size();
      q[shift] = c;
      for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] = sub(rem[shift + i], mul(c, r1[i]));
      trim(rem);
    }
    trim(q);
    RawPoly qs = raw_mul(q, s1, p_);
    RawPoly s2 = s0;
    if (s2.size() < qs.size()) s2.resize(qs.size(), 0);
    for (std::size_t i = 0; i < qs.size(); ++i) s2[i] = sub(s2[i], qs[i]);
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant c; inverse is s1 / c
  const u64 ci = inv(r1[0]);
  Residues out(k_, 0);
  for (std::size_t i = 0; i < s1.size() && i < k_; ++i) out[i] = mul(s1[i], ci);
  return out;
}

// ---------------------------------------------------------------------------

bool same_field(const Field& a, const Field& b) noexcept {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->characteristic() == b->characteristic() && a->degree() == b->degree() &&
         a->modulus() == b->modulus();
}

Fel::Fel(Field field, Residues c) : field_(std::move(field)), c_(std::move(c)) {
  const auto k = field_->degree();
  c_.resize(k, 0);
  for (auto& v : c_) v %= field_->characteristic();
}

Fel Fel::zero(const Field& f) { return Fel(f, Residues(f->degree(), 0)); }

Fel Fel::one(const Field& f) {
  Residues r(f->degree(), 0);
  r[0] = 1;
  return Fel(f, std::move(r));
}

Fel Fel::from_int(const Field& f, std::int64_t v) {
  Residues r(f->degree(), 0);
  r[0] = f->reduce(v);
  return Fel(f, std::move(r));
}

Fel Fel::from_residue(const Field& f, u64 v) {
  Residues r(f->degree(), 0);
  r[0] = v % f->characteristic();
  return Fel(f, std::move(r));
}

Fel Fel::generator(const Field& f) {
  if (f->degree() == 1) return zero(f);
  Residues r(f->degree(), 0);
  r[1] = 1;
  return Fel(f, std::move(r));
}

Fel Fel::from_index(const Field& f, u64 index) {
  Residues r(f->degree(), 0);
  const u64 p = f->characteristic();
  for (unsigned i = 0; i < f->degree(); ++i) {
    r[i] = index % p;
    index /= p;
  }
  return Fel(f, std::move(r));
}

bool Fel::is_zero() const noexcept {
  return std::all_of(c_.begin(), c_.end(), [](u64 v) { return v == 0; });
}

bool Fel::is_one() const noexcept {
  if (c_.empty() || c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](u64 v) { return v == 0; });
}

bool Fel::in_prime_field() const noexcept {
  return c_.size() <= 1 || std::all_of(c_.begin() + 1, c_.end(), [](u64 v) { return v == 0; });
}

void Fel::check_same(const Fel& o) const {
  if (!field_ || !o.field_) throw Error(ErrorCode::ContextMismatch, "uninitialized field element");
  if (field_ != o.field_ && !same_field(field_, o.field_))
    throw Error(ErrorCode::ContextMismatch, field_->describe() + " vs " + o.field_->describe());
}

Fel Fel::operator-() const {
  Fel r = *this;
  for (auto& v : r.c_) v = field_->neg(v);
  return r;
}

Fel& Fel::operator+=(const Fel& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = field_->add(c_[i], o.c_[i]);
  return *this;
}

Fel& Fel::operator-=(const Fel& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = field_->sub(c_[i], o.c_[i]);
  return *this;
}

Fel& Fel::operator*=(const Fel& o) {
  check_same(o);
  c_ = field_->mul_elems(c_, o.c_);
  return *this;
}

Fel& Fel::operator/=(const Fel& o) {
  check_same(o);
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  c_ = field_->mul_elems(c_, field_->inv_elem(o.c_));
  return *this;
}

Fel Fel::inv() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return Fel(field_, field_->inv_elem(c_));
}

Fel Fel::pow(u64 e) const {
  Fel r = one(field_);
  Fel b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Fel Fel::frobenius() const { return pow(field_->characteristic()); }

Fel Fel::pth_root() const {
  // Frobenius has order k on F_{p^k}, so its inverse is the (k-1)-fold iterate.
  Fel r = *this;
  for (unsigned i = 1; i < field_->degree(); ++i) r = r.frobenius();
  return r;
}

Fel Fel::embed(const Field& target) const {
  if (field_ == target || same_field(field_, target)) return Fel(target, c_);
  if (field_->characteristic() != target->characteristic() || !in_prime_field())
    throw Error(ErrorCode::ContextMismatch,
                "cannot embed element of " + field_->describe() + " into " + target->describe());
  return from_residue(target, c_[0]);
}

bool operator==(const Fel& a, const Fel& b) noexcept {
  if (a.c_.size() != b.c_.size()) return false;
  if (a.field_ && b.field_ && a.field_->characteristic() != b.field_->characteristic()) return false;
  return std::equal(a.c_.begin(), a.c_.end(), b.c_.begin());
}

bool operator<(const Fel& a, const Fel& b) noexcept {
  // compare from the highest coefficient so prime-field values order numerically
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
  for (std::size_t i = a.c_.size(); i-- > 0;) {
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  }
  return false;
}

std::string Fel::to_string() const {
  if (c_.size() <= 1) return std::to_string(residue());
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? " " : "") << c_[i];
  os << "]";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Fel& a) { return os << a.to_string(); }

Fel fel_arith(const Fel& a, const Fel& b, FelOp op, u64 exponent) {
  switch (op) {
    case FelOp::Add: return a + b;
    case FelOp::Sub: return a - b;
    case FelOp::Mul: return a * b;
    case FelOp::Div: return a / b;
    case FelOp::Inv: return a.inv();
    case FelOp::Pow: return a.pow(exponent);
  }
  throw Error(ErrorCode::Unsupported, "unknown operation");
}

}  // namespace cuspcodes
