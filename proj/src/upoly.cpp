#include "cuspcodes/upoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cuspcodes/rng.hpp"

namespace cuspcodes {

UPoly::UPoly(Field field, std::vector<Fel> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  for (auto& c : c_) c = c.embed(field_);
  normalize();
}

UPoly UPoly::constant(const Fel& c) { return UPoly(c.field(), {c}); }

UPoly UPoly::x(const Field& f) { return UPoly(f, {Fel::zero(f), Fel::one(f)}); }

UPoly UPoly::from_ints(const Field& f, std::initializer_list<std::int64_t> coeffs) {
  std::vector<Fel> c;
  for (auto v : coeffs) c.push_back(Fel::from_int(f, v));
  return UPoly(f, std::move(c));
}

void UPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void UPoly::check_same(const UPoly& o) const {
  if (!same_field(field_, o.field_)) throw Error(ErrorCode::ContextMismatch, "univariate polynomials over different fields");
}

Fel UPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Fel::zero(field_); }

Fel UPoly::lc() const { return c_.empty() ? Fel::zero(field_) : c_.back(); }

UPoly& UPoly::operator+=(const UPoly& o) {
  check_same(o);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Fel::zero(field_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  check_same(o);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Fel::zero(field_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

UPoly& UPoly::operator*=(const UPoly& o) {
  check_same(o);
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Fel> r(c_.size() + o.c_.size() - 1, Fel::zero(field_));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  normalize();
  return *this;
}

UPoly UPoly::operator*(const Fel& s) const {
  UPoly r = *this;
  for (auto& c : r.c_) c *= s;
  r.normalize();
  return r;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  check_same(d);
  if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  UPoly rem = *this;
  if (rem.degree() < d.degree()) return {UPoly(field_), rem};
  std::vector<Fel> q(rem.c_.size() - d.c_.size() + 1, Fel::zero(field_));
  const Fel li = d.lc().inv();
  const std::size_t dd = d.c_.size() - 1;
  while (!rem.c_.empty() && rem.c_.size() >= d.c_.size()) {
    const Fel c = rem.c_.back() * li;
    const std::size_t shift = rem.c_.size() - 1 - dd;
    q[shift] = c;
    for (std::size_t i = 0; i < dd; ++i) rem.c_[shift + i] -= c * d.c_[i];
    rem.c_.pop_back();
    rem.normalize();
  }
  UPoly quo(field_);
  quo.c_ = std::move(q);
  quo.normalize();
  return {quo, rem};
}

UPoly UPoly::monic() const {
  if (c_.empty()) return *this;
  return *this * lc().inv();
}

UPoly UPoly::derivative() const {
  UPoly r(field_);
  if (c_.size() <= 1) return r;
  r.c_.reserve(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r.c_.push_back(c_[i] * Fel::from_residue(field_, i));
  r.normalize();
  return r;
}

Fel UPoly::eval(const Fel& x) const {
  Fel acc = Fel::zero(x.field());
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i].embed(x.field());
  return acc;
}

UPoly UPoly::pow(unsigned e) const {
  UPoly r = constant(Fel::one(field_));
  UPoly b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

UPoly UPoly::powmod(u64 e, const UPoly& m) const {
  UPoly r = constant(Fel::one(field_)) % m;
  UPoly b = *this % m;
  while (e) {
    if (e & 1) r = (r * b) % m;
    b = (b * b) % m;
    e >>= 1;
  }
  return r;
}

UPoly UPoly::frobenius_mod(const UPoly& m, unsigned times) const {
  UPoly r = *this % m;
  for (unsigned t = 0; t < times; ++t) r = r.powmod(field_->characteristic(), m);
  return r;
}

UPoly UPoly::embed(const Field& target) const {
  std::vector<Fel> c;
  c.reserve(c_.size());
  for (const auto& v : c_) c.push_back(v.embed(target));
  return UPoly(target, std::move(c));
}

bool operator==(const UPoly& a, const UPoly& b) {
  if (a.c_.size() != b.c_.size()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (!(a.c_[i] == b.c_[i])) return false;
  return true;
}

std::string UPoly::to_string(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool unit = c_[i].is_one();
    if (!unit || i == 0) os << c_[i].to_string();
    if (i > 0) os << (unit ? "" : "*") << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Fel up_resultant(const UPoly& f, const UPoly& g) {
  if (!same_field(f.field(), g.field())) throw Error(ErrorCode::ContextMismatch, "resultant over different fields");
  const Field& F = f.field();
  if (f.is_zero() || g.is_zero()) return Fel::zero(F);
  Fel acc = Fel::one(F);
  UPoly a = f, b = g;
  // invariant: Res(f, g) = acc * Res(a, b)
  for (;;) {
    const int n = a.degree(), m = b.degree();
    if (n == 0) return acc * a.lc().pow(static_cast<u64>(m));
    if (m == 0) return acc * b.lc().pow(static_cast<u64>(n));
    if (m >= n) {
      // Res(a, b) = lc(a)^(m - deg r) Res(a, r) with r = b mod a
      UPoly r = b % a;
      if (r.is_zero()) return Fel::zero(F);
      acc *= a.lc().pow(static_cast<u64>(m - r.degree()));
      b = std::move(r);
    } else {
      // Res(a, b) = (-1)^(nm) Res(b, a)
      if ((static_cast<long>(n) * m) % 2 == 1) acc = -acc;
      std::swap(a, b);
    }
  }
}

namespace {

// f(x) = g(x^p) -> g^(1/p)
UPoly pth_root_poly(const UPoly& f) {
  const u64 p = f.field()->characteristic();
  std::vector<Fel> c;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) c.push_back(f.coeffs()[i].pth_root());
  return UPoly(f.field(), std::move(c));
}

void sff(const UPoly& f, unsigned scale, std::map<unsigned, UPoly>& out) {
  if (f.degree() <= 0) return;
  auto record = [&](const UPoly& fac, unsigned mult) {
    if (fac.degree() <= 0) return;
    auto it = out.find(mult);
    if (it == out.end()) out.emplace(mult, fac.monic());
    else it->second = (it->second * fac).monic();
  };
  const UPoly d = f.derivative();
  if (d.is_zero()) {
    sff(pth_root_poly(f), scale * static_cast<unsigned>(f.field()->characteristic()), out);
    return;
  }
  UPoly c = gcd(f, d);
  UPoly w = f / c;
  unsigned i = 1;
  while (w.degree() > 0) {
    UPoly y = gcd(w, c);
    UPoly fac = w / y;
    record(fac, i * scale);
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) sff(pth_root_poly(c), scale * static_cast<unsigned>(f.field()->characteristic()), out);
}

UPoly random_poly(const Field& F, int deg_below, Rng& rng) {
  std::vector<Fel> c;
  const u64 p = F->characteristic();
  std::uniform_int_distribution<u64> dist(0, p - 1);
  for (int i = 0; i < deg_below; ++i) {
    Residues r(F->degree(), 0);
    for (auto& v : r) v = dist(rng);
    c.emplace_back(F, std::move(r));
  }
  return UPoly(F, std::move(c));
}

// Splits a monic squarefree product of irreducibles of equal degree d.
void equal_degree_split(const UPoly& f, unsigned d, Rng& rng, std::vector<UPoly>& out) {
  const int n = f.degree();
  if (n <= static_cast<int>(d)) {
    out.push_back(f.monic());
    return;
  }
  const Field& F = f.field();
  const u64 p = F->characteristic();
  const unsigned frob_count = F->degree() * d;  // q^d = p^(k d)
  for (;;) {
    UPoly a = random_poly(F, n, rng);
    if (a.degree() <= 0) continue;
    // a^((q^d - 1)/2) = (a^(1 + p + ... + p^(kd-1)))^((p - 1)/2)
    UPoly norm = a % f;
    UPoly cur = norm;
    for (unsigned i = 1; i < frob_count; ++i) {
      cur = cur.frobenius_mod(f);
      norm = (norm * cur) % f;
    }
    UPoly b = norm.powmod((p - 1) / 2, f);
    UPoly g = gcd(b - UPoly::constant(Fel::one(F)), f);
    if (g.degree() > 0 && g.degree() < n) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(f / g, d, rng, out);
      return;
    }
  }
}

bool poly_less(const UPoly& a, const UPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    if (!(a.coeffs()[i] == b.coeffs()[i])) return a.coeffs()[i] < b.coeffs()[i];
  }
  return false;
}

}  // namespace

std::vector<SquarefreeFactor> up_squarefree(const UPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::DivisionByZero, "squarefree decomposition of zero");
  std::map<unsigned, UPoly> parts;
  sff(f.monic(), 1, parts);
  std::vector<SquarefreeFactor> out;
  for (auto& [m, fac] : parts) out.push_back({fac, m});
  return out;
}

UPoly squarefree_part(const UPoly& f) {
  if (f.degree() <= 0) return UPoly::constant(Fel::one(f.field()));
  UPoly r = UPoly::constant(Fel::one(f.field()));
  for (const auto& sf : up_squarefree(f)) r *= sf.factor;
  return r.monic();
}

std::vector<UPoly> irreducible_factors(const UPoly& squarefree, u64 seed) {
  std::vector<UPoly> out;
  if (squarefree.degree() <= 0) return out;
  const Field& F = squarefree.field();
  Rng rng(derive_seed(seed, {0x1dd, static_cast<u64>(squarefree.degree())}));
  UPoly f = squarefree.monic();
  const UPoly x = UPoly::x(F);
  UPoly xq = x % f;
  const unsigned k = F->degree();
  // distinct-degree factorization
  for (unsigned d = 1; f.degree() >= 2 * static_cast<int>(d); ++d) {
    xq = xq.frobenius_mod(f, k);
    UPoly g = gcd(xq - x, f);
    if (g.degree() > 0) {
      equal_degree_split(g, d, rng, out);
      f = f / g;
      xq = xq % f;
    }
  }
  if (f.degree() > 0) out.push_back(f.monic());
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

RootsResult up_roots(const UPoly& f, unsigned ext_budget, u64 seed) {
  if (f.is_zero()) throw Error(ErrorCode::DivisionByZero, "roots of the zero polynomial");
  RootsResult res;
  const Field& F = f.field();
  for (const auto& g : irreducible_factors(squarefree_part(f), seed)) {
    const auto d = static_cast<unsigned>(g.degree());
    if (d > ext_budget) {
      res.unresolved.push_back(g);
      continue;
    }
    if (d == 1) {
      res.roots.push_back({-g.coeff(0), 1});
      continue;
    }
    if (!F->is_prime_field())
      throw Error(ErrorCode::Unsupported, "roots in extensions of a non-prime coefficient field");
    std::vector<u64> mod;
    for (const auto& c : g.coeffs()) mod.push_back(c.residue());
    const Field K = FieldCtx::with_modulus(F->characteristic(), std::move(mod));
    Fel r = Fel::generator(K);
    for (unsigned i = 0; i < d; ++i) {
      res.roots.push_back({r, d});
      r = r.frobenius();
    }
  }
  return res;
}

std::vector<Root> up_roots_strict(const UPoly& f, unsigned ext_budget, u64 seed) {
  auto r = up_roots(f, ext_budget, seed);
  if (r.budget_exceeded()) {
    std::string msg = "irreducible factor(s) beyond degree " + std::to_string(ext_budget) + ":";
    for (const auto& g : r.unresolved) msg += " " + g.to_string();
    throw Error(ErrorCode::BudgetExceeded, msg);
  }
  return std::move(r.roots);
}

}  // namespace cuspcodes
