#include "cuspcodes/mpoly.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "cuspcodes/rng.hpp"

namespace cuspcodes {

unsigned total_degree(const Exponent& e) noexcept {
  return static_cast<unsigned>(e[0]) + e[1] + e[2] + e[3];
}

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const noexcept {
  const unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;  // lexicographic with x0 most significant
}

MPoly MPoly::constant(const Fel& c) {
  MPoly r(c.field());
  r.add_term(Exponent{0, 0, 0, 0}, c);
  return r;
}

MPoly MPoly::constant(const Field& f, std::int64_t c) { return constant(Fel::from_int(f, c)); }

MPoly MPoly::monomial(const Fel& c, const Exponent& e) {
  MPoly r(c.field());
  r.add_term(e, c);
  return r;
}

MPoly MPoly::variable(const Field& f, int i) {
  Exponent e{0, 0, 0, 0};
  e[static_cast<std::size_t>(i)] = 1;
  return monomial(Fel::one(f), e);
}

int MPoly::total_degree() const noexcept {
  if (terms_.empty()) return -1;
  return static_cast<int>(cuspcodes::total_degree(terms_.begin()->first));
}

bool MPoly::is_homogeneous() const noexcept {
  if (terms_.empty()) return true;
  const unsigned d = cuspcodes::total_degree(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return cuspcodes::total_degree(t.first) == d; });
}

int MPoly::degree_in(int var) const noexcept {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[static_cast<std::size_t>(var)]));
  return d;
}

const std::pair<const Exponent, Fel>& MPoly::leading_term() const {
  if (terms_.empty()) throw Error(ErrorCode::DivisionByZero, "leading term of zero polynomial");
  return *terms_.begin();
}

Fel MPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Fel::zero(field_) : it->second;
}

void MPoly::add_term(const Exponent& e, const Fel& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MPoly::check_same(const MPoly& o) const {
  if (!same_field(field_, o.field_)) throw Error(ErrorCode::ContextMismatch, "polynomials over different fields");
}

MPoly& MPoly::operator+=(const MPoly& o) {
  check_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  check_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.check_same(b);
  MPoly r(a.field_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e;
      for (int i = 0; i < kVars; ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MPoly MPoly::operator*(const Fel& s) const {
  MPoly r(field_);
  if (s.is_zero()) return r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
  return r;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly r = constant(Fel::one(field_));
  MPoly b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first || !(ia->second == ib->second)) return false;
  }
  return true;
}

Fel MPoly::eval(const Point4& pt) const {
  const Field& K = pt[0].field();
  for (const auto& x : pt) {
    if (!x.valid() || !same_field(x.field(), K)) throw Error(ErrorCode::ContextMismatch, "point coordinates over different fields");
  }
  if (field_ && field_->characteristic() != K->characteristic())
    throw Error(ErrorCode::ContextMismatch, "point and polynomial have different characteristic");
  std::array<std::vector<Fel>, kVars> powers;
  for (int i = 0; i < kVars; ++i) {
    const int d = degree_in(i);
    powers[i].reserve(static_cast<std::size_t>(std::max(d, 0)) + 1);
    powers[i].push_back(Fel::one(K));
    for (int k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * pt[i]);
  }
  Fel acc = Fel::zero(K);
  for (const auto& [e, c] : terms_) {
    Fel t = c.embed(K);
    for (int i = 0; i < kVars; ++i)
      if (e[i]) t *= powers[i][e[i]];
    acc += t;
  }
  return acc;
}

MPoly MPoly::diff(int var) const {
  MPoly r(field_);
  for (const auto& [e, c] : terms_) {
    const auto k = e[static_cast<std::size_t>(var)];
    if (k == 0) continue;
    Exponent ne = e;
    ne[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(k - 1);
    r.add_term(ne, c * Fel::from_residue(field_, k));
  }
  return r;
}

std::vector<MPoly> MPoly::coefficients_in(int var) const {
  const int d = degree_in(var);
  std::vector<MPoly> out(static_cast<std::size_t>(std::max(d + 1, 0)), MPoly(field_));
  for (const auto& [e, c] : terms_) {
    Exponent ne = e;
    const auto k = ne[static_cast<std::size_t>(var)];
    ne[static_cast<std::size_t>(var)] = 0;
    out[k].terms_.emplace(ne, c);
  }
  return out;
}

MPoly MPoly::from_coefficients_in(int var, const std::vector<MPoly>& coeffs, const Field& f) {
  MPoly r(f);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    for (const auto& [e, c] : coeffs[k].terms_) {
      Exponent ne = e;
      ne[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(ne[static_cast<std::size_t>(var)] + k);
      r.add_term(ne, c);
    }
  }
  return r;
}

MPoly MPoly::substitute(int var, const Fel& value) const {
  MPoly r(field_);
  const Fel v = value.embed(field_);
  std::vector<Fel> powers{Fel::one(field_)};
  for (const auto& [e, c] : terms_) {
    const auto k = e[static_cast<std::size_t>(var)];
    while (powers.size() <= k) powers.push_back(powers.back() * v);
    Exponent ne = e;
    ne[static_cast<std::size_t>(var)] = 0;
    r.add_term(ne, c * powers[k]);
  }
  return r;
}

MPoly MPoly::linear_change(const std::array<std::array<Fel, kVars>, kVars>& m) const {
  std::array<MPoly, kVars> forms;
  for (int i = 0; i < kVars; ++i) {
    forms[i] = MPoly(field_);
    for (int j = 0; j < kVars; ++j) {
      Exponent e{0, 0, 0, 0};
      e[j] = 1;
      forms[i].add_term(e, m[i][j].embed(field_));
    }
  }
  std::array<std::vector<MPoly>, kVars> powers;
  for (int i = 0; i < kVars; ++i) {
    powers[i].push_back(constant(Fel::one(field_)));
    for (int k = 1; k <= degree_in(i); ++k) powers[i].push_back(powers[i].back() * forms[i]);
  }
  MPoly r(field_);
  for (const auto& [e, c] : terms_) {
    MPoly t = constant(c);
    for (int i = 0; i < kVars; ++i)
      if (e[i]) t = t * powers[i][e[i]];
    r += t;
  }
  return r;
}

UPoly MPoly::restrict_to_var(int var, const Point4& pt) const {
  Field K;
  for (int i = 0; i < kVars; ++i)
    if (i != var && pt[i].valid()) K = pt[i].field();
  if (!K) K = field_;
  std::array<std::vector<Fel>, kVars> powers;
  for (int i = 0; i < kVars; ++i) {
    if (i == var) continue;
    powers[i].push_back(Fel::one(K));
    for (int k = 1; k <= degree_in(i); ++k) powers[i].push_back(powers[i].back() * pt[i]);
  }
  std::vector<Fel> coeffs(static_cast<std::size_t>(std::max(degree_in(var), 0)) + 1, Fel::zero(K));
  for (const auto& [e, c] : terms_) {
    Fel t = c.embed(K);
    for (int i = 0; i < kVars; ++i)
      if (i != var && e[i]) t *= powers[i][e[i]];
    coeffs[e[static_cast<std::size_t>(var)]] += t;
  }
  return UPoly(K, std::move(coeffs));
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    bool wrote = false;
    if (!c.is_one() || cuspcodes::total_degree(e) == 0) {
      os << c.to_string();
      wrote = true;
    }
    for (int i = 0; i < kVars; ++i) {
      if (!e[i]) continue;
      os << (wrote ? "*" : "") << "x" << i;
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

MPoly mp_arith(const MPoly& a, const MPoly& b, MPolyOp op) {
  switch (op) {
    case MPolyOp::Add: return a + b;
    case MPolyOp::Sub: return a - b;
    case MPolyOp::Mul: return a * b;
  }
  throw Error(ErrorCode::Unsupported, "unknown polynomial operation");
}

Fel mp_eval(const MPoly& f, const Point4& pt) { return f.eval(pt); }

MPoly mp_diff(const MPoly& f, int var) { return f.diff(var); }

// ---------------------------------------------------------------------------

MPoly mp_parse(std::string_view text, const Field& field, bool require_homogeneous) {
  MPoly out(field);
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    ++line_no;
    pos = eol + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::array<std::int64_t, 5> vals{};
    int count = 0;
    std::size_t i = 0;
    while (i < line.size()) {
      if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
        ++i;
        continue;
      }
      const std::size_t col = i + 1;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
      const std::string_view tok = line.substr(i, j - i);
      if (count == 5)
        throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line_no) + ", column " + std::to_string(col) +
                                                ": expected 5 integers per term");
      std::int64_t v = 0;
      const char* first = tok.data();
      if (!tok.empty() && tok[0] == '+') ++first;
      auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size() || first == tok.data() + tok.size())
        throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line_no) + ", column " + std::to_string(col) +
                                                ": invalid integer '" + std::string(tok) + "'");
      if (count > 0 && (v < 0 || v > 0xffff))
        throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line_no) + ", column " + std::to_string(col) +
                                                ": exponent out of range");
      vals[static_cast<std::size_t>(count++)] = v;
      i = j;
    }
    if (count == 0) {
      if (eol == text.size()) break;
      continue;
    }
    if (count != 5)
      throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line_no) + ", column " +
                                              std::to_string(line.size() + 1) + ": expected 5 integers per term");
    Exponent e{static_cast<std::uint16_t>(vals[1]), static_cast<std::uint16_t>(vals[2]),
               static_cast<std::uint16_t>(vals[3]), static_cast<std::uint16_t>(vals[4])};
    out.add_term(e, Fel::from_int(field, vals[0]));
    if (eol == text.size()) break;
  }
  if (require_homogeneous && !out.is_homogeneous())
    throw Error(ErrorCode::MixedDegreeError, "terms of different total degree");
  return out;
}

std::string mp_format(const MPoly& f) {
  std::ostringstream os;
  for (const auto& [e, c] : f.terms()) {
    if (!c.in_prime_field()) throw Error(ErrorCode::Unsupported, "text format holds prime-field coefficients only");
    os << c.residue() << ' ' << e[0] << ' ' << e[1] << ' ' << e[2] << ' ' << e[3] << '\n';
  }
  return os.str();
}

MPoly mp_divide_exact(const MPoly& num, const MPoly& den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "exact division by zero polynomial");
  if (!same_field(num.field(), den.field())) throw Error(ErrorCode::ContextMismatch, "division over different fields");
  const auto& [lt_e, lt_c] = den.leading_term();
  const Fel lc_inv = lt_c.inv();
  MPoly quo(num.field());
  MPoly rem = num;
  while (!rem.is_zero()) {
    const auto [e, c] = rem.leading_term();
    Exponent q;
    for (int i = 0; i < kVars; ++i) {
      if (e[i] < lt_e[i])
        throw Error(ErrorCode::NotDivisible, "nonzero remainder with leading term " + MPoly::monomial(c, e).to_string());
      q[i] = static_cast<std::uint16_t>(e[i] - lt_e[i]);
    }
    const Fel qc = c * lc_inv;
    quo.add_term(q, qc);
    for (const auto& [de, dc] : den.terms()) {
      Exponent te;
      for (int i = 0; i < kVars; ++i) te[i] = static_cast<std::uint16_t>(de[i] + q[i]);
      rem.add_term(te, -(dc * qc));
    }
  }
  return quo;
}

namespace {

// Polynomial in one variable with MPoly coefficients, low degree first.
struct RPoly {
  std::vector<MPoly> c;

  int deg() const {
    for (std::size_t i = c.size(); i-- > 0;)
      if (!c[i].is_zero()) return static_cast<int>(i);
    return -1;
  }
  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  const MPoly& lc() const { return c.back(); }
};

RPoly prem(const RPoly& a, const RPoly& b) {
  const int db = b.deg();
  RPoly r = a;
  r.trim();
  int e = r.deg() - db + 1;
  const MPoly& l = b.lc();
  while (r.deg() >= db) {
    const int shift = r.deg() - db;
    const MPoly lr = r.lc();
    for (auto& x : r.c) x = x * l;
    for (int i = 0; i <= db; ++i) r.c[static_cast<std::size_t>(shift + i)] -= lr * b.c[static_cast<std::size_t>(i)];
    r.trim();
    --e;
  }
  if (e > 0) {
    const MPoly le = l.pow(static_cast<unsigned>(e));
    for (auto& x : r.c) x = x * le;
  }
  return r;
}

}  // namespace

MPoly mp_resultant(const MPoly& a_in, const MPoly& b_in, int var) {
  if (!same_field(a_in.field(), b_in.field())) throw Error(ErrorCode::ContextMismatch, "resultant over different fields");
  const Field& F = a_in.field();
  if (a_in.is_zero() || b_in.is_zero()) return MPoly(F);
  RPoly A{a_in.coefficients_in(var)}, B{b_in.coefficients_in(var)};
  A.trim();
  B.trim();
  Fel s = Fel::one(F);
  if (B.deg() > A.deg()) {
    if ((A.deg() * B.deg()) % 2 == 1) s = -s;
    std::swap(A, B);
  }
  if (B.deg() == 0) return B.lc().pow(static_cast<unsigned>(A.deg())) * s;

  MPoly g = MPoly::constant(Fel::one(F));
  MPoly h = g;
  for (;;) {
    const int delta = A.deg() - B.deg();
    if (A.deg() % 2 == 1 && B.deg() % 2 == 1) s = -s;
    RPoly R = prem(A, B);
    A = std::move(B);
    const MPoly div = g * h.pow(static_cast<unsigned>(delta));
    for (auto& x : R.c) x = mp_divide_exact(x, div);
    B = std::move(R);
    g = A.lc();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = mp_divide_exact(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
    if (B.deg() < 0) return MPoly(F);
    if (B.deg() == 0) break;
  }
  const int da = A.deg();
  MPoly res = B.lc().pow(static_cast<unsigned>(da));
  if (da > 1) res = mp_divide_exact(res, h.pow(static_cast<unsigned>(da - 1)));
  return res * s;
}

MPoly random_homogeneous(const Field& f, unsigned degree, std::uint64_t seed) {
  Rng rng(seed);
  std::uniform_int_distribution<u64> dist(0, f->characteristic() - 1);
  MPoly r(f);
  for (unsigned a = 0; a <= degree; ++a)
    for (unsigned b = 0; a + b <= degree; ++b)
      for (unsigned c = 0; a + b + c <= degree; ++c) {
        const unsigned d = degree - a - b - c;
        Residues res(f->degree(), 0);
        for (auto& v : res) v = dist(rng);
        r.add_term(Exponent{static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b),
                            static_cast<std::uint16_t>(c), static_cast<std::uint16_t>(d)},
                   Fel(f, std::move(res)));
      }
  return r;
}

// ---------------------------------------------------------------------------

std::string ProjPoint::to_string() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < kVars; ++i) os << (i ? ":" : "") << coords[i].to_string();
  os << ")";
  return os.str();
}

ProjPoint normalize_point(const Point4& pt, unsigned degree) {
  ProjPoint out{pt, degree};
  for (int i = 0; i < kVars; ++i) {
    if (pt[i].is_zero()) continue;
    const Fel s = pt[i].inv();
    for (int j = 0; j < kVars; ++j) out.coords[j] = pt[j] * s;
    return out;
  }
  throw Error(ErrorCode::DivisionByZero, "the zero vector is not a projective point");
}

bool point_less(const ProjPoint& a, const ProjPoint& b) {
  if (a.degree != b.degree) return a.degree < b.degree;
  const auto& ma = a.coords[0].ctx().modulus();
  const auto& mb = b.coords[0].ctx().modulus();
  if (ma != mb) return ma < mb;
  for (int i = 0; i < kVars; ++i) {
    if (!(a.coords[i] == b.coords[i])) return a.coords[i] < b.coords[i];
  }
  return false;
}

bool point_equal(const ProjPoint& a, const ProjPoint& b) { return !point_less(a, b) && !point_less(b, a); }

}  // namespace cuspcodes
