#pragma once

// Randomized property suites shared by the unit tests and the acceptance
// runner. Every suite draws its cases from a hand-rolled generator seeded by
// the caller.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cuspcodes/construct.hpp"
#include "cuspcodes/cuspcode.hpp"
#include "cuspcodes/ffield.hpp"
#include "cuspcodes/mpoly.hpp"
#include "cuspcodes/upoly.hpp"
#include "cuspcodes/wedge.hpp"

namespace props {

using namespace cuspcodes;

struct SuiteResult {
  std::string name;
  unsigned cases = 0;
  unsigned failures = 0;
  bool ok() const { return cases >= 100 && failures == 0; }
};

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng_); }
  Fel element(const Field& f) {
    Residues r(f->degree(), 0);
    for (auto& v : r) v = below(f->characteristic());
    return Fel(f, std::move(r));
  }
  Fel nonzero(const Field& f) {
    for (;;) {
      Fel e = element(f);
      if (!e.is_zero()) return e;
    }
  }
  UPoly upoly(const Field& f, unsigned deg) {
    std::vector<Fel> c;
    for (unsigned k = 0; k < deg; ++k) c.push_back(element(f));
    c.push_back(nonzero(f));
    return UPoly(f, c);
  }
  MPoly homogeneous(const Field& f, unsigned deg) {
    MPoly r(f);
    const unsigned terms = 1 + static_cast<unsigned>(below(6));
    for (unsigned t = 0; t < terms; ++t) {
      Exponent e{0, 0, 0, 0};
      unsigned left = deg;
      for (int v = 0; v < 3; ++v) {
        const auto k = static_cast<std::uint16_t>(below(left + 1));
        e[v] = k;
        left -= k;
      }
      e[3] = static_cast<std::uint16_t>(left);
      r.add_term(e, nonzero(f));
    }
    return r;
  }
  WedgeVec wedge() {
    WedgeVec v{};
    for (auto& x : v) x = static_cast<Trit>(below(3));
    return v;
  }
  Perm6 perm() {
    Perm6 s{0, 1, 2, 3, 4, 5};
    for (int i = 5; i > 0; --i) std::swap(s[i], s[below(static_cast<std::uint64_t>(i) + 1)]);
    return s;
  }

 private:
  std::mt19937_64 rng_;
};

inline SuiteResult field_axioms(std::uint64_t seed, unsigned n = 200) {
  SuiteResult r{"field axioms and Frobenius"};
  Gen g(seed);
  const std::vector<Field> fields{FieldCtx::make(31), FieldCtx::make(7, 3), FieldCtx::make(13, 2), FieldCtx::make(5, 4)};
  for (unsigned k = 0; k < n; ++k, ++r.cases) {
    const Field& f = fields[k % fields.size()];
    const Fel a = g.element(f), b = g.element(f), c = g.element(f), z = g.nonzero(f);
    const u64 p = f->characteristic();
    u64 q = 1;
    for (unsigned i = 0; i < f->degree(); ++i) q *= p;
    bool ok = (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
              a + b == b + a && a * b == b * a && z * z.inv() == Fel::one(f) && a - a == Fel::zero(f) &&
              (a + b).frobenius() == a.frobenius() + b.frobenius() &&
              (a * b).frobenius() == a.frobenius() * b.frobenius() && a.frobenius() == a.pow(p) && a.pow(q) == a &&
              a.frobenius().pth_root() == a;
    r.failures += !ok;
  }
  return r;
}

inline SuiteResult euler_identity(std::uint64_t seed, unsigned n = 150) {
  SuiteResult r{"Euler identity"};
  Gen g(seed);
  const Field f = FieldCtx::make(101);
  for (unsigned k = 0; k < n; ++k, ++r.cases) {
    const unsigned d = 1 + static_cast<unsigned>(g.below(8));
    const MPoly h = g.homogeneous(f, d);
    MPoly lhs(f);
    for (int v = 0; v < kVars; ++v) lhs += MPoly::variable(f, v) * h.diff(v);
    r.failures += !(lhs == h * Fel::from_int(f, d));
  }
  return r;
}

inline SuiteResult resultant_multiplicativity(std::uint64_t seed, unsigned n = 150) {
  SuiteResult r{"resultant multiplicativity"};
  Gen g(seed);
  const std::vector<Field> fields{FieldCtx::make(31), FieldCtx::make(11, 2)};
  for (unsigned k = 0; k < n; ++k, ++r.cases) {
    const Field& f = fields[k % 2];
    const UPoly a = g.upoly(f, 1 + static_cast<unsigned>(g.below(5)));
    const UPoly b = g.upoly(f, 1 + static_cast<unsigned>(g.below(5)));
    const UPoly c = g.upoly(f, static_cast<unsigned>(g.below(5)));
    r.failures += !(up_resultant(a, b * c) == up_resultant(a, b) * up_resultant(a, c));
  }
  return r;
}

inline SuiteResult squarefree_reassembly(std::uint64_t seed, unsigned n = 150) {
  SuiteResult r{"squarefree reassembly"};
  Gen g(seed);
  const std::vector<Field> fields{FieldCtx::make(5), FieldCtx::make(31), FieldCtx::make(7, 2)};
  for (unsigned k = 0; k < n; ++k, ++r.cases) {
    const Field& f = fields[k % fields.size()];
    UPoly prod = UPoly::constant(g.nonzero(f));
    const unsigned parts = 1 + static_cast<unsigned>(g.below(3));
    for (unsigned i = 0; i < parts; ++i) {
      // Exponents up to 2p exercise p-th powers.
      const unsigned e = 1 + static_cast<unsigned>(g.below(2 * f->characteristic()));
      prod *= g.upoly(f, 1 + static_cast<unsigned>(g.below(3))).pow(e);
    }
    UPoly back = UPoly::constant(prod.lc());
    bool ok = true;
    const auto sf = up_squarefree(prod);
    for (std::size_t i = 0; i < sf.size(); ++i) {
      back *= sf[i].factor.pow(sf[i].multiplicity);
      ok = ok && gcd(sf[i].factor, sf[i].factor.derivative()).degree() == 0;
      for (std::size_t j = i + 1; j < sf.size(); ++j) ok = ok && gcd(sf[i].factor, sf[j].factor).degree() == 0;
    }
    r.failures += !(ok && back == prod);
  }
  return r;
}

inline SuiteResult exact_division(std::uint64_t seed, unsigned n = 120) {
  SuiteResult r{"exact-division round trip"};
  Gen g(seed);
  const Field f = FieldCtx::make(31);
  for (unsigned k = 0; k < n; ++k, ++r.cases) {
    const MPoly a = g.homogeneous(f, 1 + static_cast<unsigned>(g.below(4)));
    const MPoly b = g.homogeneous(f, 1 + static_cast<unsigned>(g.below(4)));
    r.failures += !(mp_divide_exact(a * b, b) == a);
  }
  return r;
}

inline SuiteResult proper_weights_mod3(std::uint64_t seed, unsigned n = 300) {
  SuiteResult r{"proper codeword weights divisible by 3"};
  Gen g(seed);
  std::vector<std::pair<PartitionType, unsigned>> types;
  for (unsigned d : {6u, 9u})
    for (const auto& t : tabulated_direct_types(d)) types.emplace_back(t, d);
  for (unsigned k = 0; k < n; ++k, ++r.cases) {
    const auto& [t, d] = types[g.below(types.size())];
    const TCode proper = proper_subcode(extended_code(t, d));
    TWord w;
    w.cusps.assign(proper.layout.length(), 0);
    for (const auto& b : proper.basis()) w = w + static_cast<Trit>(g.below(3)) * b;
    r.failures += !(w.weight() % 3 == 0 && proper.contains(w));
  }
  return r;
}

inline SuiteResult sigma_group_action(std::uint64_t seed, unsigned n = 300) {
  SuiteResult r{"S6 action on the exterior square"};
  Gen g(seed);
  const Perm6 id{0, 1, 2, 3, 4, 5};
  for (unsigned k = 0; k < n; ++k, ++r.cases) {
    const WedgeVec v = g.wedge(), w = g.wedge();
    const Perm6 s = g.perm(), t = g.perm();
    const bool ok = sigma_on_wedge(s, sigma_on_wedge(t, v)) == sigma_on_wedge(compose(s, t), v) &&
                    sigma_on_wedge(id, v) == v && wedge_weight(sigma_on_wedge(s, v)) == wedge_weight(v) &&
                    sigma_on_wedge(s, wedge_add(v, w)) == wedge_add(sigma_on_wedge(s, v), sigma_on_wedge(s, w));
    r.failures += !ok;
  }
  return r;
}

inline SuiteResult transposition_support(std::uint64_t seed, unsigned n = 300) {
  SuiteResult r{"transposition difference support at most 8"};
  Gen g(seed);
  for (unsigned k = 0; k < n; ++k, ++r.cases) {
    WedgeVec v = g.wedge();
    const int j = 1 + static_cast<int>(g.below(5));
    const int i = static_cast<int>(g.below(static_cast<std::uint64_t>(j)));
    v[wedge_index(i, j)] = 0;
    const WedgeVec d = wedge_add(v, wedge_scale(2, sigma_on_wedge(transposition(i, j), v)));
    bool ok = wedge_weight(d) <= 8 && d[wedge_index(i, j)] == 0;
    // Only coordinates touching i or j can move.
    for (int b = 1; b < 6; ++b)
      for (int a = 0; a < b; ++a)
        if (a != i && a != j && b != i && b != j) ok = ok && d[wedge_index(a, b)] == 0;
    r.failures += !ok;
  }
  return r;
}

inline std::vector<SuiteResult> all_suites(std::uint64_t seed) {
  return {field_axioms(seed + 1),       euler_identity(seed + 2),     resultant_multiplicativity(seed + 3),
          squarefree_reassembly(seed + 4), exact_division(seed + 5),  proper_weights_mod3(seed + 6),
          sigma_group_action(seed + 7), transposition_support(seed + 8)};
}

}  // namespace props
