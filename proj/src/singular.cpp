#include "cuspcodes/singular.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "cuspcodes/eliminate.hpp"
#include "cuspcodes/linalg.hpp"
#include "cuspcodes/rng.hpp"

namespace cuspcodes {

std::string_view classification_name(Classification c) {
  switch (c) {
    case Classification::A1: return "A1";
    case Classification::A2: return "A2";
    case Classification::AkOrWorse: return "AkOrWorse";
    case Classification::Unclassified: return "Unclassified";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// scans

namespace {

struct FastPoly {
  std::vector<u64> coef;
  std::vector<Exponent> exps;
};

FastPoly to_fast(const MPoly& f) {
  FastPoly out;
  for (const auto& [e, c] : f.terms()) {
    out.coef.push_back(c.residue());
    out.exps.push_back(e);
  }
  return out;
}

// Normalized representative number `idx` of P^3 over a field with q elements:
// (1,a,b,c) first, then (0,1,b,c), (0,0,1,c), (0,0,0,1).
std::array<u64, 4> point_digits(u64 idx, u64 q, std::array<bool, 4>& zero) {
  const u64 q2 = q * q, q3 = q2 * q;
  zero = {false, false, false, false};
  if (idx < q3) return {1, idx / q2, (idx / q) % q, idx % q};
  idx -= q3;
  zero[0] = true;
  if (idx < q2) return {0, 1, idx / q, idx % q};
  idx -= q2;
  zero[1] = true;
  if (idx < q) return {0, 0, 1, idx};
  zero[2] = true;
  return {0, 0, 0, 1};
}

template <class Fn>
void parallel_ranges(u64 total, unsigned workers, Fn&& fn) {
  workers = std::max(1u, workers);
  if (workers == 1 || total < 4096) {
    fn(0, total, 0u);
    return;
  }
  std::vector<std::thread> pool;
  const u64 chunk = (total + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const u64 lo = std::min(total, w * chunk), hi = std::min(total, lo + chunk);
    pool.emplace_back([&, lo, hi, w] { fn(lo, hi, w); });
  }
  for (auto& t : pool) t.join();
}

void sort_points(std::vector<SingularPoint>& pts) {
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return point_less(a.point, b.point); });
}

}  // namespace

std::vector<SingularPoint> scan_rational_singular(const MPoly& f, unsigned workers) {
  const Field& F = f.field();
  if (!F->is_prime_field()) return scan_singular_over(f, F, workers);
  const u64 p = F->characteristic();
  const int d = f.total_degree();
  if (d > 0 && static_cast<u64>(d) % p == 0)
    throw Error(ErrorCode::CharacteristicDividesDegree, "p=" + std::to_string(p) + " divides degree " + std::to_string(d));
  if (f.is_zero()) throw Error(ErrorCode::NotSingular, "zero polynomial");
  std::array<FastPoly, kVars> partials;
  for (int i = 0; i < kVars; ++i) partials[i] = to_fast(f.diff(i));
  const u64 total = p * p * p + p * p + p + 1;
  const int maxdeg = std::max(d, 1);

  std::vector<std::vector<SingularPoint>> found(std::max(1u, workers));
  parallel_ranges(total, workers, [&](u64 lo, u64 hi, unsigned w) {
    std::vector<u64> pw(static_cast<std::size_t>(kVars * (maxdeg + 1)));
    std::array<bool, 4> zero{};
    for (u64 idx = lo; idx < hi; ++idx) {
      const auto x = point_digits(idx, p, zero);
      for (int v = 0; v < kVars; ++v) {
        u64* row = &pw[static_cast<std::size_t>(v * (maxdeg + 1))];
        row[0] = 1;
        for (int k = 1; k <= maxdeg; ++k) row[k] = F->mul(row[k - 1], x[v]);
      }
      bool singular = true;
      for (int i = 0; i < kVars && singular; ++i) {
        const auto& fp = partials[i];
        u64 acc = 0;
        for (std::size_t t = 0; t < fp.coef.size(); ++t) {
          const auto& e = fp.exps[t];
          u64 m = fp.coef[t];
          for (int v = 0; v < kVars; ++v)
            if (e[v]) m = F->mul(m, pw[static_cast<std::size_t>(v * (maxdeg + 1) + e[v])]);
          acc = F->add(acc, m);
        }
        singular = acc == 0;
      }
      if (!singular) continue;
      SingularPoint sp;
      for (int v = 0; v < kVars; ++v) sp.point.coords[v] = Fel::from_residue(F, x[v]);
      sp.point.degree = 1;
      found[w].push_back(sp);
    }
  });
  std::vector<SingularPoint> out;
  for (auto& v : found) out.insert(out.end(), v.begin(), v.end());
  sort_points(out);
  return out;
}

std::vector<SingularPoint> scan_singular_over(const MPoly& f, const Field& K, unsigned workers) {
  const u64 p = K->characteristic();
  const int d = f.total_degree();
  if (d > 0 && static_cast<u64>(d) % p == 0)
    throw Error(ErrorCode::CharacteristicDividesDegree, "p=" + std::to_string(p) + " divides degree " + std::to_string(d));
  u64 q = 1;
  for (unsigned i = 0; i < K->degree(); ++i) q *= p;
  if (q > 4096) throw Error(ErrorCode::TooLarge, "scan over a field with " + std::to_string(q) + " elements");
  std::array<MPoly, kVars> partials;
  for (int i = 0; i < kVars; ++i) partials[i] = f.diff(i);
  const u64 total = q * q * q + q * q + q + 1;
  std::vector<std::vector<SingularPoint>> found(std::max(1u, workers));
  parallel_ranges(total, workers, [&](u64 lo, u64 hi, unsigned w) {
    std::array<bool, 4> zero{};
    for (u64 idx = lo; idx < hi; ++idx) {
      const auto x = point_digits(idx, q, zero);
      Point4 pt;
      for (int v = 0; v < kVars; ++v) pt[v] = Fel::from_index(K, x[v]);
      bool singular = true;
      for (int i = 0; i < kVars && singular; ++i) singular = partials[i].eval(pt).is_zero();
      if (!singular) continue;
      SingularPoint sp;
      sp.point.coords = pt;
      sp.point.degree = 1;
      for (const auto& c : pt)
        if (!c.in_prime_field()) sp.point.degree = K->degree();
      found[w].push_back(sp);
    }
  });
  std::vector<SingularPoint> out;
  for (auto& v : found) out.insert(out.end(), v.begin(), v.end());
  sort_points(out);
  return out;
}

// ---------------------------------------------------------------------------
// classification

SingularityClassifier::SingularityClassifier(const MPoly& f) : f_(f), d3_(kVars * kVars * kVars) {
  for (int i = 0; i < kVars; ++i) d1_[i] = f.diff(i);
  for (int i = 0; i < kVars; ++i)
    for (int j = 0; j < kVars; ++j) d2_[i][j] = j >= i ? d1_[i].diff(j) : d2_[j][i];
  for (int i = 0; i < kVars; ++i)
    for (int j = i; j < kVars; ++j)
      for (int k = j; k < kVars; ++k) {
        const MPoly t = d2_[i][j].diff(k);
        std::array<int, 3> idx{i, j, k};
        do {
          d3_[static_cast<std::size_t>((idx[0] * kVars + idx[1]) * kVars + idx[2])] = t;
        } while (std::next_permutation(idx.begin(), idx.end()));
      }
}

bool SingularityClassifier::is_singular(const ProjPoint& p) const {
  if (!f_.eval(p.coords).is_zero()) return false;
  for (const auto& d : d1_)
    if (!d.eval(p.coords).is_zero()) return false;
  return true;
}

Classification SingularityClassifier::classify(const ProjPoint& p) const {
  if (!is_singular(p)) throw Error(ErrorCode::NotSingular, "point " + p.to_string() + " is not singular");
  const Field& K = p.coords[0].field();
  int chart = 0;
  while (chart < kVars && p.coords[chart].is_zero()) ++chart;
  std::array<int, 3> loc{};
  for (int v = 0, n = 0; v < kVars; ++v)
    if (v != chart) loc[n++] = v;
  FelMatrix h(3, std::vector<Fel>(3));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) h[a][b] = d2_[loc[a]][loc[b]].eval(p.coords);
  const auto rank = matrix_rank(h);
  if (rank == 3) return Classification::A1;
  if (rank < 2) return Classification::AkOrWorse;
  const auto kernel = nullspace(h, 3, K);
  const auto& v = kernel.at(0);
  Fel cubic = Fel::zero(K);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        const Fel w = v[a] * v[b] * v[c];
        if (w.is_zero()) continue;
        cubic += w * d3_[static_cast<std::size_t>((loc[a] * kVars + loc[b]) * kVars + loc[c])].eval(p.coords);
      }
  return cubic.is_zero() ? Classification::AkOrWorse : Classification::A2;
}

Classification classify_singularity(const MPoly& f, const ProjPoint& p) { return SingularityClassifier(f).classify(p); }

// ---------------------------------------------------------------------------
// triple systems

namespace {

Field residue_field(const UPoly& h) {
  const Field& F = h.field();
  if (h.degree() == 1) return F;
  std::vector<u64> mod;
  for (const auto& c : h.coeffs()) mod.push_back(c.residue());
  return FieldCtx::with_modulus(F->characteristic(), std::move(mod));
}

std::vector<Fel> roots_in_field(const UPoly& g, u64 seed) {
  std::vector<Fel> out;
  if (g.degree() <= 0) return out;
  for (const auto& r : up_roots(g, 1, seed).roots) out.push_back(r.value);
  return out;
}

std::size_t distinct_roots(const UPoly& g) {
  return g.degree() <= 0 ? 0 : static_cast<std::size_t>(squarefree_part(g).degree());
}

// One shared copy of F_{p^m} per degree so points from different attempts
// compare directly.
Field canonical_field(const Field& base, unsigned m) {
  if (m == 1) return base;
  static std::mutex lock;
  static std::map<std::pair<u64, unsigned>, Field> cache;
  const std::lock_guard<std::mutex> guard(lock);
  auto key = std::make_pair(base->characteristic(), m);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, FieldCtx::make(key.first, m)).first;
  return it->second;
}

// Moves a point with coordinates in F_p[t]/(h) into the canonical field and
// returns the least of its conjugates.
ProjPoint canonical_orbit_rep(const ProjPoint& pt, const UPoly& h, u64 seed) {
  const unsigned m = pt.degree;
  if (m == 1) return pt;
  const Field C = canonical_field(h.field(), m);
  std::vector<Fel> hc;
  for (const auto& co : h.coeffs()) hc.push_back(co.embed(C));
  const auto rho = roots_in_field(UPoly(C, hc), seed);
  if (rho.empty()) throw Error(ErrorCode::ContextMismatch, "modulus has no root in the canonical field");
  Point4 x;
  for (int i = 0; i < kVars; ++i) {
    Fel acc = Fel::zero(C);
    const auto& res = pt.coords[i].residues();
    for (std::size_t k = res.size(); k-- > 0;) acc = acc * rho[0] + Fel::from_residue(C, res[k]);
    x[i] = acc;
  }
  ProjPoint best = normalize_point(x, m);
  ProjPoint cur = best;
  for (unsigned r = 1; r < m; ++r) {
    for (auto& v : cur.coords) v = v.frobenius();
    if (point_less(cur, best)) best = cur;
  }
  return best;
}

bool is_transversal(const std::array<std::array<MPoly, kVars>, 3>& grads, const Point4& x) {
  FelMatrix j(3, std::vector<Fel>(kVars));
  for (int r = 0; r < 3; ++r)
    for (int v = 0; v < kVars; ++v) j[r][v] = grads[r][v].eval(x);
  return matrix_rank(j) == 3;
}

}  // namespace

TripleSolution solve_triple(const MPoly& a, const MPoly& b, const MPoly& c, const SolveOptions& opts) {
  std::array<std::array<MPoly, kVars>, 3> grads;
  const std::array<const MPoly*, 3> sys{&a, &b, &c};
  for (int r = 0; r < 3; ++r)
    for (int v = 0; v < kVars; ++v) grads[r][v] = sys[r]->diff(v);

  // The multiplicity read off the image is exact only for a point alone on
  // its fibre; crowded fibres only ever inflate it. Orbits are therefore
  // collected from the attempts where they were observed alone, and the run
  // stops once those exact multiplicities account for the Bezout number.
  struct Orbit {
    ProjPoint rep;
    unsigned mu;
    UPoly h;
  };
  std::vector<Orbit> known;
  unsigned best_unresolved = ~0u;
  std::vector<UPoly> best_unresolved_factors;
  unsigned bezout = 0;
  unsigned next = 0;
  std::string last_problem = "no attempt";
  while (next < opts.max_attempts) {
    EliminationOptions eo;
    eo.seed = opts.seed;
    eo.first_attempt = next;
    eo.max_attempts = opts.max_attempts - next;
    const Elimination e = mp_eliminate_pair(a, b, c, eo);
    next = e.attempt + 1;
    bezout = static_cast<unsigned>(e.bezout);
    const auto& ord = e.order;

    const auto decomp = up_squarefree(e.image);
    unsigned unresolved = 0;
    std::vector<UPoly> unresolved_factors;
    unsigned crowded_orbits = 0;
    const auto factors = irreducible_factors(e.candidates, derive_seed(opts.seed, {0x50, e.attempt}));
    for (std::size_t fi = 0; fi < factors.size(); ++fi) {
      const UPoly& h = factors[fi];
      unsigned mu = 0;
      for (const auto& sf : decomp)
        if ((sf.factor % h).is_zero()) mu = sf.multiplicity;
      const auto m = static_cast<unsigned>(h.degree());
      if (m > opts.ext_budget) {
        unresolved += m * mu;
        unresolved_factors.push_back(h);
        continue;
      }
      const Field K = residue_field(h);
      const Fel alpha = m == 1 ? -h.coeff(0) : Fel::generator(K);
      const u64 rseed = derive_seed(opts.seed, {0x51, e.attempt, fi});
      Point4 y;
      for (auto& v : y) v = Fel::zero(K);
      y[e.chart] = Fel::one(K);
      y[ord.keep] = alpha;
      // Alone means: one distinct y2 root above alpha, and on that line a
      // single common root of (a, b) and of (a, c), simple for the pivot a.
      std::vector<Point4> lifted;
      bool crowded = false;
      const UPoly g = gcd(e.r1.restrict_to_var(ord.elim, y), e.r2.restrict_to_var(ord.elim, y));
      for (const auto& beta : roots_in_field(g, rseed)) {
        y[ord.elim] = beta;
        const UPoly za = e.system[0].restrict_to_var(ord.inner, y);
        const UPoly gab = gcd(za, e.system[1].restrict_to_var(ord.inner, y));
        const UPoly gac = gcd(za, e.system[2].restrict_to_var(ord.inner, y));
        for (const auto& gamma : roots_in_field(gcd(gab, gac), rseed + 1)) {
          if (za.derivative().eval(gamma).is_zero()) crowded = true;
          y[ord.inner] = gamma;
          lifted.push_back(y);
        }
        if (distinct_roots(gab) > 1 || distinct_roots(gac) > 1) crowded = true;
      }
      if (lifted.empty()) continue;  // extraneous
      if (lifted.size() > 1 || crowded || distinct_roots(g) > 1) {
        ++crowded_orbits;
        continue;
      }
      const ProjPoint rep = canonical_orbit_rep(normalize_point(apply_matrix(e.transform, lifted[0]), m), h, rseed + 2);
      const bool seen = std::any_of(known.begin(), known.end(), [&](const Orbit& o) { return point_equal(o.rep, rep); });
      if (!seen) known.push_back({rep, mu, h});
    }
    if (unresolved < best_unresolved) {
      best_unresolved = unresolved;
      best_unresolved_factors = unresolved_factors;
    }
    unsigned exact = 0;
    for (const auto& o : known) exact += o.rep.degree * o.mu;
    if (exact + best_unresolved == bezout) break;
    last_problem = "exact multiplicities sum to " + std::to_string(exact + best_unresolved) + " of " +
                   std::to_string(bezout) + " (" + std::to_string(crowded_orbits) + " crowded fibres)";
    if (next >= opts.max_attempts)
      throw Error(ErrorCode::ChartMisses,
                  last_problem + " after " + std::to_string(opts.max_attempts) + " coordinate changes");
  }
  if (next == 0) throw Error(ErrorCode::ChartMisses, last_problem);

  TripleSolution sol;
  sol.bezout = bezout;
  sol.attempts = next;
  sol.unresolved_multiplicity = best_unresolved;
  sol.unresolved_factors = best_unresolved_factors;
  std::sort(known.begin(), known.end(), [](const Orbit& x, const Orbit& y) { return point_less(x.rep, y.rep); });
  std::map<unsigned, UPoly> true_parts;
  for (std::size_t k = 0; k < known.size(); ++k) {
    const Orbit& o = known[k];
    const bool transversal = is_transversal(grads, o.rep.coords);
    Point4 conj = o.rep.coords;
    for (unsigned r = 0; r < o.rep.degree; ++r) {
      sol.points.push_back({ProjPoint{conj, o.rep.degree}, o.mu, transversal, k});
      for (auto& x : conj) x = x.frobenius();
    }
    sol.resolved_multiplicity += o.rep.degree * o.mu;
    auto [it, inserted] = true_parts.try_emplace(o.mu, o.h);
    if (!inserted) it->second *= o.h;
  }
  for (auto& [mu, prod] : true_parts) sol.image_decomposition.push_back({prod, mu});
  return sol;
}

// ---------------------------------------------------------------------------
// certificates

namespace {

std::string describe_recipe(const SurfaceRecipe& r) {
  std::ostringstream os;
  os << kind_name(r.kind) << " parts=" << r.parts.to_string();
  if (r.kind != RecipeKind::Direct) os << " c=" << PartitionType{r.c}.to_string() << " b=" << r.b;
  if (!r.lambda.empty()) {
    os << " lambda=";
    for (std::size_t i = 0; i < r.lambda.size(); ++i) os << (i ? "," : "") << r.lambda[i].to_string();
  }
  os << " prime=" << r.field->characteristic() << " seed=" << r.seed << " degree=" << r.degree();
  return os.str();
}

// The three surfaces whose common points are the cusps of pair (i, j).
std::array<MPoly, 3> pair_system(const SurfaceRecipe& r, unsigned i, unsigned j) {
  if (r.kind == RecipeKind::Fermat) {
    const int other = 3 - static_cast<int>(i) - static_cast<int>(j);
    return {MPoly::variable(r.field, other + 1), r.s[i], r.s[j]};
  }
  return {r.s[i], r.s[j], r.shared};
}

}  // namespace

std::size_t AdmissibilityCertificate::a2_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(cusps.begin(), cusps.end(), [](const auto& c) { return c.type == Classification::A2; }));
}

std::string AdmissibilityCertificate::to_text() const {
  std::ostringstream os;
  os << "certificate: " << (passed ? "PASS" : "FAIL") << '\n';
  os << "recipe: " << recipe << '\n';
  for (const auto& p : pairs) {
    os << "pair " << p.i + 1 << ',' << p.j + 1 << ": expected " << p.expected << " found " << p.found;
    if (p.expected_residual_points) {
      os << " residual_points " << p.residual_points << "/" << p.expected_residual_points << " multiplicities";
      for (auto m : p.residual_multiplicities) os << ' ' << m;
    }
    os << " bezout " << p.bezout << " resolved " << p.resolved << " unresolved " << p.unresolved << " attempts "
       << p.attempts << ' ' << (p.ok ? "ok" : "FAIL") << '\n';
  }
  os << "cusps: " << cusps.size() << " (A2: " << a2_count() << ")\n";
  os << "scan: P3(F_" << scan_prime << (scan_field_degree > 1 ? "^" + std::to_string(scan_field_degree) : "")
     << ") points " << scanned_points << " singular " << scan_singular.size()
     << " off-cusp " << off_cusp_singular << '\n';
  for (const auto& d : diagnostics) os << "diagnostic: " << d << '\n';
  for (const auto& c : cusps)
    os << "cusp " << c.point.to_string() << " degree=" << c.point.degree << " pair=" << c.pair_i + 1 << ','
       << c.pair_j + 1 << " type=" << classification_name(c.type) << " mult=" << c.multiplicity
       << " transversal=" << (c.transversal ? "yes" : "no") << '\n';
  os << "note: smoothness away from the cusps is certified on the scanned points only\n";
  return os.str();
}

AdmissibilityCertificate verify_admissible(const SurfaceRecipe& recipe, const VerifyOptions& opts) {
  AdmissibilityCertificate cert;
  cert.recipe = describe_recipe(recipe);
  const CuspCounts expected = recipe.expected_counts();
  const SingularityClassifier cls(recipe.f);
  const bool residual = recipe.kind == RecipeKind::Residual;
  bool ok = true;
  std::uint64_t pair_index = 0;

  for (auto [i, j] : pair_order(recipe.parts.size())) {
    PairReport pr;
    pr.i = i;
    pr.j = j;
    pr.expected = expected.count_for(i, j);
    if (residual) pr.expected_residual_points = recipe.c[i] * recipe.c[j] * recipe.b;
    const auto sys = pair_system(recipe, i, j);
    pr.bezout = static_cast<unsigned>(sys[0].total_degree() * sys[1].total_degree() * sys[2].total_degree());
    const std::string tag = "pair " + std::to_string(i + 1) + "," + std::to_string(j + 1) + ": ";
    TripleSolution sol;
    try {
      sol = solve_triple(sys[0], sys[1], sys[2], {opts.ext_budget, derive_seed(opts.seed, {0x7a, pair_index++}), 8});
    } catch (const Error& e) {
      cert.diagnostics.push_back(tag + e.what());
      cert.pairs.push_back(pr);
      ok = false;
      continue;
    }
    pr.resolved = sol.resolved_multiplicity;
    pr.unresolved = sol.unresolved_multiplicity;
    pr.attempts = sol.attempts;
    bool pair_ok = sol.complete();
    if (!sol.complete())
      cert.diagnostics.push_back(tag + std::to_string(sol.unresolved_multiplicity) +
                                 " intersection multiplicity beyond the extension budget");

    std::map<std::size_t, Classification> orbit_type;
    for (const auto& tp : sol.points) {
      if (residual && recipe.r.eval(tp.point.coords).is_zero()) {
        ++pr.residual_points;
        pr.residual_multiplicities.push_back(tp.multiplicity);
        if (tp.multiplicity != 6) pair_ok = false;
        continue;
      }
      CuspRecord rec{tp.point, i, j, Classification::Unclassified, tp.multiplicity, tp.transversal};
      auto it = orbit_type.find(tp.orbit);
      if (it == orbit_type.end()) {
        try {
          it = orbit_type.emplace(tp.orbit, cls.classify(tp.point)).first;
        } catch (const Error& e) {
          cert.diagnostics.push_back(tag + e.what());
          it = orbit_type.emplace(tp.orbit, Classification::Unclassified).first;
        }
      }
      rec.type = it->second;
      if (rec.type != Classification::A2 || !rec.transversal || rec.multiplicity != 1) {
        pair_ok = false;
        cert.diagnostics.push_back(tag + "point " + tp.point.to_string() + " type " +
                                   std::string(classification_name(rec.type)) + " mult " +
                                   std::to_string(rec.multiplicity) + (rec.transversal ? "" : " not transversal"));
      }
      for (std::size_t m = 0; m < recipe.s.size(); ++m) {
        if (m == i || m == j) continue;
        if (recipe.s[m].eval(tp.point.coords).is_zero()) {
          pair_ok = false;
          cert.diagnostics.push_back(tag + "point " + tp.point.to_string() + " also lies on S_" + std::to_string(m + 1));
        }
      }
      cert.cusps.push_back(rec);
      ++pr.found;
    }
    if (pr.found != pr.expected) {
      pair_ok = false;
      cert.diagnostics.push_back(tag + "found " + std::to_string(pr.found) + " cusps, expected " +
                                 std::to_string(pr.expected));
    }
    if (residual && pr.residual_points != pr.expected_residual_points) {
      pair_ok = false;
      cert.diagnostics.push_back(tag + std::to_string(pr.residual_points) + " points on the residual surface, expected " +
                                 std::to_string(pr.expected_residual_points));
    }
    pr.ok = pair_ok;
    ok = ok && pair_ok;
    cert.pairs.push_back(pr);
  }

  // smoothness away from the cusps, at scan resolution
  const u64 p = recipe.field->characteristic();
  cert.scan_prime = p;
  try {
    cert.scan_singular = scan_rational_singular(recipe.f, opts.workers);
    cert.scanned_points = p * p * p + p * p + p + 1;
    if (opts.scan_quadratic) {
      const Field K = FieldCtx::make(p, 2, opts.seed);
      auto more = scan_singular_over(recipe.f, K, opts.workers);
      const u64 q = p * p;
      cert.scanned_points = q * q * q + q * q + q + 1;
      cert.scan_field_degree = 2;
      for (auto& sp : more)
        if (sp.point.degree == 2) cert.scan_singular.push_back(sp);
    }
  } catch (const Error& e) {
    cert.diagnostics.push_back(std::string("scan: ") + e.what());
    ok = false;
  }
  for (auto& sp : cert.scan_singular) {
    bool match = false;
    for (const auto& c : cert.cusps) {
      if (sp.point.degree == 1 && c.point.degree == 1 && point_equal(c.point, sp.point)) {
        match = true;
        sp.type = c.type;
        sp.pair_i = static_cast<int>(c.pair_i);
        sp.pair_j = static_cast<int>(c.pair_j);
        break;
      }
    }
    if (!match && sp.point.degree == 2) {
      // solved points carry their own residue fields, so match quadratic
      // points against the pair systems directly
      for (auto [i, j] : pair_order(recipe.parts.size())) {
        const auto sys = pair_system(recipe, i, j);
        if (sys[0].eval(sp.point.coords).is_zero() && sys[1].eval(sp.point.coords).is_zero() &&
            sys[2].eval(sp.point.coords).is_zero()) {
          match = true;
          sp.pair_i = static_cast<int>(i);
          sp.pair_j = static_cast<int>(j);
          break;
        }
      }
    }
    if (!match) {
      ++cert.off_cusp_singular;
      cert.diagnostics.push_back("scan: singular point " + sp.point.to_string() + " off the cusp set");
    }
  }
  if (cert.off_cusp_singular) ok = false;
  cert.passed = ok;
  return cert;
}

std::string BezoutReport::to_text() const {
  std::ostringstream os;
  os << "pair " << i + 1 << ',' << j + 1 << ": bezout " << bezout << " = " << off_residual << " + 6*"
     << residual_points << (ok ? " ok" : " FAIL") << '\n';
  os << "expected: cusps " << expected_cusps << " residual points " << expected_residual_points << '\n';
  os << "residual multiplicities:";
  for (auto m : residual_multiplicities) os << ' ' << m;
  os << '\n';
  for (const auto& sf : image_decomposition)
    os << "image factor multiplicity " << sf.multiplicity << " degree " << sf.factor.degree() << ": "
       << sf.factor.to_string() << '\n';
  return os.str();
}

BezoutReport bezout_accounting(const SurfaceRecipe& recipe, unsigned i, unsigned j, const SolveOptions& opts) {
  if (recipe.kind == RecipeKind::Direct) throw Error(ErrorCode::Unsupported, "Bezout accounting needs a residual recipe");
  if (i >= recipe.s.size() || j >= recipe.s.size() || i == j)
    throw Error(ErrorCode::PartitionMismatch, "bad pair");
  if (i > j) std::swap(i, j);
  BezoutReport rep;
  rep.i = i;
  rep.j = j;
  const unsigned csum = std::accumulate(recipe.c.begin(), recipe.c.end(), 0u);
  rep.bezout = 9 * recipe.c[i] * recipe.c[j] * csum;
  rep.expected_cusps = count_residual(recipe.c, recipe.b).count_for(i, j);
  rep.expected_residual_points = recipe.c[i] * recipe.c[j] * recipe.b;
  const TripleSolution sol = solve_triple(recipe.s[i], recipe.s[j], recipe.shared, opts);
  for (const auto& tp : sol.points) {
    if (recipe.r.eval(tp.point.coords).is_zero()) {
      ++rep.residual_points;
      rep.residual_multiplicities.push_back(tp.multiplicity);
    } else if (tp.transversal && tp.multiplicity == 1) {
      ++rep.off_residual;
    }
  }
  rep.image_decomposition = sol.image_decomposition;
  rep.ok = sol.complete() && sol.bezout == rep.bezout && rep.off_residual == rep.expected_cusps &&
           rep.residual_points == rep.expected_residual_points &&
           std::all_of(rep.residual_multiplicities.begin(), rep.residual_multiplicities.end(),
                       [](unsigned m) { return m == 6; }) &&
           rep.bezout == rep.expected_cusps + 6 * rep.expected_residual_points;
  return rep;
}

FermatSearchResult fermat_search(const Field& field, std::uint64_t seed, const VerifyOptions& opts) {
  std::vector<std::array<std::uint64_t, 3>> order;
  for (std::uint64_t a = 1; a <= 3; ++a)
    for (std::uint64_t b = 1; b <= 3; ++b)
      for (std::uint64_t c = 1; c <= 3; ++c) order.push_back({a, b, c});
  Rng rng(derive_seed(seed, {0xfe}));
  std::shuffle(order.begin(), order.end(), rng);
  FermatSearchResult res;
  for (const auto& l : order) {
    ++res.tried;
    const std::array<Fel, 3> lam{Fel::from_residue(field, l[0]), Fel::from_residue(field, l[1]),
                                 Fel::from_residue(field, l[2])};
    res.lambda = l;
    res.certificate = verify_admissible(fermat_family(lam, field), opts);
    if (res.certificate.passed) {
      res.found = true;
      break;
    }
  }
  return res;
}

}  // namespace cuspcodes
