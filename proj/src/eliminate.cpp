#include "cuspcodes/eliminate.hpp"

#include "cuspcodes/linalg.hpp"
#include "cuspcodes/rng.hpp"

namespace cuspcodes {

Matrix4 random_invertible(const Field& f, std::uint64_t seed) {
  Rng rng(seed);
  std::uniform_int_distribution<u64> dist(0, f->characteristic() - 1);
  for (;;) {
    FelMatrix m(kVars);
    for (auto& row : m)
      for (int j = 0; j < kVars; ++j) row.push_back(Fel::from_residue(f, dist(rng)));
    if (matrix_rank(m) < static_cast<std::size_t>(kVars)) continue;
    Matrix4 out;
    for (int i = 0; i < kVars; ++i)
      for (int j = 0; j < kVars; ++j) out[i][j] = m[i][j];
    return out;
  }
}

Point4 apply_matrix(const Matrix4& m, const Point4& y) {
  const Field& K = y[0].field();
  Point4 x;
  for (int i = 0; i < kVars; ++i) {
    Fel acc = Fel::zero(K);
    for (int j = 0; j < kVars; ++j) acc += m[i][j].embed(K) * y[j];
    x[i] = acc;
  }
  return x;
}

namespace {

// True when `f` has degree `d` in `var` with a nonzero constant coefficient
// in front of var^d, so no root escapes to infinity along that variable.
bool constant_leading(const MPoly& f, int var, int d) {
  if (f.degree_in(var) != d) return false;
  const auto coeffs = f.coefficients_in(var);
  return coeffs.back().total_degree() == 0;
}

UPoly to_univariate(const MPoly& f, int var) {
  Point4 pt;
  for (auto& x : pt) x = Fel::one(f.field());
  return f.restrict_to_var(var, pt);
}

}  // namespace

Elimination mp_eliminate_pair(const MPoly& a, const MPoly& b, const MPoly& c, const EliminationOptions& opts) {
  if (!a.is_homogeneous() || !b.is_homogeneous() || !c.is_homogeneous())
    throw Error(ErrorCode::MixedDegreeError, "elimination needs homogeneous input");
  if (a.is_zero() || b.is_zero() || c.is_zero())
    throw Error(ErrorCode::NotZeroDimensional, "zero polynomial in the system");
  const Field& F = a.field();
  if (!F->is_prime_field()) throw Error(ErrorCode::Unsupported, "elimination over extension base fields");

  // pivot first
  std::array<const MPoly*, 3> sys{&c, &a, &b};
  for (int i = 1; i < 3; ++i)
    if (sys[i]->total_degree() < sys[0]->total_degree()) std::swap(sys[0], sys[i]);
  std::array<int, 3> deg{};
  for (int i = 0; i < 3; ++i) deg[i] = sys[i]->total_degree();

  const auto& ord = opts.order;
  bool resultant_vanished = false;
  for (unsigned attempt = opts.first_attempt; attempt < opts.first_attempt + opts.max_attempts; ++attempt) {
    Elimination out;
    out.transform = random_invertible(F, derive_seed(opts.seed, {0xe11, attempt}));
    out.chart = opts.chart;
    out.order = ord;
    out.attempt = attempt;
    out.bezout = deg[0] * deg[1] * deg[2];

    bool ok = true;
    for (int i = 0; i < 3 && ok; ++i) {
      out.system[i] = sys[i]->linear_change(out.transform).substitute(opts.chart, Fel::one(F));
      ok = constant_leading(out.system[i], ord.inner, deg[i]);
    }
    if (!ok) continue;

    out.r1 = mp_resultant(out.system[0], out.system[1], ord.inner);
    out.r2 = mp_resultant(out.system[0], out.system[2], ord.inner);
    MPoly r3 = mp_resultant(out.system[1], out.system[2], ord.inner);
    if (out.r1.is_zero() || out.r2.is_zero() || r3.is_zero()) {
      resultant_vanished = true;
      continue;
    }
    if (!constant_leading(out.r1, ord.elim, out.r1.total_degree()) ||
        !constant_leading(out.r2, ord.elim, out.r2.total_degree()) ||
        !constant_leading(r3, ord.elim, r3.total_degree()))
      continue;

    const MPoly u = mp_resultant(out.r1, out.r2, ord.elim);
    if (u.is_zero()) {
      resultant_vanished = true;
      continue;
    }
    out.image = to_univariate(u, ord.keep);
    const MPoly u2 = mp_resultant(out.r1, r3, ord.elim);
    out.candidates = u2.is_zero() ? squarefree_part(out.image)
                                  : squarefree_part(gcd(out.image, to_univariate(u2, ord.keep)));
    return out;
  }
  if (resultant_vanished)
    throw Error(ErrorCode::NotZeroDimensional,
                "resultants vanish identically in " + std::to_string(opts.max_attempts) + " coordinate changes");
  throw Error(ErrorCode::ChartMisses,
              "no coordinate change among " + std::to_string(opts.max_attempts) + " passed the chart certificates");
}

}  // namespace cuspcodes
