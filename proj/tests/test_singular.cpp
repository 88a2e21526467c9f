#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cuspcodes/error.hpp"
#include "cuspcodes/singular.hpp"
#include "oracles.hpp"

using namespace cuspcodes;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no cuspcodes::Error thrown");
  return ErrorCode::Unsupported;
}

struct Vars {
  MPoly x0, x1, x2, x3;
  explicit Vars(const Field& f)
      : x0(MPoly::variable(f, 0)), x1(MPoly::variable(f, 1)), x2(MPoly::variable(f, 2)), x3(MPoly::variable(f, 3)) {}
};

ProjPoint origin(const Field& f) {
  return normalize_point({Fel::one(f), Fel::zero(f), Fel::zero(f), Fel::zero(f)}, 1);
}

}  // namespace

TEST_CASE("local classification at a coordinate point") {
  const Field f = FieldCtx::make(31);
  const Vars v(f);
  const ProjPoint o = origin(f);
  // xy + z^2: node; xy - z^3: cusp; xy - z^4: A3; x^2 + y^3 + z^3: worse than A2.
  CHECK(classify_singularity(v.x0 * (v.x1 * v.x2 + v.x3 * v.x3), o) == Classification::A1);
  CHECK(classify_singularity(v.x0 * v.x1 * v.x2 - v.x3.pow(3), o) == Classification::A2);
  CHECK(classify_singularity(v.x0.pow(2) * v.x1 * v.x2 - v.x3.pow(4), o) == Classification::AkOrWorse);
  CHECK(classify_singularity(v.x0 * v.x1 * v.x1 + v.x2.pow(3) + v.x3.pow(3), o) == Classification::AkOrWorse);
  CHECK(classify_singularity(v.x0 * v.x0 * v.x1 * v.x2 - v.x0 * v.x3.pow(3) + v.x1.pow(4), o) ==
        Classification::A2);
  CHECK(code_of([&] { classify_singularity(v.x0.pow(3) + v.x1.pow(3), o); }) == ErrorCode::NotSingular);
  CHECK(code_of([&] { classify_singularity(v.x0 * v.x0 * v.x1 + v.x2.pow(3), o); }) == ErrorCode::NotSingular);
}

TEST_CASE("rational scan agrees with brute-force evaluation") {
  const Field f = FieldCtx::make(13);
  for (std::uint64_t seed : {1u, 2u}) {
    const SurfaceRecipe rec = build_direct(PartitionType::parse("1,1,1"), f, seed);
    // A product of three planes minus a cubed plane: singular points are the
    // rational cusps on the coordinate-like lines.
    const auto scanned = scan_rational_singular(rec.f, 2);
    std::set<std::array<std::uint64_t, 4>> ours;
    for (const auto& s : scanned) {
      std::array<std::uint64_t, 4> c{};
      for (int k = 0; k < 4; ++k) c[k] = s.point.coords[k].residue();
      ours.insert(c);
    }
    const auto brute = oracle::brute_singular(rec.f);
    CHECK(ours == std::set<std::array<std::uint64_t, 4>>(brute.begin(), brute.end()));
  }
  const Vars v(f);
  const MPoly nodes = v.x0 * (v.x1 * v.x2 + v.x3 * v.x3) + v.x1.pow(3) + v.x2.pow(3);
  const auto scanned = scan_rational_singular(nodes);
  CHECK(scanned.size() == oracle::brute_singular(nodes).size());
}

TEST_CASE("scan refuses characteristic dividing the degree") {
  const Field f = FieldCtx::make(5);
  const Vars v(f);
  CHECK(code_of([&] { scan_rational_singular(v.x0.pow(5) + v.x1.pow(5) + v.x2 * v.x3.pow(4)); }) ==
        ErrorCode::CharacteristicDividesDegree);
}

TEST_CASE("triple intersections with multiplicities and conjugates") {
  const Field f = FieldCtx::make(31);
  const Vars v(f);
  auto total = [](const TripleSolution& s) {
    unsigned m = 0;
    for (const auto& p : s.points) m += p.multiplicity;
    return m;
  };
  const TripleSolution two = solve_triple(v.x1, v.x2, v.x3 * v.x3 - v.x0 * v.x0);
  CHECK(two.complete());
  CHECK(two.points.size() == 2);
  CHECK(total(two) == 2);
  const TripleSolution dbl = solve_triple(v.x1, v.x2, v.x3 * v.x3);
  REQUIRE(dbl.points.size() == 1);
  CHECK(dbl.points[0].multiplicity == 2);
  CHECK_FALSE(dbl.points[0].transversal);
  // -1 is not a square mod 31, so the two points are conjugate over F_31^2.
  const TripleSolution conj = solve_triple(v.x1, v.x2, v.x3 * v.x3 + v.x0 * v.x0);
  REQUIRE(conj.points.size() == 2);
  CHECK(conj.points[0].point.degree == 2);
  CHECK(conj.points[0].orbit == conj.points[1].orbit);
  // Two cubics and a quadric meet in 18 points counted with multiplicity.
  const TripleSolution gen = solve_triple(random_homogeneous(f, 3, 1), random_homogeneous(f, 3, 2),
                                          random_homogeneous(f, 2, 3));
  CHECK(gen.complete());
  CHECK(total(gen) == 18);
  CHECK(code_of([&] { solve_triple(v.x1, v.x2, v.x1 * v.x3 + v.x2 * v.x0); }) == ErrorCode::NotZeroDimensional);
}

TEST_CASE("direct 3,3 sextic certifies 18 cusps") {
  const Field f = FieldCtx::make(31);
  const SurfaceRecipe rec = build_direct(PartitionType::parse("3,3"), f, 0);
  const AdmissibilityCertificate cert = verify_admissible(rec);
  CHECK(cert.passed);
  CHECK(cert.cusp_count() == 18);
  CHECK(cert.a2_count() == 18);
  CHECK(cert.off_cusp_singular == 0);
  REQUIRE(cert.pairs.size() == 1);
  CHECK(cert.pairs[0].bezout == 18);
  for (const auto& c : cert.cusps) CHECK(c.transversal);
  CHECK(verify_admissible(rec).to_text() == cert.to_text());
}

TEST_CASE("residual intersection accounting") {
  const Field f = FieldCtx::make(31);
  const SurfaceRecipe rec = build_residual({1, 1}, 1, f, 1);
  const BezoutReport rep = bezout_accounting(rec, 0, 1);
  CHECK(rep.ok);
  CHECK(rep.bezout == 18);
  CHECK(rep.off_residual == 12);
  CHECK(rep.residual_points == 1);
  REQUIRE(rep.residual_multiplicities.size() == 1);
  CHECK(rep.residual_multiplicities[0] == 6);
  bool six = false;
  for (const auto& sf : rep.image_decomposition) six = six || (sf.multiplicity == 6 && sf.factor.degree() == 1);
  CHECK(six);
}
