#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <random>

#include "cuspcodes/construct.hpp"
#include "cuspcodes/error.hpp"

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

struct Row {
  const char* type;
  unsigned n;
};

// Cusp totals as printed in the tables of direct constructions.
const Row kSextics[] = {{"1,5", 10},     {"2,4", 16},     {"3,3", 18},       {"1,1,4", 18},     {"1,2,3", 22},
                        {"2,2,2", 24},   {"1,1,1,3", 24}, {"1,1,2,2", 26},   {"1,1,1,1,2", 28}, {"1,1,1,1,1,1", 30}};
const Row kNonics[] = {{"1,8", 24},         {"2,7", 42},         {"1,1,7", 45},         {"3,6", 54},
                       {"4,5", 60},         {"1,2,6", 60},       {"1,1,1,6", 63},       {"1,3,5", 69},
                       {"1,4,4", 72},       {"2,2,5", 72},       {"1,1,2,5", 75},       {"2,3,4", 78},
                       {"1,1,1,1,5", 78},   {"3,3,3", 81},       {"1,1,3,4", 81},       {"1,2,2,4", 84},
                       {"1,2,3,3", 87},     {"1,1,1,2,4", 87},   {"2,2,2,3", 90},       {"1,1,1,3,3", 90},
                       {"1,1,1,1,1,4", 90}, {"1,1,1,1,2,3", 96}, {"1,1,1,1,1,1,3", 99}, {"1,1,1,1,1,1,1,2", 105},
                       {"1,1,1,1,1,1,1,1,1", 108}};

Point4 random_point(const Field& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> d(0, f->characteristic() - 1);
  return {Fel::from_residue(f, d(rng)), Fel::from_residue(f, d(rng)), Fel::from_residue(f, d(rng)),
          Fel::from_residue(f, d(rng))};
}

}  // namespace

TEST_CASE("tabulated direct cusp totals for sextics and nonics") {
  for (const auto& r : kSextics) {
    CAPTURE(r.type);
    CHECK(count_direct(6, PartitionType::parse(r.type)).total == r.n);
  }
  for (const auto& r : kNonics) {
    CAPTURE(r.type);
    CHECK(count_direct(9, PartitionType::parse(r.type)).total == r.n);
  }
  CHECK(tabulated_direct_types(6).size() == std::size(kSextics));
  CHECK(tabulated_direct_types(9).size() == std::size(kNonics));
}

TEST_CASE("tabulated residual cusp counts") {
  struct R {
    std::vector<unsigned> c;
    unsigned b, d;
    std::vector<unsigned> n;
  };
  const R rows[] = {{{1, 1}, 2, 4, {6}},          {{1, 1}, 1, 5, {12}},         {{1, 2}, 3, 6, {18}},
                    {{1, 2}, 2, 7, {30}},         {{1, 2}, 1, 8, {42}},         {{1, 1, 1}, 3, 6, {9, 9, 9}},
                    {{1, 1, 1}, 2, 7, {15, 15, 15}}, {{1, 1, 1}, 1, 8, {21, 21, 21}}};
  for (const auto& r : rows) {
    const CuspCounts c = count_residual(r.c, r.b);
    CHECK(c.degree == r.d);
    REQUIRE(c.pairs.size() == r.n.size());
    for (std::size_t k = 0; k < r.n.size(); ++k) CHECK(c.pairs[k].n == r.n[k]);
  }
}

TEST_CASE("pair order and bounds") {
  const auto po = pair_order(4);
  REQUIRE(po.size() == 6);
  CHECK(po[2] == std::pair<unsigned, unsigned>{1, 2});
  CHECK(po[3] == std::pair<unsigned, unsigned>{0, 3});
  CHECK(miyaoka_bound(3) == 3);
  CHECK(miyaoka_bound(4) == 9);
  CHECK(miyaoka_bound(6) == 37);
  CHECK(count_direct(6, PartitionType::parse("1,2,3")).count_for(1, 2) == 12);
}

TEST_CASE("construction errors") {
  CHECK(code_of([] { count_direct(4, PartitionType::parse("2,2")); }) == ErrorCode::DegreeNotDivisibleBy3);
  CHECK(code_of([] { count_direct(6, PartitionType::parse("2,2")); }) == ErrorCode::PartitionMismatch);
  CHECK(code_of([] { PartitionType::parse("1,,2"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { PartitionType::parse("1,0"); }) == ErrorCode::PartitionMismatch);
  CHECK(code_of([] { count_residual({1, 1}, 4); }) == ErrorCode::DegreeConstraintViolated);
  CHECK(code_of([] { count_residual({1, 2}, 4); }) == ErrorCode::DegreeConstraintViolated);
  const Field f = FieldCtx::make(31);
  CHECK(code_of([&] {
          fermat_family({Fel::one(f), Fel::zero(f), Fel::one(f)}, f);
        }) == ErrorCode::ZeroLambda);
}

TEST_CASE("direct recipes have the stated shape") {
  const Field f = FieldCtx::make(31);
  const SurfaceRecipe rec = build_direct(PartitionType::parse("1,2,3"), f, 5);
  CHECK(rec.degree() == 6);
  CHECK(rec.f.is_homogeneous());
  MPoly prod = MPoly::constant(f, 1);
  for (const auto& s : rec.s) prod = prod * s;
  CHECK(rec.f == prod - rec.shared.pow(3));
  CHECK(build_direct(PartitionType::parse("1,2,3"), f, 5).f == rec.f);
  CHECK_FALSE(build_direct(PartitionType::parse("1,2,3"), f, 6).f == rec.f);
}

TEST_CASE("residual quotient satisfies f r = prod s_i - s^3 pointwise") {
  const Field f = FieldCtx::make(31);
  std::mt19937_64 rng(11);
  for (const auto& row : tabulated_residual_rows()) {
    const SurfaceRecipe rec = build_residual(row.c, row.b, f, 3);
    CHECK(rec.degree() == count_residual(row.c, row.b).degree);
    for (int k = 0; k < 20; ++k) {
      const Point4 pt = random_point(f, rng);
      Fel prod = Fel::one(f);
      for (const auto& s : rec.s) prod *= s.eval(pt);
      const Fel sv = rec.shared.eval(pt);
      CHECK(rec.f.eval(pt) * rec.r.eval(pt) == prod - sv * sv * sv);
    }
  }
}

TEST_CASE("Fermat-family quotient equals the expanded form") {
  const Field f = FieldCtx::make(31);
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 5; ++trial) {
    std::array<Fel, 3> l;
    for (auto& v : l) v = Fel::from_int(f, 1 + static_cast<std::int64_t>(rng() % 30));
    const SurfaceRecipe rec = fermat_family(l, f);
    const MPoly x1 = MPoly::variable(f, 1), x2 = MPoly::variable(f, 2), x3 = MPoly::variable(f, 3);
    const MPoly c1 = x1.pow(3), c2 = x2.pow(3), c3 = x3.pow(3);
    const MPoly r = MPoly::variable(f, 0).pow(3) + c1 + c2 + c3;
    const MPoly expanded = c2 * c3 * l[0] + c1 * c3 * l[1] + c1 * c2 * l[2] +
                           (c3 * (l[0] * l[1]) + c2 * (l[0] * l[2]) + c1 * (l[1] * l[2])) * r +
                           r * r * (l[0] * l[1] * l[2]);
    CHECK(rec.f == expanded);
    CHECK(fermat_expanded(l, f) == expanded);
  }
}

TEST_CASE("recipes round-trip through a directory") {
  const Field f = FieldCtx::make(31);
  const auto dir = std::filesystem::path(CUSPCODES_TEST_TMP) / "recipe_roundtrip";
  std::filesystem::remove_all(dir);
  const SurfaceRecipe rec = build_residual({1, 1, 1}, 3, f, 9);
  write_recipe(rec, dir);
  const SurfaceRecipe back = read_recipe(dir);
  CHECK(back.kind == RecipeKind::Residual);
  CHECK(back.seed == 9);
  CHECK(back.b == 3);
  CHECK(back.f == rec.f);
  CHECK(back.r == rec.r);
  REQUIRE(back.s.size() == 3);
  CHECK(back.s[2] == rec.s[2]);
  CHECK(back.shared == rec.shared);
  std::filesystem::remove_all(dir);
}
