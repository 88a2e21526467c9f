#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cuspcodes/wedge.hpp"

using namespace cuspcodes;

namespace {

Vec6 vec(std::initializer_list<int> v) {
  Vec6 out{};
  std::size_t k = 0;
  for (int x : v) out[k++] = static_cast<Trit>((x % 3 + 3) % 3);
  return out;
}

// e ^ u for every zero-sum u, built straight from the definition of the wedge.
std::set<WedgeVec> e_wedge_u_by_definition() {
  std::set<WedgeVec> out;
  const Vec6 e{1, 1, 1, 1, 1, 1};
  for (int m = 0; m < 729; ++m) {
    Vec6 u{};
    int x = m, sum = 0;
    for (auto& c : u) {
      c = static_cast<Trit>(x % 3);
      sum += c;
      x /= 3;
    }
    if (sum % 3 != 0) continue;
    WedgeVec w{};
    for (int j = 1; j < 6; ++j)
      for (int i = 0; i < j; ++i) w[wedge_index(i, j)] = static_cast<Trit>(((e[i] * u[j] - e[j] * u[i]) % 3 + 3) % 3);
    out.insert(w);
  }
  return out;
}

}  // namespace

TEST_CASE("index helpers") {
  for (std::uint32_t idx : {0u, 1u, 12345u, 14348906u}) CHECK(wedge_to_index(wedge_from_index(idx)) == idx);
  CHECK(wedge_index(0, 1) == 0);
  CHECK(wedge_index(4, 5) == 14);
  CHECK(wedge_unit(2, 1) == wedge_scale(2, wedge_unit(1, 2)));
}

TEST_CASE("u words") {
  const UWords uw = u_words();
  for (int i = 0; i < 6; ++i) CHECK(wedge_weight(uw.u[i]) == 5);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (i != j) CHECK(wedge_weight(uw.uij[i][j]) == 9);
  const WedgeSubspace eu = e_wedge_U();
  CHECK(eu.dimension() == 4);
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) CHECK(eu.contains(uw.uij[i][j]));
  CHECK_FALSE(eu.contains(uw.u[0]));
}

TEST_CASE("members of e ^ U agree with a direct enumeration") {
  const auto members = e_wedge_U().members();
  CHECK(members.size() == 81);
  const auto direct = e_wedge_u_by_definition();
  CHECK(std::set<WedgeVec>(members.begin(), members.end()) == direct);
  std::map<std::size_t, int> weights;
  for (const auto& m : members) ++weights[wedge_weight(m)];
  CHECK(weights == std::map<std::size_t, int>{{0, 1}, {9, 50}, {12, 30}});
}

TEST_CASE("permutation action carries the wedge sign") {
  // (13)(24) maps (e1+e2) ^ (e3+e4) to its negative.
  const WedgeVec v = wedge_of(vec({1, 1, 0, 0, 0, 0}), vec({0, 0, 1, 1, 0, 0}));
  const Perm6 s = compose(transposition(0, 2), transposition(1, 3));
  CHECK(sigma_on_wedge(s, v) == wedge_scale(2, v));
  CHECK(sigma_on_wedge(transposition(0, 1), wedge_unit(0, 1)) == wedge_scale(2, wedge_unit(0, 1)));
}

TEST_CASE("transposition witnesses") {
  const UWords uw = u_words();
  const WedgeVec e12 = wedge_unit(0, 1);
  const WedgeVec e13_23 = wedge_add(wedge_unit(0, 2), wedge_unit(1, 2));
  CHECK(transposition_witness(e13_23).has_value());
  CHECK_FALSE(transposition_witness(uw.uij[0][1]).has_value());
  CHECK(resolve_vector(e12, 0) == WitnessStage::Weight);
  CHECK(resolve_vector(uw.uij[0][1], 0) == WitnessStage::Member);
  // e12 + e34 + e56 has weight 3 and generates a code with weight 3 words.
  const WedgeVec triple = wedge_add(e12, wedge_add(wedge_unit(2, 3), wedge_unit(4, 5)));
  CHECK(resolve_vector(triple, 0) == WitnessStage::Weight);
  const WedgeSubspace inv = invariant_span(e12);
  CHECK(inv.dimension() == 15);
  CHECK(invariant_span(uw.uij[0][1]).dimension() == 4);
}

TEST_CASE("orbit-reduced verification") {
  const WedgeVerifyReport rep = wedge_verify(VerifyMode::OrbitReduced, 2, 0);
  CHECK(rep.passed());
  CHECK(rep.covered == 14348907u);
  CHECK(rep.unresolved.empty());
  CHECK(rep.member_weights == std::map<std::size_t, std::uint64_t>{{0, 1}, {9, 50}, {12, 30}});
  CHECK(rep.to_text().find("verdict: PASS") != std::string::npos);
}

TEST_CASE("doubling e ^ U gives the proper code of type 1,1,1,1,1,1") {
  const BPlusReport r = bplus_bminus_check();
  CHECK(r.ok);
  CHECK(r.doubled_dim == 4);
  CHECK(r.doubled_in_proper);
  CHECK(r.spans_equal);
  CHECK(r.plus_dim == 4);
  CHECK(r.minus_dim == 0);
  CHECK(r.doubled_weights == std::map<std::size_t, std::uint64_t>{{0, 1}, {18, 50}, {24, 30}});
}
