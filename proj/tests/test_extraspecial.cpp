#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "test_util.hpp"

using namespace pcl;
using testutil::elem;

namespace {

std::vector<FiniteGroup> small_extraspecials() {
  std::vector<FiniteGroup> out;
  for (unsigned m : {1u, 2u})
    for (auto f : {ExtraspecialFamily::Gm1, ExtraspecialFamily::Gm2}) out.push_back(build_family(m, f));
  return out;
}

}  // namespace

TEST_CASE("named constructions", "[extraspecial]") {
  auto D8 = build_named("D8");
  REQUIRE(D8.order() == 8);
  REQUIRE(oracle::count_if_square_is_one(D8) == 6);
  auto Q8 = build_named("Q8");
  REQUIRE(oracle::count_if_square_is_one(Q8) == 2);

  auto SL = build_named("SL23");
  REQUIRE(SL.order() == 24);
  auto P = sylow_2_subgroup(SL, whole(SL));
  REQUIRE(isomorphic_small(induced_group(SL, P).group, Q8).has_value());

  REQUIRE(build_named("Z2^3").order() == 8);
  REQUIRE(build_named("D8xZ3").order() == 24);
  REQUIRE(build_named("Q16").order() == 16);
  REQUIRE_THROWS_AS(build_named("D7"), Error);
  REQUIRE_THROWS_AS(build_named("Q12"), Error);
  REQUIRE_THROWS_AS(build_named("X4"), Error);
  REQUIRE_THROWS_AS(build_named("Z"), Error);
}

TEST_CASE("central products", "[extraspecial]") {
  auto D8 = dihedral(8), Q8 = quaternion(8);
  auto dd = central_product(D8, D8);
  REQUIRE(dd.order() == 32);
  auto qq = central_product(Q8, Q8);
  auto iso = isomorphic_small(qq, dd);
  REQUIRE(iso);
  REQUIRE(is_isomorphism(qq, dd, *iso));

  auto dq = central_product(D8, Q8);
  REQUIRE(oracle::count_if_square_is_one(dd) == 20);
  REQUIRE(oracle::count_if_square_is_one(dq) == 12);
  REQUIRE_FALSE(isomorphic_small(dq, dd));

  REQUIRE_THROWS_AS(central_product(D8, build_named("Z2^2")), Error);
  REQUIRE_THROWS_AS(central_product(D8, cyclic(3)), Error);
}

TEST_CASE("build_family", "[extraspecial]") {
  auto g11 = build_family(1, ExtraspecialFamily::Gm1);
  REQUIRE(is_isomorphism(g11, dihedral(8), *isomorphic_small(g11, dihedral(8))));
  REQUIRE(isomorphic_small(build_family(1, ExtraspecialFamily::Gm2), quaternion(8)));

  auto g21 = build_family(2, ExtraspecialFamily::Gm1);
  auto g22 = build_family(2, ExtraspecialFamily::Gm2);
  REQUIRE(g22.order() == 32);
  REQUIRE(oracle::count_if_square_is_one(g22) == 12);
  REQUIRE(oracle::count_if_square_is_one(g21) == 20);
  REQUIRE(center(g21, whole(g21)).order() == 2);

  REQUIRE(build_family(3, ExtraspecialFamily::Gm2).order() == 128);
  REQUIRE_THROWS_AS(build_family(4, ExtraspecialFamily::Gm1), Error);
  REQUIRE_THROWS_AS(build_family(0, ExtraspecialFamily::Gm1), Error);
  REQUIRE_THROWS_AS(build_family(3, ExtraspecialFamily::Gm1, 64), Error);
}

TEST_CASE("is_extraspecial", "[extraspecial]") {
  REQUIRE_FALSE(is_extraspecial(cyclic(8)).is_extraspecial);
  REQUIRE_FALSE(is_extraspecial(build_named("Z2^3")).is_extraspecial);
  REQUIRE_FALSE(is_extraspecial(dihedral(16)).is_extraspecial);
  REQUIRE_FALSE(is_extraspecial(quaternion(16)).is_extraspecial);
  REQUIRE_FALSE(is_extraspecial(symmetric(4)).is_extraspecial);
  REQUIRE_FALSE(is_extraspecial(build_named("D8xZ2")).is_extraspecial);

  auto d8 = is_extraspecial(dihedral(8));
  REQUIRE(d8.is_extraspecial);
  REQUIRE(d8.m == 1);
  REQUIRE(d8.family == ExtraspecialFamily::Gm1);
  REQUIRE(is_extraspecial(quaternion(8)).family == ExtraspecialFamily::Gm2);

  auto qq = is_extraspecial(central_product(quaternion(8), quaternion(8)));
  REQUIRE(qq.is_extraspecial);
  REQUIRE(qq.m == 2);
  REQUIRE(qq.family == ExtraspecialFamily::Gm1);

  auto g32 = is_extraspecial(build_family(3, ExtraspecialFamily::Gm2));
  REQUIRE(g32.m == 3);
  REQUIRE(g32.family == ExtraspecialFamily::Gm2);
}

TEST_CASE("symplectic form", "[extraspecial]") {
  auto D8 = dihedral(8);
  auto f = symplectic_form(D8);
  REQUIRE(f.dimension == 2);
  REQUIRE(f.matrix.row(0) == 0b10);
  REQUIRE(f.matrix.row(1) == 0b01);
  REQUIRE(f.central == 2);

  for (auto const &G : small_extraspecials()) {
    auto s = symplectic_form(G);
    REQUIRE(s.matrix.alternating());
    REQUIRE(s.matrix.rank() == s.dimension);
    REQUIRE(s.dimension == 2 * is_extraspecial(G).m);
    // hyperbolic pair iff lifts do not commute
    for (std::size_t i = 0; i < s.dimension; ++i)
      for (std::size_t j = 0; j < s.dimension; ++j) {
        const auto x = s.basis_lifts[i], y = s.basis_lifts[j];
        REQUIRE(s.matrix.get(i, j) == (G.mul(x, y) != G.mul(y, x)));
      }
  }
  REQUIRE_THROWS_AS(symplectic_form(cyclic(8)), Error);
}

TEST_CASE("bit matrix rank", "[extraspecial]") {
  BitMatrix m(3);
  m.set(0, 1, true);
  m.set(1, 0, true);
  REQUIRE(m.rank() == 2);
  REQUIRE(m.alternating());
  m.set(2, 2, true);
  REQUIRE(m.rank() == 3);
  REQUIRE_FALSE(m.alternating());
  BitMatrix dep(3);
  for (std::size_t i = 0; i < 3; ++i) {
    dep.set(i, 0, true);
    dep.set(i, 1, true);
  }
  REQUIRE(dep.rank() == 1);
}

TEST_CASE("classify_extraspecial spot values", "[extraspecial]") {
  auto Q8 = quaternion(8);
  auto i = closure(Q8, {1});
  auto v = classify_extraspecial(Q8, i);
  REQUIRE_FALSE(v.is_perfect_code);
  REQUIRE(v.criterion == Criterion::ClassificationExtraspecial);

  auto D8 = dihedral(8);
  REQUIRE(classify_extraspecial(D8, closure(D8, {2, testutil::kRef})).is_perfect_code);
  REQUIRE(classify_extraspecial(D8, trivial(D8)).is_perfect_code);

  auto G21 = build_family(2, ExtraspecialFamily::Gm1);
  REQUIRE_FALSE(classify_extraspecial(G21, center(G21, whole(G21))).is_perfect_code);
  REQUIRE_FALSE(decide(G21, center(G21, whole(G21))).is_perfect_code);

  REQUIRE_THROWS_AS(classify_extraspecial(cyclic(8), trivial(cyclic(8))), Error);
}

TEST_CASE("classify_sylow2_extraspecial spot values", "[extraspecial]") {
  auto S4 = symmetric(4);
  auto v = classify_sylow2_extraspecial(S4, closure(S4, {elem(S4, {{1, 2, 3}})}));
  REQUIRE(v.is_perfect_code);
  REQUIRE(v.note == "odd order");

  auto bad = closure(S4, {elem(S4, {{1, 2}, {3, 4}})});
  REQUIRE_FALSE(classify_sylow2_extraspecial(S4, bad).is_perfect_code);
  REQUIRE_FALSE(decide(S4, bad).is_perfect_code);

  auto A4 = closure(S4, {elem(S4, {{1, 2, 3}}), elem(S4, {{2, 3, 4}})});
  auto a = classify_sylow2_extraspecial(S4, A4);
  REQUIRE(a.is_perfect_code);
  REQUIRE(decide(S4, A4).is_perfect_code);

  auto Q16 = quaternion(16);
  REQUIRE_THROWS_AS(classify_sylow2_extraspecial(Q16, trivial(Q16)), Error);
}

TEST_CASE("classifications agree with decide on small groups", "[extraspecial]") {
  for (auto const &G : small_extraspecials())
    for (auto const &H : all_subgroups(G))
      REQUIRE(classify_extraspecial(G, H).is_perfect_code == decide(G, H).is_perfect_code);
  for (auto name : {"S4", "SL23", "D8xZ3"}) {
    auto G = build_named(name);
    for (auto const &H : all_subgroups(G))
      REQUIRE(classify_sylow2_extraspecial(G, H).is_perfect_code == decide(G, H).is_perfect_code);
  }
}

TEST_CASE("extraspecial structure", "[extraspecial]") {
  for (auto const &G : small_extraspecials()) {
    INFO(G.name());
    auto Z = center(G, whole(G));
    REQUIRE(Z.order() == 2);
    REQUIRE(derived_subgroup(G, whole(G)) == Z);
    REQUIRE(frattini_subgroup(G, whole(G)) == Z);
    REQUIRE(exponent(G, G.all()) == 4);
    REQUIRE(squares(G).members() == std::vector<Element>{Z.members()[1]});
  }
}

TEST_CASE("maximal abelian subgroup types", "[extraspecial]") {
  for (unsigned m : {1u, 2u})
    for (auto fam : {ExtraspecialFamily::Gm1, ExtraspecialFamily::Gm2}) {
      auto G = build_family(m, fam);
      std::set<std::vector<std::uint64_t>> types;
      for (auto const &H : all_subgroups(G))
        if (is_maximal_abelian(G, H)) {
          REQUIRE(H.order() == (std::size_t{1} << (m + 1)));
          types.insert(abelian_invariants(G, H).cyclic_factors);
        }
      std::vector<std::uint64_t> z4(m, 2), el(m + 1, 2);
      z4[0] = 4;
      std::set<std::vector<std::uint64_t>> expected{z4};
      if (fam == ExtraspecialFamily::Gm1) expected.insert(el);
      REQUIRE(types == expected);
    }
}
