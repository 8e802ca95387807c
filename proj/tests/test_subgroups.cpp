#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "test_util.hpp"

using namespace pcl;
using testutil::elem;

namespace {

std::set<oracle::Set> as_sets(std::vector<Subgroup> const &subs) {
  std::set<oracle::Set> out;
  for (auto const &S : subs) out.insert(oracle::to_set(S.elements()));
  return out;
}

}  // namespace

TEST_CASE("all_subgroups matches the layered oracle", "[subgroup-analysis]") {
  // Frozen from oracle::layered_subgroups.
  const std::vector<std::pair<std::string, std::size_t>> expected{
      {"Z2^2", 5}, {"D8", 10}, {"S4", 30}, {"Q8", 6}, {"A4", 10}, {"SL23", 15}};
  for (auto const &[name, count] : expected) {
    auto G = build_named(name);
    auto subs = all_subgroups(G);
    auto ref = oracle::layered_subgroups(G);
    INFO(name);
    REQUIRE(ref.size() == count);
    REQUIRE(subs.size() == count);
    REQUIRE(as_sets(subs) == ref);
  }
}

TEST_CASE("all_subgroups on order-32 extraspecial groups matches the oracle", "[subgroup-analysis]") {
  for (auto fam : {ExtraspecialFamily::Gm1, ExtraspecialFamily::Gm2}) {
    auto G = build_family(2, fam);
    auto subs = all_subgroups(G);
    REQUIRE(as_sets(subs) == oracle::layered_subgroups(G));
  }
}

TEST_CASE("all_subgroups canonical order and cap", "[subgroup-analysis]") {
  auto G = dihedral(8);
  auto subs = all_subgroups(G);
  REQUIRE(subs.front().order() == 1);
  REQUIRE(subs.back().order() == 8);
  for (std::size_t i = 1; i < subs.size(); ++i)
    REQUIRE(canonical_less(subs[i - 1].elements(), subs[i].elements()));
  REQUIRE_THROWS_AS(all_subgroups(G, 4), Error);
}

TEST_CASE("sylow_2_subgroup", "[subgroup-analysis]") {
  auto S4 = symmetric(4);
  auto odd = closure(S4, {elem(S4, {{1, 2, 3}})});
  REQUIRE(sylow_2_subgroup(S4, odd).order() == 1);

  auto P = sylow_2_subgroup(S4, whole(S4));
  REQUIRE(P.order() == 8);
  REQUIRE(isomorphic_small(induced_group(S4, P).group, dihedral(8)).has_value());

  auto S3 = closure(S4, {elem(S4, {{1, 2}}), elem(S4, {{1, 2, 3}})});
  REQUIRE(S3.order() == 6);
  auto P3 = sylow_2_subgroup(S4, S3);
  REQUIRE(P3.order() == 2);
  REQUIRE(P3.elements().subset_of(S3.elements()));

  // least bitset among the three Sylow 2-subgroups, checked by enumeration
  std::vector<Subgroup> sylows;
  for (auto const &H : all_subgroups(S4))
    if (H.order() == 8) sylows.push_back(H);
  REQUIRE(sylows.size() == 3);
  auto least = *std::min_element(sylows.begin(), sylows.end(), [](auto const &a, auto const &b) {
    return compare_value(a.elements(), b.elements()) < 0;
  });
  REQUIRE(P == least);
}

TEST_CASE("normalizer", "[subgroup-analysis]") {
  auto S4 = symmetric(4);
  auto A4 = closure(S4, {elem(S4, {{1, 2, 3}}), elem(S4, {{2, 3, 4}})});
  REQUIRE(normalizer(S4, A4).order() == 24);

  auto N = normalizer(S4, closure(S4, {elem(S4, {{1, 2}})}));
  REQUIRE(N == closure(S4, {elem(S4, {{1, 2}}), elem(S4, {{3, 4}})}));

  auto N2 = normalizer(S4, closure(S4, {elem(S4, {{1, 2}, {3, 4}})}));
  REQUIRE(N2.order() == 8);
  REQUIRE(isomorphic_small(induced_group(S4, N2).group, dihedral(8)).has_value());
}

TEST_CASE("center", "[subgroup-analysis]") {
  auto Z6 = cyclic(6);
  REQUIRE(center(Z6, whole(Z6)).order() == 6);
  auto D8 = dihedral(8);
  REQUIRE(center(D8, whole(D8)).members() == std::vector<Element>{0, 2});
  auto G21 = build_family(2, ExtraspecialFamily::Gm1);
  REQUIRE(center(G21, whole(G21)).order() == 2);
}

TEST_CASE("derived and Frattini subgroups", "[subgroup-analysis]") {
  auto V = build_named("Z2^3");
  REQUIRE(derived_subgroup(V, whole(V)).order() == 1);
  auto D8 = dihedral(8);
  auto Z = center(D8, whole(D8));
  REQUIRE(derived_subgroup(D8, whole(D8)) == Z);
  REQUIRE(frattini_subgroup(D8, whole(D8)) == Z);

  auto Z4 = cyclic(4);
  auto phi = frattini_subgroup(Z4, whole(Z4));
  REQUIRE(phi.members() == std::vector<Element>{0, 2});

  // oracle: intersection of maximal subgroups from the layered enumeration
  auto S4 = symmetric(4);
  auto all = oracle::layered_subgroups(S4);
  oracle::Set inter;
  for (Element g = 0; g < 24; ++g) inter.insert(g);
  for (auto const &M : all) {
    if (M.size() == 24) continue;
    bool maximal = true;
    for (auto const &K : all)
      if (K.size() > M.size() && K.size() < 24 && std::includes(K.begin(), K.end(), M.begin(), M.end()))
        maximal = false;
    if (!maximal) continue;
    oracle::Set next;
    std::set_intersection(inter.begin(), inter.end(), M.begin(), M.end(), std::inserter(next, next.end()));
    inter = next;
  }
  REQUIRE(oracle::to_set(frattini_subgroup(S4, whole(S4)).elements()) == inter);
  REQUIRE(inter.size() == 1);
}

TEST_CASE("coset_decomposition", "[subgroup-analysis]") {
  auto S4 = symmetric(4);
  REQUIRE(coset_decomposition(S4, whole(S4)).size() == 1);
  auto triv = coset_decomposition(S4, trivial(S4));
  REQUIRE(triv.size() == 24);
  auto A4 = closure(S4, {elem(S4, {{1, 2, 3}}), elem(S4, {{2, 3, 4}})});
  auto d = coset_decomposition(S4, A4);
  REQUIRE(d.size() == 2);
  REQUIRE(d.representatives.front() == 0);
  A4.elements().for_each([&](Element h) { REQUIRE(d.coset_of[h] == 0); });
}

TEST_CASE("abelian_invariants", "[subgroup-analysis]") {
  auto D8 = dihedral(8);
  REQUIRE(abelian_invariants(D8, trivial(D8)).cyclic_factors.empty());
  auto Q8 = quaternion(8);
  auto I = closure(Q8, {1});
  REQUIRE(is_maximal_abelian(Q8, I));
  REQUIRE(abelian_invariants(Q8, I).cyclic_factors == std::vector<std::uint64_t>{4});
  auto klein = closure(D8, {2, testutil::kRef});
  REQUIRE(abelian_invariants(D8, klein).cyclic_factors == std::vector<std::uint64_t>{2, 2});
  auto Z12 = cyclic(12);
  REQUIRE(abelian_invariants(Z12, whole(Z12)).cyclic_factors == std::vector<std::uint64_t>{4, 3});
  auto G = build_named("Z4xZ2^2");
  auto inv = abelian_invariants(G, whole(G));
  REQUIRE(inv.cyclic_factors == std::vector<std::uint64_t>{4, 2, 2});
  REQUIRE(inv.product() == 16);
  REQUIRE_THROWS_AS(abelian_invariants(D8, whole(D8)), Error);
}

TEST_CASE("is_maximal_abelian agrees with enumeration", "[subgroup-analysis]") {
  auto D8 = dihedral(8);
  REQUIRE(is_maximal_abelian(D8, closure(D8, {testutil::kRot})));
  REQUIRE_FALSE(is_maximal_abelian(D8, center(D8, whole(D8))));
  auto Z6 = cyclic(6);
  REQUIRE(is_maximal_abelian(Z6, whole(Z6)));

  for (auto name : {"D8", "Q8", "S4", "SL23"}) {
    auto G = build_named(name);
    auto subs = all_subgroups(G);
    for (auto const &H : subs) {
      bool by_enum = is_abelian(G, H.elements());
      for (auto const &K : subs)
        if (by_enum && K.order() > H.order() && H.elements().subset_of(K.elements()) &&
            is_abelian(G, K.elements()))
          by_enum = false;
      REQUIRE(is_maximal_abelian(G, H) == by_enum);
    }
  }
}

TEST_CASE("isomorphic_small", "[subgroup-analysis]") {
  auto D8 = dihedral(8);
  auto self = isomorphic_small(D8, D8);
  REQUIRE(self);
  REQUIRE(is_isomorphism(D8, D8, *self));
  REQUIRE_FALSE(isomorphic_small(D8, quaternion(8)));
  REQUIRE_FALSE(isomorphic_small(cyclic(8), build_named("Z4xZ2")));
  REQUIRE_FALSE(isomorphic_small(cyclic(6), cyclic(8)));
  auto s3 = FiniteGroup::from_permutations(3, {{1, 0, 2}, {1, 2, 0}});
  auto iso = isomorphic_small(s3, dihedral(6));
  REQUIRE(iso);
  REQUIRE(is_isomorphism(s3, dihedral(6), *iso));
  REQUIRE_THROWS_AS(isomorphic_small(build_family(3, ExtraspecialFamily::Gm1),
                                     build_family(3, ExtraspecialFamily::Gm1)),
                    Error);
}

TEST_CASE("exponent-4 subgroups of extraspecial groups are normal", "[subgroup-analysis]") {
  for (unsigned m : {1u, 2u})
    for (auto fam : {ExtraspecialFamily::Gm1, ExtraspecialFamily::Gm2}) {
      auto G = build_family(m, fam);
      for (auto const &H : all_subgroups(G))
        if (exponent(G, H.elements()) == 4) REQUIRE(is_normal(G, whole(G), H));
    }
}
