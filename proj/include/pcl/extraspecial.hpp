#pragma once

#include <mutex>

#include "constructions.hpp"
#include "gf2.hpp"
#include "perfect_code.hpp"

namespace pcl {

// G(m,1): m copies of D8; G(m,2): m-1 copies of D8 and one Q8.
enum class ExtraspecialFamily { Gm1, Gm2 };

inline std::string_view to_string(ExtraspecialFamily f) {
  return f == ExtraspecialFamily::Gm1 ? "gm1" : "gm2";
}

struct ExtraspecialClassification {
  bool is_extraspecial = false;
  unsigned m = 0;  // |G| = 2^(2m+1)
  std::optional<ExtraspecialFamily> family;
};

// Left-associated central product; order 2^(2m+1).
inline FiniteGroup build_family(unsigned m, ExtraspecialFamily family,
                                std::size_t max_order = kDefaultMaxOrder) {
  if (m == 0) throw Error("extraspecial family needs m >= 1");
  if (2 * m + 1 >= 64 || (std::size_t{1} << (2 * m + 1)) > max_order)
    throw Error("extraspecial group of order 2^" + std::to_string(2 * m + 1) +
                " exceeds maximum order " + std::to_string(max_order));
  const auto d8 = dihedral(8);
  const auto q8 = quaternion(8);
  FiniteGroup g = (m == 1 && family == ExtraspecialFamily::Gm2) ? q8 : d8;
  for (unsigned i = 2; i <= m; ++i)
    g = central_product(g, (i == m && family == ExtraspecialFamily::Gm2) ? q8 : d8, max_order);
  g.set_name("G(" + std::to_string(m) + "," + (family == ExtraspecialFamily::Gm1 ? "1" : "2") + ")");
  return g;
}

namespace detail {

inline std::size_t omega1_size(FiniteGroup const &G) { return omega1(G, G.all()).count(); }

// |Omega_1| of G(m,1) and G(m,2), computed from the constructions once per m.
inline std::pair<std::size_t, std::size_t> reference_omega1_sizes(unsigned m) {
  static std::mutex mu;
  static std::map<unsigned, std::pair<std::size_t, std::size_t>> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(m); it != cache.end()) return it->second;
  const std::size_t order = std::size_t{1} << (2 * m + 1);
  std::pair<std::size_t, std::size_t> v{
      omega1_size(build_family(m, ExtraspecialFamily::Gm1, order)),
      omega1_size(build_family(m, ExtraspecialFamily::Gm2, order))};
  cache.emplace(m, v);
  return v;
}

}  // namespace detail

// Z(G) of order 2, G/Z(G) elementary abelian, and G non-abelian.
inline ExtraspecialClassification is_extraspecial(FiniteGroup const &G) {
  ExtraspecialClassification out;
  const std::size_t n = G.order();
  if (n < 8 || !is_power_of_two(n)) return out;
  auto Z = center(G, whole(G));
  if (Z.order() != 2) return out;
  for (Element g = 0; g < n; ++g)
    if (!Z.contains(G.mul(g, g))) return out;
  const unsigned log2n = static_cast<unsigned>(std::countr_zero(n));
  if (log2n % 2 == 0) return out;  // unreachable for a non-degenerate commutator form
  out.is_extraspecial = true;
  out.m = (log2n - 1) / 2;

  const auto [gm1, gm2] = detail::reference_omega1_sizes(out.m);
  const auto count = detail::omega1_size(G);
  if (count == gm1 && gm1 != gm2) {
    out.family = ExtraspecialFamily::Gm1;
  } else if (count == gm2 && gm1 != gm2) {
    out.family = ExtraspecialFamily::Gm2;
  } else if (n <= 64) {
    if (isomorphic_small(G, build_family(out.m, ExtraspecialFamily::Gm1, n)))
      out.family = ExtraspecialFamily::Gm1;
    else if (isomorphic_small(G, build_family(out.m, ExtraspecialFamily::Gm2, n)))
      out.family = ExtraspecialFamily::Gm2;
  }
  return out;
}

// Commutator form on G/Z(G) in a greedily chosen basis.
struct SymplecticForm {
  std::size_t dimension = 0;
  BitMatrix matrix;
  std::vector<Element> basis_lifts;
  Element central = 0;  // generator of Z(G)
};

inline SymplecticForm symplectic_form(FiniteGroup const &G) {
  if (!is_extraspecial(G).is_extraspecial) throw Error("symplectic form needs an extraspecial group");
  auto Z = center(G, whole(G));
  SymplecticForm f;
  f.central = Z.members().at(1);
  Subgroup span = Z;
  for (Element g = 0; g < G.order() && span.order() < G.order(); ++g) {
    if (span.contains(g)) continue;
    f.basis_lifts.push_back(g);
    span = join(G, span, {g});
  }
  f.dimension = f.basis_lifts.size();
  f.matrix = BitMatrix(f.dimension);
  for (std::size_t i = 0; i < f.dimension; ++i)
    for (std::size_t j = 0; j < f.dimension; ++j)
      f.matrix.set(i, j, commutator(G, f.basis_lifts[i], f.basis_lifts[j]) == f.central);
  if (f.matrix.rank() != f.dimension) throw Error("commutator form is degenerate");
  return f;
}

// Perfect-code verdict for H in an extraspecial 2-group G, by structure:
// non-abelian, abelian and not normal, or maximal abelian with G in family Gm1.
// The trivial subgroup is always a code.
inline CodeVerdict classify_extraspecial(FiniteGroup const &G, Subgroup const &H) {
  auto cls = is_extraspecial(G);
  if (!cls.is_extraspecial) throw Error("group is not extraspecial");
  if (!cls.family) throw Error("extraspecial family could not be determined");
  CodeVerdict v{false, Criterion::ClassificationExtraspecial, std::nullopt, std::nullopt, {}};
  if (H.order() == 1) {
    // The normal-abelian exclusion relies on Z(G) <= H, which fails for H = 1.
    v.is_perfect_code = true;
    v.note = "trivial subgroup";
  } else if (!is_abelian(G, H.elements())) {
    v.is_perfect_code = true;
    v.note = "non-abelian";
  } else if (!is_normal(G, whole(G), H)) {
    v.is_perfect_code = true;
    v.note = "abelian, not normal";
  } else if (is_maximal_abelian(G, H)) {
    v.is_perfect_code = *cls.family == ExtraspecialFamily::Gm1;
    v.note = std::string("maximal abelian in ") + std::string(to_string(*cls.family));
  } else {
    v.note = "normal abelian, not maximal";
  }
  return v;
}

// Perfect-code verdict for H <= G where the Sylow 2-subgroup G2 of G is
// extraspecial. Cases are tried in order: odd |H|, H2 non-abelian,
// |N_G(H2)_2| < |G2|, |H2|^2 = 2|G2| with G2 in Gm1. All matching cases are
// listed in the note.
inline CodeVerdict classify_sylow2_extraspecial(FiniteGroup const &G, Subgroup const &H) {
  auto g2 = sylow_2_subgroup(G, whole(G));
  auto cls = is_extraspecial(induced_group(G, g2).group);
  if (!cls.is_extraspecial) throw Error("Sylow 2-subgroup is not extraspecial");
  if (!cls.family) throw Error("extraspecial family could not be determined");

  CodeVerdict v{false, Criterion::ClassificationSylow2, std::nullopt, std::nullopt, {}};
  if (H.order() % 2 == 1) {
    v.is_perfect_code = true;
    v.note = "odd order";
    return v;
  }
  auto h2 = sylow_2_subgroup(G, H);
  std::vector<std::string> matched;
  if (!is_abelian(G, h2.elements())) {
    matched.emplace_back("H2 non-abelian");
  } else {
    const auto n2 = two_part(normalizer(G, h2).order());
    if (n2 < g2.order()) matched.emplace_back("H2 abelian, small normalizer");
    if (h2.order() * h2.order() == 2 * g2.order() && *cls.family == ExtraspecialFamily::Gm1)
      matched.emplace_back("H2 abelian of order sqrt(2|G2|), G2 in gm1");
  }
  v.is_perfect_code = !matched.empty();
  for (std::size_t i = 0; i < matched.size(); ++i) v.note += (i ? "; " : "") + matched[i];
  if (matched.empty()) v.note = "no case applies";
  return v;
}

}  // namespace pcl
