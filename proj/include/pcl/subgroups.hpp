#pragma once

#include <optional>
#include <unordered_set>

#include "group.hpp"

namespace pcl {

inline constexpr std::size_t kDefaultEnumerationCap = 128;

// Every subgroup of H (default: of G) exactly once, in canonical order.
// Built by joining cyclic subgroups until no new subgroup appears.
inline std::vector<Subgroup> all_subgroups(FiniteGroup const &G, Subgroup const &H,
                                           std::size_t cap = kDefaultEnumerationCap) {
  if (H.order() > cap)
    throw Error("subgroup enumeration capped at order " + std::to_string(cap));

  std::vector<Subgroup> cyclic;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  H.elements().for_each([&](Element g) {
    auto C = closure(G, {g});
    if (seen.insert(C.elements()).second) cyclic.push_back(std::move(C));
  });

  std::vector<Subgroup> found = cyclic;
  std::vector<Subgroup> frontier = cyclic;
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (auto const &S : frontier) {
      for (auto const &C : cyclic) {
        if (C.elements().subset_of(S.elements())) continue;
        auto J = join(G, S, C.generators());
        if (seen.insert(J.elements()).second) {
          found.push_back(J);
          next.push_back(std::move(J));
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(found.begin(), found.end(), [](Subgroup const &a, Subgroup const &b) {
    return canonical_less(a.elements(), b.elements());
  });
  return found;
}

inline std::vector<Subgroup> all_subgroups(FiniteGroup const &G,
                                           std::size_t cap = kDefaultEnumerationCap) {
  return all_subgroups(G, whole(G), cap);
}

// {g in G : K^g = K}
inline Subgroup normalizer(FiniteGroup const &G, Subgroup const &K) {
  auto gens = K.generators();
  if (gens.empty()) gens = K.members();
  ElementSet out(G.order());
  for (Element g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (auto k : gens)
      if (!K.contains(G.conjugate(k, g))) {
        ok = false;
        break;
      }
    if (ok) out.insert(g);
  }
  return Subgroup(std::move(out), {});
}

// Normalizer of K inside the subgroup `within`.
inline Subgroup normalizer(FiniteGroup const &G, Subgroup const &within, Subgroup const &K) {
  return Subgroup(normalizer(G, K).elements() & within.elements(), {});
}

inline bool is_normal(FiniteGroup const &G, Subgroup const &within, Subgroup const &K) {
  return within.elements().subset_of(normalizer(G, K).elements());
}

inline Subgroup centralizer(FiniteGroup const &G, Subgroup const &within, ElementSet const &S) {
  ElementSet out(G.order());
  auto m = S.members();
  within.elements().for_each([&](Element g) {
    for (auto s : m)
      if (G.mul(g, s) != G.mul(s, g)) return;
    out.insert(g);
  });
  return Subgroup(std::move(out), {});
}

// Z(H)
inline Subgroup center(FiniteGroup const &G, Subgroup const &H) {
  return centralizer(G, H, H.elements());
}

// Extends the 2-subgroup P inside H until its order is the 2-part of |H|.
// Each step adjoins g in N_H(P) \ P with g^2 in P, doubling |P|.
inline Subgroup extend_to_sylow_2(FiniteGroup const &G, Subgroup const &H, Subgroup P) {
  const std::size_t target = two_part(H.order());
  while (P.order() < target) {
    auto N = normalizer(G, H, P);
    Element pick = static_cast<Element>(G.order());
    N.elements().for_each([&](Element g) {
      if (pick == G.order() && !P.contains(g) && P.contains(G.mul(g, g))) pick = g;
    });
    if (pick == G.order()) throw Error("Sylow extension failed; P is not a 2-subgroup of H");
    P = join(G, P, {pick});
  }
  return P;
}

// The Sylow 2-subgroup of H with least bitset value.
inline Subgroup sylow_2_subgroup(FiniteGroup const &G, Subgroup const &H) {
  auto P = extend_to_sylow_2(G, H, trivial(G));
  Subgroup best = P;
  H.elements().for_each([&](Element h) {
    auto Q = conjugate_subgroup(G, P, h);
    if (compare_value(Q.elements(), best.elements()) < 0) best = std::move(Q);
  });
  return best;
}

inline Subgroup derived_subgroup(FiniteGroup const &G, Subgroup const &H) {
  auto m = H.members();
  Subgroup D = trivial(G);
  for (auto x : m)
    for (auto y : m) {
      auto c = commutator(G, x, y);
      if (!D.contains(c)) D = join(G, D, {c});
    }
  return D;
}

// Maximal proper subgroups of H, taken from the enumerated lattice.
inline std::vector<Subgroup> maximal_subgroups(FiniteGroup const &G, Subgroup const &H,
                                               std::size_t cap = kDefaultEnumerationCap) {
  auto subs = all_subgroups(G, H, cap);
  std::vector<Subgroup> out;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (subs[i].order() == H.order()) continue;
    bool maximal = true;
    for (std::size_t j = 0; j < subs.size() && maximal; ++j) {
      if (subs[j].order() <= subs[i].order() || subs[j].order() == H.order()) continue;
      if (subs[i].elements().subset_of(subs[j].elements())) maximal = false;
    }
    if (maximal) out.push_back(subs[i]);
  }
  return out;
}

inline Subgroup frattini_subgroup(FiniteGroup const &G, Subgroup const &H,
                                  std::size_t cap = kDefaultEnumerationCap) {
  ElementSet acc = H.elements();
  for (auto const &M : maximal_subgroups(G, H, cap)) acc &= M.elements();
  return Subgroup(std::move(acc), {});
}

// Right cosets Hg. Representative of each coset is its least element index,
// so the coset H itself has representative 0.
struct CosetDecomposition {
  Subgroup subgroup;
  std::vector<Element> representatives;
  std::vector<std::size_t> coset_of;  // element -> index into representatives

  std::size_t size() const { return representatives.size(); }
};

inline CosetDecomposition coset_decomposition(FiniteGroup const &G, Subgroup const &ambient,
                                              Subgroup const &H) {
  CosetDecomposition d{H, {}, std::vector<std::size_t>(G.order(), SIZE_MAX)};
  auto hs = H.members();
  ambient.elements().for_each([&](Element g) {
    if (d.coset_of[g] != SIZE_MAX) return;
    const std::size_t idx = d.representatives.size();
    d.representatives.push_back(g);
    for (auto h : hs) d.coset_of[G.mul(h, g)] = idx;
  });
  return d;
}

inline CosetDecomposition coset_decomposition(FiniteGroup const &G, Subgroup const &H) {
  return coset_decomposition(G, whole(G), H);
}

// Primary cyclic factors, largest first, e.g. Z4 x Z2 x Z2 -> {4, 2, 2}.
struct AbelianInvariants {
  std::vector<std::uint64_t> cyclic_factors;

  std::uint64_t product() const {
    std::uint64_t p = 1;
    for (auto f : cyclic_factors) p *= f;
    return p;
  }
  friend bool operator==(AbelianInvariants const &, AbelianInvariants const &) = default;
};

inline AbelianInvariants abelian_invariants(FiniteGroup const &G, Subgroup const &H) {
  if (!is_abelian(G, H.elements())) throw Error("abelian invariants requested for a non-abelian subgroup");
  AbelianInvariants out;
  std::size_t n = H.order();
  auto ms = H.members();
  for (std::uint64_t p = 2; n > 1; ++p) {
    if (n % p) continue;
    std::uint64_t pk_max = 1;
    while (n % p == 0) {
      n /= p;
      pk_max *= p;
    }
    // logs[k] = log_p #{h : h^(p^k) = 1}
    std::vector<std::uint64_t> logs{0};
    for (std::uint64_t pk = p; pk <= pk_max; pk *= p) {
      std::uint64_t c = 0;
      for (auto h : ms)
        if (pk % G.element_order(h) == 0) ++c;
      std::uint64_t l = 0;
      while (c > 1) {
        c /= p;
        ++l;
      }
      logs.push_back(l);
    }
    logs.push_back(logs.back());
    // at_least[k] = number of factors of order >= p^k
    std::uint64_t pk = p;
    for (std::size_t k = 1; k + 1 < logs.size(); ++k, pk *= p) {
      const auto at_least = logs[k] - logs[k - 1];
      const auto at_least_next = logs[k + 1] - logs[k];
      for (auto i = at_least_next; i < at_least; ++i) out.cyclic_factors.push_back(pk);
    }
  }
  std::sort(out.cyclic_factors.rbegin(), out.cyclic_factors.rend());
  return out;
}

// H is maximal abelian iff H is abelian and C_G(H) = H.
inline bool is_maximal_abelian(FiniteGroup const &G, Subgroup const &H) {
  if (!is_abelian(G, H.elements())) return false;
  return centralizer(G, whole(G), H.elements()).elements() == H.elements();
}

namespace detail {

inline std::vector<std::size_t> class_sizes(FiniteGroup const &G) {
  std::vector<std::size_t> out(G.order());
  for (Element a = 0; a < G.order(); ++a) {
    std::size_t c = 0;
    for (Element g = 0; g < G.order(); ++g)
      if (G.mul(a, g) == G.mul(g, a)) ++c;
    out[a] = G.order() / c;
  }
  return out;
}

// Greedy generating set, preferring elements of large order.
inline std::vector<Element> small_generating_set(FiniteGroup const &G) {
  std::vector<Element> by_order(G.order());
  std::iota(by_order.begin(), by_order.end(), Element{0});
  std::stable_sort(by_order.begin(), by_order.end(), [&](Element a, Element b) {
    return G.element_order(a) > G.element_order(b);
  });
  std::vector<Element> gens;
  Subgroup S = trivial(G);
  for (auto g : by_order) {
    if (S.order() == G.order()) break;
    if (!S.contains(g)) {
      gens.push_back(g);
      S = join(G, S, {g});
    }
  }
  return gens;
}

}  // namespace detail

// A product-preserving bijection A -> B (indexed by A's elements), if one exists.
inline std::optional<std::vector<Element>> isomorphic_small(FiniteGroup const &A,
                                                            FiniteGroup const &B,
                                                            std::size_t cap = 64) {
  if (A.order() > cap || B.order() > cap)
    throw Error("isomorphism search capped at order " + std::to_string(cap));
  if (A.order() != B.order()) return std::nullopt;
  const std::size_t n = A.order();

  auto ca = detail::class_sizes(A), cb = detail::class_sizes(B);
  using Sig = std::pair<std::uint32_t, std::size_t>;
  std::vector<Sig> sa(n), sb(n);
  for (Element i = 0; i < n; ++i) {
    sa[i] = {A.element_order(i), ca[i]};
    sb[i] = {B.element_order(i), cb[i]};
  }
  {
    auto x = sa, y = sb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return std::nullopt;
  }

  const auto gens = detail::small_generating_set(A);
  std::vector<std::vector<Element>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (Element b = 0; b < n; ++b)
      if (sb[b] == sa[gens[i]]) candidates[i].push_back(b);

  std::vector<Element> images(gens.size());
  std::vector<Element> map;

  // Defines the map on <gens[0..k)> by walking generator edges; fails on a
  // clash or a collision.
  auto extend = [&](std::size_t k) {
    map.assign(n, static_cast<Element>(n));
    std::vector<bool> used(n, false);
    map[0] = 0;
    used[0] = true;
    std::vector<Element> queue{0};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const Element a = queue[qi];
      for (std::size_t j = 0; j < k; ++j) {
        const Element an = A.mul(a, gens[j]);
        const Element bn = B.mul(map[a], images[j]);
        if (map[an] == n) {
          if (used[bn]) return false;
          map[an] = bn;
          used[bn] = true;
          queue.push_back(an);
        } else if (map[an] != bn) {
          return false;
        }
      }
    }
    return true;
  };

  auto search = [&](auto &&self, std::size_t k) -> bool {
    if (k == gens.size()) return extend(k);
    for (auto b : candidates[k]) {
      images[k] = b;
      if (extend(k + 1) && self(self, k + 1)) return true;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return map;
}

inline bool is_isomorphism(FiniteGroup const &A, FiniteGroup const &B,
                           std::vector<Element> const &map) {
  if (A.order() != B.order() || map.size() != A.order()) return false;
  std::vector<bool> hit(B.order(), false);
  for (auto b : map) {
    if (b >= B.order() || hit[b]) return false;
    hit[b] = true;
  }
  for (Element x = 0; x < A.order(); ++x)
    for (Element y = 0; y < A.order(); ++y)
      if (map[A.mul(x, y)] != B.mul(map[x], map[y])) return false;
  return true;
}

}  // namespace pcl
