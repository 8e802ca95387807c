#pragma once

#include <optional>
#include <string_view>

#include "subgroups.hpp"

namespace pcl {

enum class Criterion {
  Graph,
  Transversal,
  SquareCoset,
  DoubleCoset,
  OmegaQuotient,
  ClassificationExtraspecial,
  ClassificationSylow2,
  OddOrder,
};

inline std::string_view to_string(Criterion c) {
  switch (c) {
    case Criterion::Graph: return "graph";
    case Criterion::Transversal: return "transversal";
    case Criterion::SquareCoset: return "square-coset";
    case Criterion::DoubleCoset: return "double-coset";
    case Criterion::OmegaQuotient: return "omega-quotient";
    case Criterion::ClassificationExtraspecial: return "classification-extraspecial";
    case Criterion::ClassificationSylow2: return "classification-sylow2-extraspecial";
    case Criterion::OddOrder: return "odd-order";
  }
  return "unknown";
}

// Inverse-closed, identity-free subset of G.
class ConnectionSet {
 public:
  static ConnectionSet make(FiniteGroup const &G, ElementSet elements) {
    if (elements.contains(0)) throw Error("connection set contains the identity");
    bool closed = true;
    elements.for_each([&](Element s) { closed = closed && elements.contains(G.inv(s)); });
    if (!closed) throw Error("connection set is not inverse-closed");
    return ConnectionSet(std::move(elements));
  }
  ElementSet const &elements() const { return elements_; }

 private:
  explicit ConnectionSet(ElementSet e) : elements_(std::move(e)) {}
  ElementSet elements_;
};

struct Transversal {
  std::vector<Element> representatives;  // one per right coset, in coset order
  bool inverse_closed = false;
};

struct CodeVerdict {
  bool is_perfect_code = false;
  Criterion criterion = Criterion::SquareCoset;
  std::optional<std::vector<Element>> witness;  // transversal or connection set
  std::optional<Element> counterexample;        // x with Hx lacking an involution
  std::string note;
};

// C is a perfect code of Cay(G,S): every vertex lies within distance one of
// exactly one element of C (x ~ y iff y x^-1 in S). This includes independence.
inline bool is_perfect_code_in_cayley_graph(FiniteGroup const &G, ConnectionSet const &S,
                                            ElementSet const &C) {
  auto codewords = C.members();
  for (Element g = 0; g < G.order(); ++g) {
    std::size_t hits = C.contains(g) ? 1 : 0;
    const Element gi = G.inv(g);
    for (auto c : codewords)
      if (S.elements().contains(G.mul(c, gi)) && ++hits > 1) return false;
    if (hits != 1) return false;
  }
  return true;
}

// Brute force over all inverse-closed connection sets. Exponential; only
// meant as an oracle on tiny groups.
inline std::optional<ConnectionSet> exhaustive_connection_set_search(FiniteGroup const &G,
                                                                     ElementSet const &C,
                                                                     std::size_t max_order = 16) {
  if (G.order() > max_order)
    throw Error("exhaustive connection-set search capped at order " + std::to_string(max_order));
  std::vector<std::pair<Element, Element>> pairs;
  for (Element g = 1; g < G.order(); ++g)
    if (g <= G.inv(g)) pairs.emplace_back(g, G.inv(g));
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    ElementSet s(G.order());
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1u) {
        s.insert(pairs[i].first);
        s.insert(pairs[i].second);
      }
    auto S = ConnectionSet::make(G, std::move(s));
    if (is_perfect_code_in_cayley_graph(G, S, C)) return S;
  }
  return std::nullopt;
}

// Backtracking search for an inverse-closed right transversal of H in
// `ambient`. Cosets are filled in canonical order; involutions are tried
// first, and a non-involution t also fixes the coset of t^-1.
inline std::optional<Transversal> find_inverse_closed_transversal(FiniteGroup const &G,
                                                                  Subgroup const &ambient,
                                                                  Subgroup const &H) {
  const auto cosets = coset_decomposition(G, ambient, H);
  const std::size_t k = cosets.size();
  constexpr Element kUnset = ~Element{0};

  std::vector<std::vector<Element>> candidates(k);
  ambient.elements().for_each([&](Element g) { candidates[cosets.coset_of[g]].push_back(g); });
  for (auto &c : candidates) {
    std::stable_partition(c.begin(), c.end(), [&](Element g) { return G.mul(g, g) == 0; });
    // Drop elements that can never be chosen: inverse in the same coset but not an involution.
    std::erase_if(c, [&](Element g) {
      return G.mul(g, g) != 0 && cosets.coset_of[G.inv(g)] == cosets.coset_of[g];
    });
  }

  std::vector<Element> rep(k, kUnset);
  rep[0] = 0;

  auto viable = [&](std::size_t ci) {
    for (auto g : candidates[ci]) {
      if (G.mul(g, g) == 0) return true;
      if (rep[cosets.coset_of[G.inv(g)]] == kUnset) return true;
    }
    return false;
  };

  auto search = [&](auto &&self, std::size_t from) -> bool {
    std::size_t ci = from;
    while (ci < k && rep[ci] != kUnset) ++ci;
    if (ci == k) return true;
    for (auto g : candidates[ci]) {
      const bool involution = G.mul(g, g) == 0;
      const std::size_t partner = cosets.coset_of[G.inv(g)];
      if (!involution && rep[partner] != kUnset) continue;
      rep[ci] = g;
      if (!involution) rep[partner] = G.inv(g);
      bool ok = true;
      for (std::size_t cj = ci + 1; cj < k && ok; ++cj)
        if (rep[cj] == kUnset) ok = viable(cj);
      if (ok && self(self, ci + 1)) return true;
      rep[ci] = kUnset;
      if (!involution) rep[partner] = kUnset;
    }
    return false;
  };

  if (!search(search, 1)) return std::nullopt;
  return Transversal{rep, true};
}

inline std::optional<Transversal> find_inverse_closed_transversal(FiniteGroup const &G,
                                                                  Subgroup const &H) {
  return find_inverse_closed_transversal(G, whole(G), H);
}

inline bool is_inverse_closed(FiniteGroup const &G, std::vector<Element> const &T) {
  auto set = ElementSet::of(G.order(), T);
  for (auto t : T)
    if (!set.contains(G.inv(t))) return false;
  return true;
}

// S = T \ {1}; H is then a perfect code of Cay(G,S).
inline ConnectionSet connection_set_from_transversal(FiniteGroup const &G, Subgroup const &H,
                                                     Transversal const &T) {
  auto set = ElementSet::of(G.order(), T.representatives);
  if (!set.contains(0)) throw Error("transversal does not contain the identity");
  if (!is_inverse_closed(G, T.representatives)) throw Error("transversal is not inverse-closed");
  auto cosets = coset_decomposition(G, H);
  std::vector<bool> hit(cosets.size(), false);
  for (auto t : T.representatives) {
    if (hit[cosets.coset_of[t]]) throw Error("transversal meets a coset twice");
    hit[cosets.coset_of[t]] = true;
  }
  if (std::find(hit.begin(), hit.end(), false) != hit.end())
    throw Error("transversal misses a coset");
  set.erase(0);
  return ConnectionSet::make(G, std::move(set));
}

namespace detail {

// |H| / |H cap H^x| is odd
inline bool odd_intersection_index(FiniteGroup const &G, Subgroup const &H, Element x) {
  auto Hx = conjugate_subgroup(G, H, x);
  const auto meet = (H.elements() & Hx.elements()).count();
  return (H.order() / meet) % 2 == 1;
}

inline bool coset_has_involution(FiniteGroup const &G, Subgroup const &H, Element x) {
  bool found = false;
  H.elements().for_each([&](Element h) {
    const Element y = G.mul(h, x);
    found = found || G.mul(y, y) == 0;
  });
  return found;
}

template <typename Qualifies>
CodeVerdict scan_cosets(FiniteGroup const &G, Subgroup const &ambient, Subgroup const &H,
                        Criterion criterion, Qualifies &&qualifies) {
  CodeVerdict v{true, criterion, std::nullopt, std::nullopt, {}};
  const auto members = ambient.members();
  for (auto x : members) {
    if (H.contains(x)) continue;  // y = 1 lies in Hx
    if (!qualifies(x) || !odd_intersection_index(G, H, x)) continue;
    if (!coset_has_involution(G, H, x)) {
      v.is_perfect_code = false;
      v.counterexample = x;
      return v;
    }
  }
  return v;
}

}  // namespace detail

// For every x with x^2 in H and odd |H : H cap H^x|, Hx contains y with y^2 = 1.
// The counterexample is the least failing x.
inline CodeVerdict square_coset_condition(FiniteGroup const &G, Subgroup const &ambient,
                                          Subgroup const &H) {
  return detail::scan_cosets(G, ambient, H, Criterion::SquareCoset,
                             [&](Element x) { return H.contains(G.mul(x, x)); });
}

inline CodeVerdict square_coset_condition(FiniteGroup const &G, Subgroup const &H) {
  return square_coset_condition(G, whole(G), H);
}

// Same as above, quantified over x with HxH = Hx^-1H. The counterexample is the
// least failing element; its double coset is recorded in the note.
inline CodeVerdict double_coset_condition(FiniteGroup const &G, Subgroup const &ambient,
                                          Subgroup const &H) {
  auto hs = H.members();
  auto double_coset = [&](Element x) {
    ElementSet d(G.order());
    for (auto a : hs)
      for (auto b : hs) d.insert(G.mul(G.mul(a, x), b));
    return d;
  };
  auto v = detail::scan_cosets(G, ambient, H, Criterion::DoubleCoset, [&](Element x) {
    return double_coset(x).contains(G.inv(x));
  });
  if (v.counterexample) {
    auto d = double_coset(*v.counterexample).members();
    std::string s = "double coset {";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    v.note = s + "}";
  }
  return v;
}

inline CodeVerdict double_coset_condition(FiniteGroup const &G, Subgroup const &H) {
  return double_coset_condition(G, whole(G), H);
}

// Cosets of H in N, each named by its least element.
struct OmegaCosetSets {
  std::vector<Element> quotient_omega;  // Hg with (Hg)^2 = H
  std::vector<Element> lifted_omega;    // Hg containing some y with y^2 = 1

  bool equal() const { return quotient_omega == lifted_omega; }
};

inline OmegaCosetSets omega_coset_sets(FiniteGroup const &G, Subgroup const &N, Subgroup const &H) {
  if (!H.elements().subset_of(N.elements()) || !is_normal(G, N, H))
    throw Error("omega coset sets need H normal in N");
  auto cosets = coset_decomposition(G, N, H);
  std::vector<bool> quotient(cosets.size(), false), lifted(cosets.size(), false);
  N.elements().for_each([&](Element g) {
    const Element sq = G.mul(g, g);
    const auto ci = cosets.coset_of[g];
    if (H.contains(sq)) quotient[ci] = true;
    if (sq == 0) lifted[ci] = true;
  });
  OmegaCosetSets out;
  for (std::size_t i = 0; i < cosets.size(); ++i) {
    if (quotient[i]) out.quotient_omega.push_back(cosets.representatives[i]);
    if (lifted[i]) out.lifted_omega.push_back(cosets.representatives[i]);
  }
  return out;
}

namespace detail {

inline CodeVerdict omega_verdict(OmegaCosetSets const &sets) {
  CodeVerdict v{sets.equal(), Criterion::OmegaQuotient, std::nullopt, std::nullopt, {}};
  if (!v.is_perfect_code) {
    for (auto r : sets.quotient_omega)
      if (!std::binary_search(sets.lifted_omega.begin(), sets.lifted_omega.end(), r)) {
        v.counterexample = r;
        break;
      }
  }
  return v;
}

}  // namespace detail

// Omega_1(N_G(H)/H) = Omega_1(N_G(H))H, valid when H is a 2-group or normal in G.
inline CodeVerdict omega_criterion(FiniteGroup const &G, Subgroup const &H) {
  const bool two_group = is_power_of_two(H.order());
  auto N = normalizer(G, H);
  if (!two_group && N.order() != G.order())
    throw Error("omega criterion requires a 2-subgroup or a normal subgroup");
  return detail::omega_verdict(omega_coset_sets(G, N, H));
}

// The four equivalent statements for H <= G, evaluated independently.
struct SylowCodeStatements {
  bool h2_code_in_p = false;         // H2 is a perfect code of P
  bool omega_sylow_quotient = false; // coset equality inside N_G(H2)_2
  bool omega_full_quotient = false;  // coset equality inside N_G(H2)
  bool h_code_in_g = false;          // H is a perfect code of G

  bool all_agree() const {
    return h2_code_in_p == omega_sylow_quotient && omega_sylow_quotient == omega_full_quotient &&
           omega_full_quotient == h_code_in_g;
  }
};

// The subgroups the four statements are evaluated in.
struct SylowContext {
  Subgroup h2;  // Sylow 2-subgroup of H
  Subgroup n;   // N_G(H2)
  Subgroup n2;  // Sylow 2-subgroup of N
  Subgroup p;   // Sylow 2-subgroup of G containing N2
};

inline SylowContext sylow_context(FiniteGroup const &G, Subgroup const &H) {
  SylowContext c;
  c.h2 = sylow_2_subgroup(G, H);
  c.n = normalizer(G, c.h2);
  c.n2 = sylow_2_subgroup(G, c.n);
  c.p = extend_to_sylow_2(G, whole(G), c.n2);
  return c;
}

inline SylowCodeStatements sylow_code_statements(FiniteGroup const &G, Subgroup const &H) {
  auto c = sylow_context(G, H);
  SylowCodeStatements s;
  s.h2_code_in_p = square_coset_condition(G, c.p, c.h2).is_perfect_code;
  s.omega_sylow_quotient = omega_coset_sets(G, c.n2, c.h2).equal();
  s.omega_full_quotient = omega_coset_sets(G, c.n, c.h2).equal();
  s.h_code_in_g = square_coset_condition(G, H).is_perfect_code;
  return s;
}

// Decides whether H is a perfect code of G via the coset equality inside
// N_G(H2)_2. With want_witness, a transversal is attached on success.
inline CodeVerdict decide(FiniteGroup const &G, Subgroup const &H, bool want_witness = false) {
  CodeVerdict v;
  if (H.order() % 2 == 1) {
    v = CodeVerdict{true, Criterion::OddOrder, std::nullopt, std::nullopt, {}};
  } else {
    auto h2 = sylow_2_subgroup(G, H);
    auto n2 = sylow_2_subgroup(G, normalizer(G, h2));
    v = detail::omega_verdict(omega_coset_sets(G, n2, h2));
  }
  if (want_witness && v.is_perfect_code) {
    auto T = find_inverse_closed_transversal(G, H);
    if (!T) throw Error("no inverse-closed transversal found for a positive verdict");
    v.witness = T->representatives;
  }
  return v;
}

}  // namespace pcl
