#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pcl {

// Raised for malformed input and violated preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Index of an element inside one FiniteGroup. Meaningless without its group.
using Element = std::uint32_t;

inline constexpr std::size_t kDefaultMaxOrder = 256;

// Dense bitset over 0..universe-1.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<Element>(i));
    return s;
  }

  template <typename Range>
  static ElementSet of(std::size_t universe, Range const &elements) {
    ElementSet s(universe);
    for (auto e : elements) s.insert(static_cast<Element>(e));
    return s;
  }

  std::size_t universe() const { return universe_; }

  void insert(Element e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void erase(Element e) { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }
  bool contains(Element e) const {
    return e < universe_ && ((words_[e >> 6] >> (e & 63)) & 1u);
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }

  template <typename F>
  void for_each(F &&f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      auto w = words_[wi];
      while (w) {
        auto bit = static_cast<std::size_t>(std::countr_zero(w));
        f(static_cast<Element>(wi * 64 + bit));
        w &= w - 1;
      }
    }
  }

  std::vector<Element> members() const {
    std::vector<Element> out;
    out.reserve(count());
    for_each([&](Element e) { out.push_back(e); });
    return out;
  }

  // Least member; universe() when empty.
  Element first() const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi)
      if (words_[wi]) return static_cast<Element>(wi * 64 + std::countr_zero(words_[wi]));
    return static_cast<Element>(universe_);
  }

  bool subset_of(ElementSet const &other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  ElementSet &operator&=(ElementSet const &o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  ElementSet &operator|=(ElementSet const &o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  friend ElementSet operator&(ElementSet a, ElementSet const &b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, ElementSet const &b) { return a |= b; }

  friend bool operator==(ElementSet const &, ElementSet const &) = default;

  // Compares as the integer sum of 2^e over members.
  friend std::strong_ordering compare_value(ElementSet const &a, ElementSet const &b) {
    for (std::size_t i = a.words_.size(); i-- > 0;) {
      if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
    }
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto w : words_) h = (h ^ w) * 0x100000001b3ull;
    return h;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(ElementSet const &s) const { return s.hash(); }
};

// Canonical subset order: by cardinality, then by bitset value.
inline bool canonical_less(ElementSet const &a, ElementSet const &b) {
  auto ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  return compare_value(a, b) < 0;
}

// A finite group given by its full multiplication table. Identity is index 0.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  // Validates and canonicalizes a Cayley table. Throws Error on any failed axiom.
  static FiniteGroup from_table(std::vector<std::vector<Element>> const &table,
                                std::string name = {},
                                std::size_t max_order = kDefaultMaxOrder) {
    const std::size_t n = table.size();
    if (n == 0) throw Error("group table is empty");
    if (n > max_order)
      throw Error("group order " + std::to_string(n) + " exceeds maximum " +
                  std::to_string(max_order));
    for (auto const &row : table) {
      if (row.size() != n) throw Error("group table is not square");
      for (auto v : row)
        if (v >= n) throw Error("table entry out of range");
    }

    std::size_t e = n;
    for (std::size_t i = 0; i < n && e == n; ++i) {
      bool ok = true;
      for (std::size_t g = 0; g < n && ok; ++g)
        ok = table[i][g] == g && table[g][i] == g;
      if (ok) e = i;
    }
    if (e == n) throw Error("table has no two-sided identity");

    // Relabel by swapping e and 0.
    std::vector<Element> relabel(n);
    std::iota(relabel.begin(), relabel.end(), Element{0});
    std::swap(relabel[0], relabel[e]);

    FiniteGroup g;
    g.n_ = n;
    g.name_ = std::move(name);
    g.table_.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        g.table_[relabel[a] * n + relabel[b]] = relabel[table[a][b]];

    g.inverse_.assign(n, static_cast<Element>(n));
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (g.mul(a, b) == 0 && g.mul(b, a) == 0) {
          g.inverse_[a] = b;
          break;
        }
      }
      if (g.inverse_[a] == n)
        throw Error("element " + std::to_string(a) + " has no two-sided inverse");
    }

    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) {
        const Element ab = g.mul(a, b);
        for (Element c = 0; c < n; ++c)
          if (g.mul(ab, c) != g.mul(a, g.mul(b, c)))
            throw Error("table is not associative at (" + std::to_string(a) + "," +
                        std::to_string(b) + "," + std::to_string(c) + ")");
      }

    g.compute_orders();
    return g;
  }

  // Builds the group generated by permutations of 0..degree-1 (images given as
  // arrays). Elements are ordered lexicographically by image array, so the
  // identity is index 0. Product a*b applies a first, then b.
  static FiniteGroup from_permutations(std::size_t degree,
                                       std::vector<std::vector<std::uint32_t>> const &gens,
                                       std::string name = {},
                                       std::size_t max_order = kDefaultMaxOrder) {
    using Perm = std::vector<std::uint32_t>;
    for (auto const &p : gens) {
      if (p.size() != degree) throw Error("permutation generators have inconsistent degree");
      std::vector<bool> seen(degree, false);
      for (auto v : p) {
        if (v >= degree || seen[v]) throw Error("generator is not a permutation");
        seen[v] = true;
      }
    }
    auto compose = [degree](Perm const &a, Perm const &b) {
      Perm r(degree);
      for (std::size_t x = 0; x < degree; ++x) r[x] = b[a[x]];
      return r;
    };

    Perm id(degree);
    std::iota(id.begin(), id.end(), 0u);
    std::set<Perm> seen{id};
    std::deque<Perm> queue{id};
    while (!queue.empty()) {
      Perm cur = std::move(queue.front());
      queue.pop_front();
      for (auto const &s : gens) {
        Perm next = compose(cur, s);
        if (seen.insert(next).second) {
          if (seen.size() > max_order)
            throw Error("permutation closure exceeds maximum order " +
                        std::to_string(max_order));
          queue.push_back(std::move(next));
        }
      }
    }

    std::vector<Perm> elems(seen.begin(), seen.end());
    std::map<Perm, Element> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], static_cast<Element>(i));
    std::vector<std::vector<Element>> table(elems.size(), std::vector<Element>(elems.size()));
    for (std::size_t a = 0; a < elems.size(); ++a)
      for (std::size_t b = 0; b < elems.size(); ++b)
        table[a][b] = index.at(compose(elems[a], elems[b]));
    auto g = from_table(table, std::move(name), max_order);
    g.permutations_ = std::move(elems);
    return g;
  }

  std::size_t order() const { return n_; }
  Element identity() const { return 0; }
  std::string const &name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  Element mul(Element a, Element b) const { return table_[a * n_ + b]; }
  Element inv(Element a) const { return inverse_[a]; }
  std::uint32_t element_order(Element a) const { return orders_[a]; }

  Element pow(Element a, std::uint64_t k) const {
    Element r = 0;
    for (k %= orders_[a]; k; --k) r = mul(r, a);
    return r;
  }

  // x^-1 h x
  Element conjugate(Element h, Element x) const { return mul(mul(inv(x), h), x); }

  ElementSet all() const { return ElementSet::full(n_); }
  ElementSet none() const { return ElementSet(n_); }

  std::vector<std::vector<Element>> table() const {
    std::vector<std::vector<Element>> t(n_, std::vector<Element>(n_));
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b) t[a][b] = mul(static_cast<Element>(a), static_cast<Element>(b));
    return t;
  }

  // Image arrays when built from permutations; empty otherwise.
  std::vector<std::vector<std::uint32_t>> const &permutations() const { return permutations_; }

  // Index of a permutation given as an image array; throws if absent.
  Element element_of_permutation(std::vector<std::uint32_t> const &images) const {
    auto it = std::lower_bound(permutations_.begin(), permutations_.end(), images);
    if (it == permutations_.end() || *it != images) throw Error("permutation not in group");
    return static_cast<Element>(it - permutations_.begin());
  }

 private:
  void compute_orders() {
    orders_.assign(n_, 0);
    for (Element a = 0; a < n_; ++a) {
      std::uint32_t k = 1;
      for (Element x = a; x != 0; x = mul(x, a)) ++k;
      orders_[a] = k;
    }
  }

  std::size_t n_ = 0;
  std::string name_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::uint32_t> orders_;
  std::vector<std::vector<std::uint32_t>> permutations_;
};

// A subgroup, held as its element set. Construct through closure() or
// as_subgroup(); both guarantee the subgroup axioms.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(ElementSet elements, std::vector<Element> generators)
      : elements_(std::move(elements)), generators_(std::move(generators)),
        order_(elements_.count()) {}

  ElementSet const &elements() const { return elements_; }
  std::vector<Element> const &generators() const { return generators_; }
  std::size_t order() const { return order_; }
  bool contains(Element e) const { return elements_.contains(e); }
  std::vector<Element> members() const { return elements_.members(); }

  friend bool operator==(Subgroup const &a, Subgroup const &b) {
    return a.elements_ == b.elements_;
  }

 private:
  ElementSet elements_;
  std::vector<Element> generators_;
  std::size_t order_ = 0;
};

inline std::uint32_t element_order(FiniteGroup const &G, Element g) { return G.element_order(g); }

// x^-1 y^-1 x y
inline Element commutator(FiniteGroup const &G, Element x, Element y) {
  return G.mul(G.mul(G.inv(x), G.inv(y)), G.mul(x, y));
}

// Elements of `within` whose square is the identity, identity included.
inline ElementSet omega1(FiniteGroup const &G, ElementSet const &within) {
  ElementSet out(G.order());
  within.for_each([&](Element g) {
    if (G.mul(g, g) == 0) out.insert(g);
  });
  return out;
}

// Non-identity elements of the form y*y. The identity is never reported as a square.
inline ElementSet squares(FiniteGroup const &G) {
  ElementSet out(G.order());
  for (Element y = 0; y < G.order(); ++y) out.insert(G.mul(y, y));
  out.erase(0);
  return out;
}

inline std::uint64_t exponent(FiniteGroup const &G, ElementSet const &within) {
  std::uint64_t e = 1;
  within.for_each([&](Element g) { e = std::lcm(e, std::uint64_t{G.element_order(g)}); });
  return e;
}

inline bool is_abelian(FiniteGroup const &G, ElementSet const &H) {
  auto m = H.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (G.mul(m[i], m[j]) != G.mul(m[j], m[i])) return false;
  return true;
}

namespace detail {

// Extends `start` (assumed closed) to the subgroup generated by it and `extra`.
inline ElementSet close_from(FiniteGroup const &G, ElementSet set,
                             std::vector<Element> const &gens) {
  std::vector<Element> queue = set.members();
  if (!set.contains(0)) {
    set.insert(0);
    queue.push_back(0);
  }
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const Element cur = queue[qi];
    for (auto s : gens) {
      const Element next = G.mul(cur, s);
      if (!set.contains(next)) {
        set.insert(next);
        queue.push_back(next);
      }
    }
  }
  return set;
}

}  // namespace detail

// Least subgroup containing gens.
inline Subgroup closure(FiniteGroup const &G, std::vector<Element> const &gens) {
  for (auto g : gens)
    if (g >= G.order()) throw Error("generator index out of range");
  return Subgroup(detail::close_from(G, ElementSet(G.order()), gens), gens);
}

// Subgroup generated by H together with extra elements.
inline Subgroup join(FiniteGroup const &G, Subgroup const &H, std::vector<Element> const &extra) {
  std::vector<Element> gens = H.generators();
  if (gens.empty() && H.order() > 1) gens = H.members();
  gens.insert(gens.end(), extra.begin(), extra.end());
  if (std::all_of(extra.begin(), extra.end(), [&](Element e) { return H.contains(e); }))
    return Subgroup(H.elements(), std::move(gens));
  // Closing under right multiplication by all generators from H's elements suffices.
  return Subgroup(detail::close_from(G, H.elements(), gens), gens);
}

inline bool is_subgroup(FiniteGroup const &G, ElementSet const &S) {
  if (!S.contains(0)) return false;
  bool ok = true;
  auto m = S.members();
  for (auto a : m) {
    if (!S.contains(G.inv(a))) return false;
    for (auto b : m)
      if (!S.contains(G.mul(a, b))) return false;
  }
  return ok;
}

// Wraps a closed set as a Subgroup; throws when the axioms fail.
inline Subgroup as_subgroup(FiniteGroup const &G, ElementSet const &S) {
  if (S.universe() != G.order()) throw Error("element set belongs to a different group");
  if (!is_subgroup(G, S)) throw Error("element set is not a subgroup");
  return Subgroup(S, {});
}

inline Subgroup whole(FiniteGroup const &G) { return Subgroup(G.all(), {}); }
inline Subgroup trivial(FiniteGroup const &G) { return closure(G, {}); }

// {x^-1 h x : h in H}
inline Subgroup conjugate_subgroup(FiniteGroup const &G, Subgroup const &H, Element x) {
  ElementSet out(G.order());
  H.elements().for_each([&](Element h) { out.insert(G.conjugate(h, x)); });
  std::vector<Element> gens;
  for (auto g : H.generators()) gens.push_back(G.conjugate(g, x));
  return Subgroup(std::move(out), std::move(gens));
}

// Group structure of H on its own, with index maps in both directions.
struct InducedGroup {
  FiniteGroup group;
  std::vector<Element> to_parent;  // local -> parent
  std::vector<Element> to_local;   // parent -> local, or parent order when absent
};

inline InducedGroup induced_group(FiniteGroup const &G, Subgroup const &H, std::string name = {}) {
  InducedGroup out;
  out.to_parent = H.members();  // identity first since 0 is least
  out.to_local.assign(G.order(), static_cast<Element>(G.order()));
  for (std::size_t i = 0; i < out.to_parent.size(); ++i)
    out.to_local[out.to_parent[i]] = static_cast<Element>(i);
  const std::size_t k = out.to_parent.size();
  std::vector<std::vector<Element>> table(k, std::vector<Element>(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      table[a][b] = out.to_local[G.mul(out.to_parent[a], out.to_parent[b])];
  out.group = FiniteGroup::from_table(table, std::move(name), std::max(k, kDefaultMaxOrder));
  return out;
}

inline std::size_t two_part(std::size_t n) { return n & (~n + 1); }
inline bool is_power_of_two(std::size_t n) { return n && (n & (n - 1)) == 0; }

}  // namespace pcl
