#pragma once

#include <array>
#include <cctype>
#include <string_view>

#include "group.hpp"

// Tables for the small named groups used as test data and corpus members.
namespace pcl {

inline FiniteGroup cyclic(std::size_t n) {
  if (n == 0) throw Error("cyclic group needs n >= 1");
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<Element>((a + b) % n);
  return FiniteGroup::from_table(t, "Z" + std::to_string(n));
}

// Dihedral group of order n. Element r^i s^j has index i + (n/2) j, so index 1
// is the rotation r and index n/2 the reflection s.
inline FiniteGroup dihedral(std::size_t n) {
  if (n < 4 || n % 2) throw Error("dihedral group needs even order >= 4");
  const std::size_t k = n / 2;
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t a = x % k, b = x / k, c = y % k, d = y / k;
      const std::size_t rot = b ? (a + k - c) % k : (a + c) % k;
      t[x][y] = static_cast<Element>(rot + k * ((b + d) % 2));
    }
  return FiniteGroup::from_table(t, "D" + std::to_string(n));
}

// Generalized quaternion group of order n (n = 8, 16, ...): <a, b | a^(n/2),
// b^2 = a^(n/4), a^b = a^-1>. Element a^i b^j has index i + (n/2) j.
inline FiniteGroup quaternion(std::size_t n = 8) {
  if (n < 8 || !is_power_of_two(n)) throw Error("quaternion group needs order 2^k >= 8");
  const std::size_t k = n / 2, half = n / 4;
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t a = x % k, b = x / k, c = y % k, d = y / k;
      std::size_t rot = b ? (a + k - c) % k : (a + c) % k;
      std::size_t bs = b + d;
      if (bs == 2) {
        rot = (rot + half) % k;
        bs = 0;
      }
      t[x][y] = static_cast<Element>(rot + k * bs);
    }
  return FiniteGroup::from_table(t, "Q" + std::to_string(n));
}

// (a, b) has index a * |B| + b.
inline FiniteGroup direct_product(FiniteGroup const &A, FiniteGroup const &B,
                                  std::size_t max_order = kDefaultMaxOrder) {
  const std::size_t na = A.order(), nb = B.order(), n = na * nb;
  if (n > max_order) throw Error("direct product exceeds maximum order");
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      t[x][y] = static_cast<Element>(A.mul(static_cast<Element>(x / nb), static_cast<Element>(y / nb)) * nb +
                                     B.mul(static_cast<Element>(x % nb), static_cast<Element>(y % nb)));
  return FiniteGroup::from_table(t, A.name() + "x" + B.name(), max_order);
}

inline FiniteGroup symmetric(std::size_t n) {
  if (n < 2) throw Error("symmetric group needs n >= 2");
  std::vector<std::uint32_t> swap01(n), cycle(n);
  std::iota(swap01.begin(), swap01.end(), 0u);
  std::swap(swap01[0], swap01[1]);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<std::uint32_t>((i + 1) % n);
  return FiniteGroup::from_permutations(n, {swap01, cycle}, "S" + std::to_string(n));
}

inline FiniteGroup alternating4() {
  return FiniteGroup::from_permutations(4, {{1, 2, 0, 3}, {0, 2, 3, 1}}, "A4");
}

// SL(2,3): 2x2 matrices over GF(3) of determinant 1, enumerated
// lexicographically by (a, b, c, d) and then canonicalized so I is index 0.
inline FiniteGroup sl23() {
  using M = std::array<int, 4>;
  std::vector<M> elems;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d)
          if (((a * d - b * c) % 3 + 3) % 3 == 1) elems.push_back({a, b, c, d});
  auto mul = [](M const &x, M const &y) {
    return M{(x[0] * y[0] + x[1] * y[2]) % 3, (x[0] * y[1] + x[1] * y[3]) % 3,
             (x[2] * y[0] + x[3] * y[2]) % 3, (x[2] * y[1] + x[3] * y[3]) % 3};
  };
  auto index = [&](M const &m) {
    return static_cast<Element>(std::find(elems.begin(), elems.end(), m) - elems.begin());
  };
  std::vector<std::vector<Element>> t(elems.size(), std::vector<Element>(elems.size()));
  for (std::size_t x = 0; x < elems.size(); ++x)
    for (std::size_t y = 0; y < elems.size(); ++y) t[x][y] = index(mul(elems[x], elems[y]));
  return FiniteGroup::from_table(t, "SL(2,3)");
}

// The unique central involution; throws unless there is exactly one.
inline Element central_involution(FiniteGroup const &G) {
  Element found = 0;
  for (Element z = 1; z < G.order(); ++z) {
    if (G.element_order(z) != 2) continue;
    bool central = true;
    for (Element g = 0; g < G.order() && central; ++g) central = G.mul(z, g) == G.mul(g, z);
    if (!central) continue;
    if (found) throw Error("group has more than one central involution");
    found = z;
  }
  if (!found) throw Error("group has no central involution");
  return found;
}

// A x B with the two central involutions identified. Each class {(a,b),
// (a z_A, b z_B)} is named by its smaller pair index a * |B| + b, and
// elements are numbered in increasing order of that name.
inline FiniteGroup central_product(FiniteGroup const &A, FiniteGroup const &B,
                                   std::size_t max_order = kDefaultMaxOrder) {
  const Element za = central_involution(A), zb = central_involution(B);
  const std::size_t na = A.order(), nb = B.order();
  if (na * nb / 2 > max_order) throw Error("central product exceeds maximum order");
  auto canon = [&](Element a, Element b) {
    const std::size_t p = std::size_t{a} * nb + b;
    const std::size_t q = std::size_t{A.mul(a, za)} * nb + B.mul(b, zb);
    return std::min(p, q);
  };
  std::vector<std::size_t> reps;
  for (Element a = 0; a < na; ++a)
    for (Element b = 0; b < nb; ++b)
      if (canon(a, b) == std::size_t{a} * nb + b) reps.push_back(canon(a, b));
  std::vector<Element> index(na * nb, 0);
  for (std::size_t i = 0; i < reps.size(); ++i) index[reps[i]] = static_cast<Element>(i);
  std::vector<std::vector<Element>> t(reps.size(), std::vector<Element>(reps.size()));
  for (std::size_t x = 0; x < reps.size(); ++x)
    for (std::size_t y = 0; y < reps.size(); ++y) {
      const auto a1 = static_cast<Element>(reps[x] / nb), b1 = static_cast<Element>(reps[x] % nb);
      const auto a2 = static_cast<Element>(reps[y] / nb), b2 = static_cast<Element>(reps[y] % nb);
      t[x][y] = index[canon(A.mul(a1, a2), B.mul(b1, b2))];
    }
  return FiniteGroup::from_table(t, A.name() + "o" + B.name(), max_order);
}

// Parses names such as "Z6", "D8", "Q16", "S4", "A4", "SL23", "D8xZ3", "Z2^3".
inline FiniteGroup build_named(std::string_view spec, std::size_t max_order = kDefaultMaxOrder) {
  if (auto x = spec.find('x'); x != std::string_view::npos)
    return direct_product(build_named(spec.substr(0, x), max_order),
                          build_named(spec.substr(x + 1), max_order), max_order);
  auto number = [&](std::size_t from) -> std::size_t {
    std::size_t v = 0;
    if (from >= spec.size()) throw Error("missing parameter in group name '" + std::string(spec) + "'");
    for (std::size_t i = from; i < spec.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(spec[i])))
        throw Error("bad group name '" + std::string(spec) + "'");
      v = v * 10 + static_cast<std::size_t>(spec[i] - '0');
    }
    return v;
  };
  if (spec == "SL23" || spec == "SL(2,3)") return sl23();
  if (spec == "A4") return alternating4();
  if (auto caret = spec.find('^'); caret != std::string_view::npos) {
    auto base = build_named(spec.substr(0, caret), max_order);
    const auto k = std::stoul(std::string(spec.substr(caret + 1)));
    if (k == 0) throw Error("power must be positive");
    FiniteGroup g = base;
    for (std::size_t i = 1; i < k; ++i) g = direct_product(g, base, max_order);
    g.set_name(std::string(spec));
    return g;
  }
  if (spec.empty()) throw Error("empty group name");
  switch (spec[0]) {
    case 'Z': return cyclic(number(1));
    case 'D': return dihedral(number(1));
    case 'Q': return quaternion(number(1));
    case 'S': return symmetric(number(1));
    default: throw Error("unknown group name '" + std::string(spec) + "'");
  }
}

}  // namespace pcl
