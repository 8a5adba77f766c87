#pragma once

// Brute-force group oracles for GL(n,2), small n only.

#include "bmx/polya.hpp"
#include "helpers.hpp"

#include <bit>
#include <map>
#include <set>

namespace bmx::testing {

inline Transform compose(const Transform& a, const Transform& b) {
  Transform out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    out[i] = apply_map(a, b[i]);
  return out;
}

inline Transform as_transform(const Gf2Matrix& m) {
  Transform t;
  for (const auto& c : m.columns())
    t.push_back(static_cast<std::uint32_t>(c.bits()));
  return t;
}

// Brute-force conjugacy classes of GL(n,2) as sets of group elements.
inline std::vector<std::set<Transform>> brute_classes(int n) {
  const auto group = all_invertible(n);
  const Transform id = as_transform(Gf2Matrix::identity(n));
  std::map<Transform, Transform> inverse;
  for (const auto& g : group)
    for (const auto& h : group)
      if (compose(g, h) == id) {
        inverse[g] = h;
        break;
      }
  std::vector<std::set<Transform>> classes;
  std::set<Transform> seen;
  for (const auto& a : group) {
    if (seen.count(a))
      continue;
    std::set<Transform> cls;
    for (const auto& g : group)
      cls.insert(compose(compose(g, a), inverse[g]));
    seen.insert(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

inline BigInt burnside(int n, int k) {
  const auto group = all_invertible(n);
  const unsigned points = (1u << n) - 1;
  BigInt fixed = 0;
  for (const auto& g : group)
    for (std::uint32_t mask = 0; mask < (1u << points); ++mask) {
      if (std::popcount(mask) != k)
        continue;
      std::uint32_t image = 0;
      for (unsigned v = 1; v <= points; ++v)
        if ((mask >> (v - 1)) & 1u)
          image |= 1u << (apply_map(g, v) - 1);
      fixed += image == mask;
    }
  return fixed / group.size();
}

inline std::uint64_t multiplicative_order(const Transform& t) {
  const Transform id = as_transform(Gf2Matrix::identity(static_cast<int>(t.size())));
  Transform cur = t;
  for (std::uint64_t k = 1;; ++k, cur = compose(cur, t))
    if (cur == id)
      return k;
}


} // namespace bmx::testing
