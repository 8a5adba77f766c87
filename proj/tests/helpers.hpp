#pragma once

// Test-only oracles and generators, independent of the library's search code.

#include "bmx/gf2.hpp"
#include "bmx/matroid.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace bmx::testing {

/// Columns of an invertible r x r matrix; column i is the image of e_i.
using Transform = std::vector<std::uint32_t>;

inline std::uint32_t apply_map(const Transform& t, std::uint32_t v) {
  std::uint32_t out = 0;
  for (std::size_t i = 0; v; ++i, v >>= 1)
    if (v & 1u)
      out ^= t[i];
  return out;
}

inline Transform random_invertible(int r, std::mt19937_64& rng) {
  for (;;) {
    Transform t(r);
    Eliminator e(r);
    bool ok = true;
    for (int i = 0; i < r && ok; ++i) {
      t[i] = static_cast<std::uint32_t>(rng() & ((1u << r) - 1));
      ok = e.insert(t[i]);
    }
    if (ok)
      return t;
  }
}

/// Every invertible r x r matrix, r <= 4.
inline std::vector<Transform> all_invertible(int r) {
  std::vector<Transform> out;
  Transform cur(r);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == r) {
      out.push_back(cur);
      return;
    }
    for (std::uint32_t v = 1; v < (1u << r); ++v) {
      cur[i] = v;
      Eliminator e(r);
      bool ok = true;
      for (int k = 0; k <= i && ok; ++k)
        ok = e.insert(cur[k]);
      if (ok)
        self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

inline BinaryMatroid transformed(const BinaryMatroid& m, const Transform& t) {
  std::vector<Point> pts;
  for (Point p : m.points())
    pts.push_back(static_cast<Point>(apply_map(t, p)));
  std::sort(pts.begin(), pts.end());
  return BinaryMatroid(m.rank(), std::move(pts));
}

/// Random simple spanning point set of given rank and size.
/// Sizes above 2^r - 1 are clamped.
inline BinaryMatroid random_matroid(int r, int size, std::mt19937_64& rng) {
  size = std::min(size, (1 << r) - 1);
  for (;;) {
    std::vector<Point> all;
    for (unsigned v = 1; v < (1u << r); ++v)
      all.push_back(static_cast<Point>(v));
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(size);
    std::sort(all.begin(), all.end());
    Eliminator e(r);
    for (Point p : all)
      e.insert(p);
    if (e.size() == r)
      return BinaryMatroid(r, all);
  }
}

/// Brute-force isomorphism: some invertible map carries a onto b.
inline bool brute_isomorphic(const BinaryMatroid& a, const BinaryMatroid& b,
                             const std::vector<Transform>& group) {
  if (a.rank() != b.rank() || a.size() != b.size())
    return false;
  for (const auto& t : group)
    if (transformed(a, t) == b)
      return true;
  return false;
}

} // namespace bmx::testing
