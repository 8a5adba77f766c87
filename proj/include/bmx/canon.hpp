#pragma once

// Canonical forms of binary matroids under GL(r,2).
//
// The key of M is the lexicographically least ascending point list T(M) over
// all invertible T that send some ordered basis of points of M onto the unit
// vectors e_1..e_r. Every such T(M) contains the unit vectors, and the set of
// those images is exactly the part of M's orbit containing e_1..e_r, so the
// minimum is an isomorphism invariant.

#include "bmx/matroid.hpp"

#include <cstdint>
#include <string>

namespace bmx {

struct CanonicalKey {
  int rank = 0;
  PointSet image;

  int size() const noexcept { return image.count(); }
  std::vector<Point> points() const { return image.to_vector(); }
  BinaryMatroid to_matroid() const { return BinaryMatroid::unchecked(rank, points()); }

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  /// Rank, then size, then lexicographic order of the point lists.
  friend bool operator<(const CanonicalKey& a, const CanonicalKey& b) {
    if (a.rank != b.rank)
      return a.rank < b.rank;
    const int sa = a.size(), sb = b.size();
    if (sa != sb)
      return sa < sb;
    return a.image.lex_less_same_size(b.image);
  }
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const noexcept {
    return k.image.hash() ^ static_cast<std::size_t>(k.rank) * 0x9e3779b97f4a7c15ull;
  }
};

struct CanonicalForm {
  CanonicalKey key;
  /// Number of ordered point bases sent to the key; equals |Aut(M)|.
  std::uint64_t automorphisms = 0;
};

CanonicalForm canonical_form(const BinaryMatroid& m);
CanonicalKey canonical_key(const BinaryMatroid& m);
bool are_isomorphic(const BinaryMatroid& a, const BinaryMatroid& b);
std::uint64_t automorphism_count(const BinaryMatroid& m);

/// Same text form as a matroid: `r=<r> pts=<...>`.
std::string to_text(const CanonicalKey& k);

} // namespace bmx
