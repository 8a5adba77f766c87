#include "bmx/canon.hpp"

#include <algorithm>
#include <array>

namespace bmx {

namespace {

// Images of points lying in span(b_0..b_j) \ span(b_0..b_{j-1}) are
// 2^j + m for m < 2^j; bit m of a segment records which of them occur.
using Segment = unsigned __int128;

// Depth-first search over ordered bases with prefix pruning. At depth j the
// points of M inside span(b_0..b_{j-1}) are mapped to exactly the integers
// below 2^j, so the sorted image starts with a prefix fixed by the partial
// basis. Comparing the segment added at each level against the best seen so
// far decides the order of the full images whenever the segments differ.
class BasisSearch {
public:
  explicit BasisSearch(const BinaryMatroid& m)
      : rank_(m.rank()), points_(m.points()), member_(m.point_set()) {
    span_[0][0] = 0;
    in_span_[0].set(0);
  }

  CanonicalForm run() {
    descend(0);
    CanonicalForm out;
    out.key.rank = rank_;
    for (int j = 0; j < rank_; ++j) {
      Segment seg = best_[j];
      const unsigned base = 1u << j;
      for (unsigned m = 0; seg; ++m, seg >>= 1)
        if (seg & 1u)
          out.key.image.set(base + m);
    }
    out.automorphisms = leaves_;
    return out;
  }

private:
  void descend(int j) {
    if (j == rank_) {
      ++leaves_;
      return;
    }
    if (j >= kMaxRank)
      __builtin_unreachable();
    const unsigned half = 1u << j;
    const auto& span = span_[j];
    for (Point p : points_) {
      if (in_span_[j].test(p))
        continue;
      Segment seg = 0;
      for (unsigned m = 0; m < half; ++m)
        if (member_.test(span[m] ^ p))
          seg |= Segment{1} << m;
      if (j < valid_) {
        const Segment diff = seg ^ best_[j];
        if (diff) {
          if (!(seg & diff & (~diff + 1)))
            continue;
          improve(j, seg);
        }
      } else {
        improve(j, seg);
      }
      auto& next = span_[j + 1];
      in_span_[j + 1] = in_span_[j];
      for (unsigned m = 0; m < half; ++m) {
        next[m] = span[m];
        const auto v = static_cast<std::uint8_t>(span[m] ^ p);
        next[m + half] = v;
        in_span_[j + 1].set(v);
      }
      descend(j + 1);
    }
  }

  void improve(int j, Segment seg) {
    best_[j] = seg;
    valid_ = j + 1;
    leaves_ = 0;
  }

  int rank_;
  const std::vector<Point>& points_;
  PointSet member_;
  std::array<std::array<std::uint8_t, 256>, kMaxRank + 1> span_{};
  std::array<PointSet, kMaxRank + 1> in_span_{};
  std::array<Segment, kMaxRank> best_{};
  int valid_ = 0;
  std::uint64_t leaves_ = 0;
};

std::vector<int> sorted_line_profile(const BinaryMatroid& m) {
  auto c = line_counts(m);
  std::sort(c.begin(), c.end());
  return c;
}

} // namespace

CanonicalForm canonical_form(const BinaryMatroid& m) {
  if (m.rank() > kMaxRank)
    throw std::out_of_range("canonical forms need rank <= 8");
  return BasisSearch(m).run();
}

CanonicalKey canonical_key(const BinaryMatroid& m) { return canonical_form(m).key; }

bool are_isomorphic(const BinaryMatroid& a, const BinaryMatroid& b) {
  if (a.rank() != b.rank() || a.size() != b.size())
    return false;
  if (sorted_line_profile(a) != sorted_line_profile(b))
    return false;
  return canonical_key(a) == canonical_key(b);
}

std::uint64_t automorphism_count(const BinaryMatroid& m) { return canonical_form(m).automorphisms; }

std::string to_text(const CanonicalKey& k) { return to_text(k.to_matroid()); }

} // namespace bmx
