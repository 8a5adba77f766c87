#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace bmx {

/// A point of PG(r-1,2), r <= 8, as the integer of its coordinate bits.
using Point = std::uint16_t;

inline constexpr int kMaxRank = 8;

/// Fixed 256-bit set of points; membership test and set algebra in a few
/// word operations.
class PointSet {
public:
  constexpr PointSet() = default;

  static PointSet from(const std::vector<Point>& pts) {
    PointSet s;
    for (Point p : pts)
      s.set(p);
    return s;
  }

  constexpr bool test(unsigned p) const noexcept { return (words_[p >> 6] >> (p & 63)) & 1u; }
  constexpr void set(unsigned p) noexcept { words_[p >> 6] |= std::uint64_t{1} << (p & 63); }
  constexpr void reset(unsigned p) noexcept { words_[p >> 6] &= ~(std::uint64_t{1} << (p & 63)); }

  int count() const noexcept {
    int c = 0;
    for (auto w : words_)
      c += std::popcount(w);
    return c;
  }
  bool empty() const noexcept { return (words_[0] | words_[1] | words_[2] | words_[3]) == 0; }

  std::vector<Point> to_vector() const {
    std::vector<Point> out;
    out.reserve(count());
    for (unsigned i = 0; i < 4; ++i)
      for (auto w = words_[i]; w; w &= w - 1)
        out.push_back(static_cast<Point>(i * 64 + std::countr_zero(w)));
    return out;
  }

  /// Lexicographic comparison of the ascending point lists of two sets of
  /// equal cardinality: the smaller set owns the least element of the
  /// symmetric difference.
  bool lex_less_same_size(const PointSet& o) const noexcept {
    for (unsigned i = 0; i < 4; ++i) {
      const auto d = words_[i] ^ o.words_[i];
      if (d)
        return (words_[i] & d & (~d + 1)) != 0;
    }
    return false;
  }

  const std::array<std::uint64_t, 4>& words() const noexcept { return words_; }
  std::array<std::uint64_t, 4>& words() noexcept { return words_; }

  friend constexpr bool operator==(const PointSet&, const PointSet&) = default;

  std::size_t hash() const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdull;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }

private:
  std::array<std::uint64_t, 4> words_{};
};

} // namespace bmx
