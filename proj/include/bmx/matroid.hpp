#pragma once

// Simple binary matroids stored as point sets of PG(r-1,2), always in
// ambient dimension equal to their rank.

#include "bmx/gf2.hpp"
#include "bmx/point_set.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bmx {

class NoSuchElement : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class BinaryMatroid {
public:
  /// The empty matroid of rank 0.
  BinaryMatroid() = default;
  /// Validates that `points` is strictly ascending, nonzero, inside
  /// GF(2)^rank and spans it.
  BinaryMatroid(int rank, std::vector<Point> points);

  /// Skips validation; callers guarantee the invariants.
  static BinaryMatroid unchecked(int rank, std::vector<Point> points) {
    BinaryMatroid m;
    m.rank_ = rank;
    m.points_ = std::move(points);
    return m;
  }

  static BinaryMatroid from_matrix(const Gf2Matrix& m);

  int rank() const noexcept { return rank_; }
  int size() const noexcept { return static_cast<int>(points_.size()); }
  const std::vector<Point>& points() const noexcept { return points_; }
  bool contains(Point p) const;
  PointSet point_set() const { return PointSet::from(points_); }
  Gf2Vector vector(Point p) const { return Gf2Vector(rank_, p); }

  friend bool operator==(const BinaryMatroid&, const BinaryMatroid&) = default;

private:
  int rank_ = 0;
  std::vector<Point> points_;
};

/// Result of simplifying and re-embedding a list of columns; `image[j]` is
/// the point that column j became, 0 when the column was zero (a loop).
struct Embedding {
  BinaryMatroid matroid;
  std::vector<Point> image;
};

Embedding embed_columns(std::span<const Gf2Vector> columns);

/// Three distinct points x, a, b with x ^ a ^ b == 0.
struct Line {
  Point x, a, b;
  friend bool operator==(const Line&, const Line&) = default;
};

BinaryMatroid delete_point(const BinaryMatroid& m, Point p);
/// si(M/p), in ambient dimension rank-1.
BinaryMatroid contract(const BinaryMatroid& m, Point p);
/// Contraction by a set that need not be independent or even made of points.
BinaryMatroid contract_all(const BinaryMatroid& m, std::span<const Point> pts);
std::vector<Line> lines_through(const BinaryMatroid& m, Point x);
/// Number of lines of each point, indexed like `points()`.
std::vector<int> line_counts(const BinaryMatroid& m);
BinaryMatroid restrict_to(const BinaryMatroid& m, std::span<const Point> subset);
bool restriction_isomorphic(const BinaryMatroid& m, std::span<const Point> subset,
                            const BinaryMatroid& n);

/// `r=<r> pts=<p1,p2,...>`
std::string to_text(const BinaryMatroid& m);
BinaryMatroid parse_matroid(std::string_view text);

namespace construct {

/// All 2^(n+1)-1 points of PG(n,2), 0 <= n <= 7.
BinaryMatroid pg(int n);
/// PG(3,2) minus the hyperplane x_0 = 0.
BinaryMatroid ag32();
BinaryMatroid f7();
BinaryMatroid f7dual();
/// M(K_n) for 2 <= n <= 9: e_i for i < n-1 and e_i + e_j.
BinaryMatroid mk(int n);
/// The rank-4 extension of M(K_5) by one point.
BinaryMatroid mk5plus();
/// Graft matroid of K_r plus a vertex joined to three vertices, T the vertex
/// and its neighbours; 3 <= r <= 8.
BinaryMatroid gpc_f7(int r);
/// The three non-graphic size-15 rank-5 extremal matroids, k = 1, 2, 3.
BinaryMatroid appendix5(int k);
Gf2Matrix mk5plus_matrix();
Gf2Matrix appendix5_matrix(int k);

/// Dispatch by name: pg, ag32, f7, f7dual, mk, mk5plus, gpc_f7, appendix5.
BinaryMatroid by_name(std::string_view name, int param = 0);

} // namespace construct

} // namespace bmx
