#include "bmx/matroid.hpp"

#include "bmx/canon.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace bmx {

namespace {

std::vector<Point> sorted_unique(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

int span_rank(std::span<const Point> pts, int dim) {
  Eliminator e(dim);
  for (Point p : pts)
    e.insert(p);
  return e.size();
}

void require_point(const BinaryMatroid& m, Point p) {
  if (!m.contains(p))
    throw NoSuchElement("point " + std::to_string(p) + " is not an element of the matroid");
}

std::vector<Gf2Vector> as_vectors(std::span<const Point> pts, int dim) {
  std::vector<Gf2Vector> out;
  out.reserve(pts.size());
  for (Point p : pts)
    out.emplace_back(dim, p);
  return out;
}

} // namespace

BinaryMatroid::BinaryMatroid(int rank, std::vector<Point> points)
    : rank_(rank), points_(std::move(points)) {
  if (rank < 0 || rank > kMaxRank)
    throw std::out_of_range("matroid rank " + std::to_string(rank) + " outside [0, 8]");
  const unsigned limit = 1u << rank;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i] == 0 || points_[i] >= limit)
      throw std::invalid_argument("point " + std::to_string(points_[i]) +
                                  " is zero or outside the ambient space");
    if (i > 0 && points_[i - 1] >= points_[i])
      throw std::invalid_argument("points must be strictly ascending");
  }
  if (span_rank(points_, rank) != rank)
    throw std::invalid_argument("points do not span the ambient space");
}

bool BinaryMatroid::contains(Point p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

BinaryMatroid BinaryMatroid::from_matrix(const Gf2Matrix& m) {
  const auto cols = m.columns();
  return embed_columns(cols).matroid;
}

Embedding embed_columns(std::span<const Gf2Vector> columns) {
  const int dim = columns.empty() ? 0 : columns.front().dim();
  Eliminator basis(dim);
  for (const auto& c : columns) {
    if (c.dim() != dim)
      throw DimensionMismatch("columns of differing dimension");
    basis.insert(c.bits());
  }
  const int r = basis.size();
  if (r > kMaxRank)
    throw std::out_of_range("matroid rank " + std::to_string(r) + " exceeds 8");
  Embedding out;
  out.image.reserve(columns.size());
  std::vector<Point> pts;
  for (const auto& c : columns) {
    const Point p = static_cast<Point>(*basis.coordinates(c.bits()));
    out.image.push_back(p);
    if (p != 0)
      pts.push_back(p);
  }
  out.matroid = BinaryMatroid::unchecked(r, sorted_unique(std::move(pts)));
  return out;
}

BinaryMatroid delete_point(const BinaryMatroid& m, Point p) {
  require_point(m, p);
  std::vector<Point> rest;
  rest.reserve(m.size() - 1);
  for (Point q : m.points())
    if (q != p)
      rest.push_back(q);
  if (span_rank(rest, m.rank()) == m.rank())
    return BinaryMatroid::unchecked(m.rank(), std::move(rest));
  return embed_columns(as_vectors(rest, m.rank())).matroid;
}

BinaryMatroid contract(const BinaryMatroid& m, Point p) {
  require_point(m, p);
  // Quotient map with kernel {0, p}: clear the lowest bit of p by adding p,
  // then squeeze that coordinate out.
  const int b = std::countr_zero(static_cast<unsigned>(p));
  const unsigned low = (1u << b) - 1u;
  std::vector<Point> img;
  img.reserve(m.size());
  for (Point q : m.points()) {
    unsigned w = q;
    if ((w >> b) & 1u)
      w ^= p;
    w = ((w >> (b + 1)) << b) | (w & low);
    if (w != 0)
      img.push_back(static_cast<Point>(w));
  }
  return BinaryMatroid::unchecked(m.rank() - 1, sorted_unique(std::move(img)));
}

BinaryMatroid contract_all(const BinaryMatroid& m, std::span<const Point> pts) {
  // Put a basis of span(pts) first, complete with unit vectors; the
  // remaining coordinates give the quotient map.
  Eliminator basis(m.rank());
  for (Point p : pts)
    basis.insert(p);
  const int k = basis.size();
  for (int i = 0; i < m.rank(); ++i)
    basis.insert(Point(1u << i));
  std::vector<Gf2Vector> quotient;
  quotient.reserve(m.size());
  for (Point q : m.points())
    quotient.emplace_back(m.rank() - k, *basis.coordinates(q) >> k);
  return embed_columns(quotient).matroid;
}

std::vector<Line> lines_through(const BinaryMatroid& m, Point x) {
  require_point(m, x);
  std::vector<Line> out;
  const auto set = m.point_set();
  for (Point a : m.points()) {
    const Point b = a ^ x;
    if (a != x && a < b && set.test(b))
      out.push_back({x, a, b});
  }
  return out;
}

std::vector<int> line_counts(const BinaryMatroid& m) {
  const auto set = m.point_set();
  const auto& pts = m.points();
  std::vector<int> out(pts.size(), 0);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (set.test(pts[i] ^ pts[j])) {
        ++out[i];
        ++out[j];
      }
  // Each line was counted from both of its other pairs.
  for (auto& c : out)
    c /= 2;
  return out;
}

BinaryMatroid restrict_to(const BinaryMatroid& m, std::span<const Point> subset) {
  for (Point p : subset)
    require_point(m, p);
  return embed_columns(as_vectors(subset, m.rank())).matroid;
}

bool restriction_isomorphic(const BinaryMatroid& m, std::span<const Point> subset,
                            const BinaryMatroid& n) {
  return are_isomorphic(restrict_to(m, subset), n);
}

std::string to_text(const BinaryMatroid& m) {
  std::string s = "r=" + std::to_string(m.rank()) + " pts=";
  bool first = true;
  for (Point p : m.points()) {
    if (!first)
      s += ',';
    s += std::to_string(p);
    first = false;
  }
  return s;
}

BinaryMatroid parse_matroid(std::string_view text) {
  auto fail = [&] { return std::invalid_argument("malformed matroid text '" + std::string(text) + "'"); };
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
    text.remove_suffix(1);
  if (!text.starts_with("r="))
    throw fail();
  text.remove_prefix(2);
  int r = 0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), r);
  if (res.ec != std::errc{})
    throw fail();
  text.remove_prefix(res.ptr - text.data());
  if (!text.starts_with(" pts="))
    throw fail();
  text.remove_prefix(5);
  std::vector<Point> pts;
  while (!text.empty()) {
    unsigned v = 0;
    auto r2 = std::from_chars(text.data(), text.data() + text.size(), v);
    if (r2.ec != std::errc{} || v > 0xffff)
      throw fail();
    pts.push_back(static_cast<Point>(v));
    text.remove_prefix(r2.ptr - text.data());
    if (!text.empty()) {
      if (text.front() != ',')
        throw fail();
      text.remove_prefix(1);
    }
  }
  return BinaryMatroid(r, std::move(pts));
}

namespace construct {

BinaryMatroid pg(int n) {
  if (n < 0 || n + 1 > kMaxRank)
    throw std::out_of_range("pg(n) needs 0 <= n <= 7");
  std::vector<Point> pts;
  for (unsigned v = 1; v < (1u << (n + 1)); ++v)
    pts.push_back(static_cast<Point>(v));
  return BinaryMatroid(n + 1, std::move(pts));
}

BinaryMatroid ag32() {
  std::vector<Point> pts;
  for (unsigned v = 1; v < 16; ++v)
    if (v & 1u)
      pts.push_back(static_cast<Point>(v));
  return BinaryMatroid(4, std::move(pts));
}

BinaryMatroid f7() { return pg(2); }

BinaryMatroid f7dual() {
  // [I_3 | A] represents F7 with A's columns 110, 101, 011, 111 (top row
  // first); the dual is [A^T | I_4].
  const Gf2Matrix dual = Gf2Matrix::from_strings({
      "1101000",
      "1010100",
      "0110010",
      "1110001",
  });
  return BinaryMatroid::from_matrix(dual);
}

BinaryMatroid mk(int n) {
  if (n < 2 || n - 1 > kMaxRank)
    throw std::out_of_range("mk(n) needs 2 <= n <= 9");
  std::vector<Point> pts;
  for (int i = 0; i < n - 1; ++i) {
    pts.push_back(static_cast<Point>(1u << i));
    for (int j = i + 1; j < n - 1; ++j)
      pts.push_back(static_cast<Point>((1u << i) | (1u << j)));
  }
  return BinaryMatroid(n - 1, sorted_unique(std::move(pts)));
}

Gf2Matrix mk5plus_matrix() {
  return Gf2Matrix::from_strings({
      "11110000000",
      "10001110001",
      "01001001101",
      "00100101011",
  });
}

BinaryMatroid mk5plus() { return BinaryMatroid::from_matrix(mk5plus_matrix()); }

BinaryMatroid gpc_f7(int r) {
  if (r < 3 || r > kMaxRank)
    throw std::out_of_range("gpc_f7(r) needs 3 <= r <= 8");
  const int dim = r + 1;
  const auto e = [](int i) { return std::uint64_t{1} << i; };
  std::vector<Gf2Vector> cols;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      cols.emplace_back(dim, e(i) | e(j));
  for (int i = 0; i < 3; ++i)
    cols.emplace_back(dim, e(r) | e(i));
  cols.emplace_back(dim, e(r) | e(0) | e(1) | e(2));
  return embed_columns(cols).matroid;
}

Gf2Matrix appendix5_matrix(int k) {
  switch (k) {
  case 1:
    return Gf2Matrix::from_strings({
        "000000000001111",
        "111100000000000",
        "100011100010010",
        "010010011010110",
        "001001010111110",
    });
  case 2:
    return Gf2Matrix::from_strings({
        "000000000001111",
        "111100000000010",
        "100011100010000",
        "010010011010100",
        "001001010111000",
    });
  case 3:
    return Gf2Matrix::from_strings({
        "000000010001111",
        "111100000000010",
        "100011100010001",
        "010010011010001",
        "001001010110111",
    });
  default:
    throw std::out_of_range("appendix5(k) needs k in {1, 2, 3}");
  }
}

BinaryMatroid appendix5(int k) { return BinaryMatroid::from_matrix(appendix5_matrix(k)); }

BinaryMatroid by_name(std::string_view name, int param) {
  if (name == "pg")
    return pg(param);
  if (name == "ag32")
    return ag32();
  if (name == "f7")
    return f7();
  if (name == "f7dual")
    return f7dual();
  if (name == "mk")
    return mk(param);
  if (name == "mk5plus")
    return mk5plus();
  if (name == "gpc_f7")
    return gpc_f7(param);
  if (name == "appendix5")
    return appendix5(param);
  throw std::invalid_argument("unknown construction '" + std::string(name) + "'");
}

} // namespace construct

} // namespace bmx
