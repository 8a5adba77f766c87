#pragma once

// Bit-packed linear algebra over GF(2).
//
// Coordinate convention used everywhere in bmx: coordinate i (0-based) of a
// vector lives in bit i. For a displayed matrix the top row is bit 0 of every
// column, and column j is bit j of every row.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bmx {

inline constexpr int kMaxDim = 64;

class DimensionMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class InvalidBasis : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class Gf2Vector {
public:
  Gf2Vector() = default;
  Gf2Vector(int dim, std::uint64_t bits);

  static Gf2Vector zero(int dim) { return Gf2Vector(dim, 0); }
  static Gf2Vector unit(int dim, int i);

  int dim() const noexcept { return dim_; }
  std::uint64_t bits() const noexcept { return bits_; }
  bool get(int i) const noexcept { return (bits_ >> i) & 1u; }
  bool is_zero() const noexcept { return bits_ == 0; }
  int weight() const noexcept;

  Gf2Vector& operator^=(const Gf2Vector& other);
  friend Gf2Vector operator^(Gf2Vector a, const Gf2Vector& b) { return a ^= b; }
  friend bool operator==(const Gf2Vector&, const Gf2Vector&) = default;

private:
  int dim_ = 0;
  std::uint64_t bits_ = 0;
};

/// Decimal (or `0x` hex) text form of the integer `bits`.
std::string format_vector(const Gf2Vector& v, bool hex = false);
Gf2Vector parse_vector(std::string_view text, int dim);

/// Rows are vectors over the column index; column j of every row is bit j.
class Gf2Matrix {
public:
  Gf2Matrix() = default;
  Gf2Matrix(int cols, std::vector<Gf2Vector> rows);

  /// Each string is one row, '0'/'1' characters left to right.
  static Gf2Matrix from_strings(std::initializer_list<std::string_view> rows);
  static Gf2Matrix from_columns(int rows, std::span<const Gf2Vector> columns);
  static Gf2Matrix identity(int n);

  std::size_t row_count() const noexcept { return rows_.size(); }
  int col_count() const noexcept { return cols_; }
  const std::vector<Gf2Vector>& rows() const noexcept { return rows_; }
  const Gf2Vector& row(std::size_t i) const { return rows_.at(i); }
  bool get(std::size_t i, int j) const { return rows_.at(i).get(j); }

  Gf2Vector column(int j) const;
  std::vector<Gf2Vector> columns() const;

  /// Row operation: row[dst] += row[src].
  void add_row(std::size_t src, std::size_t dst);
  Gf2Matrix without_columns(std::span<const int> cols) const;

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

private:
  int cols_ = 0;
  std::vector<Gf2Vector> rows_;
};

int rank(std::span<const Gf2Vector> vectors);

/// Indices of the basis vectors whose sum is `target`, or nullopt when
/// `target` lies outside the span. Throws InvalidBasis on a dependent basis.
std::optional<std::vector<std::size_t>> solve_in_basis(std::span<const Gf2Vector> basis,
                                                       const Gf2Vector& target);

/// Reduced row-echelon form. Pivots are taken left to right by column, and
/// zero rows are kept at the bottom so the shape is unchanged.
Gf2Matrix row_reduce(const Gf2Matrix& m);

/// Incremental Gaussian elimination. Each accepted vector becomes basis
/// element number `size()-1`; `coordinates` expresses a vector in that basis.
class Eliminator {
public:
  explicit Eliminator(int dim) : dim_(dim) {}

  int dim() const noexcept { return dim_; }
  int size() const noexcept { return static_cast<int>(pivots_.size()); }

  /// Adds v if it is independent of the vectors already accepted.
  bool insert(std::uint64_t v);
  bool in_span(std::uint64_t v) const { return reduce(v).residual == 0; }
  /// Bit i of the result is the coefficient of accepted vector i.
  std::optional<std::uint64_t> coordinates(std::uint64_t v) const;

private:
  struct Reduced {
    std::uint64_t residual;
    std::uint64_t combo;
  };
  Reduced reduce(std::uint64_t v) const;

  struct Row {
    std::uint64_t vec;
    std::uint64_t combo;
    int pivot;
  };
  int dim_;
  std::vector<Row> pivots_;
};

} // namespace bmx
