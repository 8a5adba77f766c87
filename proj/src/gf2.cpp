#include "bmx/gf2.hpp"

#include <bit>
#include <charconv>

namespace bmx {

namespace {

std::uint64_t low_mask(int dim) {
  return dim >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << dim) - 1;
}

void check_dim(int dim) {
  if (dim < 0 || dim > kMaxDim)
    throw std::out_of_range("GF(2) dimension " + std::to_string(dim) + " outside [0, 64]");
}

int common_dim(std::span<const Gf2Vector> vectors) {
  if (vectors.empty())
    return 0;
  const int dim = vectors.front().dim();
  for (const auto& v : vectors)
    if (v.dim() != dim)
      throw DimensionMismatch("vectors of dimension " + std::to_string(dim) + " and " +
                              std::to_string(v.dim()) + " mixed");
  return dim;
}

} // namespace

Gf2Vector::Gf2Vector(int dim, std::uint64_t bits) : dim_(dim), bits_(bits) {
  check_dim(dim);
  if (bits & ~low_mask(dim))
    throw std::out_of_range("vector bits exceed dimension " + std::to_string(dim));
}

Gf2Vector Gf2Vector::unit(int dim, int i) {
  if (i < 0 || i >= dim)
    throw std::out_of_range("unit vector index out of range");
  return Gf2Vector(dim, std::uint64_t{1} << i);
}

int Gf2Vector::weight() const noexcept { return std::popcount(bits_); }

Gf2Vector& Gf2Vector::operator^=(const Gf2Vector& other) {
  if (dim_ != other.dim_)
    throw DimensionMismatch("xor of vectors with different dimensions");
  bits_ ^= other.bits_;
  return *this;
}

std::string format_vector(const Gf2Vector& v, bool hex) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v.bits(), hex ? 16 : 10);
  std::string s(buf, res.ptr);
  return hex ? "0x" + s : s;
}

Gf2Vector parse_vector(std::string_view text, int dim) {
  int base = 10;
  if (text.starts_with("0x") || text.starts_with("0X")) {
    base = 16;
    text.remove_prefix(2);
  }
  std::uint64_t bits = 0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), bits, base);
  if (text.empty() || res.ec != std::errc{} || res.ptr != text.data() + text.size())
    throw std::invalid_argument("malformed vector '" + std::string(text) + "'");
  return Gf2Vector(dim, bits);
}

Gf2Matrix::Gf2Matrix(int cols, std::vector<Gf2Vector> rows) : cols_(cols), rows_(std::move(rows)) {
  check_dim(cols);
  for (const auto& r : rows_)
    if (r.dim() != cols_)
      throw DimensionMismatch("matrix row has dimension " + std::to_string(r.dim()) +
                              ", expected " + std::to_string(cols_));
}

Gf2Matrix Gf2Matrix::from_strings(std::initializer_list<std::string_view> rows) {
  std::vector<Gf2Vector> out;
  int cols = rows.size() ? static_cast<int>(rows.begin()->size()) : 0;
  for (auto s : rows) {
    if (static_cast<int>(s.size()) != cols)
      throw DimensionMismatch("ragged matrix rows");
    std::uint64_t bits = 0;
    for (int j = 0; j < cols; ++j) {
      if (s[j] == '1')
        bits |= std::uint64_t{1} << j;
      else if (s[j] != '0')
        throw std::invalid_argument("matrix entries must be 0 or 1");
    }
    out.emplace_back(cols, bits);
  }
  return Gf2Matrix(cols, std::move(out));
}

Gf2Matrix Gf2Matrix::from_columns(int rows, std::span<const Gf2Vector> columns) {
  check_dim(rows);
  const int cols = static_cast<int>(columns.size());
  std::vector<std::uint64_t> bits(rows, 0);
  for (int j = 0; j < cols; ++j) {
    if (columns[j].dim() != rows)
      throw DimensionMismatch("column dimension does not match row count");
    for (int i = 0; i < rows; ++i)
      if (columns[j].get(i))
        bits[i] |= std::uint64_t{1} << j;
  }
  std::vector<Gf2Vector> out;
  out.reserve(rows);
  for (auto b : bits)
    out.emplace_back(cols, b);
  return Gf2Matrix(cols, std::move(out));
}

Gf2Matrix Gf2Matrix::identity(int n) {
  std::vector<Gf2Vector> out;
  for (int i = 0; i < n; ++i)
    out.push_back(Gf2Vector::unit(n, i));
  return Gf2Matrix(n, std::move(out));
}

Gf2Vector Gf2Matrix::column(int j) const {
  if (j < 0 || j >= cols_)
    throw std::out_of_range("column index out of range");
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (rows_[i].get(j))
      bits |= std::uint64_t{1} << i;
  return Gf2Vector(static_cast<int>(rows_.size()), bits);
}

std::vector<Gf2Vector> Gf2Matrix::columns() const {
  std::vector<Gf2Vector> out;
  out.reserve(cols_);
  for (int j = 0; j < cols_; ++j)
    out.push_back(column(j));
  return out;
}

void Gf2Matrix::add_row(std::size_t src, std::size_t dst) { rows_.at(dst) ^= rows_.at(src); }

Gf2Matrix Gf2Matrix::without_columns(std::span<const int> cols) const {
  std::vector<Gf2Vector> kept;
  for (int j = 0; j < cols_; ++j) {
    bool drop = false;
    for (int c : cols)
      drop |= (c == j);
    if (!drop)
      kept.push_back(column(j));
  }
  return from_columns(static_cast<int>(rows_.size()), kept);
}

int rank(std::span<const Gf2Vector> vectors) {
  Eliminator elim(common_dim(vectors));
  for (const auto& v : vectors)
    elim.insert(v.bits());
  return elim.size();
}

std::optional<std::vector<std::size_t>> solve_in_basis(std::span<const Gf2Vector> basis,
                                                       const Gf2Vector& target) {
  if (!basis.empty() && basis.front().dim() != target.dim())
    throw DimensionMismatch("target dimension differs from basis");
  Eliminator elim(common_dim(basis));
  for (const auto& b : basis)
    if (!elim.insert(b.bits()))
      throw InvalidBasis("basis vectors are linearly dependent");
  auto coords = elim.coordinates(target.bits());
  if (!coords)
    return std::nullopt;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if ((*coords >> i) & 1u)
      out.push_back(i);
  return out;
}

Gf2Matrix row_reduce(const Gf2Matrix& m) {
  std::vector<Gf2Vector> rows = m.rows();
  std::size_t lead = 0;
  for (int col = 0; col < m.col_count() && lead < rows.size(); ++col) {
    std::size_t piv = lead;
    while (piv < rows.size() && !rows[piv].get(col))
      ++piv;
    if (piv == rows.size())
      continue;
    std::swap(rows[lead], rows[piv]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != lead && rows[i].get(col))
        rows[i] ^= rows[lead];
    ++lead;
  }
  return Gf2Matrix(m.col_count(), std::move(rows));
}

Eliminator::Reduced Eliminator::reduce(std::uint64_t v) const {
  std::uint64_t combo = 0;
  for (const auto& row : pivots_) {
    if ((v >> row.pivot) & 1u) {
      v ^= row.vec;
      combo ^= row.combo;
    }
  }
  return {v, combo};
}

bool Eliminator::insert(std::uint64_t v) {
  if (v & ~low_mask(dim_))
    throw DimensionMismatch("vector exceeds eliminator dimension");
  auto [residual, combo] = reduce(v);
  if (residual == 0)
    return false;
  combo ^= std::uint64_t{1} << pivots_.size();
  pivots_.push_back({residual, combo, std::countr_zero(residual)});
  return true;
}

std::optional<std::uint64_t> Eliminator::coordinates(std::uint64_t v) const {
  auto [residual, combo] = reduce(v);
  if (residual != 0)
    return std::nullopt;
  return combo;
}

} // namespace bmx
