#include "bmx/polya.hpp"

#include "bmx/catalogue.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace bmx {

int poly_degree(Gf2Poly p) { return p ? 31 - std::countl_zero(p) : -1; }

Gf2Poly poly_mul(Gf2Poly a, Gf2Poly b) {
  Gf2Poly out = 0;
  for (; b; b >>= 1, a <<= 1)
    if (b & 1u)
      out ^= a;
  return out;
}

Gf2Poly poly_mod(Gf2Poly a, Gf2Poly m) {
  const int dm = poly_degree(m);
  if (dm < 0)
    throw std::invalid_argument("polynomial modulus is zero");
  for (int d = poly_degree(a); d >= dm; d = poly_degree(a))
    a ^= m << (d - dm);
  return a;
}

std::vector<Gf2Poly> irreducible_polys(int max_degree) {
  std::vector<Gf2Poly> out;
  for (int d = 1; d <= max_degree; ++d)
    for (Gf2Poly p = (1u << d) | 1u; p < (2u << d); p += 2) {
      bool irreducible = true;
      for (Gf2Poly f : out) {
        if (2 * poly_degree(f) > d)
          break;
        if (poly_mod(p, f) == 0) {
          irreducible = false;
          break;
        }
      }
      if (irreducible)
        out.push_back(p);
    }
  return out;
}

BigInt gl_order(int n) {
  BigInt q = BigInt(1) << n;
  BigInt out = 1;
  for (int i = 0; i < n; ++i)
    out *= q - (BigInt(1) << i);
  return out;
}

namespace {

constexpr int kMaxClassDim = 8;

// |GL(m, q)| for q a power of two.
BigInt gl_order_q(int m, const BigInt& q) {
  BigInt qm = 1;
  for (int i = 0; i < m; ++i)
    qm *= q;
  BigInt out = 1, qi = 1;
  for (int i = 0; i < m; ++i, qi *= q)
    out *= qm - qi;
  return out;
}

// Centralizer contribution of one primary part: with q = 2^deg f, the
// centralizer of the f-primary block of type lambda has order
// q^(sum lambda'_i^2 - sum m_i^2) * prod_i |GL(m_i, q)|, where lambda' is the
// conjugate partition and m_i the multiplicity of part i.
BigInt centralizer_part(const PrimaryPart& part) {
  const BigInt q = BigInt(1) << poly_degree(part.poly);
  const auto& lambda = part.partition;
  const int largest = lambda.empty() ? 0 : lambda.front();
  long exponent = 0;
  for (int i = 1; i <= largest; ++i) {
    long conj = 0;
    for (int x : lambda)
      conj += x >= i;
    exponent += conj * conj;
  }
  std::map<int, int> mult;
  for (int x : lambda)
    ++mult[x];
  BigInt out = 1;
  for (const auto& [part_size, m] : mult) {
    exponent -= static_cast<long>(m) * m;
    out *= gl_order_q(m, q);
  }
  for (long i = 0; i < exponent; ++i)
    out *= q;
  return out;
}

void partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

const std::vector<std::vector<int>>& partitions_of(int n) {
  static std::vector<std::vector<std::vector<int>>> cache = [] {
    std::vector<std::vector<std::vector<int>>> all(kMaxClassDim + 1);
    for (int k = 0; k <= kMaxClassDim; ++k) {
      std::vector<int> cur;
      partitions(k, k, cur, all[k]);
    }
    return all;
  }();
  return cache.at(n);
}

Gf2Matrix block_diagonal(const std::vector<Gf2Matrix>& blocks, int n) {
  std::vector<Gf2Vector> cols;
  int offset = 0;
  for (const auto& b : blocks) {
    for (const auto& c : b.columns())
      cols.emplace_back(n, c.bits() << offset);
    offset += static_cast<int>(b.row_count());
  }
  return Gf2Matrix::from_columns(n, cols);
}

} // namespace

Gf2Matrix companion_matrix(Gf2Poly p) {
  const int m = poly_degree(p);
  if (m < 1 || m > 64)
    throw std::invalid_argument("companion matrix needs a polynomial of degree 1..64");
  std::vector<Gf2Vector> cols;
  for (int i = 0; i + 1 < m; ++i)
    cols.push_back(Gf2Vector::unit(m, i + 1));
  const std::uint64_t low = p & ~(std::uint64_t{1} << m);
  cols.emplace_back(m, low);
  return Gf2Matrix::from_columns(m, cols);
}

std::vector<ConjugacyClass> conjugacy_classes(int n) {
  if (n < 1 || n > 8)
    throw std::out_of_range("conjugacy_classes needs 1 <= n <= 8");
  const auto polys = irreducible_polys(n);
  const BigInt order = gl_order(n);
  std::vector<ConjugacyClass> out;
  std::vector<PrimaryPart> sig;

  auto rec = [&](auto&& self, std::size_t idx, int remaining) -> void {
    if (remaining == 0) {
      ConjugacyClass c;
      c.signature = sig;
      BigInt cent = 1;
      std::vector<Gf2Matrix> blocks;
      for (const auto& part : sig) {
        cent *= centralizer_part(part);
        for (int x : part.partition) {
          Gf2Poly power = 1;
          for (int i = 0; i < x; ++i)
            power = poly_mul(power, part.poly);
          blocks.push_back(companion_matrix(power));
        }
      }
      c.representative = block_diagonal(blocks, n);
      c.class_size = order / cent;
      out.push_back(std::move(c));
      return;
    }
    if (idx == polys.size())
      return;
    const Gf2Poly f = polys[idx];
    const int d = poly_degree(f);
    self(self, idx + 1, remaining);
    for (int s = 1; s * d <= remaining; ++s)
      for (const auto& lambda : partitions_of(s)) {
        sig.push_back({f, lambda});
        self(self, idx + 1, remaining - s * d);
        sig.pop_back();
      }
  };
  rec(rec, 0, n);
  return out;
}

CycleType cycle_type_on_points(const Gf2Matrix& rep) {
  const int n = rep.col_count();
  if (static_cast<int>(rep.row_count()) != n)
    throw std::invalid_argument("cycle type needs a square matrix");
  if (n > 16)
    throw std::out_of_range("cycle type needs n <= 16");
  const auto cols = rep.columns();
  if (rank(cols) != n)
    throw std::invalid_argument("cycle type needs an invertible matrix");
  auto apply = [&](std::uint32_t v) {
    std::uint32_t out = 0;
    for (int j = 0; v; ++j, v >>= 1)
      if (v & 1u)
        out ^= static_cast<std::uint32_t>(cols[j].bits());
    return out;
  };
  const std::uint32_t count = (1u << n) - 1;
  std::vector<char> seen(count + 1, 0);
  CycleType t;
  for (std::uint32_t v = 1; v <= count; ++v) {
    if (seen[v])
      continue;
    int len = 0;
    for (std::uint32_t w = v; !seen[w]; w = apply(w)) {
      seen[w] = 1;
      ++len;
    }
    ++t.cycles[len];
  }
  return t;
}

std::vector<BigInt> subset_orbit_counts(int n) {
  if (n == 0)
    return {BigInt(1)};
  if (n < 0 || n > 8)
    throw std::out_of_range("subset orbit counts need 0 <= n <= 8");
  const int points = (1 << n) - 1;
  std::vector<BigInt> total(points + 1, 0);
  for (const auto& c : conjugacy_classes(n)) {
    // Generating polynomial prod over cycles of (1 + x^length).
    std::vector<BigInt> poly(points + 1, 0);
    poly[0] = 1;
    int degree = 0;
    for (const auto& [len, cnt] : cycle_type_on_points(c.representative).cycles)
      for (std::uint64_t i = 0; i < cnt; ++i) {
        degree += len;
        for (int j = degree; j >= len; --j)
          poly[j] += poly[j - len];
      }
    for (int k = 0; k <= points; ++k)
      total[k] += c.class_size * poly[k];
  }
  const BigInt order = gl_order(n);
  for (auto& t : total) {
    if (t % order != 0)
      throw std::logic_error("orbit count is not an integer");
    t /= order;
  }
  return total;
}

BigInt count_subset_orbits(int n, int k) {
  const auto all = subset_orbit_counts(n);
  if (k < 0 || k >= static_cast<int>(all.size()))
    throw std::out_of_range("subset size out of range");
  return all[k];
}

CensusReport census_check(int n, const Catalogue& cat) {
  if (cat.exclusion)
    throw std::invalid_argument("census needs a catalogue built without exclusion");
  const auto expected = subset_orbit_counts(n);
  CensusReport rep;
  rep.n = n;
  for (int k = 0; k < static_cast<int>(expected.size()); ++k) {
    BigInt observed = 0;
    for (int s = 0; s <= n; ++s) {
      if (k < s || k > (1 << s) - 1 || (s == 0 && k != 0))
        continue;
      const Stratum* st = cat.find(s, k);
      if (!st || !st->complete)
        throw IncompleteStratum("census needs complete stratum r=" + std::to_string(s) + " k=" + std::to_string(k));
      observed += st->keys.size();
    }
    rep.rows.push_back({k, expected[k], observed});
    if (observed != expected[k])
      rep.mismatches.push_back(k);
  }
  return rep;
}

} // namespace bmx
