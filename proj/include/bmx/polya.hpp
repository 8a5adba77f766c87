#pragma once

// Conjugacy classes of GL(n,2), their cycle types on the 2^n - 1 points of
// PG(n-1,2), and orbit counts of subsets by Polya's theorem. Over GF(2) the
// projective group PGL(n,2) coincides with GL(n,2).

#include "bmx/gf2.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <vector>

namespace bmx {

class Catalogue;

using BigInt = boost::multiprecision::cpp_int;

/// Polynomial over GF(2); bit i is the coefficient of x^i.
using Gf2Poly = std::uint32_t;

int poly_degree(Gf2Poly p);
Gf2Poly poly_mul(Gf2Poly a, Gf2Poly b);
Gf2Poly poly_mod(Gf2Poly a, Gf2Poly m);
/// Monic irreducible polynomials of degree 1..max_degree other than x, in
/// increasing numeric order.
std::vector<Gf2Poly> irreducible_polys(int max_degree);

struct PrimaryPart {
  Gf2Poly poly;
  /// Non-increasing, positive.
  std::vector<int> partition;
  friend bool operator==(const PrimaryPart&, const PrimaryPart&) = default;
};

struct ConjugacyClass {
  std::vector<PrimaryPart> signature;
  /// Direct sum of companion matrices of poly^part.
  Gf2Matrix representative;
  BigInt class_size;
};

struct CycleType {
  /// cycle length -> number of cycles
  std::map<int, std::uint64_t> cycles;
  friend bool operator==(const CycleType&, const CycleType&) = default;
};

/// prod_{i<n} (2^n - 2^i)
BigInt gl_order(int n);
/// Companion matrix of a monic polynomial of degree >= 1.
Gf2Matrix companion_matrix(Gf2Poly p);

/// One entry per class, 1 <= n <= 8.
std::vector<ConjugacyClass> conjugacy_classes(int n);

/// Cycles of v -> rep v on nonzero vectors. Throws on a singular matrix.
CycleType cycle_type_on_points(const Gf2Matrix& rep);

/// Orbits of GL(n,2) on k-subsets of PG(n-1,2) for every k = 0..2^n-1;
/// n = 0 gives {1}.
std::vector<BigInt> subset_orbit_counts(int n);
BigInt count_subset_orbits(int n, int k);

struct CensusRow {
  int size;
  BigInt expected;
  BigInt observed;
};

struct CensusReport {
  int n = 0;
  std::vector<CensusRow> rows;
  std::vector<int> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// Compares per-size counts of an unrestricted catalogue (summed over ranks
/// <= n) with the orbit counts. Throws IncompleteStratum if the catalogue
/// does not cover every stratum of rank <= n completely.
CensusReport census_check(int n, const Catalogue& cat);

} // namespace bmx
