#include "doctest.h"

#include "bmx/canon.hpp"
#include "helpers.hpp"

#include <random>

using namespace bmx;
using bmx::testing::all_invertible;
using bmx::testing::random_invertible;
using bmx::testing::random_matroid;
using bmx::testing::transformed;

namespace {

std::uint64_t brute_automorphisms(const BinaryMatroid& m) {
  std::uint64_t count = 0;
  for (const auto& t : all_invertible(m.rank()))
    count += transformed(m, t) == m;
  return count;
}

bool contains_units(const CanonicalKey& k) {
  for (int i = 0; i < k.rank; ++i)
    if (!k.image.test(1u << i))
      return false;
  return true;
}

} // namespace

TEST_CASE("key of the Fano plane is the whole plane") {
  const auto k = canonical_key(construct::f7());
  CHECK(k.rank == 3);
  CHECK(k.points() == std::vector<Point>{1, 2, 3, 4, 5, 6, 7});
  CHECK(to_text(k) == "r=3 pts=1,2,3,4,5,6,7");
}

TEST_CASE("key of the empty matroid") {
  const auto k = canonical_key(BinaryMatroid());
  CHECK(k.rank == 0);
  CHECK(k.size() == 0);
}

TEST_CASE("automorphism counts against brute force") {
  // Oracle values from exhaustive search over GL(r,2).
  CHECK(brute_automorphisms(construct::pg(2)) == 168);
  CHECK(brute_automorphisms(construct::ag32()) == 1344);
  CHECK(automorphism_count(construct::pg(2)) == 168);
  CHECK(automorphism_count(construct::ag32()) == 1344);
  for (int r = 1; r <= 6; ++r) {
    std::vector<Point> basis;
    std::uint64_t fact = 1;
    for (int i = 0; i < r; ++i) {
      basis.push_back(static_cast<Point>(1u << i));
      fact *= static_cast<std::uint64_t>(i + 1);
    }
    CHECK(automorphism_count(BinaryMatroid(r, basis)) == fact);
  }
  CHECK(automorphism_count(construct::mk(7)) == 5040);

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const int r = 2 + static_cast<int>(rng() % 3);
    const auto m = random_matroid(r, r + static_cast<int>(rng() % ((1u << r) - r)), rng);
    CHECK(automorphism_count(m) == brute_automorphisms(m));
  }
}

TEST_CASE("keys are invariant under change of basis") {
  std::mt19937_64 rng(23);
  std::vector<BinaryMatroid> sample{construct::mk(4), construct::mk(6), construct::mk5plus(),
                                    construct::gpc_f7(5), construct::appendix5(1)};
  for (int i = 0; i < 40; ++i) {
    const int r = 3 + static_cast<int>(rng() % 4);
    sample.push_back(random_matroid(r, r + static_cast<int>(rng() % 14), rng));
  }
  for (const auto& m : sample) {
    const auto key = canonical_key(m);
    CHECK(key.rank == m.rank());
    CHECK(key.size() == m.size());
    CHECK(contains_units(key));
    CHECK(are_isomorphic(key.to_matroid(), m));
    CHECK(canonical_key(key.to_matroid()) == key);
    for (int t = 0; t < 25; ++t)
      CHECK(canonical_key(transformed(m, random_invertible(m.rank(), rng))) == key);
  }
}

TEST_CASE("are_isomorphic matches brute force at rank <= 3") {
  const auto gl3 = all_invertible(3);
  std::vector<BinaryMatroid> all;
  for (unsigned mask = 1; mask < 128; ++mask) {
    std::vector<Point> pts;
    for (unsigned v = 1; v < 8; ++v)
      if ((mask >> (v - 1)) & 1u)
        pts.push_back(static_cast<Point>(v));
    Eliminator e(3);
    for (Point p : pts)
      e.insert(p);
    if (e.size() == 3)
      all.emplace_back(3, pts);
  }
  int disagreements = 0;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i; j < all.size(); ++j)
      disagreements += are_isomorphic(all[i], all[j]) != testing::brute_isomorphic(all[i], all[j], gl3);
  CHECK(disagreements == 0);
}

TEST_CASE("are_isomorphic matches brute force on random rank-4 pairs") {
  const auto gl4 = all_invertible(4);
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 8);
    const auto a = random_matroid(4, n, rng);
    // Half the pairs are isomorphic by construction.
    const auto b = (trial % 2) ? transformed(a, random_invertible(4, rng)) : random_matroid(4, n, rng);
    CHECK(are_isomorphic(a, b) == testing::brute_isomorphic(a, b, gl4));
  }
}

TEST_CASE("named non-isomorphisms") {
  CHECK_FALSE(are_isomorphic(construct::f7(), construct::f7dual()));
  CHECK_FALSE(are_isomorphic(construct::mk(7), construct::gpc_f7(6)));
  const auto k1 = canonical_key(construct::appendix5(1));
  const auto k2 = canonical_key(construct::appendix5(2));
  const auto k3 = canonical_key(construct::appendix5(3));
  CHECK(k1 != k2);
  CHECK(k1 != k3);
  CHECK(k2 != k3);
}

TEST_CASE("key ordering is lexicographic on point lists") {
  PointSet a, b;
  for (Point p : {1, 2, 3, 4})
    a.set(p);
  for (Point p : {1, 2, 4, 5})
    b.set(p);
  CHECK(a.lex_less_same_size(b));
  CHECK_FALSE(b.lex_less_same_size(a));
  CHECK_FALSE(a.lex_less_same_size(a));
}
