#include "doctest.h"

#include "bmx/catalogue.hpp"
#include "bmx/minortest.hpp"
#include "helpers.hpp"

#include <cstdlib>
#include <random>

using namespace bmx;

namespace {

const MinorQuery ag = MinorQuery::of(MinorTarget::ag32);
const MinorQuery f7 = MinorQuery::of(MinorTarget::f7);
const MinorQuery f7dual = MinorQuery::of(MinorTarget::f7dual);

// Oracle: an 8-subset of a rank-4 point set is AG(3,2) iff it spans and no
// three of its points are collinear; try every 8-subset.
bool brute_ag_restriction(const BinaryMatroid& m) {
  const auto& pts = m.points();
  const int n = m.size();
  if (m.rank() != 4 || n < 8)
    return false;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != 8)
      continue;
    std::vector<Point> s;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1u)
        s.push_back(pts[i]);
    bool cap = true;
    for (std::size_t a = 0; a < s.size() && cap; ++a)
      for (std::size_t b = a + 1; b < s.size() && cap; ++b)
        cap = std::find(s.begin(), s.end(), static_cast<Point>(s[a] ^ s[b])) == s.end();
    Eliminator e(4);
    for (Point p : s)
      e.insert(p);
    if (cap && e.size() == 4)
      return true;
  }
  return false;
}

const Catalogue& rank5_catalogue() {
  static const Catalogue cat = [] {
    BootstrapOptions o;
    o.max_rank = 5;
    o.max_size = 15;
    return bootstrap(o);
  }();
  return cat;
}

} // namespace

TEST_CASE("named minor queries") {
  CHECK(MinorQuery::named("ag32").target_size == 8);
  CHECK(MinorQuery::named("f7").target_rank == 3);
  CHECK(MinorQuery::named("f7dual").target_rank == 4);
  CHECK_THROWS(MinorQuery::named("k5"));
}

TEST_CASE("has_minor on named matroids") {
  CHECK(has_minor(construct::ag32(), ag));
  CHECK(has_minor(construct::pg(3), ag));
  CHECK_FALSE(has_minor(construct::mk(7), ag));
  CHECK(has_minor(construct::gpc_f7(6), f7));
  CHECK(has_minor(construct::f7(), f7));
  CHECK(has_minor(construct::f7dual(), f7dual));
  CHECK_FALSE(has_minor(construct::f7(), f7dual));
  CHECK_FALSE(has_minor(construct::f7dual(), f7));
  CHECK_FALSE(has_minor(construct::mk5plus(), ag));
  for (int k = 1; k <= 3; ++k)
    CHECK_FALSE(has_minor(construct::appendix5(k), ag));
  for (int n = 2; n <= 8; ++n)
    CHECK_FALSE(has_minor(construct::mk(n), ag));
}

TEST_CASE("regularity") {
  for (int n = 2; n <= 8; ++n)
    CHECK(is_regular(construct::mk(n)));
  CHECK_FALSE(is_regular(construct::f7()));
  CHECK_FALSE(is_regular(construct::f7dual()));
  for (int k = 1; k <= 3; ++k)
    CHECK_FALSE(is_regular(construct::appendix5(k)));
  for (int r = 5; r <= 8; ++r) {
    const auto m = construct::gpc_f7(r);
    CHECK_FALSE(is_regular(m));
    CHECK(has_minor(m, f7));
  }
}

TEST_CASE("AG(3,2) needs rank 4 and eight points") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const int r = 1 + static_cast<int>(rng() % 3);
    const auto m = testing::random_matroid(r, r + static_cast<int>(rng() % 8), rng);
    CHECK_FALSE(has_minor(m, ag));
  }
  for (int trial = 0; trial < 50; ++trial) {
    const int r = 4 + static_cast<int>(rng() % 3);
    const auto m = testing::random_matroid(r, r + static_cast<int>(rng() % (8 - r)), rng);
    CHECK_FALSE(has_minor(m, ag));
  }
}

TEST_CASE("restriction search agrees with exhaustive subsets at rank 4") {
  std::mt19937_64 rng(43);
  int positives = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto m = testing::random_matroid(4, 8 + static_cast<int>(rng() % 8), rng);
    const bool expected = brute_ag_restriction(m);
    positives += expected;
    CHECK(has_minor(m, ag) == expected);
  }
  CHECK(positives > 0);
}

TEST_CASE("has_minor is monotone under single-element minors") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 150; ++trial) {
    const int r = 4 + static_cast<int>(rng() % 2);
    const auto m = testing::random_matroid(r, 8 + static_cast<int>(rng() % 10), rng);
    const bool big = has_minor(m, ag);
    for (Point p : m.points()) {
      if (has_minor(delete_point(m, p), ag))
        CHECK(big);
      if (has_minor(contract(m, p), ag))
        CHECK(big);
    }
  }
}

TEST_CASE("memo cache respects its limit") {
  MinorCache cache(2);
  const auto a = canonical_key(construct::f7());
  const auto b = canonical_key(construct::ag32());
  const auto c = canonical_key(construct::mk(4));
  cache.store(a, true);
  cache.store(b, false);
  CHECK(cache.size() == 2);
  CHECK(*cache.find(b) == false);
  cache.store(c, true);
  CHECK(cache.size() == 1);
  CHECK_FALSE(cache.find(a).has_value());

  MinorCache off(0);
  off.store(a, true);
  CHECK(off.size() == 0);
  // A disabled cache slows the search but cannot change its verdicts.
  CHECK(has_minor(construct::gpc_f7(5), f7, off));
  CHECK_FALSE(has_minor(construct::mk(6), ag, off));
}

TEST_CASE("cache limit comes from the environment") {
  ::setenv("BMX_CACHE_LIMIT", "123", 1);
  CHECK(default_cache_limit() == 123);
  ::setenv("BMX_CACHE_LIMIT", "lots", 1);
  CHECK(default_cache_limit() == (std::size_t{1} << 22));
  ::unsetenv("BMX_CACHE_LIMIT");
  CHECK(default_cache_limit() == (std::size_t{1} << 22));
}

TEST_CASE("catalogue membership on named matroids") {
  const auto& cat = rank5_catalogue();
  CHECK_FALSE(catalogue_membership_free(construct::ag32(), cat));
  CHECK(catalogue_membership_free(construct::f7(), cat));
  CHECK(catalogue_membership_free(construct::mk5plus(), cat));
  CHECK_FALSE(catalogue_membership_free(construct::pg(3), cat));

  BootstrapOptions o;
  o.max_rank = 3;
  o.max_size = 7;
  const auto small = bootstrap(o);
  CHECK_THROWS_AS(catalogue_membership_free(construct::mk5plus(), small), MissingStratum);
}

TEST_CASE("membership test agrees with direct minor search at rank 4") {
  BootstrapOptions all;
  all.max_rank = 4;
  all.max_size = 15;
  all.exclusion = false;
  const auto everything = bootstrap(all);
  const auto& cat = rank5_catalogue();
  int disagreements = 0, checked = 0;
  for (const auto& [id, st] : everything.strata)
    for (const auto& key : st.keys) {
      if (id.size == 0)
        continue;
      const auto m = key.to_matroid();
      disagreements += catalogue_membership_free(m, cat) == has_minor(m, ag);
      ++checked;
    }
  CHECK(disagreements == 0);
  CHECK(checked > 0);
}

TEST_CASE("membership test agrees with direct minor search on sampled rank-5 matroids") {
  const auto& cat = rank5_catalogue();
  std::mt19937_64 rng(53);
  int disagreements = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const auto m = testing::random_matroid(5, 5 + static_cast<int>(rng() % 8), rng);
    disagreements += catalogue_membership_free(m, cat) == has_minor(m, ag);
  }
  CHECK(disagreements == 0);
}
