#include "doctest.h"

#include "bmx/catalogue.hpp"
#include "bmx/minortest.hpp"

#include <algorithm>
#include <sstream>

using namespace bmx;

namespace {

Catalogue build(int r, int k, bool exclusion = true, int workers = 1) {
  BootstrapOptions o;
  o.max_rank = r;
  o.max_size = k;
  o.exclusion = exclusion;
  o.workers = workers;
  return bootstrap(o);
}

const Catalogue& rank5() {
  static const Catalogue cat = build(5, 15);
  return cat;
}

std::string serialize(const Catalogue& cat) {
  std::ostringstream out;
  write_catalogue(out, cat);
  return out.str();
}

Catalogue parse(const std::string& text) {
  std::istringstream in(text);
  return read_catalogue(in);
}

std::size_t line_of_error(const std::string& text) {
  try {
    parse(text);
  } catch (const CatalogueFormatError& e) {
    return e.line();
  }
  return 0;
}

} // namespace

TEST_CASE("rank 3 yields the Fano plane at size 7") {
  const auto cat = build(3, 7);
  const auto* s = cat.find(3, 7);
  REQUIRE(s);
  CHECK(s->complete);
  REQUIRE(s->keys.size() == 1);
  CHECK(s->keys[0] == canonical_key(construct::f7()));
  CHECK(cat.complete());
}

TEST_CASE("rank 4 maximum is M(K5)+") {
  const auto cat = build(4, 11);
  const auto* s = cat.find(4, 11);
  REQUIRE(s);
  REQUIRE(s->keys.size() == 1);
  CHECK(s->keys[0] == canonical_key(construct::mk5plus()));
  const auto* ag = cat.find(4, 8);
  REQUIRE(ag);
  CHECK_FALSE(ag->contains(canonical_key(construct::ag32())));
}

TEST_CASE("rank 2 without exclusion has four strata") {
  const auto cat = build(2, 3, false);
  CHECK(cat.strata.size() == 4);
  CHECK(cat.find(0, 0)->keys.size() == 1);
  CHECK(cat.find(1, 1)->keys.size() == 1);
  CHECK(cat.find(2, 2)->keys.size() == 1);
  CHECK(cat.find(2, 3)->keys.size() == 1);
}

TEST_CASE("strata hold keys of their own rank and size") {
  for (const auto& [id, st] : rank5().strata) {
    CHECK(st.complete);
    CHECK(std::is_sorted(st.keys.begin(), st.keys.end()));
    for (const auto& key : st.keys) {
      CHECK(key.rank == id.rank);
      CHECK(key.size() == id.size);
      CHECK(canonical_key(key.to_matroid()) == key);
    }
  }
}

TEST_CASE("bootstrap is independent of worker count") {
  CHECK(build(5, 15, true, 1) == build(5, 15, true, 3));
  CHECK(build(4, 15, false, 1) == build(4, 15, false, 4));
}

TEST_CASE("catalogue is closed under deletion and contraction") {
  const auto& cat = rank5();
  for (const auto& [id, st] : cat.strata) {
    if (id.size == 0)
      continue;
    for (const auto& key : st.keys) {
      const auto m = key.to_matroid();
      for (Point p : m.points()) {
        const auto d = delete_point(m, p);
        CHECK(cat.find(d.rank(), d.size())->contains(canonical_key(d)));
        const auto c = contract(m, p);
        CHECK(cat.find(c.rank(), c.size())->contains(canonical_key(c)));
        CHECK(c.size() == m.size() - 1 - static_cast<int>(lines_through(m, p).size()));
      }
    }
  }
}

TEST_CASE("members are AG(3,2)-free by direct search") {
  const auto q = MinorQuery::of(MinorTarget::ag32);
  for (const auto& [id, st] : rank5().strata)
    for (const auto& key : st.keys)
      CHECK_FALSE(has_minor(key.to_matroid(), q));
}

TEST_CASE("extremal report through rank 5") {
  const auto rep = extremal_report(rank5());
  const auto* r3 = rep.at(3);
  const auto* r4 = rep.at(4);
  const auto* r5 = rep.at(5);
  REQUIRE(r3);
  REQUIRE(r4);
  REQUIRE(r5);
  CHECK(r3->max_size == 7);
  CHECK(r3->count == 1);
  CHECK(r3->max_nonregular_size == 7);
  CHECK(r4->max_size == 11);
  CHECK(r4->max_nonregular_size == 11);
  CHECK(r4->nonregular_count == 1);
  CHECK(r5->max_size == 15);
  CHECK(r5->count == 4);
  CHECK(r5->max_nonregular_size == 15);
  CHECK(r5->nonregular_count == 3);
  CHECK(rep.at(2)->max_nonregular_size == -1);

  for (const auto& c : verify_theorems(rank5(), rep)) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.passed);
  }
}

TEST_CASE("maximum regular members are complete graphs") {
  const auto rep = extremal_report(rank5());
  for (int r = 1; r <= 5; ++r) {
    const auto* row = rep.at(r);
    REQUIRE(row);
    CHECK(row->max_regular_size == (r + 1) * r / 2);
    REQUIRE(row->regular_extremal.size() == 1);
    CHECK(row->regular_extremal[0] == canonical_key(construct::mk(r + 1)));
  }
}

TEST_CASE("resource limit leaves strata incomplete") {
  BootstrapOptions o;
  o.max_rank = 5;
  o.max_size = 15;
  o.max_candidates = 20;
  const auto cat = bootstrap(o);
  CHECK_FALSE(cat.complete());
  CHECK(cat.find(5, 5)->complete);
  CHECK_FALSE(cat.find(5, 15)->complete);
  CHECK_THROWS_AS(extremal_report(cat), IncompleteStratum);
  const auto checks = verify_theorems(cat);
  REQUIRE(checks.size() == 1);
  CHECK_FALSE(checks[0].passed);
}

TEST_CASE("bootstrap rejects bad bounds") {
  CHECK_THROWS(build(0, 0));
  CHECK_THROWS(build(9, 10));
  CHECK_THROWS(build(3, 8));
}

TEST_CASE("file round trip") {
  const auto& cat = rank5();
  const auto text = serialize(cat);
  CHECK(text.rfind("bmcat 1 R=5 K=15 exclusion=on\n", 0) == 0);
  CHECK(text.find("# stratum r=3 k=7 complete=1 n=1\n1,2,3,4,5,6,7\n") != std::string::npos);
  CHECK(parse(text) == cat);
  CHECK(serialize(parse(text)) == text);

  const auto off = build(2, 3, false);
  CHECK(parse(serialize(off)) == off);
}

TEST_CASE("file errors") {
  const auto text = serialize(build(3, 7));

  SUBCASE("higher version") {
    auto bad = text;
    bad.replace(0, 7, "bmcat 2");
    CHECK_THROWS_AS(parse(bad), CatalogueVersionError);
  }
  SUBCASE("corrupted point line names its line") {
    const auto pos = text.find("1,2,3,4,5,6,7\n");
    REQUIRE(pos != std::string::npos);
    auto bad = text;
    bad[pos + 1] = ';';
    const std::size_t line = 1 + std::count(text.begin(), text.begin() + pos, '\n');
    CHECK(line_of_error(bad) == line);
  }
  SUBCASE("checksum") {
    auto bad = text;
    const auto pos = bad.find("complete=1");
    bad[pos + 9] = '0';
    CHECK_THROWS_WITH_AS(parse(bad), doctest::Contains("checksum"), CatalogueFormatError);
  }
  SUBCASE("truncated") {
    CHECK_THROWS_WITH_AS(parse(text.substr(0, text.size() / 2)), doctest::Contains("truncated"),
                         CatalogueFormatError);
    const auto cut = text.substr(0, text.rfind("# end"));
    CHECK_THROWS_WITH_AS(parse(cut), doctest::Contains("truncated"), CatalogueFormatError);
  }
  SUBCASE("wrong count") {
    auto bad = text;
    const auto pos = bad.find("k=7 complete=1 n=1");
    bad[pos + 17] = '2';
    CHECK_THROWS_AS(parse(bad), CatalogueFormatError);
  }
}

TEST_CASE("save and load through files") {
  const auto path = std::filesystem::temp_directory_path() / "bmx_test_catalogue.txt";
  save(rank5(), path);
  CHECK(load(path) == rank5());
  std::filesystem::remove(path);
  CHECK_THROWS(load(path));
}
