#include "bmx/catalogue.hpp"

#include "bmx/minortest.hpp"
#include "bmx/parallel.hpp"

#include <zlib.h>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string_view>

namespace bmx {

bool Stratum::contains(const CanonicalKey& k) const { return std::binary_search(keys.begin(), keys.end(), k); }

const Stratum* Catalogue::find(int rank, int size) const {
  const auto it = strata.find({rank, size});
  return it == strata.end() ? nullptr : &it->second;
}

bool Catalogue::complete() const {
  return std::all_of(strata.begin(), strata.end(), [](const auto& kv) { return kv.second.complete; });
}

std::size_t Catalogue::total() const {
  std::size_t n = 0;
  for (const auto& [id, s] : strata)
    n += s.keys.size();
  return n;
}

namespace {

int max_points(int rank) { return (1 << rank) - 1; }

void sort_unique(std::vector<CanonicalKey>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Canonical keys of every single-point extension of `parent` (rank s) that
// stays within rank R.
void extend(const CanonicalKey& parent, int max_rank, std::vector<CanonicalKey>& out) {
  const int s = parent.rank;
  auto pts = parent.points();
  const auto member = parent.image;
  if (parent.size() < max_points(s)) {
    std::vector<Point> child(pts.size() + 1);
    for (unsigned v = 1; v <= static_cast<unsigned>(max_points(s)); ++v) {
      if (member.test(v))
        continue;
      const auto pos = std::lower_bound(pts.begin(), pts.end(), static_cast<Point>(v)) - pts.begin();
      std::copy(pts.begin(), pts.begin() + pos, child.begin());
      child[pos] = static_cast<Point>(v);
      std::copy(pts.begin() + pos, pts.end(), child.begin() + pos + 1);
      out.push_back(canonical_key(BinaryMatroid::unchecked(s, child)));
    }
  }
  if (s < max_rank) {
    pts.push_back(static_cast<Point>(1u << s));
    out.push_back(canonical_key(BinaryMatroid::unchecked(s + 1, std::move(pts))));
  }
}

} // namespace

Catalogue bootstrap(const BootstrapOptions& opts) {
  if (opts.max_rank < 1 || opts.max_rank > kMaxRank)
    throw std::out_of_range("bootstrap rank must be in 1..8");
  if (opts.max_size < 0 || opts.max_size > max_points(opts.max_rank))
    throw std::out_of_range("bootstrap size must be in 0..2^R-1");
  const int workers = std::max(1, opts.workers);

  Catalogue cat;
  cat.max_rank = opts.max_rank;
  cat.max_size = opts.max_size;
  cat.exclusion = opts.exclusion;
  for (int s = 1; s <= opts.max_rank; ++s)
    for (int k = s; k <= std::min(opts.max_size, max_points(s)); ++k)
      cat.strata[{s, k}] = {};
  cat.strata[{0, 0}] = {{CanonicalKey{}}, true};

  for (int k = 0; k < opts.max_size; ++k) {
    std::vector<const CanonicalKey*> parents;
    for (int s = 0; s <= opts.max_rank; ++s)
      if (const auto* st = cat.find(s, k))
        for (const auto& key : st->keys)
          parents.push_back(&key);

    std::vector<std::vector<CanonicalKey>> found(workers);
    std::vector<std::size_t> compacted(workers, 0);
    parallel_for(parents.size(), workers, [&](int w, std::size_t i) {
      auto& bucket = found[w];
      extend(*parents[i], opts.max_rank, bucket);
      if (bucket.size() > (std::size_t{1} << 20) && bucket.size() > 2 * compacted[w]) {
        sort_unique(bucket);
        compacted[w] = bucket.size();
      }
    });
    std::vector<CanonicalKey> candidates;
    for (auto& b : found) {
      sort_unique(b);
      candidates.insert(candidates.end(), b.begin(), b.end());
      std::vector<CanonicalKey>().swap(b);
    }
    sort_unique(candidates);

    if (opts.max_candidates && candidates.size() > opts.max_candidates)
      return cat;

    std::vector<char> admit(candidates.size(), 1);
    if (opts.exclusion)
      parallel_for(candidates.size(), workers, [&](int, std::size_t i) {
        admit[i] = catalogue_membership_free(candidates[i].to_matroid(), cat);
      });

    std::size_t admitted = 0;
    for (auto& [id, st] : cat.strata)
      if (id.size == k + 1)
        st.complete = true;
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if (admit[i]) {
        cat.strata[{candidates[i].rank, k + 1}].keys.push_back(candidates[i]);
        ++admitted;
      }
    if (opts.progress)
      opts.progress({k + 1, parents.size(), candidates.size(), admitted});
  }
  return cat;
}

const ExtremalRow* ExtremalReport::at(int rank) const {
  for (const auto& r : rows)
    if (r.rank == rank)
      return &r;
  return nullptr;
}

ExtremalReport extremal_report(const Catalogue& cat, int workers) {
  ExtremalReport report;
  RegularityCaches caches;
  for (int s = 1; s <= cat.max_rank; ++s) {
    std::vector<const Stratum*> by_size;
    int top = -1;
    for (const auto& [id, st] : cat.strata) {
      if (id.rank != s)
        continue;
      if (!st.complete)
        throw IncompleteStratum("stratum r=" + std::to_string(id.rank) + " k=" + std::to_string(id.size) +
                                " is incomplete");
      if (static_cast<int>(by_size.size()) <= id.size)
        by_size.resize(id.size + 1, nullptr);
      by_size[id.size] = &st;
      if (!st.keys.empty())
        top = std::max(top, id.size);
    }
    if (top < 0)
      continue;

    ExtremalRow row;
    row.rank = s;
    row.max_size = top;
    row.extremal = by_size[top]->keys;
    row.count = row.extremal.size();
    for (int k = top; k >= 0 && (row.max_nonregular_size < 0 || row.max_regular_size < 0); --k) {
      if (!by_size[k] || by_size[k]->keys.empty())
        continue;
      const auto& keys = by_size[k]->keys;
      std::vector<char> regular(keys.size());
      parallel_for(keys.size(), workers,
                   [&](int, std::size_t i) { regular[i] = is_regular(keys[i].to_matroid(), caches); });
      std::vector<CanonicalKey> reg, nonreg;
      for (std::size_t i = 0; i < keys.size(); ++i)
        (regular[i] ? reg : nonreg).push_back(keys[i]);
      if (row.max_nonregular_size < 0 && !nonreg.empty()) {
        row.max_nonregular_size = k;
        row.nonregular_count = nonreg.size();
        row.nonregular_extremal = std::move(nonreg);
      }
      if (row.max_regular_size < 0 && !reg.empty()) {
        row.max_regular_size = k;
        row.regular_extremal = std::move(reg);
      }
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

const std::vector<TableRow>& published_maxima() {
  static const std::vector<TableRow> rows{
      {3, 7, 1, 7, 1},    {4, 11, 1, 11, 1}, {5, 15, 4, 15, 3},
      {6, 21, 1, 19, 13}, {7, 28, 1, 25, 1}, {8, 36, 1, 32, 1},
  };
  return rows;
}

namespace {

int choose2(int n) { return n * (n - 1) / 2; }

std::vector<CanonicalKey> sorted_keys(std::vector<BinaryMatroid> ms) {
  std::vector<CanonicalKey> out;
  for (const auto& m : ms)
    out.push_back(canonical_key(m));
  std::sort(out.begin(), out.end());
  return out;
}

std::string describe(const std::vector<CanonicalKey>& keys) {
  std::string s = std::to_string(keys.size()) + " key(s)";
  if (keys.size() == 1)
    s += ": " + to_text(keys.front());
  return s;
}

} // namespace

std::vector<TheoremCheck> verify_theorems(const Catalogue& cat, const ExtremalReport& report) {
  std::vector<TheoremCheck> out;
  auto check = [&](std::string name, bool ok, std::string detail) {
    out.push_back({std::move(name), ok, std::move(detail)});
  };
  if (!cat.exclusion) {
    check("catalogue built with exclusion", false, "exclusion=off");
    return out;
  }
  for (int r = 3; r <= cat.max_rank; ++r) {
    const std::string tag = "rank " + std::to_string(r) + ": ";
    const ExtremalRow* row = report.at(r);
    if (!row) {
      check(tag + "stratum present", false, "no members");
      continue;
    }
    for (const auto& t : published_maxima())
      if (t.rank == r) {
        check(tag + "max size and count", row->max_size == t.max_size && row->count == t.count,
              std::to_string(row->max_size) + " x" + std::to_string(row->count) + ", expected " +
                  std::to_string(t.max_size) + " x" + std::to_string(t.count));
        check(tag + "max non-regular size and count",
              row->max_nonregular_size == t.max_nonregular_size && row->nonregular_count == t.nonregular_count,
              std::to_string(row->max_nonregular_size) + " x" + std::to_string(row->nonregular_count) +
                  ", expected " + std::to_string(t.max_nonregular_size) + " x" +
                  std::to_string(t.nonregular_count));
      }
    if (r == 3)
      check(tag + "extremal is the Fano plane", row->extremal == sorted_keys({construct::f7()}),
            describe(row->extremal));
    if (r == 4)
      check(tag + "extremal is M(K5)+", row->extremal == sorted_keys({construct::mk5plus()}),
            describe(row->extremal));
    if (r >= 5)
      check(tag + "max size is C(r+1,2)", row->max_size == choose2(r + 1), std::to_string(row->max_size));
    if (r == 5) {
      check(tag + "extremal are M(K6) and the three non-graphic examples",
            row->extremal == sorted_keys({construct::mk(6), construct::appendix5(1), construct::appendix5(2),
                                          construct::appendix5(3)}),
            describe(row->extremal));
      check(tag + "non-regular extremal are the three non-graphic examples",
            row->nonregular_extremal ==
                sorted_keys({construct::appendix5(1), construct::appendix5(2), construct::appendix5(3)}),
            describe(row->nonregular_extremal));
    }
    if (r >= 6) {
      check(tag + "unique extremal is M(K" + std::to_string(r + 1) + ")",
            row->extremal == sorted_keys({construct::mk(r + 1)}), describe(row->extremal));
      check(tag + "max non-regular size is C(r,2)+4", row->max_nonregular_size == choose2(r) + 4,
            std::to_string(row->max_nonregular_size));
      const auto gp = canonical_key(construct::gpc_f7(r));
      check(tag + "parallel connection of M(K" + std::to_string(r) + ") and F7 is non-regular extremal",
            std::binary_search(row->nonregular_extremal.begin(), row->nonregular_extremal.end(), gp),
            to_text(gp));
    }
    if (r == 6) {
      const auto targets = sorted_keys({construct::appendix5(1), construct::appendix5(2), construct::appendix5(3)});
      const auto gp = canonical_key(construct::gpc_f7(6));
      std::size_t explained = 0;
      for (const auto& key : row->nonregular_extremal) {
        if (key == gp) {
          ++explained;
          continue;
        }
        const auto m = key.to_matroid();
        for (Point p : m.points())
          if (std::binary_search(targets.begin(), targets.end(), canonical_key(contract(m, p)))) {
            ++explained;
            break;
          }
      }
      check(tag + "non-regular extremal are coextensions of the rank-5 examples or the parallel connection",
            explained == row->nonregular_extremal.size(),
            std::to_string(explained) + " of " + std::to_string(row->nonregular_extremal.size()));
    }
    if (r >= 7)
      check(tag + "unique non-regular extremal is the parallel connection with F7",
            row->nonregular_extremal == sorted_keys({construct::gpc_f7(r)}), describe(row->nonregular_extremal));
  }
  return out;
}

std::vector<TheoremCheck> verify_theorems(const Catalogue& cat) {
  try {
    return verify_theorems(cat, extremal_report(cat));
  } catch (const IncompleteStratum& e) {
    return {{"catalogue complete", false, e.what()}};
  }
}

namespace {

std::string header_line(const Catalogue& cat) {
  return "bmcat " + std::to_string(kCatalogueFormatVersion) + " R=" + std::to_string(cat.max_rank) +
         " K=" + std::to_string(cat.max_size) + " exclusion=" + (cat.exclusion ? "on" : "off");
}

std::string crc_hex(std::string_view bytes) {
  uLong crc = crc32(0L, Z_NULL, 0);
  crc = crc32(crc, reinterpret_cast<const Bytef*>(bytes.data()), static_cast<uInt>(bytes.size()));
  char buf[9];
  std::snprintf(buf, sizeof buf, "%08lx", static_cast<unsigned long>(crc));
  return buf;
}

// Parses `name=<int>` at the front of `s`, advancing past it and one space.
bool take_field(std::string_view& s, std::string_view name, int& value) {
  if (s.substr(0, name.size()) != name || s.size() <= name.size() || s[name.size()] != '=')
    return false;
  s.remove_prefix(name.size() + 1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc())
    return false;
  s.remove_prefix(ptr - s.data());
  if (!s.empty()) {
    if (s.front() != ' ')
      return false;
    s.remove_prefix(1);
  }
  return true;
}

} // namespace

void write_catalogue(std::ostream& out, const Catalogue& cat) {
  std::string body = header_line(cat) + '\n';
  for (const auto& [id, st] : cat.strata) {
    body += "# stratum r=" + std::to_string(id.rank) + " k=" + std::to_string(id.size) +
            " complete=" + (st.complete ? "1" : "0") + " n=" + std::to_string(st.keys.size()) + '\n';
    for (const auto& key : st.keys) {
      bool first = true;
      for (Point p : key.points()) {
        if (!first)
          body += ',';
        body += std::to_string(p);
        first = false;
      }
      body += '\n';
    }
  }
  out << body << "# end crc32=" << crc_hex(body) << '\n';
}

Catalogue read_catalogue(std::istream& in) {
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::vector<std::string_view> lines;
  {
    std::string_view rest(text);
    while (!rest.empty()) {
      const auto nl = rest.find('\n');
      if (nl == std::string_view::npos)
        throw CatalogueFormatError("truncated file: last line unterminated", lines.size() + 1);
      lines.push_back(rest.substr(0, nl));
      rest.remove_prefix(nl + 1);
    }
  }
  if (lines.empty())
    throw CatalogueFormatError("empty file", 0);

  Catalogue cat;
  {
    std::string_view h = lines[0];
    int version = 0;
    if (h.substr(0, 6) != "bmcat ")
      throw CatalogueFormatError("missing bmcat header", 1);
    h.remove_prefix(6);
    const auto [ptr, ec] = std::from_chars(h.data(), h.data() + h.size(), version);
    if (ec != std::errc())
      throw CatalogueFormatError("bad format version", 1);
    if (version != kCatalogueFormatVersion)
      throw CatalogueVersionError("unsupported format version " + std::to_string(version) + " (expected " +
                                      std::to_string(kCatalogueFormatVersion) + ")",
                                  1);
    h.remove_prefix(ptr - h.data());
    if (h.empty() || h.front() != ' ')
      throw CatalogueFormatError("malformed header", 1);
    h.remove_prefix(1);
    if (!take_field(h, "R", cat.max_rank) || !take_field(h, "K", cat.max_size))
      throw CatalogueFormatError("malformed header", 1);
    if (h == "exclusion=on")
      cat.exclusion = true;
    else if (h == "exclusion=off")
      cat.exclusion = false;
    else
      throw CatalogueFormatError("malformed header", 1);
    if (cat.max_rank < 0 || cat.max_rank > kMaxRank)
      throw CatalogueFormatError("rank out of range", 1);
  }

  const std::string_view last = lines.back();
  constexpr std::string_view end_tag = "# end crc32=";
  if (last.substr(0, end_tag.size()) != end_tag)
    throw CatalogueFormatError("truncated file: missing end line", lines.size());

  std::size_t i = 1;
  while (i + 1 < lines.size()) {
    const std::size_t lineno = i + 1;
    std::string_view h = lines[i];
    constexpr std::string_view tag = "# stratum ";
    if (h.substr(0, tag.size()) != tag)
      throw CatalogueFormatError("expected stratum header", lineno);
    h.remove_prefix(tag.size());
    int r = 0, k = 0, complete = 0, n = 0;
    if (!take_field(h, "r", r) || !take_field(h, "k", k) || !take_field(h, "complete", complete) ||
        !take_field(h, "n", n) || !h.empty() || (complete != 0 && complete != 1) || n < 0)
      throw CatalogueFormatError("malformed stratum header", lineno);
    if (r < 0 || r > cat.max_rank || k < 0 || k > (1 << r) - 1)
      throw CatalogueFormatError("stratum out of range", lineno);
    if (cat.strata.count({r, k}))
      throw CatalogueFormatError("duplicate stratum", lineno);
    Stratum st;
    st.complete = complete == 1;
    ++i;
    for (int j = 0; j < n; ++j, ++i) {
      if (i + 1 >= lines.size())
        throw CatalogueFormatError("truncated stratum", i + 1);
      std::vector<Point> pts;
      std::string_view s = lines[i];
      while (!s.empty()) {
        unsigned v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || v > 0xffff)
          throw CatalogueFormatError("malformed point list", i + 1);
        pts.push_back(static_cast<Point>(v));
        s.remove_prefix(ptr - s.data());
        if (!s.empty()) {
          if (s.front() != ',' || s.size() == 1)
            throw CatalogueFormatError("malformed point list", i + 1);
          s.remove_prefix(1);
        }
      }
      if (static_cast<int>(pts.size()) != k)
        throw CatalogueFormatError("point count does not match stratum size", i + 1);
      CanonicalKey key;
      try {
        const BinaryMatroid m(r, pts);
        key.rank = r;
        key.image = m.point_set();
      } catch (const std::exception& e) {
        throw CatalogueFormatError(std::string("invalid matroid: ") + e.what(), i + 1);
      }
      if (!st.keys.empty() && !(st.keys.back() < key))
        throw CatalogueFormatError("keys not strictly ascending", i + 1);
      st.keys.push_back(key);
    }
    cat.strata[{r, k}] = std::move(st);
  }
  // Parse errors are reported first so they can name the offending line.
  const std::size_t body_bytes = text.size() - last.size() - 1;
  if (last.substr(end_tag.size()) != crc_hex(std::string_view(text).substr(0, body_bytes)))
    throw CatalogueFormatError("checksum mismatch", lines.size());
  return cat;
}

void save(const Catalogue& cat, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_catalogue(out, cat);
  if (!out)
    throw std::runtime_error("write to " + path.string() + " failed");
}

Catalogue load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open " + path.string());
  return read_catalogue(in);
}

} // namespace bmx
