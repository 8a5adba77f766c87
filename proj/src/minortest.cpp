#include "bmx/minortest.hpp"

#include "bmx/catalogue.hpp"

#include <cstdlib>
#include <string>

namespace bmx {

MinorQuery MinorQuery::of(MinorTarget which) {
  switch (which) {
  case MinorTarget::ag32:
    return {which, canonical_key(construct::ag32()), 4, 8, 0};
  case MinorTarget::f7:
    return {which, canonical_key(construct::f7()), 3, 7, 3};
  case MinorTarget::f7dual:
    return {which, canonical_key(construct::f7dual()), 4, 7, 0};
  }
  throw std::invalid_argument("unknown minor target");
}

MinorQuery MinorQuery::named(std::string_view name) {
  if (name == "ag32")
    return of(MinorTarget::ag32);
  if (name == "f7")
    return of(MinorTarget::f7);
  if (name == "f7dual")
    return of(MinorTarget::f7dual);
  throw std::invalid_argument("unknown minor target '" + std::string(name) + "'");
}

std::size_t default_cache_limit() {
  if (const char* env = std::getenv("BMX_CACHE_LIMIT")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0')
      return static_cast<std::size_t>(v);
  }
  return std::size_t{1} << 22;
}

std::optional<bool> MinorCache::find(const CanonicalKey& k) const {
  std::lock_guard lock(mu_);
  const auto it = map_.find(k);
  if (it == map_.end())
    return std::nullopt;
  return it->second;
}

void MinorCache::store(const CanonicalKey& k, bool verdict) {
  std::lock_guard lock(mu_);
  if (limit_ == 0)
    return;
  if (map_.size() >= limit_)
    map_.clear();
  map_[k] = verdict;
}

std::size_t MinorCache::size() const {
  std::lock_guard lock(mu_);
  return map_.size();
}

namespace {

// Backtracking over subsets in point order, keeping only those in which no
// point lies on more lines of the subset than a point of the target does.
class RestrictionSearch {
public:
  RestrictionSearch(const BinaryMatroid& m, const MinorQuery& q)
      : m_(m), q_(q), pts_(m.points()), lines_(static_cast<std::size_t>(1) << m.rank(), 0) {}

  bool run() { return extend(0); }

private:
  bool extend(std::size_t from) {
    if (static_cast<int>(chosen_.size()) == q_.target_size)
      return restriction_isomorphic(m_, chosen_, q_.target.to_matroid());
    const std::size_t need = q_.target_size - chosen_.size();
    for (std::size_t i = from; i + need <= pts_.size(); ++i) {
      const Point p = pts_[i];
      // Lines closed by p: chosen a with a ^ p chosen, each seen twice.
      int through = 0;
      bool ok = true;
      for (Point a : chosen_)
        if (member_.test(a ^ p)) {
          ++through;
          if (++lines_[a] > q_.max_lines_per_point)
            ok = false;
        }
      if (ok && through / 2 <= q_.max_lines_per_point) {
        lines_[p] = through / 2;
        chosen_.push_back(p);
        member_.set(p);
        if (extend(i + 1))
          return true;
        member_.reset(p);
        chosen_.pop_back();
        lines_[p] = 0;
      }
      for (Point a : chosen_)
        if (member_.test(a ^ p))
          --lines_[a];
    }
    return false;
  }

  const BinaryMatroid& m_;
  const MinorQuery& q_;
  const std::vector<Point>& pts_;
  std::vector<Point> chosen_;
  PointSet member_;
  // Lines of the subset through each chosen point.
  std::vector<int> lines_;
};

bool too_small(const BinaryMatroid& m, const MinorQuery& q) {
  return m.rank() < q.target_rank || m.size() < q.target_size;
}

bool search(const BinaryMatroid& m, const MinorQuery& q, MinorCache& cache) {
  if (too_small(m, q))
    return false;
  if (m.rank() == q.target_rank)
    return has_restriction(m, q);
  for (Point p : m.points()) {
    const auto c = contract(m, p);
    if (too_small(c, q))
      continue;
    if (c.rank() == q.target_rank) {
      if (has_restriction(c, q))
        return true;
      continue;
    }
    const auto key = canonical_key(c);
    auto verdict = cache.find(key);
    if (!verdict) {
      verdict = search(c, q, cache);
      cache.store(key, *verdict);
    }
    if (*verdict)
      return true;
  }
  return false;
}

} // namespace

bool has_restriction(const BinaryMatroid& m, const MinorQuery& q) {
  if (too_small(m, q))
    return false;
  if (m.size() == q.target_size)
    return canonical_key(m) == q.target;
  return RestrictionSearch(m, q).run();
}

bool has_minor(const BinaryMatroid& m, const MinorQuery& q, MinorCache& cache) {
  return search(m, q, cache);
}

bool has_minor(const BinaryMatroid& m, const MinorQuery& q) {
  MinorCache cache;
  return search(m, q, cache);
}

bool is_regular(const BinaryMatroid& m, RegularityCaches& caches) {
  static const MinorQuery f7 = MinorQuery::of(MinorTarget::f7);
  static const MinorQuery f7dual = MinorQuery::of(MinorTarget::f7dual);
  return !has_minor(m, f7, caches.f7) && !has_minor(m, f7dual, caches.f7dual);
}

bool is_regular(const BinaryMatroid& m) {
  RegularityCaches caches;
  return is_regular(m, caches);
}

namespace {

const Stratum& required(const Catalogue& cat, int rank, int size) {
  const Stratum* s = cat.find(rank, size);
  if (!s || !s->complete)
    throw MissingStratum("catalogue lacks complete stratum r=" + std::to_string(rank) +
                         " k=" + std::to_string(size));
  return *s;
}

} // namespace

bool catalogue_membership_free(const BinaryMatroid& m, const Catalogue& cat) {
  static const CanonicalKey ag = canonical_key(construct::ag32());
  if (m.rank() == 4 && m.size() == 8 && canonical_key(m) == ag)
    return false;
  for (Point p : m.points()) {
    const auto c = contract(m, p);
    if (!required(cat, c.rank(), c.size()).contains(canonical_key(c)))
      return false;
  }
  for (Point p : m.points()) {
    const auto d = delete_point(m, p);
    if (!required(cat, d.rank(), d.size()).contains(canonical_key(d)))
      return false;
  }
  return true;
}

} // namespace bmx
