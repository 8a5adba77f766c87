#pragma once

// Detection of AG(3,2), F7 and F7* minors, and regularity.

#include "bmx/canon.hpp"

#include <cstddef>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>

namespace bmx {

class Catalogue;

enum class MinorTarget { ag32, f7, f7dual };

struct MinorQuery {
  MinorTarget which;
  CanonicalKey target;
  int target_rank;
  int target_size;
  /// Largest number of lines through a point of the target; restrictions
  /// exceeding it are pruned.
  int max_lines_per_point;

  static MinorQuery of(MinorTarget which);
  /// "ag32", "f7" or "f7dual".
  static MinorQuery named(std::string_view name);
};

/// Default memo capacity: BMX_CACHE_LIMIT if set, else 2^22 entries.
std::size_t default_cache_limit();

/// Verdict memo for a single query, keyed by canonical key. Thread-safe;
/// discards everything when it reaches capacity.
class MinorCache {
public:
  explicit MinorCache(std::size_t limit = default_cache_limit()) : limit_(limit) {}

  std::optional<bool> find(const CanonicalKey& k) const;
  void store(const CanonicalKey& k, bool verdict);
  std::size_t size() const;

private:
  std::size_t limit_;
  mutable std::mutex mu_;
  std::unordered_map<CanonicalKey, bool, CanonicalKeyHash> map_;
};

bool has_minor(const BinaryMatroid& m, const MinorQuery& q);
bool has_minor(const BinaryMatroid& m, const MinorQuery& q, MinorCache& cache);

/// True iff some target_size-subset of m, re-embedded, is isomorphic to the
/// target (m must already have the target's rank for this to be meaningful).
bool has_restriction(const BinaryMatroid& m, const MinorQuery& q);

/// Memo caches for the two regularity queries.
struct RegularityCaches {
  MinorCache f7;
  MinorCache f7dual;
};

/// No F7 and no F7* minor.
bool is_regular(const BinaryMatroid& m);
bool is_regular(const BinaryMatroid& m, RegularityCaches& caches);

class MissingStratum : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// AG(3,2)-freeness decided from the catalogue: m is not AG(3,2) and every
/// single-element deletion and simplified contraction is catalogued.
/// Contractions are checked first. Throws MissingStratum if a needed
/// stratum is absent or incomplete.
bool catalogue_membership_free(const BinaryMatroid& m, const Catalogue& cat);

} // namespace bmx
