#pragma once

// Size-stratified isomorph-free generation of the AG(3,2)-free simple binary
// matroids of rank <= R, with extremal statistics and a checksummed text
// file format.

#include "bmx/canon.hpp"

#include <compare>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace bmx {

struct StratumId {
  int rank;
  int size;
  friend auto operator<=>(const StratumId&, const StratumId&) = default;
};

struct Stratum {
  /// Ascending and free of duplicates.
  std::vector<CanonicalKey> keys;
  bool complete = false;

  bool contains(const CanonicalKey& k) const;
  friend bool operator==(const Stratum&, const Stratum&) = default;
};

class Catalogue {
public:
  int max_rank = 0;
  int max_size = 0;
  bool exclusion = true;
  std::map<StratumId, Stratum> strata;

  const Stratum* find(int rank, int size) const;
  /// All strata flagged complete.
  bool complete() const;
  std::size_t total() const;

  friend bool operator==(const Catalogue&, const Catalogue&) = default;
};

struct LevelReport {
  int size;
  std::size_t parents;
  std::size_t candidates;
  std::size_t admitted;
};

struct BootstrapOptions {
  int max_rank = 0;
  int max_size = 0;
  bool exclusion = true;
  int workers = 1;
  /// Abort once a level produces more distinct candidates than this
  /// (0 = no limit). Strata not finished are left flagged incomplete.
  std::size_t max_candidates = 0;
  std::function<void(const LevelReport&)> progress;
};

/// Every (rank, size) stratum with rank <= R, size <= K that can be
/// nonempty, i.e. s <= k <= 2^s - 1, plus the empty matroid at (0, 0).
Catalogue bootstrap(const BootstrapOptions& opts);

class IncompleteStratum : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct ExtremalRow {
  int rank = 0;
  int max_size = 0;
  std::size_t count = 0;
  /// -1 when every member of the rank is regular.
  int max_nonregular_size = -1;
  std::size_t nonregular_count = 0;
  /// Keys at the maximum size and at the maximum non-regular size.
  std::vector<CanonicalKey> extremal;
  std::vector<CanonicalKey> nonregular_extremal;
  /// Largest size of a regular member and the keys attaining it.
  int max_regular_size = -1;
  std::vector<CanonicalKey> regular_extremal;
};

struct ExtremalReport {
  std::vector<ExtremalRow> rows;
  const ExtremalRow* at(int rank) const;
};

/// One row per rank 1..R with a nonempty stratum. Throws IncompleteStratum
/// when a stratum of the rank is not complete.
ExtremalReport extremal_report(const Catalogue& cat, int workers = 1);

/// Published maxima (rank, max size, count, max non-regular size, count).
struct TableRow {
  int rank;
  int max_size;
  std::size_t count;
  int max_nonregular_size;
  std::size_t nonregular_count;
};
const std::vector<TableRow>& published_maxima();

struct TheoremCheck {
  std::string name;
  bool passed;
  std::string detail;
};

/// Checks the structural claims at every rank 3..R of the catalogue.
/// Failures are reported, not thrown.
std::vector<TheoremCheck> verify_theorems(const Catalogue& cat, const ExtremalReport& report);
std::vector<TheoremCheck> verify_theorems(const Catalogue& cat);

class CatalogueFormatError : public std::runtime_error {
public:
  CatalogueFormatError(const std::string& what, std::size_t line)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  /// 1-based, 0 when not tied to a line.
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

class CatalogueVersionError : public CatalogueFormatError {
public:
  using CatalogueFormatError::CatalogueFormatError;
};

inline constexpr int kCatalogueFormatVersion = 1;

void write_catalogue(std::ostream& out, const Catalogue& cat);
Catalogue read_catalogue(std::istream& in);
void save(const Catalogue& cat, const std::filesystem::path& path);
Catalogue load(const std::filesystem::path& path);

} // namespace bmx
