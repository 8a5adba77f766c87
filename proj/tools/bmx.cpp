// bmx: catalogue builds, Polya counts, reproduction checks and one-off
// queries on binary matroids.

#include "bmx/canon.hpp"
#include "bmx/catalogue.hpp"
#include "bmx/gadgets.hpp"
#include "bmx/minortest.hpp"
#include "bmx/parallel.hpp"
#include "bmx/polya.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace bmx;

enum Exit : int { kOk = 0, kVerifyFailed = 1, kResourceAbort = 2, kUsage = 64 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int rank = 0;
  int max_size = -1;
  bool exclusion = true;
  int workers = available_workers();
  std::string out;
  bool verbose = false;
  bool long_run = false;
  bool csv = false;
  std::size_t max_candidates = 0;
};

BinaryMatroid read_matroid_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw UsageError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.pop_back();
  return parse_matroid(text);
}

std::function<void(const LevelReport&)> progress_printer(bool verbose) {
  if (!verbose)
    return {};
  const auto start = std::chrono::steady_clock::now();
  return [start](const LevelReport& l) {
    const double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cerr << "size " << l.size << ": " << l.parents << " parents, " << l.candidates << " candidates, "
              << l.admitted << " admitted (" << t << " s)\n";
  };
}

void print_report(const ExtremalReport& rep, bool csv) {
  if (csv) {
    std::cout << "rank,max_size,count,max_nonregular_size,nonregular_count\n";
    for (const auto& r : rep.rows)
      std::cout << r.rank << ',' << r.max_size << ',' << r.count << ',' << r.max_nonregular_size << ','
                << r.nonregular_count << '\n';
    return;
  }
  std::cout << "rank  max size  count  max non-regular  count\n";
  for (const auto& r : rep.rows) {
    char line[96];
    std::snprintf(line, sizeof line, "%4d  %8d  %5zu  %15d  %5zu\n", r.rank, r.max_size, r.count,
                  r.max_nonregular_size, r.nonregular_count);
    std::cout << line;
  }
}

int cmd_catalogue(const RunConfig& cfg) {
  if (cfg.rank < 1 || cfg.rank > 8)
    throw UsageError("--rank must be 1..8");
  const int cap = (1 << cfg.rank) - 1;
  const int k = cfg.max_size < 0 ? cap : cfg.max_size;
  if (k < 0 || k > cap)
    throw UsageError("--max-size must be 0.." + std::to_string(cap) + " at rank " + std::to_string(cfg.rank));
  if (cfg.rank >= 7 && !cfg.long_run)
    throw UsageError("rank >= 7 is a long run; pass --long to confirm");
  if (cfg.workers < 1)
    throw UsageError("--workers must be >= 1");

  BootstrapOptions o;
  o.max_rank = cfg.rank;
  o.max_size = k;
  o.exclusion = cfg.exclusion;
  o.workers = cfg.workers;
  o.max_candidates = cfg.max_candidates;
  o.progress = progress_printer(cfg.verbose);
  const Catalogue cat = bootstrap(o);
  try {
    save(cat, cfg.out);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }

  if (cfg.csv)
    std::cout << "rank,size,count,complete\n";
  else
    std::cout << "rank  size  count  complete\n";
  for (const auto& [id, st] : cat.strata) {
    if (cfg.csv) {
      std::cout << id.rank << ',' << id.size << ',' << st.keys.size() << ',' << (st.complete ? 1 : 0) << '\n';
    } else {
      char line[64];
      std::snprintf(line, sizeof line, "%4d  %4d  %5zu  %s\n", id.rank, id.size, st.keys.size(),
                    st.complete ? "yes" : "no");
      std::cout << line;
    }
  }
  if (!cat.complete()) {
    std::cerr << "resource limit reached; " << cfg.out << " holds a partial catalogue with incomplete strata flagged\n";
    return kResourceAbort;
  }
  if (cfg.exclusion) {
    std::cout << '\n';
    print_report(extremal_report(cat, cfg.workers), cfg.csv);
  }
  std::cout << "total " << cat.total() << " matroids written to " << cfg.out << '\n';
  return kOk;
}

int cmd_count(const RunConfig& cfg, bool per_size) {
  if (cfg.rank < 0 || cfg.rank > 8)
    throw UsageError("--rank must be 0..8");
  const auto counts = subset_orbit_counts(cfg.rank);
  BigInt total = 0;
  for (const auto& c : counts)
    total += c;
  if (per_size) {
    std::cout << (cfg.csv ? "size,count\n" : "size  count\n");
    for (std::size_t k = 0; k < counts.size(); ++k)
      std::cout << k << (cfg.csv ? "," : "  ") << counts[k] << '\n';
  }
  std::cout << "total" << (cfg.csv ? "," : " ") << total << '\n';
  return kOk;
}

struct Ledger {
  bool csv;
  int failed = 0;
  void header() const {
    if (csv)
      std::cout << "status,check,detail\n";
  }
  void add(const std::string& name, bool ok, const std::string& detail = "") {
    failed += !ok;
    if (csv)
      std::cout << (ok ? "PASS" : "FAIL") << ',' << name << ',' << detail << '\n';
    else
      std::cout << (ok ? "PASS  " : "FAIL  ") << name << (detail.empty() ? "" : "  (" + detail + ")") << '\n';
    std::cout.flush();
  }
};

int cmd_verify(const RunConfig& cfg, const std::string& level) {
  int rank = 0;
  if (level == "quick")
    rank = 5;
  else if (level == "full")
    rank = 6;
  else if (level == "long")
    rank = 7;
  else
    throw UsageError("--level is quick, full or long");

  Ledger ledger{cfg.csv};
  ledger.header();
  for (const auto& name : fixture_names())
    ledger.add("fixture " + name, verify_fixture(name));

  BootstrapOptions o;
  o.max_rank = rank;
  o.max_size = (1 << rank) - 1;
  o.workers = cfg.workers;
  o.progress = progress_printer(cfg.verbose);
  const Catalogue cat = bootstrap(o);
  const auto report = extremal_report(cat, cfg.workers);
  for (const auto& c : verify_theorems(cat, report))
    ledger.add(c.name, c.passed, c.detail);
  std::cout << (ledger.failed ? "FAILED " : "all passed ") << "(" << ledger.failed << " failure(s))\n";
  return ledger.failed ? kVerifyFailed : kOk;
}

int cmd_minor(const std::string& in, const std::string& target) {
  const auto m = read_matroid_file(in);
  MinorQuery q;
  try {
    q = MinorQuery::named(target);
  } catch (const std::invalid_argument&) {
    throw UsageError("--target is ag32, f7 or f7dual");
  }
  std::cout << (has_minor(m, q) ? "yes" : "no") << '\n';
  return kOk;
}

int cmd_iso(const std::string& a, const std::string& b) {
  std::cout << (are_isomorphic(read_matroid_file(a), read_matroid_file(b)) ? "yes" : "no") << '\n';
  return kOk;
}

int cmd_construct(const std::string& name, int param, const std::string& out) {
  BinaryMatroid m;
  try {
    m = construct::by_name(name, param);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
  std::ofstream f(out);
  if (!f)
    throw UsageError("cannot write " + out);
  f << to_text(m) << '\n';
  if (!f.flush())
    throw UsageError("cannot write " + out);
  std::cout << name << ": rank " << m.rank() << ", " << m.size() << " points written to " << out << '\n';
  return kOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Binary matroid catalogues and minor tests"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string level = "quick", in, target, file_a, file_b, name;
  int param = 0;
  bool per_size = false;

  auto* catalogue = app.add_subcommand("catalogue", "Catalogue operations");
  auto* build = catalogue->add_subcommand("build", "Grow a catalogue by size and write it to a file");
  catalogue->require_subcommand(1);
  build->add_option("--rank", cfg.rank, "Maximum rank R")->required();
  build->add_option("--max-size", cfg.max_size, "Maximum size K (default 2^R - 1)");
  bool no_exclusion = false;
  build->add_flag("--no-exclusion", no_exclusion, "Keep AG(3,2) minors");
  build->add_option("--out", cfg.out, "Output file")->required();
  build->add_option("--workers", cfg.workers, "Worker threads (default: all cores)");
  build->add_option("--max-candidates", cfg.max_candidates, "Abort when a level has more candidates");
  build->add_flag("--long", cfg.long_run, "Allow rank >= 7");
  build->add_flag("--csv", cfg.csv, "Comma-separated output");
  build->add_flag("-v,--verbose", cfg.verbose, "Progress on stderr");

  auto* count = app.add_subcommand("count", "Orbits of GL(n,2) on point subsets of PG(n-1,2)");
  count->add_option("--rank", cfg.rank, "n")->required();
  count->add_flag("--per-size", per_size, "One row per subset size");
  count->add_flag("--csv", cfg.csv, "Comma-separated output");

  auto* verify = app.add_subcommand("verify-paper", "Reproduce the published extremal table");
  verify->add_option("--level", level, "quick (rank 5), full (rank 6) or long (rank 7)");
  verify->add_option("--workers", cfg.workers, "Worker threads (default: all cores)");
  verify->add_flag("--csv", cfg.csv, "Comma-separated output");
  verify->add_flag("-v,--verbose", cfg.verbose, "Progress on stderr");

  auto* minor = app.add_subcommand("minor", "Test for an AG(3,2), F7 or F7* minor");
  minor->add_option("--in", in, "Matroid file")->required();
  minor->add_option("--target", target, "ag32, f7 or f7dual")->required();

  auto* iso = app.add_subcommand("iso", "Test two matroids for isomorphism");
  iso->add_option("--a", file_a, "First matroid file")->required();
  iso->add_option("--b", file_b, "Second matroid file")->required();

  auto* cons = app.add_subcommand("construct", "Write a named matroid");
  cons->add_option("--name", name, "pg, ag32, f7, f7dual, mk, mk5plus, gpc_f7, appendix5")->required();
  cons->add_option("--param", param, "Size parameter");
  cons->add_option("--out", cfg.out, "Output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (build->parsed()) {
      cfg.exclusion = !no_exclusion;
      return cmd_catalogue(cfg);
    }
    if (count->parsed())
      return cmd_count(cfg, per_size);
    if (verify->parsed()) {
      if (cfg.workers < 1)
        throw UsageError("--workers must be >= 1");
      return cmd_verify(cfg, level);
    }
    if (minor->parsed())
      return cmd_minor(in, target);
    if (iso->parsed())
      return cmd_iso(file_a, file_b);
    if (cons->parsed())
      return cmd_construct(name, param, cfg.out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerifyFailed;
  }
  return kUsage;
}
