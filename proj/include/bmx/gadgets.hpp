#pragma once

// Signed graphs and their even cycle matroids, grafts and graft matroids,
// minors on both, vertex splitting, and the explicit matrix fixtures.

#include "bmx/matroid.hpp"

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bmx {

struct Edge {
  int u;
  int v;
  int label;
  bool is_loop() const noexcept { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

class NoSuchEdge : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class PreconditionViolated : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Loops and parallel edges allowed; labels unique.
class Multigraph {
public:
  Multigraph() = default;
  Multigraph(int vertices, std::vector<Edge> edges);

  static Multigraph complete(int n);
  /// K_{a,b}; the a-side is vertices 0..a-1.
  static Multigraph complete_bipartite(int a, int b);

  int vertex_count() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(int label) const;
  bool has_label(int label) const;
  std::vector<int> labels() const;
  int components() const;

  Multigraph without_edge(int label) const;
  /// Merges the ends of a non-loop edge into the smaller endpoint and drops
  /// the larger vertex, renumbering those above it. A loop is just deleted.
  Multigraph contracted(int label) const;
  /// Vertex that `x` becomes after contracted(label).
  int vertex_after_contraction(int label, int x) const;
  Multigraph with_edge(Edge e) const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

struct SignedGraph {
  Multigraph graph;
  std::set<int> sigma;

  SignedGraph() = default;
  SignedGraph(Multigraph g, std::set<int> s);
  bool odd(int label) const { return sigma.count(label) != 0; }
  friend bool operator==(const SignedGraph&, const SignedGraph&) = default;
};

struct Graft {
  Multigraph graph;
  std::set<int> T;

  Graft() = default;
  /// Throws std::invalid_argument when |T| is odd or T leaves the vertex set.
  Graft(Multigraph g, std::set<int> t);
  friend bool operator==(const Graft&, const Graft&) = default;
};

/// A simplified matroid together with the point each edge label became
/// (0 for loops of the matroid).
struct LabelledMatroid {
  BinaryMatroid matroid;
  std::map<int, Point> point_of;
};

struct GraftMatroid {
  BinaryMatroid matroid;
  std::map<int, Point> point_of;
  /// 0 when T is empty.
  Point graft_point = 0;
};

/// Incidence matrix of the graph with the signature row appended.
Gf2Matrix even_cycle_matrix(const SignedGraph& sg);
LabelledMatroid even_cycle_matroid(const SignedGraph& sg);
/// The cycle matroid, as the even cycle matroid with empty signature.
LabelledMatroid graphic_matroid(const Multigraph& g);

/// Sigma replaced by its symmetric difference with the cut of `side`.
SignedGraph resign(const SignedGraph& sg, const std::set<int>& side);
bool is_balanced(const SignedGraph& sg);

SignedGraph sg_delete(const SignedGraph& sg, int label);
/// An odd loop gives (G\e, {}); otherwise e is first expelled from the
/// signature by resigning at one endpoint.
SignedGraph sg_contract(const SignedGraph& sg, int label);

/// Splits w into w' (= w, keeping the odd edges of a signature whose odd
/// non-loop edges all meet w) and w'' (= the new last vertex). Odd loops
/// become w'w'' edges. Throws PreconditionViolated if some odd cycle other
/// than an odd loop avoids w.
Multigraph split_vertex(const SignedGraph& sg, int w);

/// Incidence matrix with the T column appended last.
Gf2Matrix graft_matrix(const Graft& g);
GraftMatroid graft_matroid(const Graft& g);
Graft graft_delete(const Graft& g, int label);
Graft graft_contract(const Graft& g, int label);

/// Smallest signed graph on three vertices with seven edges whose even cycle
/// matroid is F7, found by exhaustive search (fewest loops first).
SignedGraph f7_signed_graph();

/// K_r with an odd loop at vertex 0 and an odd edge parallel to each edge
/// of the star at 0; every odd cycle but the loop uses vertex 0.
SignedGraph star_lift(int r);

/// `n=<vertices>`, then `u v label [odd]` per edge, then optionally
/// `T=<comma-separated vertices>`.
struct GraphText {
  SignedGraph sg;
  std::optional<std::set<int>> T;
};
GraphText parse_graph_text(std::string_view text);
std::string to_text(const SignedGraph& sg);
std::string to_text(const Graft& g);

/// Names accepted by verify_fixture.
const std::vector<std::string>& fixture_names();
/// Runs one of the explicit matrix computations; false on failure or an
/// unknown name.
bool verify_fixture(std::string_view name);

/// The 4x9 submatrix of the lifting argument, columns x c1 c2 c3 d1 d2 d3 c4 d4.
Gf2Matrix lifting_matrix(int alpha);
Gf2Matrix s4_case_b3_matrix();
Gf2Matrix s4_case_b3_result();
Gf2Matrix k24_matrix();
Gf2Matrix k24_pivoted_matrix();

} // namespace bmx
