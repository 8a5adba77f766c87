#include "bmx/gadgets.hpp"

#include "bmx/canon.hpp"
#include "bmx/minortest.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

namespace bmx {

Multigraph::Multigraph(int vertices, std::vector<Edge> edges) : n_(vertices), edges_(std::move(edges)) {
  if (n_ < 0 || n_ > 63)
    throw std::invalid_argument("graph needs 0..63 vertices");
  std::set<int> seen;
  for (const auto& e : edges_) {
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
      throw std::invalid_argument("edge " + std::to_string(e.label) + " has an endpoint out of range");
    if (!seen.insert(e.label).second)
      throw std::invalid_argument("duplicate edge label " + std::to_string(e.label));
  }
}

Multigraph Multigraph::complete(int n) {
  std::vector<Edge> edges;
  int label = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      edges.push_back({i, j, label++});
  return Multigraph(n, std::move(edges));
}

Multigraph Multigraph::complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  int label = 0;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j)
      edges.push_back({i, a + j, label++});
  return Multigraph(a + b, std::move(edges));
}

const Edge& Multigraph::edge(int label) const {
  for (const auto& e : edges_)
    if (e.label == label)
      return e;
  throw NoSuchEdge("no edge labelled " + std::to_string(label));
}

bool Multigraph::has_label(int label) const {
  return std::any_of(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.label == label; });
}

std::vector<int> Multigraph::labels() const {
  std::vector<int> out;
  for (const auto& e : edges_)
    out.push_back(e.label);
  return out;
}

int Multigraph::components() const {
  std::vector<int> parent(n_);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  int c = n_;
  for (const auto& e : edges_) {
    const int a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --c;
    }
  }
  return c;
}

Multigraph Multigraph::without_edge(int label) const {
  edge(label);
  std::vector<Edge> rest;
  for (const auto& e : edges_)
    if (e.label != label)
      rest.push_back(e);
  return Multigraph(n_, std::move(rest));
}

int Multigraph::vertex_after_contraction(int label, int x) const {
  const Edge& e = edge(label);
  if (e.is_loop())
    return x;
  const int keep = std::min(e.u, e.v), drop = std::max(e.u, e.v);
  if (x == drop)
    return keep;
  return x > drop ? x - 1 : x;
}

Multigraph Multigraph::contracted(int label) const {
  const Edge& c = edge(label);
  if (c.is_loop())
    return without_edge(label);
  std::vector<Edge> rest;
  for (const auto& e : edges_)
    if (e.label != label)
      rest.push_back({vertex_after_contraction(label, e.u), vertex_after_contraction(label, e.v), e.label});
  return Multigraph(n_ - 1, std::move(rest));
}

Multigraph Multigraph::with_edge(Edge e) const {
  auto edges = edges_;
  edges.push_back(e);
  return Multigraph(n_, std::move(edges));
}

SignedGraph::SignedGraph(Multigraph g, std::set<int> s) : graph(std::move(g)), sigma(std::move(s)) {
  for (int l : sigma)
    if (!graph.has_label(l))
      throw std::invalid_argument("signature names missing edge " + std::to_string(l));
}

Graft::Graft(Multigraph g, std::set<int> t) : graph(std::move(g)), T(std::move(t)) {
  if (T.size() % 2)
    throw std::invalid_argument("graft needs |T| even");
  for (int v : T)
    if (v < 0 || v >= graph.vertex_count())
      throw std::invalid_argument("T vertex out of range");
}

namespace {

std::uint64_t incidence(const Edge& e) {
  return e.is_loop() ? 0 : (std::uint64_t{1} << e.u) ^ (std::uint64_t{1} << e.v);
}

std::uint64_t vertex_set_bits(const std::set<int>& s) {
  std::uint64_t b = 0;
  for (int v : s)
    b |= std::uint64_t{1} << v;
  return b;
}

} // namespace

Gf2Matrix even_cycle_matrix(const SignedGraph& sg) {
  const int n = sg.graph.vertex_count();
  std::vector<Gf2Vector> cols;
  for (const auto& e : sg.graph.edges())
    cols.emplace_back(n + 1, incidence(e) | (sg.odd(e.label) ? std::uint64_t{1} << n : 0));
  return Gf2Matrix::from_columns(n + 1, cols);
}

LabelledMatroid even_cycle_matroid(const SignedGraph& sg) {
  const auto cols = even_cycle_matrix(sg).columns();
  auto emb = embed_columns(cols);
  LabelledMatroid out{std::move(emb.matroid), {}};
  const auto& edges = sg.graph.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    out.point_of[edges[i].label] = emb.image[i];
  return out;
}

LabelledMatroid graphic_matroid(const Multigraph& g) { return even_cycle_matroid(SignedGraph(g, {})); }

SignedGraph resign(const SignedGraph& sg, const std::set<int>& side) {
  auto sigma = sg.sigma;
  for (const auto& e : sg.graph.edges())
    if (side.count(e.u) != side.count(e.v)) {
      if (!sigma.erase(e.label))
        sigma.insert(e.label);
    }
  return SignedGraph(sg.graph, std::move(sigma));
}

namespace {

// Potentials phi with sigma(e) = phi(u) + phi(v) on every non-loop edge not
// meeting `avoid` (-1: none). Empty when no such assignment exists.
std::optional<std::vector<int>> potentials(const SignedGraph& sg, int avoid) {
  const int n = sg.graph.vertex_count();
  std::vector<int> phi(n, -1);
  for (int root = 0; root < n; ++root) {
    if (root == avoid || phi[root] >= 0)
      continue;
    phi[root] = 0;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (const auto& e : sg.graph.edges()) {
        if (e.is_loop() || e.u == avoid || e.v == avoid || (e.u != x && e.v != x))
          continue;
        const int y = e.u == x ? e.v : e.u;
        const int want = phi[x] ^ static_cast<int>(sg.odd(e.label));
        if (phi[y] < 0) {
          phi[y] = want;
          stack.push_back(y);
        } else if (phi[y] != want) {
          return std::nullopt;
        }
      }
    }
  }
  return phi;
}

} // namespace

bool is_balanced(const SignedGraph& sg) {
  for (const auto& e : sg.graph.edges())
    if (e.is_loop() && sg.odd(e.label))
      return false;
  return potentials(sg, -1).has_value();
}

SignedGraph sg_delete(const SignedGraph& sg, int label) {
  auto g = sg.graph.without_edge(label);
  auto sigma = sg.sigma;
  sigma.erase(label);
  return SignedGraph(std::move(g), std::move(sigma));
}

SignedGraph sg_contract(const SignedGraph& sg, int label) {
  const Edge e = sg.graph.edge(label);
  if (e.is_loop()) {
    if (sg.odd(label))
      return SignedGraph(sg.graph.without_edge(label), {});
    return sg_delete(sg, label);
  }
  const SignedGraph base = sg.odd(label) ? resign(sg, {e.u}) : sg;
  auto sigma = base.sigma;
  sigma.erase(label);
  return SignedGraph(base.graph.contracted(label), std::move(sigma));
}

Multigraph split_vertex(const SignedGraph& sg, int w) {
  const int n = sg.graph.vertex_count();
  if (w < 0 || w >= n)
    throw std::out_of_range("split vertex out of range");
  const auto phi = potentials(sg, w);
  if (!phi)
    throw PreconditionViolated("an odd cycle avoids vertex " + std::to_string(w));
  std::set<int> side;
  for (int x = 0; x < n; ++x)
    if (x != w && (*phi)[x] == 1)
      side.insert(x);
  const SignedGraph s = resign(sg, side);
  const int w2 = n;
  std::vector<Edge> edges;
  for (const auto& e : s.graph.edges()) {
    if (e.is_loop()) {
      if (s.odd(e.label))
        edges.push_back({w, w2, e.label});
      else
        edges.push_back(e);
      continue;
    }
    if (e.u != w && e.v != w) {
      edges.push_back(e);
      continue;
    }
    const int other = e.u == w ? e.v : e.u;
    edges.push_back({s.odd(e.label) ? w : w2, other, e.label});
  }
  return Multigraph(n + 1, std::move(edges));
}

Gf2Matrix graft_matrix(const Graft& g) {
  const int n = g.graph.vertex_count();
  std::vector<Gf2Vector> cols;
  for (const auto& e : g.graph.edges())
    cols.emplace_back(n, incidence(e));
  cols.emplace_back(n, vertex_set_bits(g.T));
  return Gf2Matrix::from_columns(n, cols);
}

GraftMatroid graft_matroid(const Graft& g) {
  const auto cols = graft_matrix(g).columns();
  auto emb = embed_columns(cols);
  GraftMatroid out{std::move(emb.matroid), {}, emb.image.back()};
  const auto& edges = g.graph.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    out.point_of[edges[i].label] = emb.image[i];
  return out;
}

Graft graft_delete(const Graft& g, int label) { return Graft(g.graph.without_edge(label), g.T); }

Graft graft_contract(const Graft& g, int label) {
  const Edge e = g.graph.edge(label);
  if (e.is_loop())
    return graft_delete(g, label);
  const bool inu = g.T.count(e.u) != 0, inv = g.T.count(e.v) != 0;
  std::set<int> t;
  for (int x : g.T)
    if (x != e.u && x != e.v)
      t.insert(g.graph.vertex_after_contraction(label, x));
  if (inu != inv)
    t.insert(g.graph.vertex_after_contraction(label, e.u));
  return Graft(g.graph.contracted(label), std::move(t));
}

SignedGraph f7_signed_graph() {
  // Edge shapes on three vertices: loops first, then the three pairs.
  const std::vector<std::pair<int, int>> shapes{{0, 0}, {1, 1}, {2, 2}, {0, 1}, {0, 2}, {1, 2}};
  const auto f7 = canonical_key(construct::f7());
  constexpr int kEdges = 7;
  for (int loops = 0; loops <= kEdges; ++loops) {
    std::vector<int> pick(kEdges, 0);
    // Non-decreasing shape sequences with exactly `loops` loop shapes.
    std::optional<SignedGraph> found;
    std::function<void(int, int)> rec = [&](int i, int from) {
      if (found)
        return;
      if (i == kEdges) {
        int l = 0;
        for (int s : pick)
          l += s < 3;
        if (l != loops)
          return;
        std::vector<Edge> edges;
        for (int k = 0; k < kEdges; ++k)
          edges.push_back({shapes[pick[k]].first, shapes[pick[k]].second, k});
        const Multigraph g(3, edges);
        for (unsigned mask = 0; mask < (1u << kEdges) && !found; ++mask) {
          std::set<int> sigma;
          for (int k = 0; k < kEdges; ++k)
            if ((mask >> k) & 1u)
              sigma.insert(k);
          SignedGraph sg(g, sigma);
          const auto m = even_cycle_matroid(sg).matroid;
          if (m.rank() == 3 && m.size() == 7 && canonical_key(m) == f7)
            found = sg;
        }
        return;
      }
      for (int s = from; s < static_cast<int>(shapes.size()); ++s) {
        pick[i] = s;
        rec(i + 1, s);
      }
    };
    rec(0, 0);
    if (found)
      return *found;
  }
  throw std::logic_error("no signed graph on three vertices represents F7");
}

SignedGraph star_lift(int r) {
  if (r < 2 || r > 30)
    throw std::out_of_range("star_lift needs 2 <= r <= 30");
  auto edges = Multigraph::complete(r).edges();
  int label = static_cast<int>(edges.size());
  std::set<int> sigma;
  sigma.insert(label);
  edges.push_back({0, 0, label++});
  for (int i = 1; i < r; ++i) {
    sigma.insert(label);
    edges.push_back({0, i, label++});
  }
  return SignedGraph(Multigraph(r, std::move(edges)), std::move(sigma));
}

namespace {

int parse_int(std::string_view s, const std::string& what) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("bad " + what + " '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
      ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
      ++j;
    if (j > i)
      out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

} // namespace

GraphText parse_graph_text(std::string_view text) {
  std::optional<int> n;
  std::vector<Edge> edges;
  std::set<int> sigma;
  std::optional<std::set<int>> T;
  std::size_t lineno = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++lineno;
    const auto tok = split_ws(line);
    if (tok.empty() || tok[0].front() == '#')
      continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    try {
      if (tok[0].substr(0, 2) == "n=") {
        if (n || tok.size() != 1)
          throw std::invalid_argument("repeated or malformed vertex count");
        n = parse_int(tok[0].substr(2), "vertex count");
      } else if (tok[0].substr(0, 2) == "T=") {
        if (T || tok.size() != 1)
          throw std::invalid_argument("repeated or malformed T line");
        T.emplace();
        auto rest = tok[0].substr(2);
        while (!rest.empty()) {
          const auto c = rest.find(',');
          T->insert(parse_int(rest.substr(0, c), "vertex"));
          rest = c == std::string_view::npos ? std::string_view{} : rest.substr(c + 1);
        }
      } else {
        if (tok.size() < 3 || tok.size() > 4 || (tok.size() == 4 && tok[3] != "odd"))
          throw std::invalid_argument("expected 'u v label [odd]'");
        const Edge e{parse_int(tok[0], "vertex"), parse_int(tok[1], "vertex"), parse_int(tok[2], "label")};
        edges.push_back(e);
        if (tok.size() == 4)
          sigma.insert(e.label);
      }
    } catch (const std::invalid_argument& ex) {
      throw std::invalid_argument(where + ex.what());
    }
  }
  if (!n)
    throw std::invalid_argument("missing n=<vertices> line");
  GraphText out{SignedGraph(Multigraph(*n, std::move(edges)), std::move(sigma)), T};
  if (T)
    Graft(out.sg.graph, *T);
  return out;
}

std::string to_text(const SignedGraph& sg) {
  std::ostringstream s;
  s << "n=" << sg.graph.vertex_count() << '\n';
  for (const auto& e : sg.graph.edges())
    s << e.u << ' ' << e.v << ' ' << e.label << (sg.odd(e.label) ? " odd" : "") << '\n';
  return s.str();
}

std::string to_text(const Graft& g) {
  std::string s = to_text(SignedGraph(g.graph, {})) + "T=";
  bool first = true;
  for (int v : g.T) {
    if (!first)
      s += ',';
    s += std::to_string(v);
    first = false;
  }
  return s + '\n';
}

Gf2Matrix lifting_matrix(int alpha) {
  if (alpha != 0 && alpha != 1)
    throw std::out_of_range("alpha is 0 or 1");
  std::string top = "1000111";
  top += alpha ? "10" : "01";
  return Gf2Matrix::from_strings({top, "010010011", "001001011", "000100111"});
}

Gf2Matrix s4_case_b3_matrix() {
  return Gf2Matrix::from_strings({"10001111111", "01001001011", "00100101101", "00010011110"});
}

Gf2Matrix s4_case_b3_result() {
  return Gf2Matrix::from_strings({"10000111", "01001011", "00101101", "00011110"});
}

Gf2Matrix k24_matrix() {
  return Gf2Matrix::from_strings({"100001111", "010001001", "001000101", "000100011", "000011110"});
}

Gf2Matrix k24_pivoted_matrix() {
  return Gf2Matrix::from_strings({"100001111", "110000110", "101001010", "100101100", "000011110"});
}

namespace {

const CanonicalKey& ag_key() {
  static const CanonicalKey k = canonical_key(construct::ag32());
  return k;
}

bool represents_ag(const Gf2Matrix& m) {
  const auto cols = m.columns();
  const auto emb = embed_columns(cols);
  return emb.matroid.size() == static_cast<int>(cols.size()) && canonical_key(emb.matroid) == ag_key();
}

// The displayed block is a reduced representation: rows are labelled
// x, c1, c2, c3 and the identity part stands for those elements. The row
// operation acts on the block, then the c4/d4 column with a leading 1 goes.
bool lifting_fixture(int alpha) {
  const auto full = lifting_matrix(alpha);
  std::vector<Gf2Vector> block;
  for (int j = 4; j < 9; ++j)
    block.push_back(full.column(j));
  auto a = Gf2Matrix::from_columns(4, block);
  for (std::size_t i = 1; i < 4; ++i)
    a.add_row(0, i);
  const int drop = a.get(0, 3) ? 3 : 4;
  if (a.get(0, 3) == a.get(0, 4))
    return false;
  std::vector<Gf2Vector> cols;
  for (int i = 0; i < 4; ++i)
    cols.push_back(Gf2Vector::unit(4, i));
  for (int j = 0; j < 5; ++j)
    if (j != drop)
      cols.push_back(a.column(j));
  return represents_ag(Gf2Matrix::from_columns(4, cols));
}

bool s4_fixture() {
  auto m = s4_case_b3_matrix();
  for (std::size_t i = 1; i < 4; ++i)
    m.add_row(i, 0);
  const std::vector<int> a_cols{1, 2, 3};
  const auto reduced = m.without_columns(a_cols);
  return reduced == s4_case_b3_result() && represents_ag(reduced);
}

bool k24_fixture() {
  auto m = k24_matrix();
  for (std::size_t i = 1; i <= 3; ++i)
    m.add_row(0, i);
  if (!(m == k24_pivoted_matrix()) || !(row_reduce(k24_matrix()) == row_reduce(k24_pivoted_matrix())))
    return false;
  // The same matroid comes from the graft (K_{2,4}, degree-two vertices).
  const Graft g(Multigraph::complete_bipartite(2, 4), {2, 3, 4, 5});
  const auto gm = graft_matroid(g);
  const auto cols = k24_matrix().columns();
  const auto emb = embed_columns(cols);
  if (!are_isomorphic(emb.matroid, gm.matroid) || emb.matroid.size() != 9)
    return false;
  return are_isomorphic(contract(emb.matroid, emb.image.back()), construct::ag32()) &&
         are_isomorphic(contract(gm.matroid, gm.graft_point), construct::ag32());
}

bool appendix_fixture() {
  static const MinorQuery ag = MinorQuery::of(MinorTarget::ag32);
  const auto plus = construct::mk5plus_matrix();
  const auto plus_key = canonical_key(construct::mk5plus());
  std::vector<CanonicalKey> keys;
  for (int k = 1; k <= 3; ++k) {
    const auto mat = construct::appendix5_matrix(k);
    const auto cols = mat.columns();
    const auto emb = embed_columns(cols);
    const auto& m = emb.matroid;
    if (m.rank() != 5 || m.size() != 15 || static_cast<int>(cols.size()) != 15)
      return false;
    if (has_minor(m, ag) || is_regular(m))
      return false;
    // Rows below the separator, first 11 columns: exactly M(K5)+.
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 11; ++j)
        if (mat.get(i + 1, j) != plus.get(i, j))
          return false;
    // The first two sit M(K5)+ in the hyperplane x_1 = 0; the third lifts
    // one of its points out of it.
    const std::vector<Gf2Vector> first11(cols.begin(), cols.begin() + 11);
    const auto sub = embed_columns(first11).matroid;
    if ((canonical_key(sub) == plus_key) != (k != 3))
      return false;
    keys.push_back(canonical_key(m));
  }
  return keys[0] != keys[1] && keys[0] != keys[2] && keys[1] != keys[2];
}

bool graft_k4_fixture() {
  const Graft g(Multigraph::complete(4), {0, 1, 2, 3});
  return are_isomorphic(graft_matroid(g).matroid, construct::f7());
}

bool graft_k24_fixture() {
  const Graft g(Multigraph::complete_bipartite(2, 4), {2, 3, 4, 5});
  const auto gm = graft_matroid(g);
  return gm.matroid.size() == 9 && are_isomorphic(contract(gm.matroid, gm.graft_point), construct::ag32()) &&
         are_isomorphic(delete_point(gm.matroid, gm.graft_point),
                        graphic_matroid(Multigraph::complete_bipartite(2, 4)).matroid);
}

bool f7_signed_graph_fixture() {
  const auto sg = f7_signed_graph();
  if (!are_isomorphic(even_cycle_matroid(sg).matroid, construct::f7()))
    return false;
  // Three digons and one odd loop.
  int loops = 0;
  for (const auto& e : sg.graph.edges())
    loops += e.is_loop();
  if (loops != 1 || !sg.odd(std::find_if(sg.graph.edges().begin(), sg.graph.edges().end(),
                                         [](const Edge& e) { return e.is_loop(); })
                               ->label))
    return false;
  for (int w = 0; w < 3; ++w) {
    try {
      split_vertex(sg, w);
      return false;
    } catch (const PreconditionViolated&) {
    }
  }
  return true;
}

bool star_lift_fixture() {
  for (int r : {5, 6}) {
    const auto sg = star_lift(r);
    const auto m = even_cycle_matroid(sg).matroid;
    if (m.size() != (r + 1) * r / 2 || !are_isomorphic(m, construct::mk(r + 1)))
      return false;
    if (!are_isomorphic(graphic_matroid(split_vertex(sg, 0)).matroid, construct::mk(r + 1)))
      return false;
  }
  return true;
}

} // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"lifting(0)", "lifting(1)", "s4_case_b3",      "k24_pivot", "appendix",
                                              "graft_k4",   "graft_k24",  "f7_signed_graph", "star_lift"};
  return names;
}

bool verify_fixture(std::string_view name) {
  if (name == "lifting(0)")
    return lifting_fixture(0);
  if (name == "lifting(1)")
    return lifting_fixture(1);
  if (name == "s4_case_b3")
    return s4_fixture();
  if (name == "k24_pivot")
    return k24_fixture();
  if (name == "appendix")
    return appendix_fixture();
  if (name == "graft_k4")
    return graft_k4_fixture();
  if (name == "graft_k24")
    return graft_k24_fixture();
  if (name == "f7_signed_graph")
    return f7_signed_graph_fixture();
  if (name == "star_lift")
    return star_lift_fixture();
  return false;
}

} // namespace bmx
