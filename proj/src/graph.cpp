#include "sofic/graph.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "sofic/error.hpp"
#include "sofic/labels.hpp"

namespace sofic {

FiniteGraph::FiniteGraph(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  adj_.resize(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (!index_.emplace(vertices_[i], i).second)
      throw Error(ErrorKind::equality_violation, "duplicate vertex '" + vertices_[i] + "'");
}

FiniteGraph::FiniteGraph(std::vector<Vertex> vertices, const std::vector<Edge>& edges)
    : FiniteGraph(std::move(vertices)) {
  for (const auto& [v, w] : edges) {
    auto i = index_of(v), j = index_of(w);
    if (!i || !j) throw Error(ErrorKind::malformed_input, "edge endpoint '" + (i ? w : v) + "' is not a vertex");
    add_edge(*i, *j);
  }
}

std::optional<std::size_t> FiniteGraph::index_of(std::string_view v) const {
  auto it = index_.find(Vertex(v));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteGraph::at(std::string_view v) const {
  auto i = index_of(v);
  if (!i) throw Error(ErrorKind::malformed_input, "unknown vertex '" + std::string(v) + "'");
  return *i;
}

bool FiniteGraph::adjacent(std::size_t i, std::size_t j) const {
  const auto& row = adj_[i];
  return std::binary_search(row.begin(), row.end(), static_cast<std::uint32_t>(j));
}

std::size_t FiniteGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.size();
  return twice / 2;
}

void FiniteGraph::add_edge(std::size_t i, std::size_t j) {
  if (i == j) throw Error(ErrorKind::malformed_input, "self-loop at '" + vertices_[i] + "'");
  auto insert = [](std::vector<std::uint32_t>& row, std::uint32_t v) {
    auto it = std::lower_bound(row.begin(), row.end(), v);
    if (it == row.end() || *it != v) row.insert(it, v);
  };
  insert(adj_[i], static_cast<std::uint32_t>(j));
  insert(adj_[j], static_cast<std::uint32_t>(i));
}

std::vector<Edge> FiniteGraph::canonical_edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (auto j : adj_[i]) {
      if (j < i) continue;
      const auto& a = vertices_[i];
      const auto& b = vertices_[j];
      out.emplace_back(std::min(a, b), std::max(a, b));
    }
  std::sort(out.begin(), out.end());
  return out;
}

FiniteGraph FiniteGraph::canonical() const {
  std::vector<Vertex> sorted = vertices_;
  std::sort(sorted.begin(), sorted.end());
  return FiniteGraph(std::move(sorted), canonical_edges());
}

bool operator==(const FiniteGraph& a, const FiniteGraph& b) {
  if (a.size() != b.size()) return false;
  for (const auto& v : a.vertices_)
    if (!b.has_vertex(v)) return false;
  return a.canonical_edges() == b.canonical_edges();
}

namespace {

std::vector<Vertex> numbered(std::size_t n) {
  std::vector<Vertex> vs;
  for (std::size_t i = 0; i < n; ++i) vs.push_back(std::to_string(i));
  return vs;
}

}  // namespace

FiniteGraph path_graph(std::size_t n) {
  FiniteGraph g(numbered(n));
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

FiniteGraph cycle_graph(std::size_t n) {
  FiniteGraph g = path_graph(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

FiniteGraph complete_graph(std::size_t n) {
  FiniteGraph g(numbered(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

FiniteGraph edgeless_graph(std::size_t n) { return FiniteGraph(numbered(n)); }

FiniteGraph window(const GraphOracle& oracle, const std::vector<Vertex>& verts) {
  std::vector<Vertex> canon;
  canon.reserve(verts.size());
  for (const auto& v : verts) {
    if (!oracle.contains(v))
      throw Error(ErrorKind::window_failure, "'" + v + "' is not a vertex of " + oracle.description);
    canon.push_back(oracle.canonical ? oracle.canonical(v) : v);
  }
  FiniteGraph g(canon);  // throws equality_violation on duplicates
  const std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i)
    if (oracle.adjacent(canon[i], canon[i]))
      throw Error(ErrorKind::window_failure, "adjacency is reflexive at '" + canon[i] + "'");
  if (oracle.neighbors) {
    std::vector<std::set<std::uint32_t>> found(n);
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& w : oracle.neighbors(canon[i])) {
        if (!oracle.contains(w)) continue;
        auto j = g.index_of(oracle.canonical ? oracle.canonical(w) : w);
        if (!j || *j == i) continue;
        if (oracle.adjacent(canon[i], canon[*j])) found[i].insert(static_cast<std::uint32_t>(*j));
      }
    for (std::size_t i = 0; i < n; ++i)
      for (auto j : found[i]) {
        if (!found[j].count(static_cast<std::uint32_t>(i)))
          throw Error(ErrorKind::window_failure, "adjacency is not symmetric on ('" + canon[i] + "','" + canon[j] + "')");
        if (i < j) g.add_edge(i, j);
      }
    return g;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      bool ij = oracle.adjacent(canon[i], canon[j]);
      if (ij != oracle.adjacent(canon[j], canon[i]))
        throw Error(ErrorKind::window_failure, "adjacency is not symmetric on ('" + canon[i] + "','" + canon[j] + "')");
      if (ij) g.add_edge(i, j);
    }
  return g;
}

GraphOracle oracle_of(const FiniteGraph& g) {
  auto shared = std::make_shared<const FiniteGraph>(g);
  GraphOracle o;
  o.description = "finite graph on " + std::to_string(g.size()) + " vertices";
  o.contains = [shared](const Vertex& v) { return shared->has_vertex(v); };
  o.canonical = [](const Vertex& v) { return v; };
  o.adjacent = [shared](const Vertex& v, const Vertex& w) { return shared->adjacent(v, w); };
  o.enumerate = [shared] { return shared->vertices(); };
  o.neighbors = [shared](const Vertex& v) {
    std::vector<Vertex> out;
    for (auto j : shared->neighbors(shared->at(v))) out.push_back(shared->vertex(j));
    return out;
  };
  return o;
}

GraphOracle complement_oracle(const GraphOracle& o) {
  GraphOracle c = o;
  c.description = "complement of " + o.description;
  auto adj = o.adjacent;
  auto canon = o.canonical;
  c.adjacent = [adj, canon](const Vertex& v, const Vertex& w) {
    bool same = canon ? canon(v) == canon(w) : v == w;
    return !same && !adj(v, w);
  };
  c.neighbors = nullptr;
  return c;
}

GraphOracle edgeless_oracle(const GraphOracle& o) {
  GraphOracle c = o;
  c.description = "edgeless graph on the vertices of " + o.description;
  c.adjacent = [](const Vertex&, const Vertex&) { return false; };
  c.neighbors = [](const Vertex&) { return std::vector<Vertex>{}; };
  return c;
}

GraphOracle complete_oracle(const GraphOracle& o) {
  GraphOracle c = o;
  c.description = "complete graph on the vertices of " + o.description;
  auto canon = o.canonical;
  c.adjacent = [canon](const Vertex& v, const Vertex& w) { return canon ? canon(v) != canon(w) : v != w; };
  c.neighbors = nullptr;
  return c;
}

GraphOracle induced_oracle(const GraphOracle& o, std::function<bool(const Vertex&)> keep) {
  GraphOracle c = o;
  c.description = "induced subgraph of " + o.description;
  auto contains = o.contains;
  c.contains = [contains, keep](const Vertex& v) { return contains(v) && keep(v); };
  if (o.enumerate) {
    auto en = o.enumerate;
    c.enumerate = [en, keep] {
      std::vector<Vertex> out;
      for (auto& v : en())
        if (keep(v)) out.push_back(v);
      return out;
    };
  }
  return c;
}

GraphOracle cayley_oracle(const GroupFamily& family, const std::vector<Element>& conn) {
  std::set<Element> s;
  for (const auto& c : conn) {
    family.require(c);
    if (family.is_identity(c)) throw Error(ErrorKind::identity_in_connection, "identity in connection set");
    s.insert(c);
  }
  for (const auto& c : s)
    if (!s.count(family.inv(c)))
      throw Error(ErrorKind::asymmetric_connection, "inverse of " + family.format(c) + " missing from connection set");
  auto set = std::make_shared<const std::set<Element>>(std::move(s));
  GraphOracle o;
  o.description = "Cayley graph of " + family.describe();
  o.contains = [family](const Vertex& v) {
    try {
      family.parse(v);
      return true;
    } catch (const Error&) {
      return false;
    }
  };
  o.canonical = [family](const Vertex& v) { return family.format(family.parse(v)); };
  o.adjacent = [family, set](const Vertex& v, const Vertex& w) {
    return set->count(family.mul(family.inv(family.parse(v)), family.parse(w))) > 0;
  };
  o.neighbors = [family, set](const Vertex& v) {
    auto g = family.parse(v);
    std::vector<Vertex> out;
    for (const auto& c : *set) out.push_back(family.format(family.mul(g, c)));
    return out;
  };
  if (family.order()) {
    o.enumerate = [family] {
      std::vector<Vertex> out;
      for (const auto& g : family.elements()) out.push_back(family.format(g));
      return out;
    };
  }
  return o;
}

bool is_graph_embedding(const std::vector<std::size_t>& map, const FiniteGraph& source, const FiniteGraph& target) {
  if (map.size() != source.size()) return false;
  std::unordered_set<std::size_t> used;
  for (auto m : map)
    if (m >= target.size() || !used.insert(m).second) return false;
  for (std::size_t i = 0; i < map.size(); ++i)
    for (std::size_t j = i + 1; j < map.size(); ++j)
      if (source.adjacent(i, j) != target.adjacent(map[i], map[j])) return false;
  return true;
}

bool is_graph_embedding(const std::map<Vertex, Vertex>& map, const FiniteGraph& source, const FiniteGraph& target) {
  std::vector<std::size_t> idx(source.size());
  for (std::size_t i = 0; i < source.size(); ++i) {
    auto it = map.find(source.vertex(i));
    if (it == map.end()) return false;
    auto j = target.index_of(it->second);
    if (!j) return false;
    idx[i] = *j;
  }
  return is_graph_embedding(idx, source, target);
}

FiniteGraph complement(const FiniteGraph& g) {
  FiniteGraph c(g.vertices());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (!g.adjacent(i, j)) c.add_edge(i, j);
  return c;
}

FiniteGraph coproduct(const FiniteGraph& g1, const FiniteGraph& g2) {
  std::vector<Vertex> vs;
  for (const auto& v : g1.vertices()) vs.push_back(tag(0, v));
  for (const auto& v : g2.vertices()) vs.push_back(tag(1, v));
  FiniteGraph g(std::move(vs));
  for (std::size_t i = 0; i < g1.size(); ++i)
    for (auto j : g1.neighbors(i))
      if (j > i) g.add_edge(i, j);
  for (std::size_t i = 0; i < g2.size(); ++i)
    for (auto j : g2.neighbors(i))
      if (j > i) g.add_edge(g1.size() + i, g1.size() + j);
  return g;
}

ProductRule::ProductRule(Table table) : table_(table) {
  if (table_[0][0]) throw Error(ErrorKind::invalid_rule, "rule makes (equal, equal) adjacent");
}

namespace {

using St = PairState;

const std::vector<std::pair<std::string, std::vector<std::pair<St, St>>>>& presets() {
  static const std::vector<std::pair<std::string, std::vector<std::pair<St, St>>>> table = {
      {"cartesian", {{St::adjacent, St::equal}, {St::equal, St::adjacent}}},
      {"tensor", {{St::adjacent, St::adjacent}}},
      {"lexicographic",
       {{St::adjacent, St::equal}, {St::adjacent, St::adjacent}, {St::adjacent, St::apart}, {St::equal, St::adjacent}}},
      {"strong", {{St::adjacent, St::equal}, {St::equal, St::adjacent}, {St::adjacent, St::adjacent}}},
      {"co-normal",
       {{St::adjacent, St::equal},
        {St::adjacent, St::adjacent},
        {St::adjacent, St::apart},
        {St::equal, St::adjacent},
        {St::apart, St::adjacent}}},
      {"modular", {{St::adjacent, St::adjacent}, {St::apart, St::apart}}},
      {"homomorphic",
       {{St::adjacent, St::equal}, {St::adjacent, St::apart}, {St::equal, St::adjacent}, {St::equal, St::apart}}},
      {"empty", {}},
  };
  return table;
}

PairState state(const FiniteGraph& g, std::size_t i, std::size_t j) {
  if (i == j) return PairState::equal;
  return g.adjacent(i, j) ? PairState::adjacent : PairState::apart;
}

}  // namespace

ProductRule ProductRule::named(std::string_view name) {
  for (const auto& [n, cells] : presets()) {
    if (n != name) continue;
    Table t{};
    for (auto [a, b] : cells) t[static_cast<int>(a)][static_cast<int>(b)] = true;
    return ProductRule(t);
  }
  throw Error(ErrorKind::invalid_rule, "unknown product rule '" + std::string(name) + "'");
}

const std::vector<std::string>& ProductRule::preset_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& p : presets()) out.push_back(p.first);
    return out;
  }();
  return names;
}

std::string ProductRule::name() const {
  for (const auto& n : preset_names())
    if (named(n) == *this) return n;
  return "custom";
}

FiniteGraph product(const FiniteGraph& g1, const FiniteGraph& g2, const ProductRule& rule) {
  std::vector<Vertex> vs;
  vs.reserve(g1.size() * g2.size());
  for (const auto& v1 : g1.vertices())
    for (const auto& v2 : g2.vertices()) vs.push_back(join_tuple({v1, v2}));
  FiniteGraph g(std::move(vs));
  const std::size_t n2 = g2.size();
  for (std::size_t a1 = 0; a1 < g1.size(); ++a1)
    for (std::size_t b1 = a1; b1 < g1.size(); ++b1) {
      auto s1 = state(g1, a1, b1);
      for (std::size_t a2 = 0; a2 < n2; ++a2)
        for (std::size_t b2 = 0; b2 < n2; ++b2) {
          if (a1 == b1 && b2 <= a2) continue;
          if (rule(s1, state(g2, a2, b2))) g.add_edge(a1 * n2 + a2, b1 * n2 + b2);
        }
    }
  return g;
}

GraphOracle product_oracle(const GraphOracle& o1, const GraphOracle& o2, const ProductRule& rule) {
  GraphOracle o;
  o.description = "product (" + rule.name() + ") of " + o1.description + " and " + o2.description;
  o.contains = [o1, o2](const Vertex& v) {
    try {
      auto p = split_tuple(v);
      return p.size() == 2 && o1.contains(p[0]) && o2.contains(p[1]);
    } catch (const Error&) {
      return false;
    }
  };
  o.canonical = [o1, o2](const Vertex& v) {
    auto p = split_tuple(v);
    return join_tuple({o1.canonical ? o1.canonical(p[0]) : p[0], o2.canonical ? o2.canonical(p[1]) : p[1]});
  };
  o.adjacent = [o1, o2, rule](const Vertex& v, const Vertex& w) {
    auto pv = split_tuple(v), pw = split_tuple(w);
    auto st = [](const GraphOracle& oi, const Vertex& x, const Vertex& y) {
      bool same = oi.canonical ? oi.canonical(x) == oi.canonical(y) : x == y;
      if (same) return PairState::equal;
      return oi.adjacent(x, y) ? PairState::adjacent : PairState::apart;
    };
    return rule(st(o1, pv[0], pw[0]), st(o2, pv[1], pw[1]));
  };
  // Only rules that never join apart coordinates stay locally finite.
  bool local = true;
  for (int a = 0; a < 3; ++a)
    if (rule.table()[2][a] || rule.table()[a][2]) local = false;
  if (local && o1.neighbors && o2.neighbors) {
    o.neighbors = [o1, o2](const Vertex& v) {
      auto p = split_tuple(v);
      auto n1 = o1.neighbors(p[0]);
      auto n2 = o2.neighbors(p[1]);
      n1.push_back(p[0]);
      n2.push_back(p[1]);
      std::vector<Vertex> out;
      for (const auto& a : n1)
        for (const auto& b : n2) out.push_back(join_tuple({a, b}));
      return out;
    };
  }
  if (o1.enumerate && o2.enumerate) {
    o.enumerate = [o1, o2] {
      std::vector<Vertex> out;
      auto v2 = o2.enumerate();
      for (const auto& a : o1.enumerate())
        for (const auto& b : v2) out.push_back(join_tuple({a, b}));
      return out;
    };
  }
  return o;
}

GraphOracle coproduct_oracle(const GraphOracle& o1, const GraphOracle& o2) {
  GraphOracle o;
  o.description = "coproduct of " + o1.description + " and " + o2.description;
  o.contains = [o1, o2](const Vertex& v) {
    try {
      auto [i, w] = untag(v);
      if (i == 0) return o1.contains(w);
      if (i == 1) return o2.contains(w);
      return false;
    } catch (const Error&) {
      return false;
    }
  };
  o.canonical = [o1, o2](const Vertex& v) {
    auto [i, w] = untag(v);
    const auto& oi = i == 0 ? o1 : o2;
    return tag(i, oi.canonical ? oi.canonical(w) : w);
  };
  o.adjacent = [o1, o2](const Vertex& v, const Vertex& w) {
    auto [i, a] = untag(v);
    auto [j, b] = untag(w);
    if (i != j) return false;
    return (i == 0 ? o1 : o2).adjacent(a, b);
  };
  if (o1.neighbors && o2.neighbors) {
    o.neighbors = [o1, o2](const Vertex& v) {
      auto [i, a] = untag(v);
      std::vector<Vertex> out;
      for (const auto& w : (i == 0 ? o1 : o2).neighbors(a)) out.push_back(tag(i, w));
      return out;
    };
  }
  if (o1.enumerate && o2.enumerate) {
    o.enumerate = [o1, o2] {
      std::vector<Vertex> out;
      for (const auto& a : o1.enumerate()) out.push_back(tag(0, a));
      for (const auto& b : o2.enumerate()) out.push_back(tag(1, b));
      return out;
    };
  }
  return o;
}

std::vector<Permutation> automorphism_group(const FiniteGraph& g, std::size_t cap) {
  const std::size_t n = g.size();
  if (n > cap)
    throw Error(ErrorKind::size_cap_exceeded,
                "automorphism search on " + std::to_string(n) + " vertices exceeds cap " + std::to_string(cap));
  std::vector<Permutation> out;
  std::vector<std::uint32_t> image(n);
  std::vector<char> used(n, 0);
  std::function<void(std::size_t)> extend = [&](std::size_t i) {
    if (i == n) {
      out.emplace_back(image);
      return;
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || g.degree(c) != g.degree(i)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = g.adjacent(i, j) == g.adjacent(c, image[j]);
      if (!ok) continue;
      used[c] = 1;
      image[i] = static_cast<std::uint32_t>(c);
      extend(i + 1);
      used[c] = 0;
    }
  };
  extend(0);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_isomorphic(const FiniteGraph& a, const FiniteGraph& b) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
  if (a.size() > 8) throw Error(ErrorKind::size_cap_exceeded, "isomorphism test is limited to 8 vertices");
  std::vector<std::size_t> p(a.size());
  std::iota(p.begin(), p.end(), 0);
  do
    if (is_graph_embedding(p, a, b)) return true;
  while (std::next_permutation(p.begin(), p.end()));
  return false;
}

std::size_t component_count(const FiniteGraph& g) {
  std::vector<char> seen(g.size(), 0);
  std::size_t count = 0;
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
  }
  return count;
}

}  // namespace sofic
