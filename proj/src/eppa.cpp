#include "sofic/eppa.hpp"

#include <numeric>
#include <optional>
#include <set>

#include "sofic/error.hpp"

namespace sofic {

void check_partial(const FiniteGraph& g, const PartialIso& p) {
  std::set<Vertex> images;
  for (const auto& [v, w] : p.map) {
    if (!g.has_vertex(v) || !g.has_vertex(w))
      throw Error(ErrorKind::invalid_partial, "partial map uses a vertex outside the graph ('" + v + "' -> '" + w + "')");
    if (!images.insert(w).second) throw Error(ErrorKind::invalid_partial, "partial map is not injective at '" + w + "'");
  }
  for (const auto& [v1, w1] : p.map)
    for (const auto& [v2, w2] : p.map)
      if (v1 < v2 && g.adjacent(v1, v2) != g.adjacent(w1, w2))
        throw Error(ErrorKind::invalid_partial, "partial map does not preserve adjacency of ('" + v1 + "','" + v2 + "')");
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

class Search {
 public:
  Search(const FiniteGraph& g0, std::vector<std::vector<std::optional<std::size_t>>> partials, std::size_t n)
      : g0_(g0), partials_(std::move(partials)), n_(n), k_(g0.size()) {}

  // Returns the best (edge vector, autos) on n vertices, if any.
  std::optional<std::pair<std::vector<char>, std::vector<Permutation>>> run() {
    tuple_.clear();
    enumerate(0);
    return best_;
  }

 private:
  void enumerate(std::size_t i) {
    if (i == partials_.size()) {
      evaluate();
      return;
    }
    std::vector<std::uint32_t> img(n_, UINT32_MAX);
    std::vector<char> used(n_, 0);
    for (std::size_t v = 0; v < k_; ++v)
      if (auto w = partials_[i][v]) {
        img[v] = static_cast<std::uint32_t>(*w);
        used[*w] = 1;
      }
    extend(i, 0, img, used);
  }

  void extend(std::size_t i, std::size_t v, std::vector<std::uint32_t>& img, std::vector<char>& used) {
    if (v == n_) {
      tuple_.emplace_back(img);
      enumerate(i + 1);
      tuple_.pop_back();
      return;
    }
    if (img[v] != UINT32_MAX) {
      extend(i, v + 1, img, used);
      return;
    }
    for (std::size_t c = 0; c < n_; ++c) {
      if (used[c]) continue;
      used[c] = 1;
      img[v] = static_cast<std::uint32_t>(c);
      extend(i, v + 1, img, used);
      img[v] = UINT32_MAX;
      used[c] = 0;
    }
  }

  std::size_t pair_id(std::size_t a, std::size_t b) const { return a < b ? a * n_ + b : b * n_ + a; }

  void evaluate() {
    UnionFind uf(n_ * n_);
    for (const auto& s : tuple_)
      for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = a + 1; b < n_; ++b) uf.unite(pair_id(a, b), pair_id(s[a], s[b]));
    std::vector<char> has_edge(n_ * n_, 0), has_non(n_ * n_, 0);
    for (std::size_t a = 0; a < k_; ++a)
      for (std::size_t b = a + 1; b < k_; ++b) {
        auto r = uf.find(pair_id(a, b));
        (g0_.adjacent(a, b) ? has_edge : has_non)[r] = 1;
        if (has_edge[r] && has_non[r]) return;
      }
    std::vector<char> edges;
    edges.reserve(n_ * (n_ - 1) / 2);
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = a + 1; b < n_; ++b) edges.push_back(has_edge[uf.find(pair_id(a, b))]);
    if (!best_ || edges < best_->first) best_.emplace(std::move(edges), tuple_);
  }

  const FiniteGraph& g0_;
  std::vector<std::vector<std::optional<std::size_t>>> partials_;
  std::size_t n_, k_;
  std::vector<Permutation> tuple_;
  std::optional<std::pair<std::vector<char>, std::vector<Permutation>>> best_;
};

}  // namespace

EppaSolution eppa_extend(const FiniteGraph& g0, const std::vector<PartialIso>& partials, std::size_t cap) {
  const std::size_t k = g0.size();
  if (k > cap)
    throw Error(ErrorKind::eppa_cap_exhausted,
                "graph has " + std::to_string(k) + " vertices, more than the cap " + std::to_string(cap));
  std::vector<std::vector<std::optional<std::size_t>>> maps;
  for (const auto& p : partials) {
    check_partial(g0, p);
    std::vector<std::optional<std::size_t>> m(k);
    for (const auto& [v, w] : p.map) m[g0.at(v)] = g0.at(w);
    maps.push_back(std::move(m));
  }
  if (k == 0) return EppaSolution{FiniteGraph(), {}, std::vector<Permutation>(partials.size(), Permutation::identity(0))};
  for (std::size_t n = k; n <= cap; ++n) {
    Search search(g0, maps, n);
    auto found = search.run();
    if (!found) continue;
    std::vector<Vertex> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    FiniteGraph B(std::move(labels));
    std::size_t idx = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (found->first[idx++]) B.add_edge(a, b);
    std::vector<std::size_t> embed(k);
    std::iota(embed.begin(), embed.end(), 0);
    return EppaSolution{std::move(B), std::move(embed), std::move(found->second)};
  }
  throw Error(ErrorKind::eppa_cap_exhausted, "no extension on at most " + std::to_string(cap) + " vertices");
}

bool check_eppa_solution(const FiniteGraph& g0, const std::vector<PartialIso>& partials, const EppaSolution& sol) {
  if (!is_graph_embedding(sol.embed, g0, sol.B)) return false;
  if (sol.autos.size() != partials.size()) return false;
  for (const auto& a : sol.autos) {
    if (a.size() != sol.B.size()) return false;
    for (std::size_t i = 0; i < sol.B.size(); ++i)
      for (std::size_t j = i + 1; j < sol.B.size(); ++j)
        if (sol.B.adjacent(i, j) != sol.B.adjacent(a[i], a[j])) return false;
  }
  for (std::size_t i = 0; i < partials.size(); ++i)
    for (const auto& [v, w] : partials[i].map) {
      auto vi = g0.index_of(v), wi = g0.index_of(w);
      if (!vi || !wi) return false;
      if (sol.autos[i][sol.embed[*vi]] != sol.embed[*wi]) return false;
    }
  return true;
}

}  // namespace sofic
