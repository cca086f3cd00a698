#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sofic/error.hpp"
#include "sofic/graph.hpp"

using namespace sofic;

namespace {

FiniteGraph random_graph(std::size_t n, std::mt19937_64& rng) {
  FiniteGraph g(oracle::numbered(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (rng() % 2) g.add_edge(a, b);
  return g;
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::malformed_input;
}

}  // namespace

TEST_CASE("windows of oracles") {
  auto Z = GroupFamily::lattice(1);
  auto line = cayley_oracle(Z, Z.generators());
  CHECK(window(line, {}).size() == 0);
  auto p3 = window(line, {"0", "1", "2"});
  CHECK(p3.edge_count() == 2);
  CHECK(p3.adjacent("(0)", "(1)"));
  CHECK_FALSE(p3.adjacent("(0)", "(2)"));
  CHECK(window(complete_oracle(line), {"0", "5", "9"}).edge_count() == 3);
  CHECK(kind_of([&] { window(line, {"0", "(0)"}); }) == ErrorKind::equality_violation);
}

TEST_CASE("cayley oracle validation and grid") {
  auto Z2 = GroupFamily::lattice(2);
  auto grid = cayley_oracle(Z2, Z2.generators());
  std::vector<Vertex> box;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) box.push_back("(" + std::to_string(x) + "," + std::to_string(y) + ")");
  CHECK(window(grid, box).edge_count() == 12);
  CHECK(window(cayley_oracle(Z2, {}), box).edge_count() == 0);
  CHECK(kind_of([&] { cayley_oracle(Z2, {Z2.vec({1, 0})}); }) == ErrorKind::asymmetric_connection);
  CHECK(kind_of([&] { cayley_oracle(Z2, {Z2.identity()}); }) == ErrorKind::identity_in_connection);
}

TEST_CASE("graph embeddings") {
  auto p3 = path_graph(3), k3 = complete_graph(3);
  CHECK(is_graph_embedding(std::vector<std::size_t>{0, 1, 2}, p3, p3));
  std::vector<std::size_t> m{0, 1, 2};
  do CHECK_FALSE(is_graph_embedding(m, p3, k3));
  while (std::next_permutation(m.begin(), m.end()));
  CHECK(is_graph_embedding(std::vector<std::size_t>{1}, edgeless_graph(1), k3));
  CHECK_FALSE(is_graph_embedding(std::vector<std::size_t>{0, 0}, edgeless_graph(2), k3));
}

TEST_CASE("complement and coproduct") {
  CHECK(complement(complete_graph(3)).edge_count() == 0);
  auto c = complement(path_graph(3));
  CHECK(c.edge_count() == 1);
  CHECK(c.adjacent("0", "2"));
  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    auto g = random_graph(rng() % 9, rng);
    CHECK(complement(complement(g)) == g);
  }
  auto kk = coproduct(complete_graph(2), complete_graph(2));
  CHECK(kk.size() == 4);
  CHECK(kk.edge_count() == 2);
  CHECK(component_count(kk) == 2);
  auto pk = coproduct(path_graph(3), complete_graph(1));
  CHECK(pk.size() == 4);
  CHECK(pk.edge_count() == 2);
  CHECK(coproduct(path_graph(3), FiniteGraph()).edge_count() == 2);
}

TEST_CASE("truth-table products") {
  auto k2 = complete_graph(2);
  CHECK(is_isomorphic(product(k2, k2, ProductRule::cartesian()), cycle_graph(4)));
  auto t = product(k2, k2, ProductRule::tensor());
  CHECK(t.edge_count() == 2);
  CHECK(component_count(t) == 2);
  CHECK(product(path_graph(3), k2, ProductRule(ProductRule::Table{})).edge_count() == 0);
  ProductRule::Table bad{};
  bad[0][0] = true;
  CHECK(kind_of([&] { ProductRule{bad}; }) == ErrorKind::invalid_rule);
  for (const auto& name : ProductRule::preset_names()) CHECK(ProductRule::named(name).name() == name);
}

TEST_CASE("product rule agrees with a direct state computation") {
  std::mt19937_64 rng(3);
  auto state = [](const FiniteGraph& g, std::size_t a, std::size_t b) {
    return a == b ? PairState::equal : oracle::adj(g, a, b) ? PairState::adjacent : PairState::apart;
  };
  for (int t = 0; t < 40; ++t) {
    auto g1 = random_graph(1 + rng() % 4, rng), g2 = random_graph(1 + rng() % 4, rng);
    ProductRule::Table tab{};
    for (auto& row : tab)
      for (auto& x : row) x = rng() % 2;
    tab[0][0] = false;
    ProductRule rule(tab);
    auto p = product(g1, g2, rule);
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = 0; b < p.size(); ++b) {
        if (a == b) continue;
        auto a1 = a / g2.size(), a2 = a % g2.size(), b1 = b / g2.size(), b2 = b % g2.size();
        CHECK(p.adjacent(a, b) == rule(state(g1, a1, b1), state(g2, a2, b2)));
      }
  }
}

TEST_CASE("cartesian product of Cayley oracles is the Cayley oracle of the product") {
  auto Z = GroupFamily::lattice(1);
  auto G = GroupFamily::product({Z, Z});
  std::vector<Element> conn;
  for (const auto& s : Z.generators()) {
    conn.push_back(G.tuple({s, Z.identity()}));
    conn.push_back(G.tuple({Z.identity(), s}));
  }
  auto direct = cayley_oracle(G, conn);
  auto prod = product_oracle(cayley_oracle(Z, Z.generators()), cayley_oracle(Z, Z.generators()),
                             ProductRule::cartesian());
  for (int side = 1; side <= 4; ++side) {
    std::vector<Vertex> box;
    for (int x = 0; x < side; ++x)
      for (int y = 0; y < side; ++y) box.push_back("<(" + std::to_string(x) + ")|(" + std::to_string(y) + ")>");
    CHECK(window(direct, box) == window(prod, box));
  }
}

TEST_CASE("automorphism groups against brute force") {
  CHECK(automorphism_group(complete_graph(1)).size() == 1);
  CHECK(automorphism_group(path_graph(3)).size() == 2);
  CHECK(automorphism_group(complete_graph(3)).size() == 6);
  CHECK(automorphism_group(cycle_graph(4)).size() == 8);
  CHECK(kind_of([] { automorphism_group(path_graph(11)); }) == ErrorKind::size_cap_exceeded);
  std::mt19937_64 rng(4);
  for (int t = 0; t < 60; ++t) {
    auto g = random_graph(rng() % 7, rng);
    auto auts = automorphism_group(g);
    auto brute = oracle::automorphisms(g);
    REQUIRE(auts.size() == brute.size());
    for (std::size_t i = 0; i < auts.size(); ++i)
      CHECK(std::equal(brute[i].begin(), brute[i].end(), auts[i].images().begin()));
    CHECK(auts.front().is_identity());
    for (const auto& a : auts) {
      CHECK(std::binary_search(auts.begin(), auts.end(), a.inverse()));
      for (const auto& b : auts) CHECK(std::binary_search(auts.begin(), auts.end(), a.compose(b)));
    }
  }
}

TEST_CASE("canonical edges are sorted with ordered endpoints") {
  FiniteGraph g({"b", "a", "c"}, {{"c", "a"}, {"b", "a"}});
  auto edges = g.canonical_edges();
  CHECK(edges == std::vector<Edge>{{"a", "b"}, {"a", "c"}});
  CHECK(g.canonical().vertices() == std::vector<Vertex>{"a", "b", "c"});
  CHECK(kind_of([] { FiniteGraph({"a"}, {{"a", "a"}}); }) == ErrorKind::malformed_input);
}
