#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sofic/eppa.hpp"
#include "sofic/error.hpp"

using namespace sofic;

TEST_CASE("small extensions") {
  auto k2 = complete_graph(2);
  auto sol = eppa_extend(k2, {PartialIso{{{"0", "1"}}}});
  CHECK(sol.B.size() == 2);
  CHECK(sol.autos[0] == Permutation({1, 0}));
  CHECK(check_eppa_solution(k2, {PartialIso{{{"0", "1"}}}}, sol));

  auto e2 = edgeless_graph(2);
  CHECK(eppa_extend(e2, {PartialIso{{{"0", "1"}}}}).B.size() == 2);

  auto p3 = path_graph(3);
  std::vector<PartialIso> shift{PartialIso{{{"0", "1"}, {"1", "2"}}}};
  auto s = eppa_extend(p3, shift);
  CHECK(s.B.size() == 4);
  CHECK(is_isomorphic(s.B, cycle_graph(4)));
  CHECK(check_eppa_solution(p3, shift, s));
  CHECK(oracle::eppa_solution_ok(p3, shift, s));

  auto none = eppa_extend(p3, {});
  CHECK(none.B == p3.canonical());
}

TEST_CASE("invalid partials and caps") {
  auto p3 = path_graph(3);
  CHECK_THROWS_AS(eppa_extend(p3, {PartialIso{{{"0", "0"}, {"2", "1"}}}}), Error);
  CHECK_THROWS_AS(eppa_extend(p3, {PartialIso{{{"0", "1"}, {"2", "1"}}}}), Error);
  CHECK_THROWS_AS(eppa_extend(p3, {PartialIso{{{"0", "9"}}}}), Error);
  try {
    eppa_extend(p3, {PartialIso{{{"0", "1"}, {"1", "2"}}}}, 3);
    FAIL("cap ignored");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::eppa_cap_exhausted);
  }
}

TEST_CASE("checker rejects mutated solutions") {
  auto p3 = path_graph(3);
  std::vector<PartialIso> shift{PartialIso{{{"0", "1"}, {"1", "2"}}}};
  auto s = eppa_extend(p3, shift);
  auto bad = s;
  bad.autos[0] = Permutation::identity(s.B.size());
  CHECK_FALSE(check_eppa_solution(p3, shift, bad));
  bad = s;
  bad.embed = {1, 0, 2};
  CHECK_FALSE(check_eppa_solution(p3, shift, bad));
  bad = s;
  bad.autos.push_back(Permutation::identity(s.B.size()));
  CHECK_FALSE(check_eppa_solution(p3, shift, bad));
}

TEST_CASE("every single partial of every graph on at most 3 vertices") {
  for (std::size_t n = 0; n <= 3; ++n)
    for (const auto& g : oracle::all_labelled_graphs(n)) {
      auto autos = oracle::automorphisms(g);
      for (const auto& p : oracle::all_partial_isomorphisms(g)) {
        auto sol = eppa_extend(g, {p});
        CHECK(check_eppa_solution(g, {p}, sol));
        CHECK(oracle::eppa_solution_ok(g, {p}, sol));
        bool extends_inside = std::any_of(autos.begin(), autos.end(), [&](const auto& a) {
          for (const auto& [v, w] : p.map)
            if (a[g.at(v)] != g.at(w)) return false;
          return true;
        });
        if (extends_inside) CHECK(sol.B.size() == n);
        else CHECK(sol.B.size() > n);
      }
    }
}

TEST_CASE("random pairs of partials are deterministic") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 40; ++t) {
    auto graphs = oracle::all_labelled_graphs(3);
    const auto& g = graphs[rng() % graphs.size()];
    auto parts = oracle::all_partial_isomorphisms(g);
    std::vector<PartialIso> two{parts[rng() % parts.size()], parts[rng() % parts.size()]};
    auto a = eppa_extend(g, two), b = eppa_extend(g, two);
    CHECK(a.B == b.B);
    CHECK(a.autos == b.autos);
    CHECK(oracle::eppa_solution_ok(g, two, a));
  }
}
