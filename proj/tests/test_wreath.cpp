#include <random>

#include "corpus.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "sofic/wreath.hpp"

using namespace sofic;
using namespace sofic::testing;

namespace {

const FiniteTable& c2() {
  static const auto t = GroupFamily::cyclic(2).table();
  return t;
}

}  // namespace

TEST_CASE("graph product normal forms") {
  GraphProduct K2(complete_graph(2), c2());
  auto x = K2.syllable(0, 1), y = K2.syllable(1, 1);
  CHECK(K2.mul(x, y) == K2.mul(y, x));
  CHECK(K2.mul(x, x).is_identity());
  CHECK(K2.format(K2.identity()) == "e");

  GraphProduct free(edgeless_graph(2), c2());
  auto a = free.syllable(0, 1), b = free.syllable(1, 1);
  CHECK(free.mul(a, b) != free.mul(b, a));
  CHECK(free.mul(free.mul(a, b), free.inv(free.mul(a, b))).is_identity());
  CHECK(free.mul(a, b).syllables.size() == 2);
}

TEST_CASE("graph product laws on random words") {
  std::mt19937_64 rng(9);
  for (auto graph : {path_graph(3), cycle_graph(4), complete_graph(3), edgeless_graph(3)}) {
    GraphProduct K(graph, GroupFamily::cyclic(3).table());
    for (int t = 0; t < 150; ++t) {
      auto x = oracle::random_gp(K, 6, rng), y = oracle::random_gp(K, 6, rng), z = oracle::random_gp(K, 6, rng);
      CHECK(K.mul(K.mul(x, y), z) == K.mul(x, K.mul(y, z)));
      CHECK(K.mul(x, K.inv(x)).is_identity());
      CHECK(K.mul(K.identity(), x) == x);
      std::vector<Syllable> w = x.syllables;
      w.insert(w.end(), y.syllables.begin(), y.syllables.end());
      CHECK(K.from_word(w) == K.mul(x, y));
    }
  }
}

TEST_CASE("wreath group laws and the Hamming-type distance") {
  GraphProduct K(path_graph(3), c2());
  std::mt19937_64 rng(10);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = 1 + rng() % 6;
    auto x = oracle::random_wreath(K, n, rng), y = oracle::random_wreath(K, n, rng), z = oracle::random_wreath(K, n, rng);
    CHECK(wreath_mul(K, wreath_mul(K, x, y), z) == wreath_mul(K, x, wreath_mul(K, y, z)));
    CHECK(wreath_mul(K, x, wreath_inv(K, x)) == wreath_identity(n));
    auto d = dGA(x, y);
    CHECK(dGA(wreath_mul(K, z, x), wreath_mul(K, z, y)) == d);
    CHECK(dGA(wreath_mul(K, x, z), wreath_mul(K, y, z)) == d);
    CHECK(dGA(x, y) == dGA(y, x));
  }
  auto id = wreath_identity(10);
  auto moved = id;
  moved.perm = Permutation({1, 0, 2, 3, 4, 5, 6, 7, 8, 9});
  CHECK(dGA(id, moved) == Rational(1, 5));
  auto coloured = wreath_identity(4);
  coloured.coords[2] = K.syllable(1, 1);
  CHECK(dGA(wreath_identity(4), coloured) == Rational(1, 4));
}

TEST_CASE("embeddings of exact certificates are exact") {
  auto r = check_wreath_embedding(free_c4(), free_rotation_c4(), c2());
  CHECK(r.delta == Rational(0));
  CHECK(r.max_defect == Rational(0));
  CHECK(r.bound_holds);
  CHECK(r.separation_holds);
  CHECK(r.pairs > 0);
}

TEST_CASE("embeddings of approximate certificates stay within the bound") {
  auto c = folner_line(40);
  auto r = check_wreath_embedding(c, z_line(), c2(), {2, 200, 3});
  CAPTURE(r.worst_pair);
  CHECK(r.pairs > 200);
  CHECK(r.skipped > 0);
  CHECK(r.bound_holds);
  CHECK(r.separation_holds);
  CHECK(r.max_defect <= r.bound);
  CHECK(r.expected_separation == ratio(c.S.size(), c.carrier));
}
