#include <random>
#include <vector>

#include "doctest.h"
#include "sofic/error.hpp"
#include "sofic/group.hpp"

using namespace sofic;

namespace {

// Stack-based free reduction, independent of GroupFamily::mul.
std::vector<std::int64_t> reduce(const std::vector<std::int64_t>& w) {
  std::vector<std::int64_t> out;
  for (auto l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Element random_word(std::mt19937_64& rng, std::size_t rank, std::size_t max_len) {
  std::vector<std::int64_t> w;
  std::size_t len = rng() % (max_len + 1);
  for (std::size_t i = 0; i < len; ++i) {
    auto l = static_cast<std::int64_t>(rng() % rank) + 1;
    w.push_back(rng() % 2 ? l : -l);
  }
  return Element{reduce(w), {}};
}

std::size_t free_ball_size(std::size_t rank, std::size_t r) {
  std::size_t total = 1, sphere = 2 * rank;
  for (std::size_t k = 1; k <= r; ++k) {
    total += sphere;
    sphere *= 2 * rank - 1;
  }
  return total;
}

}  // namespace

TEST_CASE("free group multiplication reduces eagerly") {
  auto F2 = GroupFamily::free(2);
  CHECK(F2.mul(F2.parse("a"), F2.parse("A")) == F2.identity());
  CHECK(F2.format(F2.mul(F2.parse("ab"), F2.parse("Ba"))) == "a a");
  CHECK(F2.format(F2.inv(F2.parse("ab"))) == "B A");
  CHECK(F2.parse("a b A") == F2.parse("abA"));
  CHECK(F2.format(F2.identity()) == "1");
  CHECK_THROWS_AS(F2.parse("c"), Error);
}

TEST_CASE("lattice arithmetic is componentwise") {
  auto Z2 = GroupFamily::lattice(2);
  CHECK(Z2.mul(Z2.vec({1, 0}), Z2.vec({0, 1})) == Z2.vec({1, 1}));
  CHECK(Z2.inv(Z2.vec({2, -3})) == Z2.vec({-2, 3}));
  CHECK(Z2.format(Z2.parse("( 1, -2 )")) == "(1,-2)");
  auto Z = GroupFamily::lattice(1);
  CHECK(Z.parse("-4") == Z.vec({-4}));
  CHECK_THROWS_AS(Z2.parse("(1)"), Error);
}

TEST_CASE("mixing families is rejected") {
  auto Z = GroupFamily::lattice(1);
  auto F1 = GroupFamily::free(1);
  try {
    Z.mul(Z.vec({1}), Element{{}, {F1.identity(), F1.identity()}});
    FAIL("expected family mismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::family_mismatch);
  }
}

TEST_CASE("finite tables are validated") {
  CHECK_NOTHROW(FiniteTable({"e", "x"}, "e", {{0, 1}, {1, 0}}));
  auto expect = [](auto&& f) {
    try {
      f();
      return false;
    } catch (const Error& e) {
      return e.kind() == ErrorKind::invalid_group_table;
    }
  };
  CHECK(expect([] { FiniteTable({"e", "x"}, "e", {{0, 1}, {1, 1}}); }));
  CHECK(expect([] { FiniteTable({"e", "x"}, "y", {{0, 1}, {1, 0}}); }));
  // Quasigroup that is not associative.
  CHECK(expect([] { FiniteTable({"e", "a", "b"}, "e", {{0, 1, 2}, {1, 0, 2}, {2, 2, 0}}); }));
}

TEST_CASE("finite families are associative with inverses (exhaustive)") {
  for (auto G : {GroupFamily::cyclic(6), GroupFamily::symmetric(3), GroupFamily::symmetric(4)}) {
    auto els = G.elements();
    for (const auto& x : els) {
      CHECK(G.mul(x, G.inv(x)) == G.identity());
      for (const auto& y : els)
        for (const auto& z : els) REQUIRE(G.mul(G.mul(x, y), z) == G.mul(x, G.mul(y, z)));
    }
  }
}

TEST_CASE("random free words: associativity, inverses and reduction oracle") {
  std::mt19937_64 rng(1);
  auto F3 = GroupFamily::free(3);
  for (int t = 0; t < 500; ++t) {
    auto x = random_word(rng, 3, 8), y = random_word(rng, 3, 8), z = random_word(rng, 3, 8);
    CHECK(F3.mul(F3.mul(x, y), z) == F3.mul(x, F3.mul(y, z)));
    CHECK(F3.mul(x, F3.inv(x)) == F3.identity());
    auto cat = x.word;
    cat.insert(cat.end(), y.word.begin(), y.word.end());
    CHECK(F3.mul(x, y).word == reduce(cat));
    CHECK(F3.parse(F3.format(x)) == x);
  }
}

TEST_CASE("balls") {
  auto F2 = GroupFamily::free(2);
  auto gens = F2.generators();
  CHECK(ball(F2, gens, 0) == std::vector<Element>{F2.identity()});
  for (std::size_t r = 1; r <= 4; ++r) {
    auto b = ball(F2, gens, r), prev = ball(F2, gens, r - 1);
    CHECK(b.size() == free_ball_size(2, r));
    CHECK(std::includes(b.begin(), b.end(), prev.begin(), prev.end()));
  }
  auto Z2 = GroupFamily::lattice(2);
  auto zg = Z2.generators();
  CHECK(ball(Z2, zg, 1).size() == 5);
  CHECK(ball(Z2, zg, 2).size() == 13);
}

TEST_CASE("subgroup membership") {
  auto Z2 = GroupFamily::lattice(2);
  auto L = Subgroup::sublattice(Z2, {{2, 0}, {0, 2}});
  CHECK(L.contains(Z2, Z2.vec({4, 0})));
  CHECK_FALSE(L.contains(Z2, Z2.vec({1, 0})));
  CHECK(L.contains(Z2, Z2.identity()));
  CHECK(L.coset_reps(Z2)->size() == 4);
  auto F2 = GroupFamily::free(2);
  CHECK_FALSE(Subgroup::trivial().contains(F2, F2.parse("a")));
  CHECK(Subgroup::trivial().contains(F2, F2.identity()));
  auto S3 = GroupFamily::symmetric(3);
  auto H = Subgroup::of_elements(S3, {S3.label("123"), S3.label("213")});
  CHECK(H.contains(S3, S3.label("213")));
  CHECK_FALSE(H.contains(S3, S3.label("132")));
  CHECK(H.coset_reps(S3)->size() == 3);
  CHECK_THROWS_AS(Subgroup::of_elements(S3, {S3.label("213"), S3.label("132")}), Error);
}

TEST_CASE("skew sublattice cosets are canonical") {
  auto Z2 = GroupFamily::lattice(2);
  auto L = Subgroup::sublattice(Z2, {{2, 1}, {0, 3}});
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    auto x = Z2.vec({static_cast<std::int64_t>(rng() % 41) - 20, static_cast<std::int64_t>(rng() % 41) - 20});
    auto in_L = Z2.mul(Z2.pow(Z2.vec({2, 1}), static_cast<std::int64_t>(rng() % 9) - 4),
                       Z2.pow(Z2.vec({0, 3}), static_cast<std::int64_t>(rng() % 9) - 4));
    CHECK(L.contains(Z2, in_L));
    CHECK(L.coset_rep(Z2, x) == L.coset_rep(Z2, Z2.mul(x, in_L)));
    CHECK(L.contains(Z2, Z2.mul(Z2.inv(x), L.coset_rep(Z2, x))));
  }
  CHECK(L.coset_reps(Z2)->size() == 6);
}

TEST_CASE("product families") {
  auto G = GroupFamily::product({GroupFamily::lattice(1), GroupFamily::cyclic(3)});
  auto x = G.parse("<(1)|2>");
  CHECK(G.format(G.mul(x, x)) == "<(2)|1>");
  CHECK(G.mul(x, G.inv(x)) == G.identity());
  CHECK(G.is_amenable());
  CHECK_FALSE(GroupFamily::product({GroupFamily::free(2), GroupFamily::cyclic(2)}).is_amenable());
}

TEST_CASE("homomorphisms") {
  auto F2 = GroupFamily::free(2);
  auto Z = GroupFamily::lattice(1);
  Homomorphism ab(F2, Z, {Z.vec({1}), Z.vec({1})});
  CHECK(ab(F2.parse("abAB")) == Z.identity());
  CHECK(ab(F2.parse("aab")) == Z.vec({3}));
  auto C2 = GroupFamily::cyclic(2), C4 = GroupFamily::cyclic(4);
  std::vector<Element> bad;
  for (auto& x : C4.elements()) bad.push_back(C2.label(C4.format(x) == "1" ? "1" : "0"));
  CHECK_THROWS_AS(Homomorphism(C4, C2, bad), Error);
}
