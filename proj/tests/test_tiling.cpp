#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "sofic/error.hpp"
#include "sofic/tiling.hpp"

using namespace sofic;

TEST_CASE("box tiles") {
  auto Z = GroupFamily::lattice(1);
  auto t1 = box_tiling(1, 1);
  CHECK(tile_of(t1, Z.vec({-4})) == std::vector<Element>{Z.vec({-4})});
  auto t5 = box_tiling(1, 5);
  CHECK(tile_of(t5, Z.vec({7})) == lattice_box(1, 5, 5));
  CHECK(tile_of(t5, Z.vec({-1})) == lattice_box(1, -5, 5));
  CHECK(tile_of(t5, Z.vec({-5})) == lattice_box(1, -5, 5));
  CHECK_THROWS_AS(box_tiling(1, 0), Error);
}

TEST_CASE("box tiles partition every window") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    std::size_t d = 1 + rng() % 3, L = 1 + rng() % 4;
    auto tiling = box_tiling(d, L);
    auto window = lattice_box(d, static_cast<std::int64_t>(rng() % 9) - 4, 1 + rng() % 5);
    CHECK(tiles_partition(tiling, window));
    std::set<std::vector<Element>> tiles;
    for (const auto& g : window) {
      auto tile = tile_of(tiling, g);
      CHECK(tile.size() == static_cast<std::size_t>(std::pow(L, d)));
      CHECK(std::binary_search(tile.begin(), tile.end(), g));
      tiles.insert(tile);
    }
    std::size_t total = 0;
    for (const auto& tile : tiles) total += tile.size();
    std::set<Element> cover;
    for (const auto& tile : tiles) cover.insert(tile.begin(), tile.end());
    CHECK(cover.size() == total);
  }
  auto aligned = box_tiling(2, 3);
  std::set<std::vector<Element>> tiles;
  for (const auto& g : lattice_box(2, 0, 9)) tiles.insert(tile_of(aligned, g));
  CHECK(tiles.size() == 9);
}

TEST_CASE("invariance defects") {
  auto Z = GroupFamily::lattice(1);
  std::vector<Element> K{Z.vec({1}), Z.vec({-1})};
  CHECK(invariance_defect(Z, lattice_box(1, 0, 10), K) == Rational(1, 5));
  CHECK(invariance_defect(Z, lattice_box(1, 0, 10), {Z.vec({20})}) == Rational(2));
  CHECK(invariance_defect(Z, lattice_box(1, 0, 10), {Z.identity()}) == Rational(0));
  auto Z2 = GroupFamily::lattice(2);
  CHECK(invariance_defect(Z2, lattice_box(2, 0, 4), {Z2.vec({1, 0})}) == Rational(1, 2));
  auto C6 = GroupFamily::cyclic(6);
  CHECK(invariance_defect(C6, C6.elements(), C6.elements()) == Rational(0));
  CHECK_THROWS_AS(invariance_defect(Z, {}, K), Error);
}

TEST_CASE("union of tiles") {
  auto Z = GroupFamily::lattice(1);
  auto t = box_tiling(1, 10);
  CHECK(folner_union_of_tiles(t, {Z.vec({9}), Z.vec({10})}) == lattice_box(1, 0, 20));
  CHECK(folner_union_of_tiles(t, {Z.vec({3})}) == lattice_box(1, 0, 10));
  CHECK(folner_union_of_tiles(t, {}).empty());
}

TEST_CASE("finite tilings") {
  auto C6 = GroupFamily::cyclic(6);
  std::vector<Element> shape{C6.label("0"), C6.label("1")};
  auto t = finite_tiling(C6, {shape}, {{C6.label("0"), C6.label("2"), C6.label("4")}});
  CHECK(tile_of(t, C6.label("3")) == std::vector<Element>{C6.label("2"), C6.label("3")});
  CHECK(tiles_partition(t, C6.elements()));
  CHECK_THROWS_AS(finite_tiling(C6, {shape}, {{C6.label("0"), C6.label("1")}}), Error);
  CHECK_THROWS_AS(finite_tiling(C6, {{C6.label("1")}}, {C6.elements()}), Error);
  CHECK_THROWS_AS(finite_tiling(GroupFamily::lattice(1), {}, {}), Error);
  auto whole = whole_group_tiling(GroupFamily::symmetric(3));
  CHECK(tile_of(whole, whole.family.identity()).size() == 6);
}
