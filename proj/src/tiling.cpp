#include "sofic/tiling.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sofic/error.hpp"

namespace sofic {

std::vector<Element> lattice_box(std::size_t d, std::int64_t lo, std::size_t side) {
  std::vector<Element> out;
  if (side == 0) return out;
  std::vector<std::int64_t> v(d, lo);
  const std::int64_t hi = lo + static_cast<std::int64_t>(side);
  while (true) {
    out.push_back(Element{v, {}});
    std::size_t i = d;
    while (i > 0) {
      --i;
      if (++v[i] < hi) break;
      v[i] = lo;
      if (i == 0) {
        std::sort(out.begin(), out.end());
        return out;
      }
    }
    if (d == 0) return out;
  }
}

Tiling box_tiling(std::size_t d, std::size_t L) {
  if (L == 0) throw Error(ErrorKind::malformed_input, "box side must be at least 1");
  auto family = GroupFamily::lattice(d);
  return Tiling{family, TilingKind::box, L, {lattice_box(d, 0, L)}, {}};
}

Tiling finite_tiling(const GroupFamily& family, std::vector<std::vector<Element>> shapes,
                     std::vector<std::vector<Element>> centers) {
  if (!family.order()) throw Error(ErrorKind::unsupported_family, "finite tilings need a finite family");
  if (shapes.size() != centers.size()) throw Error(ErrorKind::malformed_input, "need one center list per shape");
  std::map<Element, int> hits;
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    auto& shape = shapes[i];
    std::sort(shape.begin(), shape.end());
    if (!std::binary_search(shape.begin(), shape.end(), family.identity()))
      throw Error(ErrorKind::malformed_input, "tile shape does not contain the identity");
    for (const auto& c : centers[i])
      for (const auto& s : shape) ++hits[family.mul(s, c)];
  }
  for (const auto& g : family.elements())
    if (hits[g] != 1)
      throw Error(ErrorKind::malformed_input, "tiles cover " + family.format(g) + " " + std::to_string(hits[g]) + " times");
  return Tiling{family, TilingKind::finite, 0, std::move(shapes), std::move(centers)};
}

Tiling whole_group_tiling(const GroupFamily& family) {
  return finite_tiling(family, {family.elements()}, {{family.identity()}});
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

std::vector<Element> tile_of(const Tiling& t, const Element& g) {
  t.family.require(g);
  if (t.kind == TilingKind::box) {
    const auto L = static_cast<std::int64_t>(t.side);
    std::vector<Element> out;
    Element corner = g;
    for (auto& x : corner.word) x = floor_div(x, L) * L;
    for (const auto& s : t.shapes[0]) out.push_back(t.family.mul(s, corner));
    std::sort(out.begin(), out.end());
    return out;
  }
  for (std::size_t i = 0; i < t.shapes.size(); ++i)
    for (const auto& c : t.centers[i]) {
      std::vector<Element> tile;
      for (const auto& s : t.shapes[i]) tile.push_back(t.family.mul(s, c));
      std::sort(tile.begin(), tile.end());
      if (std::binary_search(tile.begin(), tile.end(), g)) return tile;
    }
  throw Error(ErrorKind::malformed_input, "no tile contains " + t.family.format(g));
}

Rational invariance_defect(const GroupFamily& family, const std::vector<Element>& shape, const std::vector<Element>& K) {
  if (shape.empty()) throw Error(ErrorKind::malformed_input, "invariance defect of an empty set");
  std::set<Element> S(shape.begin(), shape.end());
  Rational worst(0);
  for (const auto& k : K) {
    std::set<Element> kS;
    for (const auto& s : S) kS.insert(family.mul(k, s));
    std::size_t sym = 0;
    for (const auto& x : kS) sym += !S.count(x);
    for (const auto& x : S) sym += !kS.count(x);
    worst = std::max(worst, ratio(sym, S.size()));
  }
  return worst;
}

std::vector<Element> folner_union_of_tiles(const Tiling& t, const std::vector<Element>& B) {
  std::set<Element> A;
  for (const auto& b : B) {
    if (A.count(b)) continue;
    auto tile = tile_of(t, b);
    A.insert(tile.begin(), tile.end());
  }
  return {A.begin(), A.end()};
}

bool tiles_partition(const Tiling& t, const std::vector<Element>& window) {
  std::map<Element, int> cover;
  std::set<std::vector<Element>> tiles;
  for (const auto& g : window) tiles.insert(tile_of(t, g));
  for (const auto& tile : tiles)
    for (const auto& x : tile) ++cover[x];
  for (const auto& g : window)
    if (cover[g] != 1) return false;
  return true;
}

}  // namespace sofic
