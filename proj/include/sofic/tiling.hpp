#pragma once

#include <cstddef>
#include <vector>

#include "sofic/group.hpp"
#include "sofic/rational.hpp"

namespace sofic {

enum class TilingKind { box, finite };

/// Partition of G into tiles S·c. Box tilings of Z^d use the single shape
/// [0,L)^d with centers L·Z^d; finite tilings list their centers.
struct Tiling {
  GroupFamily family;
  TilingKind kind = TilingKind::box;
  std::size_t side = 1;
  std::vector<std::vector<Element>> shapes;   // sorted, each contains e
  std::vector<std::vector<Element>> centers;  // finite tilings only, per shape
};

Tiling box_tiling(std::size_t d, std::size_t L);
/// Checks that the translates S·c partition the finite group exactly
/// (Error(malformed_input) otherwise).
Tiling finite_tiling(const GroupFamily& family, std::vector<std::vector<Element>> shapes,
                     std::vector<std::vector<Element>> centers);
/// The trivial tiling of a finite group by one tile.
Tiling whole_group_tiling(const GroupFamily& family);

/// The tile containing g, sorted.
std::vector<Element> tile_of(const Tiling& t, const Element& g);

/// max over k in K of |kS △ S| / |S|.
Rational invariance_defect(const GroupFamily& family, const std::vector<Element>& shape, const std::vector<Element>& K);

/// Union of all tiles meeting B, sorted.
std::vector<Element> folner_union_of_tiles(const Tiling& t, const std::vector<Element>& B);

/// Every element of the window lies in exactly one tile (checked by
/// enumerating the tiles that meet the window).
bool tiles_partition(const Tiling& t, const std::vector<Element>& window);

/// The box [lo, lo+side)^d in Z^d, sorted.
std::vector<Element> lattice_box(std::size_t d, std::int64_t lo, std::size_t side);

}  // namespace sofic
