#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "sofic/graph.hpp"
#include "sofic/perm.hpp"

namespace sofic {

/// Partial isomorphism of a finite graph, as a map between vertex labels.
struct PartialIso {
  std::map<Vertex, Vertex> map;
};

/// B with g0 embedded and one automorphism of B per partial, extending it.
struct EppaSolution {
  FiniteGraph B;
  std::vector<std::size_t> embed;  // g0 vertex index -> B vertex index
  std::vector<Permutation> autos;
};

/// Throws Error(invalid_partial) unless p is an injective map between
/// vertices of g that preserves and reflects adjacency.
void check_partial(const FiniteGraph& g, const PartialIso& p);

/// Smallest extension found by exhaustive search. B has vertices "0".."n-1"
/// with g0 on the first |g0| (in g0's vertex order). Among solutions on n
/// vertices the edge set with the lexicographically smallest indicator
/// vector wins (pairs (a,b), a<b, in lexicographic order), then the first
/// automorphism tuple in lexicographic order. Throws
/// Error(eppa_cap_exhausted) if nothing fits in cap vertices.
EppaSolution eppa_extend(const FiniteGraph& g0, const std::vector<PartialIso>& partials, std::size_t cap = 12);

bool check_eppa_solution(const FiniteGraph& g0, const std::vector<PartialIso>& partials, const EppaSolution& sol);

}  // namespace sofic
