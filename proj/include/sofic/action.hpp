#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sofic/graph.hpp"
#include "sofic/group.hpp"
#include "sofic/perm.hpp"

namespace sofic {

/// An action of a group family on a graph oracle. apply(g, v) returns the
/// canonical label of g.v.
struct GraphAction {
  GroupFamily family;
  GraphOracle graph;
  std::function<Vertex(const Element&, const Vertex&)> apply;
  std::string description;

  Vertex operator()(const Element& g, const Vertex& v) const { return apply(g, v); }
};

struct ActionViolation {
  std::string kind;  // "identity", "compatibility" or "adjacency"
  std::vector<std::string> elements;
  std::vector<Vertex> vertices;
};

/// Checks apply(e,v)=v, apply(gh,v)=apply(g,apply(h,v)) and preservation of
/// adjacency (both ways) for g,h in F and v,w in W.
std::vector<ActionViolation> check_action_on_window(const GraphAction& a, const std::vector<Element>& F,
                                                    const std::vector<Vertex>& W);

GraphAction trivial_action(const GroupFamily& family, const GraphOracle& graph);
/// Left multiplication on the Cayley graph with the given connection set.
GraphAction left_multiplication_action(const GroupFamily& family, const std::vector<Element>& conn);

/// Action on a finite graph given by permutations of its vertex indices:
/// one per generator a_i (free), one per basis vector e_i (lattice, must
/// commute) or one per table element (finite, must be a homomorphism).
/// Every image must be an automorphism.
GraphAction generator_image_action(const GroupFamily& family, const FiniteGraph& graph,
                                   const std::vector<Permutation>& images);

/// (H, S) with S a union of double cosets H r H.
struct CharacteristicPair {
  Subgroup H;
  std::vector<Element> reps;

  bool in_S(const GroupFamily& family, const Element& g) const;
};

/// Checks S symmetric, S ∩ H = ∅ and HSH ⊆ S on the sample; throws
/// Error(pair_invariant_violation) naming the first failure.
void check_pair(const GroupFamily& family, const CharacteristicPair& pair, const std::vector<Element>& sample);

/// Left multiplication on the coset graph G/H, gH ~ kH iff g^{-1}k ∈ S.
/// Vertices are labelled by formatted canonical coset representatives; the
/// basepoint H is the label of the identity.
GraphAction coset_action(const GroupFamily& family, const CharacteristicPair& pair);

/// Recovers (Stab(base), {g : base ~ g.base}) membership on the sample and
/// reports whether it agrees with the pair.
bool pair_matches_action(const GraphAction& a, const Vertex& base, const CharacteristicPair& pair,
                         const std::vector<Element>& sample);

GraphAction product_action(const GraphAction& a1, const GraphAction& a2, const ProductRule& rule);
GraphAction coproduct_action(const GraphAction& a1, const GraphAction& a2);
/// Action on the induced subgraph of an invariant vertex set; invariance is
/// checked for g in F and v in W (Error(invariance_violation)).
GraphAction restrict_action(const GraphAction& a, std::function<bool(const Vertex&)> keep,
                            const std::vector<Element>& F, const std::vector<Vertex>& W);
GraphAction precompose(const GraphAction& a, const Homomorphism& hom);
GraphAction complement_action(const GraphAction& a);
GraphAction edgeless_action(const GraphAction& a);
GraphAction complete_action(const GraphAction& a);

}  // namespace sofic
