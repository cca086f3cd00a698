#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "sofic/action.hpp"
#include "sofic/certificate.hpp"
#include "sofic/eppa.hpp"
#include "sofic/group.hpp"

namespace sofic {

/// Følner construction on A ⊂ G: phi(g) extends a ↦ ga (leftover points
/// matched in sorted order), S = {s : g^{±1}s ∈ A for g in F},
/// B = window on α(A^{-1})W and pi_s(v) = α(s^{-1})v. Throws
/// Error(folner_defect_too_large) with the measured numbers if the result
/// would not verify at epsilon.
OrbitCertificate build_folner(const GraphAction& action, const std::vector<Element>& A, const std::vector<Element>& F,
                              const std::vector<Vertex>& W, const Rational& epsilon);

/// max over g in F·F of |A △ gA| / |A|.
Rational folner_defect(const GroupFamily& family, const std::vector<Element>& A, const std::vector<Element>& F);

/// Action on a finite graph: carrier Q = <images of F> ≤ Aut(graph),
/// phi(g) = left multiplication, S = Q, B = the graph, pi_s(v) = s^{-1}(v).
/// Throws Error(size_cap_exceeded) if |Q| exceeds group_cap.
OrbitCertificate build_finite_action(const GraphAction& action, const std::vector<Element>& F,
                                     const std::vector<Vertex>& W, const Rational& epsilon,
                                     std::size_t group_cap = 5040);

struct FreeBuildInfo {
  std::vector<Vertex> extended_window;  // W'
  EppaSolution eppa;
};

/// Free group construction through EPPA on the W'-window; carrier Aut(B),
/// phi(g)s = psi(g)∘s, S = Aut(B), pi_s(v) = s^{-1}(pi(v)).
OrbitCertificate build_free(const GraphAction& action, const std::vector<Element>& F, const std::vector<Vertex>& W,
                            const Rational& epsilon, std::size_t eppa_cap = 12, std::size_t aut_cap = 10,
                            FreeBuildInfo* info = nullptr);

/// W ∪ {α(u)v : v in W, u a suffix of some f in F^{-1}}.
std::vector<Vertex> free_extended_window(const GraphAction& action, const std::vector<Element>& F,
                                         const std::vector<Vertex>& W);

/// Left regular representation of a finite family (carrier |G|, indexed by
/// the sorted element list), defined on every element.
SoficGroupCertificate regular_representation(const GroupFamily& family, const std::vector<Element>& F,
                                             const Rational& epsilon);
/// Z (lattice of dimension 1 or free rank 1) acting on Z/n by shifts,
/// defined on the given domain.
SoficGroupCertificate cyclic_shift_representation(const GroupFamily& family, std::size_t n,
                                                  const std::vector<Element>& F, const std::vector<Element>& domain,
                                                  const Rational& epsilon);

using Section = std::function<Element(const Vertex&)>;

/// F' = F ∪ H ∪ H(σ(W) ∪ σ(W)^{-1})H.
std::vector<Element> finite_stabilizer_generators(const GroupFamily& family, const Subgroup& H,
                                                  const std::vector<Element>& F, const std::vector<Element>& sigmaW);
/// Every element whose phi entry the construction reads: F'·F' and F'^{-1}.
std::vector<Element> finite_stabilizer_domain(const GroupFamily& family, const Subgroup& H,
                                              const std::vector<Element>& F, const std::vector<Element>& sigmaW);

struct FiniteStabilizerInfo {
  std::vector<std::uint32_t> S_prime;
  std::size_t classes = 0;
};

/// Coset construction for a transitive action with finite stabilizer H.
/// The action must be a coset action (vertices are cosets gH); section
/// defaults to the canonical coset representative.
OrbitCertificate build_finite_stabilizer(const GraphAction& action, const CharacteristicPair& pair,
                                         const SoficGroupCertificate& base, const std::vector<Element>& F,
                                         const std::vector<Vertex>& W, const Rational& epsilon,
                                         const Section& section = nullptr, FiniteStabilizerInfo* info = nullptr);

/// Carrier A1×A2 (index a1·|A2| + a2), phi coordinatewise, S = S1×S2,
/// B = product(B1, B2, rule), epsilon = 1-(1-ε1)(1-ε2).
OrbitCertificate combine_product(const OrbitCertificate& c1, const OrbitCertificate& c2, const ProductRule& rule);
/// As combine_product with B the coproduct and W the tagged union.
OrbitCertificate combine_coproduct(const OrbitCertificate& c1, const OrbitCertificate& c2);

OrbitCertificate transform_complement(const OrbitCertificate& c);
enum class VertexMode { edgeless, complete };
OrbitCertificate transform_vertex(const OrbitCertificate& c, VertexMode mode);
/// Certificate for the pulled-back action on new_F; needs hom(new_F) ⊆ c.F.
OrbitCertificate transform_precompose(const OrbitCertificate& c, const Homomorphism& hom,
                                      const std::vector<Element>& new_F);
OrbitCertificate transform_restrict(const OrbitCertificate& c, const std::vector<Vertex>& W0);

}  // namespace sofic
