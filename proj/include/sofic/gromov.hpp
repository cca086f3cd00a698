#pragma once

#include <optional>
#include <vector>

#include "sofic/action.hpp"
#include "sofic/certificate.hpp"
#include "sofic/constructors.hpp"
#include "sofic/group.hpp"

namespace sofic {

/// Transitive action on G/H with basepoint H, given by its characteristic
/// pair (stabilizer H, edge set S).
struct PointedTransitiveAction {
  GroupFamily family;
  CharacteristicPair pair;

  GraphAction action() const { return coset_action(family, pair); }
  Vertex basepoint() const;
};

/// First g in F on which stabilizer or edge-set membership differ.
std::optional<Element> gh_mismatch(const PointedTransitiveAction& p1, const PointedTransitiveAction& p2,
                                   const std::vector<Element>& F);
inline bool gh_close(const PointedTransitiveAction& p1, const PointedTransitiveAction& p2,
                     const std::vector<Element>& F) {
  return !gh_mismatch(p1, p2, F);
}

/// σ(W)^{-1}σ(W) ∪ {σ(w)^{-1} g σ(α(g^{-1})w) : g in F, w and α(g^{-1})w in W}.
std::vector<Element> transfer_elements(const PointedTransitiveAction& p, const std::vector<Element>& F,
                                       const std::vector<Vertex>& W, const Section& section = nullptr);

/// Moves a certificate for p_n (on the window {α_n(σ(w))v_n}) to p: same
/// carrier, phi, S, B and epsilon, pi_s(w) = pi'_s(α_n(σ(w))v_n). Throws
/// Error(gh_closeness_violated) naming the first g of transfer_elements on
/// which p_n and p disagree.
OrbitCertificate transfer_certificate(const OrbitCertificate& cert, const PointedTransitiveAction& pn,
                                      const PointedTransitiveAction& p, const std::vector<Element>& F,
                                      const std::vector<Vertex>& W, const Section& section = nullptr);

}  // namespace sofic
