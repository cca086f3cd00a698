#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sofic/action.hpp"
#include "sofic/graph.hpp"
#include "sofic/group.hpp"
#include "sofic/perm.hpp"
#include "sofic/rational.hpp"

namespace sofic {

/// Normalized Hamming distance |{i : p(i) != q(i)}| / n.
Rational hamming(const Permutation& p, const Permutation& q);

/// (1/n) sum_s rho(f(s), g(s)) with rho = 0, 1/2, 1 for equal, adjacent and
/// distinct non-adjacent vertices of B (maps given as B vertex indices).
Rational rho_distance(const std::vector<std::size_t>& f, const std::vector<std::size_t>& g, const FiniteGraph& B);

using PhiTable = std::map<Element, Permutation>;

/// Finite witness (A = [0, carrier), phi, S, B, pi) of an orbit
/// approximation on the window W for the elements F.
struct OrbitCertificate {
  GroupFamily family;
  std::size_t carrier = 0;
  Rational epsilon{1};
  std::vector<Element> F;
  std::vector<Vertex> W;
  PhiTable phi;
  std::vector<std::uint32_t> S;  // sorted, distinct
  FiniteGraph B;
  /// pi[k][j]: index in B of pi_{S[k]}(W[j]).
  std::vector<std::vector<std::uint32_t>> pi;
};

struct SoficGroupCertificate {
  GroupFamily family;
  std::size_t carrier = 0;
  Rational epsilon{1};
  std::vector<Element> F;
  PhiTable phi;
};

struct Violation {
  std::string kind;
  std::map<std::string, std::string> fields;
};

struct VerifierReport {
  bool accepted = true;
  Rational worst_defect{0};
  Rational s_fraction{1};
  /// Smallest d(1, phi(g)) over nontrivial g (sofic group certificates only).
  Rational min_separation{1};
  std::vector<Violation> violations;
};

struct VerifyOptions {
  std::size_t jobs = 1;
  /// Stop recording after this many violations (the verdict is unaffected).
  std::size_t max_violations = 1000;
};

/// Looks up phi(g); throws Error(missing_phi_entry).
const Permutation& phi_at(const PhiTable& phi, const GroupFamily& family, const Element& g);

/// Structural checks shared by every consumer; throws
/// Error(malformed_certificate).
void check_well_formed(const OrbitCertificate& cert);

VerifierReport verify_orbit_certificate(const OrbitCertificate& cert, const GraphAction& action,
                                        const VerifyOptions& options = {});
VerifierReport verify_sofic_group_certificate(const SoficGroupCertificate& cert, const VerifyOptions& options = {});

/// max over g,h in F of hamming(phi(gh), phi(g) phi(h)).
Rational multiplicativity_defect(const GroupFamily& family, const PhiTable& phi, const std::vector<Element>& F);
/// max(multiplicativity defect, 1 - |S|/|A|): the smallest delta for which
/// the certificate is a (F, W, delta)-approximation up to strictness.
Rational measured_delta(const OrbitCertificate& cert);

/// Every element of F ∪ F·F ∪ {e}, sorted.
std::vector<Element> required_phi_domain(const GroupFamily& family, const std::vector<Element>& F);

}  // namespace sofic
