#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sofic/action.hpp"
#include "sofic/certificate.hpp"
#include "sofic/graph.hpp"
#include "sofic/group.hpp"
#include "sofic/perm.hpp"
#include "sofic/rational.hpp"

namespace sofic {

/// A syllable h_v: vertex index of the defining graph and a non-identity
/// element index of the vertex group table.
struct Syllable {
  std::uint32_t vertex = 0;
  std::size_t value = 0;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

/// Element of a graph product, always stored in normal form.
struct GPElement {
  std::vector<Syllable> syllables;
  friend auto operator<=>(const GPElement&, const GPElement&) = default;
  bool is_identity() const { return syllables.empty(); }
};

/// Graph product of copies of a finite group over a finite graph: vertex
/// groups commute exactly along edges. Normal form is the reduced word that
/// is lexicographically least in vertex index among its shuffles.
class GraphProduct {
 public:
  GraphProduct(FiniteGraph gamma, FiniteTable H);

  const FiniteGraph& graph() const { return gamma_; }
  const FiniteTable& vertex_group() const { return H_; }

  GPElement identity() const { return {}; }
  GPElement syllable(std::uint32_t vertex, std::size_t value) const;
  /// Reduces and normalizes an arbitrary word (identity letters allowed).
  GPElement from_word(const std::vector<Syllable>& word) const;
  GPElement mul(const GPElement& x, const GPElement& y) const;
  GPElement inv(const GPElement& x) const;
  std::string format(const GPElement& x) const;

 private:
  bool commute(std::uint32_t u, std::uint32_t v) const { return u != v && gamma_.adjacent(u, v); }
  void push(std::vector<Syllable>& word, Syllable s) const;
  GPElement normalize(std::vector<Syllable> reduced) const;

  FiniteGraph gamma_;
  FiniteTable H_;
};

/// Element g·σ of K^{⊕n} ⋊ Sym(n) for K a graph product; the law is
/// (g1σ1)(g2σ2) = (a ↦ g1(a)·g2(σ1^{-1}(a))) · σ1σ2.
struct WreathElement {
  std::vector<GPElement> coords;
  Permutation perm;
  friend bool operator==(const WreathElement&, const WreathElement&) = default;
};

WreathElement wreath_identity(std::size_t n);
WreathElement wreath_mul(const GraphProduct& K, const WreathElement& x, const WreathElement& y);
WreathElement wreath_inv(const GraphProduct& K, const WreathElement& x);
/// (1/n)|{a : σ1(a) != σ2(a) or g1(σ1 a) != g2(σ2 a)}|; size_mismatch on
/// different carriers.
Rational dGA(const WreathElement& x, const WreathElement& y);

/// h·g in (*^Γ H) ⋊ G, with h over a finite window of Γ.
struct WreathWord {
  GPElement h;
  Element g;
};

/// Graph products over the certificate window W, over W ∪ α(F)W (where
/// products of corpus elements live) and over B.
struct WreathContext {
  const OrbitCertificate& cert;
  const GraphAction& action;
  GraphProduct window_product;
  GraphProduct extended_product;
  GraphProduct target_product;
  std::vector<std::int64_t> window_slot;  // extended index -> W index or -1

  WreathContext(const OrbitCertificate& cert, const GraphAction& action, const FiniteTable& H);

  /// Product in (*^Γ H) ⋊ G of words over the extended window; throws
  /// Error(support_escapes_window) if α(g1) moves the support of h2 outside.
  WreathWord mul(const WreathWord& x, const WreathWord& y) const;
  /// Lifts an element over W into the extended window.
  GPElement lift(const GPElement& h) const;
};

/// ρ(h·g): coordinate s is the image of the W-truncation of h under the
/// embedding induced by π_s for s in S, identity off S; perm is φ(g).
WreathElement rho_embed(const WreathContext& ctx, const WreathWord& x);

struct WreathCheckOptions {
  std::size_t max_syllables = 2;  // exhaustive corpus: words over W of this length
  std::size_t samples = 0;        // extra random pairs with words of up to 4 syllables
  std::uint64_t seed = 0;
};

struct WreathReport {
  std::size_t pairs = 0;
  std::size_t skipped = 0;  // pairs whose product has support outside W
  Rational delta{0};
  Rational max_defect{0};
  Rational bound{0};  // 5·delta
  bool bound_holds = true;
  Rational min_separation{1};
  Rational expected_separation{1};  // |S|/|A|
  bool separation_holds = true;
  /// A pair attaining max_defect, formatted.
  std::string worst_pair;
};

/// Exhaustive over h-parts with at most max_syllables syllables on W and
/// g-parts in F (plus the seeded samples), keeping the pairs whose product
/// is again supported in W: max dGA(ρ(xy), ρ(x)ρ(y)) against
/// 5·measured_delta and min dGA(ρ(h), 1) over non-trivial h against |S|/|A|.
WreathReport check_wreath_embedding(const OrbitCertificate& cert, const GraphAction& action, const FiniteTable& H,
                                    const WreathCheckOptions& options = {});

}  // namespace sofic
