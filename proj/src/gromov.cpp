#include "sofic/gromov.hpp"

#include <algorithm>
#include <set>

#include "sofic/error.hpp"

namespace sofic {

Vertex PointedTransitiveAction::basepoint() const { return family.format(pair.H.coset_rep(family, family.identity())); }

std::optional<Element> gh_mismatch(const PointedTransitiveAction& p1, const PointedTransitiveAction& p2,
                                   const std::vector<Element>& F) {
  if (!(p1.family == p2.family)) throw Error(ErrorKind::family_mismatch, "pointed actions of different families");
  const auto& G = p1.family;
  for (const auto& g : F) {
    if (p1.pair.H.contains(G, g) != p2.pair.H.contains(G, g)) return g;
    if (p1.pair.in_S(G, g) != p2.pair.in_S(G, g)) return g;
  }
  return std::nullopt;
}

namespace {

std::vector<Element> sections(const PointedTransitiveAction& p, const std::vector<Vertex>& W, const Section& section) {
  const auto& G = p.family;
  auto a = p.action();
  auto base = p.basepoint();
  std::vector<Element> out;
  for (const auto& w : W) {
    Element x = section ? section(w) : p.pair.H.coset_rep(G, G.parse(w));
    if (a.apply(x, base) != a.graph.canonical(w))
      throw Error(ErrorKind::malformed_input, "section value " + G.format(x) + " does not map the basepoint to '" + w + "'");
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace

std::vector<Element> transfer_elements(const PointedTransitiveAction& p, const std::vector<Element>& F,
                                       const std::vector<Vertex>& W, const Section& section) {
  const auto& G = p.family;
  auto a = p.action();
  auto sig = sections(p, W, section);
  std::vector<Vertex> Wc;
  for (const auto& w : W) Wc.push_back(a.graph.canonical(w));
  std::set<Element> out;
  for (const auto& x : sig)
    for (const auto& y : sig) out.insert(G.mul(G.inv(x), y));
  for (const auto& g : F)
    for (std::size_t i = 0; i < Wc.size(); ++i) {
      auto moved = a.apply(G.inv(g), Wc[i]);
      auto it = std::find(Wc.begin(), Wc.end(), moved);
      if (it == Wc.end()) continue;
      out.insert(G.mul(G.mul(G.inv(sig[i]), g), sig[static_cast<std::size_t>(it - Wc.begin())]));
    }
  return {out.begin(), out.end()};
}

OrbitCertificate transfer_certificate(const OrbitCertificate& cert, const PointedTransitiveAction& pn,
                                      const PointedTransitiveAction& p, const std::vector<Element>& F,
                                      const std::vector<Vertex>& W, const Section& section) {
  const auto& G = p.family;
  if (!(cert.family == G) || !(pn.family == G))
    throw Error(ErrorKind::family_mismatch, "certificate and pointed actions must share a family");
  check_well_formed(cert);
  auto Fp = transfer_elements(p, F, W, section);
  if (auto g = gh_mismatch(pn, p, Fp))
    throw Error(ErrorKind::gh_closeness_violated,
                "pointed actions disagree at " + G.format(*g) + " (stabilizer " +
                    (pn.pair.H.contains(G, *g) ? "yes" : "no") + " vs " + (p.pair.H.contains(G, *g) ? "yes" : "no") +
                    ", edge " + (pn.pair.in_S(G, *g) ? "yes" : "no") + " vs " + (p.pair.in_S(G, *g) ? "yes" : "no") +
                    ")");
  auto sig = sections(p, W, section);
  auto an = pn.action();
  auto base_n = pn.basepoint();
  std::vector<std::size_t> cols;
  for (const auto& x : sig) {
    auto v = an.apply(x, base_n);
    auto it = std::find(cert.W.begin(), cert.W.end(), v);
    if (it == cert.W.end())
      throw Error(ErrorKind::malformed_certificate, "source certificate window lacks '" + v + "'");
    cols.push_back(static_cast<std::size_t>(it - cert.W.begin()));
  }
  OrbitCertificate out = cert;
  out.F = F;
  out.W.clear();
  auto a = p.action();
  for (const auto& w : W) out.W.push_back(a.graph.canonical(w));
  for (auto& row : out.pi) {
    std::vector<std::uint32_t> r;
    for (auto j : cols) r.push_back(row[j]);
    row = std::move(r);
  }
  for (const auto& g : required_phi_domain(G, F)) phi_at(cert.phi, G, g);
  return out;
}

}  // namespace sofic
