#include "sofic/certificate.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <thread>

#include "sofic/error.hpp"

namespace sofic {

Rational hamming(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size())
    throw Error(ErrorKind::size_mismatch,
                "hamming on degrees " + std::to_string(p.size()) + " and " + std::to_string(q.size()));
  if (p.size() == 0) return Rational(0);
  std::size_t diff = 0;
  for (std::size_t i = 0; i < p.size(); ++i) diff += p[i] != q[i];
  return ratio(diff, p.size());
}

Rational rho_distance(const std::vector<std::size_t>& f, const std::vector<std::size_t>& g, const FiniteGraph& B) {
  if (f.size() != g.size())
    throw Error(ErrorKind::size_mismatch, "rho on maps of size " + std::to_string(f.size()) + " and " + std::to_string(g.size()));
  if (f.empty()) return Rational(0);
  std::size_t halves = 0;
  for (std::size_t s = 0; s < f.size(); ++s) {
    if (f[s] == g[s]) continue;
    halves += B.adjacent(f[s], g[s]) ? 1 : 2;
  }
  return ratio(halves, 2 * f.size());
}

const Permutation& phi_at(const PhiTable& phi, const GroupFamily& family, const Element& g) {
  auto it = phi.find(g);
  if (it == phi.end()) throw Error(ErrorKind::missing_phi_entry, "phi has no entry for " + family.format(g));
  return it->second;
}

std::vector<Element> required_phi_domain(const GroupFamily& family, const std::vector<Element>& F) {
  std::set<Element> dom(F.begin(), F.end());
  dom.insert(family.identity());
  for (const auto& g : F)
    for (const auto& h : F) dom.insert(family.mul(g, h));
  return {dom.begin(), dom.end()};
}

void check_well_formed(const OrbitCertificate& cert) {
  auto fail = [](const std::string& msg) { throw Error(ErrorKind::malformed_certificate, msg); };
  if (cert.carrier == 0) fail("carrier must be nonempty");
  if (cert.epsilon <= Rational(0) || cert.epsilon > Rational(1)) fail("epsilon must lie in (0,1]");
  for (const auto& g : cert.F)
    if (!cert.family.belongs(g)) fail("F contains an element outside " + cert.family.describe());
  for (const auto& [g, p] : cert.phi) {
    if (!cert.family.belongs(g)) fail("phi is keyed by an element outside " + cert.family.describe());
    if (p.size() != cert.carrier) fail("phi(" + cert.family.format(g) + ") has the wrong degree");
  }
  for (std::size_t k = 0; k < cert.S.size(); ++k) {
    if (cert.S[k] >= cert.carrier) fail("S contains a point outside the carrier");
    if (k && cert.S[k] <= cert.S[k - 1]) fail("S must be sorted without repetition");
  }
  if (cert.pi.size() != cert.S.size()) fail("pi needs exactly one row per point of S");
  for (const auto& row : cert.pi) {
    if (row.size() != cert.W.size()) fail("every pi row needs one image per window vertex");
    for (auto b : row)
      if (b >= cert.B.size()) fail("pi maps into a vertex outside B");
  }
}

Rational multiplicativity_defect(const GroupFamily& family, const PhiTable& phi, const std::vector<Element>& F) {
  Rational worst(0);
  for (const auto& g : F)
    for (const auto& h : F) {
      auto d = hamming(phi_at(phi, family, family.mul(g, h)), phi_at(phi, family, g).compose(phi_at(phi, family, h)));
      worst = std::max(worst, d);
    }
  return worst;
}

Rational measured_delta(const OrbitCertificate& cert) {
  return std::max(multiplicativity_defect(cert.family, cert.phi, cert.F), Rational(1) - ratio(cert.S.size(), cert.carrier));
}

namespace {

void record(VerifierReport& r, const VerifyOptions& o, Violation v) {
  r.accepted = false;
  if (r.violations.size() < o.max_violations) r.violations.push_back(std::move(v));
}

// Runs body(lo, hi, sink) on contiguous chunks of [0, n) and appends the
// per-chunk violations in chunk order, so the output is schedule-independent.
template <class Body>
std::vector<Violation> parallel_chunks(std::size_t n, std::size_t jobs, Body body) {
  jobs = std::max<std::size_t>(1, std::min(jobs, n));
  std::vector<std::vector<Violation>> parts(jobs);
  if (jobs == 1) {
    body(0, n, parts[0]);
    return std::move(parts[0]);
  }
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < jobs; ++t)
    threads.emplace_back([&, t] { body(n * t / jobs, n * (t + 1) / jobs, parts[t]); });
  for (auto& th : threads) th.join();
  std::vector<Violation> out;
  for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  return out;
}

void check_multiplicativity(const GroupFamily& family, const PhiTable& phi, const std::vector<Element>& F,
                            const Rational& epsilon, VerifierReport& report, const VerifyOptions& options) {
  for (const auto& g : F)
    for (const auto& h : F) {
      auto d = hamming(phi_at(phi, family, family.mul(g, h)), phi_at(phi, family, g).compose(phi_at(phi, family, h)));
      report.worst_defect = std::max(report.worst_defect, d);
      if (d >= epsilon)
        record(report, options,
               {"multiplicativity", {{"g", family.format(g)}, {"h", family.format(h)}, {"defect", to_string(d)}}});
    }
}

}  // namespace

VerifierReport verify_orbit_certificate(const OrbitCertificate& cert, const GraphAction& action,
                                        const VerifyOptions& options) {
  check_well_formed(cert);
  if (!(cert.family == action.family))
    throw Error(ErrorKind::family_mismatch,
                "certificate family " + cert.family.describe() + " differs from action family " + action.family.describe());
  const auto& G = cert.family;
  for (const auto& g : required_phi_domain(G, cert.F)) phi_at(cert.phi, G, g);

  VerifierReport report;
  report.s_fraction = ratio(cert.S.size(), cert.carrier);

  if (!phi_at(cert.phi, G, G.identity()).is_identity()) record(report, options, {"unital", {}});
  check_multiplicativity(G, cert.phi, cert.F, cert.epsilon, report, options);
  if (!(report.s_fraction > Rational(1) - cert.epsilon))
    record(report, options,
           {"s-size", {{"size", std::to_string(cert.S.size())}, {"carrier", std::to_string(cert.carrier)}}});

  FiniteGraph Wg = window(action.graph, cert.W);
  const std::size_t nw = cert.W.size();

  std::vector<std::optional<std::size_t>> pos(cert.carrier);
  for (std::size_t k = 0; k < cert.S.size(); ++k) pos[cert.S[k]] = k;

  struct Shift {
    std::string g;
    const Permutation* p;
    std::vector<std::optional<std::size_t>> pre;  // index of alpha(g^{-1}) W[j] in W
  };
  std::vector<Shift> shifts;
  for (const auto& g : cert.F) {
    Shift sh{G.format(g), &phi_at(cert.phi, G, g), {}};
    auto ginv = G.inv(g);
    for (std::size_t j = 0; j < nw; ++j) sh.pre.push_back(Wg.index_of(action.apply(ginv, Wg.vertex(j))));
    shifts.push_back(std::move(sh));
  }

  auto scan = [&](std::size_t lo, std::size_t hi, std::vector<Violation>& sink) {
    std::vector<std::size_t> m(nw);
    for (std::size_t k = lo; k < hi; ++k) {
      const auto s = cert.S[k];
      for (std::size_t j = 0; j < nw; ++j) m[j] = cert.pi[k][j];
      if (!is_graph_embedding(m, Wg, cert.B)) sink.push_back({"embedding", {{"s", std::to_string(s)}}});
      for (const auto& sh : shifts) {
        auto t = (*sh.p)[s];
        if (!pos[t]) continue;
        const auto& row_t = cert.pi[*pos[t]];
        for (std::size_t j = 0; j < nw; ++j) {
          if (!sh.pre[j]) continue;
          if (row_t[j] != cert.pi[k][*sh.pre[j]])
            sink.push_back({"equivariance", {{"g", sh.g}, {"s", std::to_string(s)}, {"v", Wg.vertex(j)}}});
        }
      }
    }
  };
  for (auto& v : parallel_chunks(cert.S.size(), options.jobs, scan)) record(report, options, std::move(v));
  return report;
}

VerifierReport verify_sofic_group_certificate(const SoficGroupCertificate& cert, const VerifyOptions& options) {
  if (cert.carrier == 0) throw Error(ErrorKind::malformed_certificate, "carrier must be nonempty");
  if (cert.epsilon <= Rational(0) || cert.epsilon > Rational(1))
    throw Error(ErrorKind::malformed_certificate, "epsilon must lie in (0,1]");
  for (const auto& [g, p] : cert.phi)
    if (p.size() != cert.carrier) throw Error(ErrorKind::malformed_certificate, "phi entry has the wrong degree");
  const auto& G = cert.family;
  for (const auto& g : required_phi_domain(G, cert.F)) phi_at(cert.phi, G, g);

  VerifierReport report;
  if (!phi_at(cert.phi, G, G.identity()).is_identity()) record(report, options, {"unital", {}});
  check_multiplicativity(G, cert.phi, cert.F, cert.epsilon, report, options);
  const auto id = Permutation::identity(cert.carrier);
  for (const auto& g : cert.F) {
    if (G.is_identity(g)) continue;
    auto d = hamming(id, phi_at(cert.phi, G, g));
    report.min_separation = std::min(report.min_separation, d);
    if (!(d > Rational(1) - cert.epsilon))
      record(report, options, {"separation", {{"g", G.format(g)}, {"distance", to_string(d)}}});
  }
  return report;
}

}  // namespace sofic
