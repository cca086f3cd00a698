#include "sofic/constructors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "sofic/error.hpp"
#include "sofic/labels.hpp"
#include "sofic/tiling.hpp"

namespace sofic {

namespace {

std::vector<Vertex> canonical_labels(const GraphOracle& o, const std::vector<Vertex>& W) {
  std::vector<Vertex> out;
  for (const auto& v : W) {
    if (!o.contains(v)) throw Error(ErrorKind::window_failure, "'" + v + "' is not a vertex of " + o.description);
    out.push_back(o.canonical ? o.canonical(v) : v);
  }
  return out;
}

std::vector<Element> sorted_unique(std::vector<Element> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

void require_valid_epsilon(const Rational& epsilon) {
  if (epsilon <= Rational(0) || epsilon > Rational(1))
    throw Error(ErrorKind::malformed_input, "epsilon must lie in (0,1], got " + to_string(epsilon));
}

}  // namespace

Rational folner_defect(const GroupFamily& family, const std::vector<Element>& A, const std::vector<Element>& F) {
  std::set<Element> FF;
  for (const auto& g : F)
    for (const auto& h : F) FF.insert(family.mul(g, h));
  return invariance_defect(family, A, {FF.begin(), FF.end()});
}

OrbitCertificate build_folner(const GraphAction& action, const std::vector<Element>& A_in, const std::vector<Element>& F,
                              const std::vector<Vertex>& W, const Rational& epsilon) {
  const auto& G = action.family;
  require_valid_epsilon(epsilon);
  if (!G.is_amenable())
    throw Error(ErrorKind::unsupported_family, "Følner construction needs an amenable family, got " + G.describe());
  for (const auto& g : F) G.require(g);
  auto A = sorted_unique(A_in);
  if (A.empty()) throw Error(ErrorKind::malformed_input, "Følner set is empty");
  std::map<Element, std::uint32_t> idx;
  for (std::size_t i = 0; i < A.size(); ++i) idx.emplace(A[i], static_cast<std::uint32_t>(i));
  const std::size_t n = A.size();

  OrbitCertificate c{G, n, epsilon, F, canonical_labels(action.graph, W), {}, {}, FiniteGraph(), {}};
  for (const auto& g : required_phi_domain(G, F)) {
    std::vector<std::uint32_t> img(n, UINT32_MAX);
    std::vector<char> hit(n, 0);
    std::vector<std::uint32_t> free_src;
    for (std::size_t a = 0; a < n; ++a) {
      auto it = idx.find(G.mul(g, A[a]));
      if (it == idx.end()) {
        free_src.push_back(static_cast<std::uint32_t>(a));
      } else {
        img[a] = it->second;
        hit[it->second] = 1;
      }
    }
    std::size_t k = 0;
    for (std::uint32_t t = 0; t < n; ++t)
      if (!hit[t]) img[free_src[k++]] = t;
    c.phi.emplace(g, Permutation(std::move(img)));
  }

  for (std::size_t s = 0; s < n; ++s) {
    bool inside = true;
    for (const auto& g : F)
      inside = inside && idx.count(G.mul(g, A[s])) && idx.count(G.mul(G.inv(g), A[s]));
    if (inside) c.S.push_back(static_cast<std::uint32_t>(s));
  }

  std::vector<Element> inverses;
  for (const auto& a : A) inverses.push_back(G.inv(a));
  std::set<Vertex> vb;
  for (const auto& ai : inverses)
    for (const auto& w : c.W) vb.insert(action.apply(ai, w));
  c.B = window(action.graph, {vb.begin(), vb.end()});
  for (auto s : c.S) {
    std::vector<std::uint32_t> row;
    for (const auto& w : c.W) row.push_back(static_cast<std::uint32_t>(c.B.at(action.apply(inverses[s], w))));
    c.pi.push_back(std::move(row));
  }

  auto defect = multiplicativity_defect(G, c.phi, F);
  auto frac = ratio(c.S.size(), n);
  if (defect >= epsilon || !(frac > Rational(1) - epsilon))
    throw Error(ErrorKind::folner_defect_too_large,
                "measured multiplicativity defect " + to_string(defect) + ", |S|/|A| = " + to_string(frac) +
                    ", max |A△gA|/|A| over F·F = " + to_string(folner_defect(G, A, F)) + " at epsilon " +
                    to_string(epsilon));
  return c;
}

OrbitCertificate build_finite_action(const GraphAction& action, const std::vector<Element>& F,
                                     const std::vector<Vertex>& W, const Rational& epsilon, std::size_t group_cap) {
  const auto& G = action.family;
  require_valid_epsilon(epsilon);
  if (!action.graph.is_finite())
    throw Error(ErrorKind::unsupported_family, "finite-graph construction needs a finite graph");
  FiniteGraph graph = window(action.graph, action.graph.enumerate());
  const std::size_t nv = graph.size();
  auto image = [&](const Element& g) {
    std::vector<std::uint32_t> p(nv);
    for (std::size_t i = 0; i < nv; ++i) p[i] = static_cast<std::uint32_t>(graph.at(action.apply(g, graph.vertex(i))));
    return Permutation(std::move(p));
  };
  std::set<Permutation> gens;
  for (const auto& g : F) gens.insert(image(g));
  std::set<Permutation> Q{Permutation::identity(nv)};
  std::vector<Permutation> frontier{Permutation::identity(nv)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& q : frontier)
      for (const auto& p : gens) {
        auto r = p.compose(q);
        if (Q.insert(r).second) {
          if (Q.size() > group_cap)
            throw Error(ErrorKind::size_cap_exceeded,
                        "group generated by the image of F exceeds " + std::to_string(group_cap) + " elements");
          next.push_back(std::move(r));
        }
      }
    frontier = std::move(next);
  }
  std::vector<Permutation> A(Q.begin(), Q.end());
  std::map<Permutation, std::uint32_t> idx;
  for (std::size_t i = 0; i < A.size(); ++i) idx.emplace(A[i], static_cast<std::uint32_t>(i));

  OrbitCertificate c{G, A.size(), epsilon, F, canonical_labels(action.graph, W), {}, {}, graph, {}};
  for (const auto& g : required_phi_domain(G, F)) {
    auto p = image(g);
    std::vector<std::uint32_t> img(A.size());
    for (std::size_t i = 0; i < A.size(); ++i) {
      auto it = idx.find(p.compose(A[i]));
      if (it == idx.end())
        throw Error(ErrorKind::size_cap_exceeded, "image of " + G.format(g) + " escapes the generated group");
      img[i] = it->second;
    }
    c.phi.emplace(g, Permutation(std::move(img)));
  }
  c.S.resize(A.size());
  std::iota(c.S.begin(), c.S.end(), 0u);
  for (const auto& s : A) {
    auto sinv = s.inverse();
    std::vector<std::uint32_t> row;
    for (const auto& w : c.W) row.push_back(sinv[graph.at(w)]);
    c.pi.push_back(std::move(row));
  }
  return c;
}

std::vector<Vertex> free_extended_window(const GraphAction& action, const std::vector<Element>& F,
                                         const std::vector<Vertex>& W) {
  const auto& G = action.family;
  if (G.kind() != FamilyKind::free) throw Error(ErrorKind::unsupported_family, "expected a free family");
  auto base = canonical_labels(action.graph, W);
  std::set<Vertex> out(base.begin(), base.end());
  for (const auto& f : F) {
    auto word = G.inv(f).word;
    for (std::size_t l = 0; l < word.size(); ++l) {
      Element suffix{std::vector<std::int64_t>(word.begin() + static_cast<std::ptrdiff_t>(l), word.end()), {}};
      for (const auto& v : base) out.insert(action.apply(suffix, v));
    }
  }
  return {out.begin(), out.end()};
}

OrbitCertificate build_free(const GraphAction& action, const std::vector<Element>& F, const std::vector<Vertex>& W,
                            const Rational& epsilon, std::size_t eppa_cap, std::size_t aut_cap, FreeBuildInfo* info) {
  const auto& G = action.family;
  require_valid_epsilon(epsilon);
  if (G.kind() != FamilyKind::free)
    throw Error(ErrorKind::unsupported_family, "free-group construction needs a free family, got " + G.describe());
  for (const auto& g : F) G.require(g);
  auto Wc = canonical_labels(action.graph, W);
  auto Wp = free_extended_window(action, F, W);
  FiniteGraph g0 = window(action.graph, Wp);

  std::vector<PartialIso> partials(G.rank());
  for (std::size_t i = 0; i < G.rank(); ++i) {
    Element gen{{static_cast<std::int64_t>(i + 1)}, {}};
    for (const auto& v : g0.vertices()) {
      auto w = action.apply(gen, v);
      if (g0.has_vertex(w)) partials[i].map.emplace(v, w);
    }
  }
  EppaSolution sol = eppa_extend(g0, partials, eppa_cap);

  std::vector<Permutation> auts;
  try {
    auts = automorphism_group(sol.B, aut_cap);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::size_cap_exceeded) throw Error(ErrorKind::automorphism_cap_exceeded, e.what());
    throw;
  }
  std::map<Permutation, std::uint32_t> idx;
  for (std::size_t i = 0; i < auts.size(); ++i) idx.emplace(auts[i], static_cast<std::uint32_t>(i));
  const std::size_t nb = sol.B.size();

  auto psi = [&](const Element& g) {
    Permutation r = Permutation::identity(nb);
    for (auto l : g.word) {
      const auto& p = sol.autos[static_cast<std::size_t>(std::abs(l)) - 1];
      r = r.compose(l > 0 ? p : p.inverse());
    }
    return r;
  };

  OrbitCertificate c{G, auts.size(), epsilon, F, Wc, {}, {}, sol.B, {}};
  for (const auto& g : required_phi_domain(G, F)) {
    auto p = psi(g);
    std::vector<std::uint32_t> img(auts.size());
    for (std::size_t s = 0; s < auts.size(); ++s) img[s] = idx.at(p.compose(auts[s]));
    c.phi.emplace(g, Permutation(std::move(img)));
  }
  c.S.resize(auts.size());
  std::iota(c.S.begin(), c.S.end(), 0u);
  for (const auto& s : auts) {
    auto sinv = s.inverse();
    std::vector<std::uint32_t> row;
    for (const auto& w : Wc) row.push_back(sinv[sol.embed[g0.at(w)]]);
    c.pi.push_back(std::move(row));
  }
  if (info) *info = FreeBuildInfo{Wp, sol};
  return c;
}

SoficGroupCertificate regular_representation(const GroupFamily& family, const std::vector<Element>& F,
                                             const Rational& epsilon) {
  auto elems = family.elements();
  std::sort(elems.begin(), elems.end());
  std::map<Element, std::uint32_t> idx;
  for (std::size_t i = 0; i < elems.size(); ++i) idx.emplace(elems[i], static_cast<std::uint32_t>(i));
  SoficGroupCertificate c{family, elems.size(), epsilon, F, {}};
  for (const auto& g : elems) {
    std::vector<std::uint32_t> img(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) img[i] = idx.at(family.mul(g, elems[i]));
    c.phi.emplace(g, Permutation(std::move(img)));
  }
  return c;
}

SoficGroupCertificate cyclic_shift_representation(const GroupFamily& family, std::size_t n,
                                                  const std::vector<Element>& F, const std::vector<Element>& domain,
                                                  const Rational& epsilon) {
  bool integer = (family.kind() == FamilyKind::lattice || family.kind() == FamilyKind::free) && family.rank() == 1;
  if (!integer) throw Error(ErrorKind::unsupported_family, "cyclic shifts need Z, got " + family.describe());
  if (n == 0) throw Error(ErrorKind::malformed_input, "cyclic carrier must be nonempty");
  auto shift = [&](const Element& g) {
    std::int64_t k = 0;
    if (family.kind() == FamilyKind::lattice)
      k = g.word[0];
    else
      for (auto l : g.word) k += l;
    const auto m = static_cast<std::int64_t>(n);
    k = ((k % m) + m) % m;
    std::vector<std::uint32_t> img(n);
    for (std::size_t a = 0; a < n; ++a) img[a] = static_cast<std::uint32_t>((static_cast<std::int64_t>(a) + k) % m);
    return Permutation(std::move(img));
  };
  SoficGroupCertificate c{family, n, epsilon, F, {}};
  for (const auto& g : required_phi_domain(family, F)) c.phi.emplace(g, shift(g));
  for (const auto& g : domain) c.phi.emplace(family.parse(family.format(g)), shift(g));
  return c;
}

std::vector<Element> finite_stabilizer_generators(const GroupFamily& family, const Subgroup& H,
                                                  const std::vector<Element>& F, const std::vector<Element>& sigmaW) {
  auto hs = H.finite_elements(family);
  std::set<Element> out(F.begin(), F.end());
  out.insert(hs.begin(), hs.end());
  std::vector<Element> mid = sigmaW;
  for (const auto& x : sigmaW) mid.push_back(family.inv(x));
  for (const auto& h1 : hs)
    for (const auto& x : mid)
      for (const auto& h2 : hs) out.insert(family.mul(family.mul(h1, x), h2));
  return {out.begin(), out.end()};
}

std::vector<Element> finite_stabilizer_domain(const GroupFamily& family, const Subgroup& H,
                                              const std::vector<Element>& F, const std::vector<Element>& sigmaW) {
  auto Fp = finite_stabilizer_generators(family, H, F, sigmaW);
  std::set<Element> out;
  for (const auto& g : Fp) {
    out.insert(family.inv(g));
    for (const auto& h : Fp) out.insert(family.mul(g, h));
  }
  for (const auto& g : required_phi_domain(family, F)) out.insert(g);
  return {out.begin(), out.end()};
}

OrbitCertificate build_finite_stabilizer(const GraphAction& action, const CharacteristicPair& pair,
                                         const SoficGroupCertificate& base, const std::vector<Element>& F,
                                         const std::vector<Vertex>& W, const Rational& epsilon, const Section& section,
                                         FiniteStabilizerInfo* info) {
  const auto& G = action.family;
  require_valid_epsilon(epsilon);
  if (!(base.family == G)) throw Error(ErrorKind::family_mismatch, "base certificate is for another family");
  for (const auto& g : F) G.require(g);
  const auto hs = pair.H.finite_elements(G);
  const auto Wc = canonical_labels(action.graph, W);
  const Vertex basepoint = action.apply(G.identity(), G.format(G.identity()));

  std::vector<Element> sigmaW;
  for (const auto& w : Wc) {
    Element x = section ? section(w) : pair.H.coset_rep(G, G.parse(w));
    if (action.apply(x, basepoint) != w)
      throw Error(ErrorKind::malformed_input, "section value " + G.format(x) + " does not map the basepoint to '" + w + "'");
    sigmaW.push_back(std::move(x));
  }

  const auto Fp = finite_stabilizer_generators(G, pair.H, F, sigmaW);
  std::set<Element> FpFp_set;
  for (const auto& g : Fp)
    for (const auto& h : Fp) FpFp_set.insert(G.mul(g, h));
  const std::vector<Element> FpFp(FpFp_set.begin(), FpFp_set.end());
  auto phi = [&](const Element& g) -> const Permutation& { return phi_at(base.phi, G, g); };
  for (const auto& g : finite_stabilizer_domain(G, pair.H, F, sigmaW)) phi(g);

  const std::size_t n = base.carrier;
  std::vector<const Permutation*> pFpFp;
  for (const auto& g : FpFp) pFpFp.push_back(&phi(g));
  struct Pair3 {
    const Permutation *gh, *g, *h;
  };
  std::vector<Pair3> products;
  for (const auto& g : Fp)
    for (const auto& h : Fp) products.push_back({&phi(G.mul(g, h)), &phi(g), &phi(h)});
  std::vector<std::pair<const Permutation*, const Permutation*>> inverses;
  for (const auto& g : Fp) inverses.emplace_back(&phi(g), &phi(G.inv(g)));

  std::vector<char> in_Sp(n, 0);
  std::vector<std::uint32_t> Sp;
  std::vector<std::size_t> stamp(n, SIZE_MAX);
  for (std::size_t s = 0; s < n; ++s) {
    bool ok = true;
    for (const auto* p : pFpFp) {
      auto t = (*p)[s];
      if (stamp[t] == s) {
        ok = false;
        break;
      }
      stamp[t] = s;
    }
    for (std::size_t i = 0; ok && i < products.size(); ++i)
      ok = (*products[i].gh)[s] == (*products[i].g)[(*products[i].h)[s]];
    for (std::size_t i = 0; ok && i < inverses.size(); ++i) ok = (*inverses[i].first)[(*inverses[i].second)[s]] == s;
    if (ok) {
      in_Sp[s] = 1;
      Sp.push_back(static_cast<std::uint32_t>(s));
    }
  }

  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto s : Sp)
    for (const auto& h : hs) {
      auto t = phi(h)[s];
      if (in_Sp[t]) {
        auto a = find(s), b = find(t);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  // Roots are the smallest members, so the class label is the least point.
  std::map<std::uint32_t, std::size_t> class_of_root;
  std::vector<Vertex> labels;
  for (auto s : Sp) {
    auto r = find(s);
    if (!class_of_root.count(r)) {
      class_of_root.emplace(r, labels.size());
      labels.push_back(std::to_string(r));
    }
  }
  auto cls = [&](std::uint32_t s) { return class_of_root.at(find(s)); };
  FiniteGraph B(labels);

  FiniteGraph Wg = window(action.graph, Wc);
  for (std::size_t x = 0; x < Wc.size(); ++x)
    for (auto y : Wg.neighbors(x)) {
      const auto& p = phi(G.mul(G.inv(sigmaW[x]), sigmaW[y]));
      for (auto s2 : Sp) {
        auto s1 = p[s2];
        if (!in_Sp[s1]) continue;
        if (cls(s1) == cls(s2))
          throw Error(ErrorKind::malformed_certificate, "edge relation meets the diagonal at class " + labels[cls(s1)]);
        B.add_edge(cls(s1), cls(s2));
      }
    }

  std::vector<const Permutation*> back;
  for (const auto& x : sigmaW) back.push_back(&phi(G.inv(x)));
  OrbitCertificate c{G, n, epsilon, F, Wc, {}, {}, B, {}};
  for (auto s : Sp) {
    bool ok = true;
    for (const auto* p : back) ok = ok && in_Sp[(*p)[s]];
    if (!ok) continue;
    c.S.push_back(s);
    std::vector<std::uint32_t> row;
    for (const auto* p : back) row.push_back(static_cast<std::uint32_t>(cls((*p)[s])));
    c.pi.push_back(std::move(row));
  }
  for (const auto& g : required_phi_domain(G, F)) c.phi.emplace(g, phi(g));
  if (info) *info = FiniteStabilizerInfo{Sp, labels.size()};
  auto frac = ratio(c.S.size(), n);
  if (!(frac > Rational(1) - epsilon))
    throw Error(ErrorKind::s_too_small, "|S|/|A| = " + to_string(frac) + " (|S'|/|A| = " + to_string(ratio(Sp.size(), n)) +
                                            ") is not above 1 - " + to_string(epsilon));
  return c;
}

namespace {

Rational combined_epsilon(const Rational& e1, const Rational& e2) {
  return Rational(1) - (Rational(1) - e1) * (Rational(1) - e2);
}

PhiTable product_phi(const OrbitCertificate& c1, const OrbitCertificate& c2, const GroupFamily& G,
                     const std::vector<Element>& F) {
  PhiTable phi;
  const std::size_t n2 = c2.carrier;
  for (const auto& g : required_phi_domain(G, F)) {
    const auto& p1 = phi_at(c1.phi, c1.family, g.parts[0]);
    const auto& p2 = phi_at(c2.phi, c2.family, g.parts[1]);
    std::vector<std::uint32_t> img(c1.carrier * n2);
    for (std::size_t a1 = 0; a1 < c1.carrier; ++a1)
      for (std::size_t a2 = 0; a2 < n2; ++a2)
        img[a1 * n2 + a2] = static_cast<std::uint32_t>(p1[a1] * n2 + p2[a2]);
    phi.emplace(g, Permutation(std::move(img)));
  }
  return phi;
}

std::vector<Element> product_F(const GroupFamily& G, const OrbitCertificate& c1, const OrbitCertificate& c2) {
  std::vector<Element> F;
  for (const auto& g1 : c1.F)
    for (const auto& g2 : c2.F) F.push_back(G.tuple({g1, g2}));
  return F;
}

}  // namespace

OrbitCertificate combine_product(const OrbitCertificate& c1, const OrbitCertificate& c2, const ProductRule& rule) {
  check_well_formed(c1);
  check_well_formed(c2);
  auto G = GroupFamily::product({c1.family, c2.family});
  auto F = product_F(G, c1, c2);
  OrbitCertificate c{G, c1.carrier * c2.carrier, combined_epsilon(c1.epsilon, c2.epsilon), F, {}, product_phi(c1, c2, G, F),
                     {}, product(c1.B, c2.B, rule), {}};
  for (const auto& w1 : c1.W)
    for (const auto& w2 : c2.W) c.W.push_back(join_tuple({w1, w2}));
  const std::size_t nb2 = c2.B.size();
  for (std::size_t k1 = 0; k1 < c1.S.size(); ++k1)
    for (std::size_t k2 = 0; k2 < c2.S.size(); ++k2) {
      c.S.push_back(static_cast<std::uint32_t>(c1.S[k1] * c2.carrier + c2.S[k2]));
      std::vector<std::uint32_t> row;
      for (auto b1 : c1.pi[k1])
        for (auto b2 : c2.pi[k2]) row.push_back(static_cast<std::uint32_t>(b1 * nb2 + b2));
      c.pi.push_back(std::move(row));
    }
  return c;
}

OrbitCertificate combine_coproduct(const OrbitCertificate& c1, const OrbitCertificate& c2) {
  check_well_formed(c1);
  check_well_formed(c2);
  auto G = GroupFamily::product({c1.family, c2.family});
  auto F = product_F(G, c1, c2);
  OrbitCertificate c{G, c1.carrier * c2.carrier, combined_epsilon(c1.epsilon, c2.epsilon), F, {}, product_phi(c1, c2, G, F),
                     {}, coproduct(c1.B, c2.B), {}};
  for (const auto& w : c1.W) c.W.push_back(tag(0, w));
  for (const auto& w : c2.W) c.W.push_back(tag(1, w));
  const auto nb1 = static_cast<std::uint32_t>(c1.B.size());
  for (std::size_t k1 = 0; k1 < c1.S.size(); ++k1)
    for (std::size_t k2 = 0; k2 < c2.S.size(); ++k2) {
      c.S.push_back(static_cast<std::uint32_t>(c1.S[k1] * c2.carrier + c2.S[k2]));
      std::vector<std::uint32_t> row = c1.pi[k1];
      for (auto b2 : c2.pi[k2]) row.push_back(nb1 + b2);
      c.pi.push_back(std::move(row));
    }
  return c;
}

OrbitCertificate transform_complement(const OrbitCertificate& c) {
  OrbitCertificate out = c;
  out.B = complement(c.B);
  return out;
}

OrbitCertificate transform_vertex(const OrbitCertificate& c, VertexMode mode) {
  OrbitCertificate out = c;
  out.B = FiniteGraph(c.B.vertices());
  if (mode == VertexMode::complete) out.B = complement(out.B);
  return out;
}

OrbitCertificate transform_precompose(const OrbitCertificate& c, const Homomorphism& hom,
                                      const std::vector<Element>& new_F) {
  if (!(hom.target() == c.family))
    throw Error(ErrorKind::family_mismatch, "homomorphism target differs from the certificate family");
  std::set<Element> oldF(c.F.begin(), c.F.end());
  for (const auto& h : new_F)
    if (!oldF.count(hom(h)))
      throw Error(ErrorKind::missing_phi_entry,
                  "image of " + hom.source().format(h) + " is " + c.family.format(hom(h)) + ", which is not in F");
  OrbitCertificate out{hom.source(), c.carrier, c.epsilon, new_F, c.W, {}, c.S, c.B, c.pi};
  for (const auto& h : required_phi_domain(hom.source(), new_F)) out.phi.emplace(h, phi_at(c.phi, c.family, hom(h)));
  return out;
}

OrbitCertificate transform_restrict(const OrbitCertificate& c, const std::vector<Vertex>& W0) {
  std::vector<std::size_t> cols;
  for (const auto& v : W0) {
    auto it = std::find(c.W.begin(), c.W.end(), v);
    if (it == c.W.end()) throw Error(ErrorKind::malformed_input, "'" + v + "' is not in the certificate window");
    cols.push_back(static_cast<std::size_t>(it - c.W.begin()));
  }
  OrbitCertificate out = c;
  out.W = W0;
  for (auto& row : out.pi) {
    std::vector<std::uint32_t> r;
    for (auto j : cols) r.push_back(row[j]);
    row = std::move(r);
  }
  return out;
}

}  // namespace sofic
