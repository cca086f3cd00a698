#include "sofic/action.hpp"

#include <algorithm>
#include <memory>
#include <set>

#include "sofic/error.hpp"
#include "sofic/labels.hpp"

namespace sofic {

namespace {

Vertex canon(const GraphOracle& o, const Vertex& v) { return o.canonical ? o.canonical(v) : v; }

}  // namespace

std::vector<ActionViolation> check_action_on_window(const GraphAction& a, const std::vector<Element>& F,
                                                    const std::vector<Vertex>& W) {
  std::vector<ActionViolation> out;
  const auto& G = a.family;
  const auto e = G.identity();
  std::vector<Vertex> w;
  for (const auto& v : W) w.push_back(canon(a.graph, v));
  for (const auto& v : w)
    if (a.apply(e, v) != v) out.push_back({"identity", {G.format(e)}, {v}});
  for (const auto& g : F)
    for (const auto& h : F) {
      auto gh = G.mul(g, h);
      for (const auto& v : w)
        if (a.apply(gh, v) != a.apply(g, a.apply(h, v)))
          out.push_back({"compatibility", {G.format(g), G.format(h)}, {v}});
    }
  for (const auto& g : F) {
    std::vector<Vertex> img;
    for (const auto& v : w) img.push_back(a.apply(g, v));
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = i + 1; j < w.size(); ++j)
        if (a.graph.adjacent(w[i], w[j]) != a.graph.adjacent(img[i], img[j]))
          out.push_back({"adjacency", {G.format(g)}, {w[i], w[j]}});
  }
  return out;
}

GraphAction trivial_action(const GroupFamily& family, const GraphOracle& graph) {
  auto o = graph;
  return GraphAction{family, graph, [o](const Element&, const Vertex& v) { return canon(o, v); },
                     "trivial action of " + family.describe()};
}

GraphAction left_multiplication_action(const GroupFamily& family, const std::vector<Element>& conn) {
  auto graph = cayley_oracle(family, conn);
  return GraphAction{family, graph,
                     [family](const Element& g, const Vertex& v) { return family.format(family.mul(g, family.parse(v))); },
                     "left multiplication of " + family.describe() + " on its Cayley graph"};
}

GraphAction generator_image_action(const GroupFamily& family, const FiniteGraph& graph,
                                   const std::vector<Permutation>& images) {
  for (const auto& p : images) {
    if (p.size() != graph.size())
      throw Error(ErrorKind::size_mismatch, "generator image has degree " + std::to_string(p.size()) + ", graph has " +
                                                std::to_string(graph.size()) + " vertices");
    for (std::size_t i = 0; i < graph.size(); ++i)
      for (auto j : graph.neighbors(i))
        if (!graph.adjacent(p[i], p[j]))
          throw Error(ErrorKind::invariance_violation, "generator image is not an automorphism");
  }
  switch (family.kind()) {
    case FamilyKind::free:
    case FamilyKind::lattice:
      if (images.size() != family.rank())
        throw Error(ErrorKind::relation_violation, "need " + std::to_string(family.rank()) + " generator images");
      if (family.kind() == FamilyKind::lattice)
        for (std::size_t i = 0; i < images.size(); ++i)
          for (std::size_t j = 0; j < i; ++j)
            if (images[i].compose(images[j]) != images[j].compose(images[i]))
              throw Error(ErrorKind::relation_violation, "lattice generator images do not commute");
      break;
    case FamilyKind::finite: {
      const auto& t = family.table();
      if (images.size() != t.size()) throw Error(ErrorKind::relation_violation, "need one image per table element");
      for (std::size_t x = 0; x < t.size(); ++x)
        for (std::size_t y = 0; y < t.size(); ++y)
          if (images[t.mul(x, y)] != images[x].compose(images[y]))
            throw Error(ErrorKind::relation_violation,
                        "images of " + t.label(x) + " and " + t.label(y) + " break the group law");
      break;
    }
    case FamilyKind::product:
      throw Error(ErrorKind::unsupported_family, "build product actions with product_action");
  }
  auto perms = std::make_shared<const std::vector<Permutation>>(images);
  auto g = std::make_shared<const FiniteGraph>(graph);
  auto image_of = [family, perms, n = graph.size()](const Element& x) {
    family.require(x);
    const auto& P = *perms;
    switch (family.kind()) {
      case FamilyKind::free: {
        Permutation r = Permutation::identity(n);
        for (auto l : x.word) {
          const auto& p = P[static_cast<std::size_t>(std::abs(l)) - 1];
          r = r.compose(l > 0 ? p : p.inverse());
        }
        return r;
      }
      case FamilyKind::lattice: {
        Permutation r = Permutation::identity(n);
        for (std::size_t i = 0; i < x.word.size(); ++i) {
          const auto p = x.word[i] > 0 ? P[i] : P[i].inverse();
          for (std::int64_t k = 0; k < std::abs(x.word[i]); ++k) r = r.compose(p);
        }
        return r;
      }
      default: return P[static_cast<std::size_t>(x.word[0])];
    }
  };
  return GraphAction{family, oracle_of(graph),
                     [g, image_of](const Element& x, const Vertex& v) { return g->vertex(image_of(x)[g->at(v)]); },
                     "generator-image action of " + family.describe() + " on a finite graph"};
}

bool CharacteristicPair::in_S(const GroupFamily& family, const Element& g) const {
  for (const auto& r : reps) {
    switch (H.kind()) {
      case SubgroupKind::trivial:
        if (g == r) return true;
        break;
      case SubgroupKind::sublattice:
        if (H.contains(family, family.mul(g, family.inv(r)))) return true;
        break;
      case SubgroupKind::elements: {
        auto target = H.coset_rep(family, r);
        for (const auto& h : H.finite_elements(family))
          if (H.coset_rep(family, family.mul(family.inv(h), g)) == target) return true;
        break;
      }
      case SubgroupKind::custom:
        if (!family.is_abelian())
          throw Error(ErrorKind::unsupported_subgroup, "double cosets of a custom subgroup need an abelian family");
        if (H.contains(family, family.mul(g, family.inv(r)))) return true;
        break;
    }
  }
  return false;
}

namespace {

std::vector<Element> h_sample(const GroupFamily& family, const Subgroup& H) {
  if (H.is_finite()) return H.finite_elements(family);
  std::vector<Element> out{family.identity()};
  for (const auto& row : H.echelon()) {
    out.push_back(Element{row, {}});
    out.push_back(family.inv(Element{row, {}}));
  }
  return out;
}

}  // namespace

void check_pair(const GroupFamily& family, const CharacteristicPair& pair, const std::vector<Element>& sample) {
  auto fail = [&](const std::string& what, const Element& g) {
    throw Error(ErrorKind::pair_invariant_violation, what + " at " + family.format(g));
  };
  auto hs = h_sample(family, pair.H);
  for (const auto& g : sample) {
    bool s = pair.in_S(family, g);
    if (s != pair.in_S(family, family.inv(g))) fail("S is not symmetric", g);
    if (!s) continue;
    if (pair.H.contains(family, g)) fail("S meets H", g);
    for (const auto& h : hs)
      if (!pair.in_S(family, family.mul(h, g)) || !pair.in_S(family, family.mul(g, h))) fail("HSH is not inside S", g);
  }
}

GraphAction coset_action(const GroupFamily& family, const CharacteristicPair& pair) {
  std::vector<Element> sample = family.generators();
  sample.push_back(family.identity());
  for (const auto& r : pair.reps) {
    family.require(r);
    sample.push_back(r);
    sample.push_back(family.inv(r));
  }
  check_pair(family, pair, sample);

  auto P = std::make_shared<const CharacteristicPair>(pair);
  auto rep = [family, P](const Vertex& v) { return P->H.coset_rep(family, family.parse(v)); };
  GraphOracle o;
  o.description = "coset graph of " + family.describe();
  o.contains = [family](const Vertex& v) {
    try {
      family.parse(v);
      return true;
    } catch (const Error&) {
      return false;
    }
  };
  o.canonical = [family, rep](const Vertex& v) { return family.format(rep(v)); };
  o.adjacent = [family, P, rep](const Vertex& v, const Vertex& w) {
    return P->in_S(family, family.mul(family.inv(rep(v)), rep(w)));
  };
  if (P->H.is_finite() || family.is_abelian()) {
    auto hs = P->H.is_finite() ? P->H.finite_elements(family) : std::vector<Element>{family.identity()};
    o.neighbors = [family, P, rep, hs](const Vertex& v) {
      auto g = rep(v);
      std::vector<Vertex> out;
      for (const auto& h : hs)
        for (const auto& r : P->reps) out.push_back(family.format(family.mul(g, family.mul(h, r))));
      return out;
    };
  }
  if (auto reps = P->H.coset_reps(family)) {
    std::vector<Vertex> labels;
    for (const auto& r : *reps) labels.push_back(family.format(r));
    o.enumerate = [labels] { return labels; };
  }
  return GraphAction{family, o,
                     [family, P](const Element& g, const Vertex& v) {
                       return family.format(P->H.coset_rep(family, family.mul(g, family.parse(v))));
                     },
                     "coset action of " + family.describe()};
}

bool pair_matches_action(const GraphAction& a, const Vertex& base, const CharacteristicPair& pair,
                         const std::vector<Element>& sample) {
  const auto b = canon(a.graph, base);
  for (const auto& g : sample) {
    auto gb = a.apply(g, b);
    if ((gb == b) != pair.H.contains(a.family, g)) return false;
    if ((gb != b && a.graph.adjacent(b, gb)) != pair.in_S(a.family, g)) return false;
  }
  return true;
}

GraphAction product_action(const GraphAction& a1, const GraphAction& a2, const ProductRule& rule) {
  auto family = GroupFamily::product({a1.family, a2.family});
  return GraphAction{family, product_oracle(a1.graph, a2.graph, rule),
                     [a1, a2](const Element& g, const Vertex& v) {
                       auto p = split_tuple(v);
                       return join_tuple({a1.apply(g.parts.at(0), p.at(0)), a2.apply(g.parts.at(1), p.at(1))});
                     },
                     "product of (" + a1.description + ") and (" + a2.description + ")"};
}

GraphAction coproduct_action(const GraphAction& a1, const GraphAction& a2) {
  auto family = GroupFamily::product({a1.family, a2.family});
  return GraphAction{family, coproduct_oracle(a1.graph, a2.graph),
                     [a1, a2](const Element& g, const Vertex& v) {
                       auto [i, w] = untag(v);
                       return tag(i, i == 0 ? a1.apply(g.parts.at(0), w) : a2.apply(g.parts.at(1), w));
                     },
                     "coproduct of (" + a1.description + ") and (" + a2.description + ")"};
}

GraphAction restrict_action(const GraphAction& a, std::function<bool(const Vertex&)> keep,
                            const std::vector<Element>& F, const std::vector<Vertex>& W) {
  for (const auto& v : W) {
    if (!keep(v)) continue;
    for (const auto& g : F) {
      auto gv = a.apply(g, v);
      if (!keep(gv))
        throw Error(ErrorKind::invariance_violation,
                    "vertex set is not invariant: " + a.family.format(g) + " maps '" + v + "' to '" + gv + "'");
    }
  }
  GraphAction r = a;
  r.graph = induced_oracle(a.graph, std::move(keep));
  r.description = "restriction of " + a.description;
  return r;
}

GraphAction precompose(const GraphAction& a, const Homomorphism& hom) {
  if (!(hom.target() == a.family))
    throw Error(ErrorKind::family_mismatch, "homomorphism target " + hom.target().describe() +
                                                " differs from the acting family " + a.family.describe());
  auto apply = a.apply;
  return GraphAction{hom.source(), a.graph, [apply, hom](const Element& g, const Vertex& v) { return apply(hom(g), v); },
                     "pullback of " + a.description};
}

GraphAction complement_action(const GraphAction& a) {
  GraphAction r = a;
  r.graph = complement_oracle(a.graph);
  r.description = "complement of " + a.description;
  return r;
}

GraphAction edgeless_action(const GraphAction& a) {
  GraphAction r = a;
  r.graph = edgeless_oracle(a.graph);
  r.description = a.description + " with all edges removed";
  return r;
}

GraphAction complete_action(const GraphAction& a) {
  GraphAction r = a;
  r.graph = complete_oracle(a.graph);
  r.description = a.description + " on the complete graph";
  return r;
}

}  // namespace sofic
