#include "sofic/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "sofic/error.hpp"

namespace sofic {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::malformed_input, what); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing member '") + key + "'");
  return j.at(key);
}

std::string str(const Json& j, const char* what) {
  if (!j.is_string()) bad(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::size_t count(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) bad(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

std::size_t parse_count(const std::string& s, const std::string& whole) {
  std::size_t n = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
  if (ec != std::errc() || p != s.data() + s.size()) throw Error(ErrorKind::parse_error, "bad group name '" + whole + "'");
  return n;
}

Permutation perm_from_json(const Json& j) {
  if (!j.is_array()) bad("permutation must be an array");
  std::vector<std::uint32_t> img;
  for (const auto& x : j) img.push_back(static_cast<std::uint32_t>(count(x, "permutation entry")));
  return Permutation(std::move(img));
}

Json perm_to_json(const Permutation& p) { return Json(p.images()); }

ProductRule rule_from_json(const Json& j) {
  if (j.is_string()) return ProductRule::named(j.get<std::string>());
  if (!j.is_array() || j.size() != 3) bad("product rule must be a name or a 3x3 boolean table");
  ProductRule::Table t{};
  for (std::size_t a = 0; a < 3; ++a) {
    if (!j[a].is_array() || j[a].size() != 3) bad("product rule must be a name or a 3x3 boolean table");
    for (std::size_t b = 0; b < 3; ++b) {
      if (!j[a][b].is_boolean()) bad("product rule entries must be booleans");
      t[a][b] = j[a][b].get<bool>();
    }
  }
  return ProductRule(t);
}

template <class F>
auto wrap(ErrorKind kind, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(kind, e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::malformed_input) throw Error(kind, e.what());
    throw;
  }
}

}  // namespace

GroupFamily group_from_name(const std::string& name) {
  if (name == "Z") return GroupFamily::lattice(1);
  if (name.rfind("Z^", 0) == 0) return GroupFamily::lattice(parse_count(name.substr(2), name));
  auto rest = [&](std::size_t k) { return name.substr(name[k] == '_' ? k + 1 : k); };
  if (name.size() > 1 && name[0] == 'F') return GroupFamily::free(parse_count(rest(1), name));
  if (name.size() > 1 && (name[0] == 'C' || name[0] == 'Z')) return GroupFamily::cyclic(parse_count(rest(1), name));
  if (name.size() > 1 && name[0] == 'S') return GroupFamily::symmetric(parse_count(rest(1), name));
  throw Error(ErrorKind::parse_error, "unknown group '" + name + "'");
}

FiniteTable table_from_json(const Json& j) {
  auto labels = member(j, "elements").get<std::vector<std::string>>();
  auto identity = str(member(j, "identity"), "identity");
  const auto& rows = member(j, "table");
  if (!rows.is_array() || rows.size() != labels.size())
    throw Error(ErrorKind::invalid_group_table, "table must have one row per element");
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < labels.size(); ++i) idx.emplace(labels[i], i);
  std::vector<std::vector<std::size_t>> table;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != labels.size())
      throw Error(ErrorKind::invalid_group_table, "table must be square");
    std::vector<std::size_t> r;
    for (const auto& x : row) {
      auto it = idx.find(str(x, "table entry"));
      if (it == idx.end()) throw Error(ErrorKind::invalid_group_table, "unknown table entry '" + x.get<std::string>() + "'");
      r.push_back(it->second);
    }
    table.push_back(std::move(r));
  }
  return FiniteTable(std::move(labels), identity, std::move(table));
}

Json table_to_json(const FiniteTable& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows()) {
    Json r = Json::array();
    for (auto x : row) r.push_back(t.label(x));
    rows.push_back(std::move(r));
  }
  return {{"elements", t.labels()}, {"identity", t.label(t.identity())}, {"table", std::move(rows)}};
}

GroupFamily group_from_json(const Json& j) {
  return wrap(ErrorKind::parse_error, [&] {
    if (j.is_string()) return group_from_name(j.get<std::string>());
    auto kind = str(member(j, "kind"), "group kind");
    if (kind == "free") return GroupFamily::free(count(member(j, "rank"), "rank"));
    if (kind == "lattice") return GroupFamily::lattice(count(member(j, "dim"), "dim"));
    if (kind == "cyclic") return GroupFamily::cyclic(count(member(j, "n"), "n"));
    if (kind == "symmetric") return GroupFamily::symmetric(count(member(j, "n"), "n"));
    if (kind == "finite") return GroupFamily::finite(table_from_json(j));
    if (kind == "product") {
      std::vector<GroupFamily> fs;
      for (const auto& f : member(j, "factors")) fs.push_back(group_from_json(f));
      return GroupFamily::product(std::move(fs));
    }
    throw Error(ErrorKind::parse_error, "unknown group kind '" + kind + "'");
  });
}

Json group_to_json(const GroupFamily& family) {
  switch (family.kind()) {
    case FamilyKind::free:
      return {{"kind", "free"}, {"rank", family.rank()}};
    case FamilyKind::lattice:
      return {{"kind", "lattice"}, {"dim", family.rank()}};
    case FamilyKind::finite: {
      Json j = table_to_json(family.table());
      j["kind"] = "finite";
      return j;
    }
    case FamilyKind::product: {
      Json fs = Json::array();
      for (const auto& f : family.factors()) fs.push_back(group_to_json(f));
      return {{"kind", "product"}, {"factors", std::move(fs)}};
    }
  }
  return {};
}

std::vector<Element> elements_from_json(const GroupFamily& family, const Json& j) {
  if (!j.is_array()) bad("element list must be an array");
  std::vector<Element> out;
  for (const auto& x : j) {
    if (x.is_number_integer() && family.kind() == FamilyKind::lattice) {
      out.push_back(family.parse(std::to_string(x.get<std::int64_t>())));
      continue;
    }
    out.push_back(family.parse(str(x, "element")));
  }
  return out;
}

Json elements_to_json(const GroupFamily& family, const std::vector<Element>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(family.format(x));
  return out;
}

Json graph_to_json(const FiniteGraph& g) {
  auto c = g.canonical();
  Json edges = Json::array();
  for (const auto& [u, v] : c.canonical_edges()) edges.push_back({u, v});
  return {{"vertices", c.vertices()}, {"edges", std::move(edges)}};
}

FiniteGraph graph_from_json(const Json& j) {
  return wrap(ErrorKind::malformed_input, [&] {
    std::vector<Vertex> vs;
    for (const auto& v : member(j, "vertices")) vs.push_back(str(v, "vertex"));
    std::vector<Edge> es;
    if (j.contains("edges"))
      for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) bad("edge must be a pair of vertices");
        es.emplace_back(str(e[0], "vertex"), str(e[1], "vertex"));
      }
    return FiniteGraph(std::move(vs), es);
  });
}

Subgroup subgroup_from_json(const GroupFamily& family, const Json& j) {
  return wrap(ErrorKind::malformed_input, [&] {
    auto kind = str(member(j, "kind"), "subgroup kind");
    if (kind == "trivial") return Subgroup::trivial();
    if (kind == "elements") return Subgroup::of_elements(family, elements_from_json(family, member(j, "elements")));
    if (kind == "sublattice")
      return Subgroup::sublattice(family, member(j, "basis").get<std::vector<std::vector<std::int64_t>>>());
    throw Error(ErrorKind::unsupported_subgroup, "unknown subgroup kind '" + kind + "'");
  });
}

Json subgroup_to_json(const GroupFamily& family, const Subgroup& H) {
  switch (H.kind()) {
    case SubgroupKind::trivial:
      return {{"kind", "trivial"}};
    case SubgroupKind::elements:
      return {{"kind", "elements"}, {"elements", elements_to_json(family, H.finite_elements(family))}};
    case SubgroupKind::sublattice:
      return {{"kind", "sublattice"}, {"basis", H.echelon()}};
    case SubgroupKind::custom:
      break;
  }
  throw Error(ErrorKind::unsupported_subgroup, "custom subgroups have no JSON form");
}

CharacteristicPair pair_from_json(const GroupFamily& family, const Json& j) {
  return wrap(ErrorKind::malformed_input, [&] {
    const auto& S = member(j, "S");
    if (str(member(S, "kind"), "S kind") != "double-coset-union") bad("S must be a double-coset-union");
    return CharacteristicPair{subgroup_from_json(family, member(j, "H")), elements_from_json(family, member(S, "reps"))};
  });
}

Json pair_to_json(const GroupFamily& family, const CharacteristicPair& p) {
  return {{"H", subgroup_to_json(family, p.H)},
          {"S", {{"kind", "double-coset-union"}, {"reps", elements_to_json(family, p.reps)}}}};
}

GraphAction action_from_json(const Json& j) {
  return wrap(ErrorKind::malformed_input, [&]() -> GraphAction {
    if (j.is_object() && j.contains("combine")) {
      auto kind = str(j.at("combine"), "combine");
      if (kind == "product")
        return product_action(action_from_json(member(j, "left")), action_from_json(member(j, "right")),
                              rule_from_json(j.value("rule", Json("cartesian"))));
      if (kind == "coproduct")
        return coproduct_action(action_from_json(member(j, "left")), action_from_json(member(j, "right")));
      if (kind == "complement") return complement_action(action_from_json(member(j, "of")));
      if (kind == "edgeless") return edgeless_action(action_from_json(member(j, "of")));
      if (kind == "complete") return complete_action(action_from_json(member(j, "of")));
      if (kind == "precompose") {
        auto a = action_from_json(member(j, "of"));
        auto src = group_from_json(member(j, "source"));
        return precompose(a, Homomorphism(src, a.family, elements_from_json(a.family, member(j, "images"))));
      }
      bad("unknown combinator '" + kind + "'");
    }
    auto G = group_from_json(member(j, "group"));
    const auto& graph = member(j, "graph");
    auto kind = str(member(graph, "kind"), "graph kind");
    if (kind == "cayley") {
      auto conn = elements_from_json(G, member(graph, "connection"));
      auto act = j.value("action", std::string("left-mult"));
      if (act == "trivial") return trivial_action(G, cayley_oracle(G, conn));
      if (act != "left-mult") bad("Cayley graphs take the left-mult action");
      return left_multiplication_action(G, conn);
    }
    if (kind == "coset") {
      if (j.value("action", std::string("coset")) != "coset") bad("coset graphs take the coset action");
      return coset_action(G, pair_from_json(G, graph));
    }
    if (kind == "explicit") {
      auto fg = graph_from_json(graph);
      auto act = j.value("action", std::string("generator-images"));
      if (act == "trivial") return trivial_action(G, oracle_of(fg));
      if (act != "generator-images") bad("explicit graphs take the generator-images or trivial action");
      std::vector<Permutation> images;
      for (const auto& img : member(j, "images")) {
        if (img.is_array()) {
          images.push_back(perm_from_json(img));
          continue;
        }
        std::vector<std::uint32_t> p(fg.size(), UINT32_MAX);
        for (const auto& [v, w] : img.items()) {
          if (!fg.has_vertex(v) || !fg.has_vertex(str(w, "vertex"))) bad("image map uses an unknown vertex");
          p[fg.at(v)] = static_cast<std::uint32_t>(fg.at(w.get<std::string>()));
        }
        images.push_back(Permutation(std::move(p)));
      }
      return generator_image_action(G, fg, images);
    }
    bad("unknown graph kind '" + kind + "'");
  });
}

Json certificate_to_json(const OrbitCertificate& c) {
  Json phi = Json::object();
  for (const auto& [g, p] : c.phi) phi[c.family.format(g)] = perm_to_json(p);
  Json pi = Json::object();
  for (std::size_t k = 0; k < c.S.size(); ++k) {
    Json row = Json::object();
    for (std::size_t j = 0; j < c.W.size(); ++j) row[c.W[j]] = c.B.vertex(c.pi[k][j]);
    pi[std::to_string(c.S[k])] = std::move(row);
  }
  return {{"group", group_to_json(c.family)},
          {"carrier", c.carrier},
          {"epsilon", to_string(c.epsilon)},
          {"F", elements_to_json(c.family, c.F)},
          {"W", c.W},
          {"phi", std::move(phi)},
          {"S", c.S},
          {"B", graph_to_json(c.B)},
          {"pi", std::move(pi)}};
}

namespace {

PhiTable phi_from_json(const GroupFamily& G, const Json& j) {
  if (!j.is_object()) bad("phi must be an object");
  PhiTable phi;
  for (const auto& [key, value] : j.items())
    if (!phi.emplace(G.parse(key), perm_from_json(value)).second) bad("phi has two entries for '" + key + "'");
  return phi;
}

GroupFamily family_of(const Json& j, const std::optional<GroupFamily>& family) {
  if (j.contains("group")) return group_from_json(j.at("group"));
  if (family) return *family;
  bad("certificate names no group");
}

}  // namespace

OrbitCertificate certificate_from_json(const Json& j, const std::optional<GroupFamily>& family) {
  return wrap(ErrorKind::malformed_certificate, [&] {
    if (!j.is_object()) bad("certificate must be an object");
    auto G = family_of(j, family);
    OrbitCertificate c{G, count(member(j, "carrier"), "carrier"), parse_rational(str(member(j, "epsilon"), "epsilon")),
                       elements_from_json(G, member(j, "F")), {}, phi_from_json(G, member(j, "phi")), {},
                       graph_from_json(member(j, "B")), {}};
    for (const auto& w : member(j, "W")) c.W.push_back(str(w, "window vertex"));
    for (const auto& s : member(j, "S")) c.S.push_back(static_cast<std::uint32_t>(count(s, "S entry")));
    const auto& pi = member(j, "pi");
    if (!pi.is_object() || pi.size() != c.S.size()) bad("pi must have exactly one row per point of S");
    for (auto s : c.S) {
      const auto& row = member(pi, std::to_string(s).c_str());
      if (!row.is_object() || row.size() != c.W.size()) bad("pi row for " + std::to_string(s) + " must cover W");
      std::vector<std::uint32_t> r;
      for (const auto& w : c.W) {
        auto b = str(member(row, w.c_str()), "pi value");
        auto idx = c.B.index_of(b);
        if (!idx) bad("pi value '" + b + "' is not a vertex of B");
        r.push_back(static_cast<std::uint32_t>(*idx));
      }
      c.pi.push_back(std::move(r));
    }
    check_well_formed(c);
    return c;
  });
}

Json sofic_certificate_to_json(const SoficGroupCertificate& c) {
  Json phi = Json::object();
  for (const auto& [g, p] : c.phi) phi[c.family.format(g)] = perm_to_json(p);
  return {{"group", group_to_json(c.family)},
          {"carrier", c.carrier},
          {"epsilon", to_string(c.epsilon)},
          {"F", elements_to_json(c.family, c.F)},
          {"phi", std::move(phi)}};
}

SoficGroupCertificate sofic_certificate_from_json(const Json& j, const std::optional<GroupFamily>& family) {
  return wrap(ErrorKind::malformed_certificate, [&] {
    if (!j.is_object()) bad("certificate must be an object");
    auto G = family_of(j, family);
    return SoficGroupCertificate{G, count(member(j, "carrier"), "carrier"),
                                 parse_rational(str(member(j, "epsilon"), "epsilon")),
                                 elements_from_json(G, member(j, "F")), phi_from_json(G, member(j, "phi"))};
  });
}

Json report_to_json(const VerifierReport& r) {
  Json vs = Json::array();
  for (const auto& v : r.violations) {
    Json o = Json::object();
    for (const auto& [k, x] : v.fields) o[k] = x;
    o["kind"] = v.kind;
    vs.push_back(std::move(o));
  }
  return {{"accepted", r.accepted},
          {"worst_defect", to_string(r.worst_defect)},
          {"s_fraction", to_string(r.s_fraction)},
          {"min_separation", to_string(r.min_separation)},
          {"violations", std::move(vs)}};
}

Json wreath_report_to_json(const WreathReport& r) {
  return {{"pairs", r.pairs},
          {"skipped", r.skipped},
          {"delta", to_string(r.delta)},
          {"max_defect", to_string(r.max_defect)},
          {"bound", to_string(r.bound)},
          {"bound_holds", r.bound_holds},
          {"min_separation", to_string(r.min_separation)},
          {"expected_separation", to_string(r.expected_separation)},
          {"separation_holds", r.separation_holds},
          {"worst_pair", r.worst_pair}};
}

Json tiling_to_json(const Tiling& t) {
  if (t.kind == TilingKind::box) return {{"kind", "box"}, {"d", t.family.rank()}, {"L", t.side}};
  Json shapes = Json::array(), centers = Json::array();
  for (const auto& s : t.shapes) shapes.push_back(elements_to_json(t.family, s));
  for (const auto& c : t.centers) centers.push_back(elements_to_json(t.family, c));
  return {{"kind", "finite"}, {"group", group_to_json(t.family)}, {"shapes", shapes}, {"centers", centers}};
}

Tiling tiling_from_json(const Json& j) {
  return wrap(ErrorKind::malformed_input, [&] {
    auto kind = str(member(j, "kind"), "tiling kind");
    if (kind == "box") return box_tiling(count(member(j, "d"), "d"), count(member(j, "L"), "L"));
    if (kind != "finite") bad("unknown tiling kind '" + kind + "'");
    auto G = group_from_json(member(j, "group"));
    std::vector<std::vector<Element>> shapes, centers;
    if (j.contains("shape")) {
      shapes.push_back(elements_from_json(G, j.at("shape")));
      centers.push_back(elements_from_json(G, member(j, "centers")));
    } else {
      for (const auto& s : member(j, "shapes")) shapes.push_back(elements_from_json(G, s));
      for (const auto& c : member(j, "centers")) centers.push_back(elements_from_json(G, c));
    }
    return finite_tiling(G, std::move(shapes), std::move(centers));
  });
}

EppaInput eppa_input_from_json(const Json& j) {
  return wrap(ErrorKind::malformed_input, [&] {
    EppaInput in{graph_from_json(member(j, "graph")), {}};
    for (const auto& p : member(j, "partials")) {
      if (!p.is_object()) bad("partial must be an object");
      PartialIso iso;
      for (const auto& [v, w] : p.items()) iso.map.emplace(v, str(w, "partial image"));
      in.partials.push_back(std::move(iso));
    }
    return in;
  });
}

Json eppa_solution_to_json(const FiniteGraph& g0, const EppaSolution& s) {
  Json embed = Json::object();
  for (std::size_t i = 0; i < g0.size(); ++i) embed[g0.vertex(i)] = s.B.vertex(s.embed[i]);
  Json autos = Json::array();
  for (const auto& a : s.autos) {
    Json m = Json::object();
    for (std::size_t i = 0; i < s.B.size(); ++i) m[s.B.vertex(i)] = s.B.vertex(a[i]);
    autos.push_back(std::move(m));
  }
  return {{"B", graph_to_json(s.B)}, {"embed", std::move(embed)}, {"autos", std::move(autos)}};
}

std::string canonical_dump(const Json& j) { return j.dump() + "\n"; }

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse_error, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::parse_error, path + ": " + e.what());
  }
}

}  // namespace sofic
