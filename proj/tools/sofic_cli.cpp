#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sofic/constructors.hpp"
#include "sofic/error.hpp"
#include "sofic/gromov.hpp"
#include "sofic/io.hpp"
#include "sofic/tiling.hpp"
#include "sofic/wreath.hpp"

using namespace sofic;

namespace {

constexpr int kAccept = 0, kReject = 1, kMalformed = 2;

bool is_rejection(ErrorKind k) {
  switch (k) {
    case ErrorKind::folner_defect_too_large:
    case ErrorKind::s_too_small:
    case ErrorKind::gh_closeness_violated:
    case ErrorKind::eppa_cap_exhausted:
    case ErrorKind::automorphism_cap_exceeded:
    case ErrorKind::size_cap_exceeded:
    case ErrorKind::missing_phi_entry:
    case ErrorKind::support_escapes_window:
      return true;
    default:
      return false;
  }
}

// Splits "a,b,(1,2),<x|y>" at top-level commas; a leading '[' means a JSON array.
std::vector<std::string> split_list(const std::string& text) {
  if (!text.empty() && text.front() == '[') {
    std::vector<std::string> out;
    for (const auto& x : Json::parse(text)) out.push_back(x.is_string() ? x.get<std::string>() : x.dump());
    return out;
  }
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(' || c == '<') ++depth;
    if (c == ')' || c == '>') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

std::vector<Element> parse_elements(const GroupFamily& G, const std::string& text) {
  std::vector<Element> out;
  for (const auto& s : split_list(text)) out.push_back(G.parse(s));
  return out;
}

std::vector<Element> radius_ball(const GroupFamily& G, std::size_t r) {
  auto gens = G.generators();
  return ball(G, gens, r);
}

Vertex basepoint(const GraphAction& a) { return a.graph.canonical(a.family.format(a.family.identity())); }

std::vector<Vertex> orbit_window(const GraphAction& a, const std::vector<Element>& elems) {
  std::vector<Vertex> out;
  std::set<Vertex> seen;
  auto base = basepoint(a);
  for (const auto& g : elems) {
    auto v = a.apply(g, base);
    if (seen.insert(v).second) out.push_back(v);
  }
  return out;
}

void emit(const Json& j) { std::cout << canonical_dump(j); }

struct Common {
  std::string epsilon = "1/10";
  std::optional<std::size_t> radius, F_radius, W_radius;
  std::string F_list, W_list;
  std::string action_path;
  std::size_t F_r() const { return F_radius.value_or(radius.value_or(1)); }
  std::size_t W_r() const { return W_radius.value_or(radius.value_or(1)); }
};

void add_common(CLI::App* app, Common& c, bool with_action) {
  app->add_option("--epsilon", c.epsilon, "epsilon as p/q");
  app->add_option("--radius", c.radius, "radius of both F and W balls");
  app->add_option("--F-radius", c.F_radius, "radius of the F ball");
  app->add_option("--W-radius", c.W_radius, "radius of the W ball (orbit of the basepoint)");
  app->add_option("--F", c.F_list, "explicit F, comma-separated or a JSON array");
  app->add_option("--W", c.W_list, "explicit W, comma-separated or a JSON array");
  if (with_action) app->add_option("--action", c.action_path, "action JSON");
}

std::vector<Element> pick_F(const Common& c, const GroupFamily& G) {
  return c.F_list.empty() ? radius_ball(G, c.F_r()) : parse_elements(G, c.F_list);
}

std::vector<Vertex> pick_W(const Common& c, const GraphAction& a) {
  if (!c.W_list.empty()) return split_list(c.W_list);
  return orbit_window(a, radius_ball(a.family, c.W_r()));
}

GraphAction load_action(const std::string& path) {
  if (path.empty()) throw Error(ErrorKind::malformed_input, "--action is required");
  return action_from_json(load_json(path));
}

OrbitCertificate load_cert(const std::string& path) {
  if (path.empty()) throw Error(ErrorKind::malformed_input, "--cert is required");
  return certificate_from_json(load_json(path));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Soficity certificates for group actions on graphs"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "verify an orbit or sofic group certificate");
  std::string cert_path, action_path;
  std::size_t jobs = 1;
  bool sofic_group = false;
  verify->add_option("--cert", cert_path, "certificate JSON")->required();
  verify->add_option("--action", action_path, "action JSON");
  verify->add_option("--jobs", jobs, "worker threads");
  verify->add_flag("--group-cert", sofic_group, "certificate is a sofic group certificate");

  // build
  auto* build = app.add_subcommand("build", "construct certificates");
  build->require_subcommand(1);
  Common common;
  std::string group_name = "Z";
  std::size_t box = 10;
  std::int64_t box_lo = 0;
  auto* b_folner = build->add_subcommand("folner", "Følner box construction");
  add_common(b_folner, common, true);
  b_folner->add_option("--group", group_name, "Z or Z^d (Cayley action with standard generators)");
  b_folner->add_option("--box,--box-side", box, "side of the Følner box");
  b_folner->add_option("--box-lo", box_lo, "lower corner coordinate of the box");

  std::size_t group_cap = 5040;
  auto* b_finite = build->add_subcommand("finite", "action on a finite graph");
  add_common(b_finite, common, true);
  b_finite->add_option("--group-cap", group_cap, "cap on the generated permutation group");

  std::size_t eppa_cap = 12, aut_cap = 10;
  auto* b_free = build->add_subcommand("free", "free group construction through EPPA");
  add_common(b_free, common, true);
  b_free->add_option("--eppa-cap", eppa_cap, "vertex cap of the EPPA search");
  b_free->add_option("--aut-cap", aut_cap, "vertex cap of the automorphism search");

  std::string base_path;
  std::size_t cycle = 0;
  auto* b_finstab = build->add_subcommand("finstab", "coset construction for a finite stabilizer");
  add_common(b_finstab, common, true);
  b_finstab->add_option("--base", base_path, "sofic group certificate JSON (default: regular representation)");
  b_finstab->add_option("--cycle", cycle, "use shifts on Z/n as the base (for Z)");

  std::string left_path, right_path, rule = "cartesian";
  auto* b_product = build->add_subcommand("product", "product of two certificates");
  b_product->add_option("--left", left_path)->required();
  b_product->add_option("--right", right_path)->required();
  b_product->add_option("--rule", rule, "product rule name or 3x3 JSON table");
  auto* b_coproduct = build->add_subcommand("coproduct", "coproduct of two certificates");
  b_coproduct->add_option("--left", left_path)->required();
  b_coproduct->add_option("--right", right_path)->required();

  auto* b_complement = build->add_subcommand("complement", "complement B");
  b_complement->add_option("--cert", cert_path)->required();
  std::string mode = "edgeless";
  auto* b_vertex = build->add_subcommand("vertex", "replace B by the edgeless or complete graph");
  b_vertex->add_option("--cert", cert_path)->required();
  b_vertex->add_option("--mode", mode)->check(CLI::IsMember({"edgeless", "complete"}));
  std::string source_group, images;
  auto* b_precompose = build->add_subcommand("precompose", "pull back along a homomorphism");
  b_precompose->add_option("--cert", cert_path)->required();
  b_precompose->add_option("--source", source_group, "source group name or JSON")->required();
  b_precompose->add_option("--images", images, "generator images in the certificate group")->required();
  b_precompose->add_option("--F", common.F_list, "new F in the source group")->required();
  auto* b_restrict = build->add_subcommand("restrict", "restrict the window");
  b_restrict->add_option("--cert", cert_path)->required();
  b_restrict->add_option("--W", common.W_list)->required();

  // tile
  std::string tiling_path;
  std::size_t M = 10;
  auto* tile = app.add_subcommand("tile", "tiling invariance and Følner unions");
  tile->add_option("--tiling", tiling_path, "tiling JSON")->required();
  tile->add_option("--M", M, "side of the box [0,M)^d covered by tiles (box tilings)");

  // eppa
  std::string eppa_path;
  auto* eppa = app.add_subcommand("eppa", "extend partial isomorphisms");
  eppa->add_option("--input", eppa_path, "{graph, partials} JSON")->required();
  eppa->add_option("--cap", eppa_cap, "vertex cap");

  // gromov
  std::string source_path, target_path;
  bool close_only = false;
  auto* gromov = app.add_subcommand("gromov", "closeness check and certificate transfer");
  gromov->add_option("--source", source_path, "coset action JSON of p_n")->required();
  gromov->add_option("--target", target_path, "coset action JSON of p")->required();
  gromov->add_option("--cert", cert_path, "certificate for p_n");
  gromov->add_option("--F", common.F_list, "F");
  gromov->add_option("--W", common.W_list, "W as vertices of p");
  gromov->add_option("--F-radius", common.F_radius);
  gromov->add_option("--W-radius", common.W_radius);
  gromov->add_flag("--close-only", close_only, "only compare the pointed actions on F");

  // wreath-check
  std::string config_path, H_spec = "C_2";
  std::size_t samples = 0, max_syllables = 2;
  std::uint64_t seed = 0;
  auto* wreath = app.add_subcommand("wreath-check", "quantitative checks of the wreath embedding");
  wreath->add_option("--cert", cert_path)->required();
  wreath->add_option("--action", action_path)->required();
  wreath->add_option("--config", config_path, "{H, samples, seed} JSON");
  wreath->add_option("--H", H_spec, "vertex group name or table JSON file");
  wreath->add_option("--samples", samples, "random pairs on top of the exhaustive corpus");
  wreath->add_option("--seed", seed, "seed for the random pairs");
  wreath->add_option("--max-syllables", max_syllables, "syllable bound of the exhaustive corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kAccept : kMalformed;
  }

  try {
    if (*verify) {
      VerifyOptions opts;
      opts.jobs = jobs;
      auto j = load_json(cert_path);
      VerifierReport report;
      if (sofic_group) {
        report = verify_sofic_group_certificate(sofic_certificate_from_json(j), opts);
      } else {
        auto action = load_action(action_path);
        report = verify_orbit_certificate(certificate_from_json(j, action.family), action, opts);
      }
      emit(report_to_json(report));
      return report.accepted ? kAccept : kReject;
    }
    if (*build) {
      const Rational eps = parse_rational(common.epsilon);
      if (*b_folner) {
        GraphAction a = common.action_path.empty()
                            ? [&] {
                                auto G = group_from_name(group_name);
                                return left_multiplication_action(G, G.generators());
                              }()
                            : load_action(common.action_path);
        const auto& G = a.family;
        if (G.kind() != FamilyKind::lattice) throw Error(ErrorKind::unsupported_family, "--box needs a lattice group");
        auto A = lattice_box(G.rank(), box_lo, box);
        emit(certificate_to_json(build_folner(a, A, pick_F(common, G), pick_W(common, a), eps)));
      } else if (*b_finite) {
        auto a = load_action(common.action_path);
        auto W = common.W_list.empty() ? a.graph.enumerate() : split_list(common.W_list);
        emit(certificate_to_json(build_finite_action(a, pick_F(common, a.family), W, eps, group_cap)));
      } else if (*b_free) {
        auto a = load_action(common.action_path);
        emit(certificate_to_json(
            build_free(a, pick_F(common, a.family), pick_W(common, a), eps, eppa_cap, aut_cap)));
      } else if (*b_finstab) {
        auto spec = load_json(common.action_path);
        auto G = group_from_json(spec.at("group"));
        auto pair = pair_from_json(G, spec.at("graph"));
        auto a = coset_action(G, pair);
        auto F = pick_F(common, G);
        auto W = pick_W(common, a);
        auto base = [&] {
          if (!base_path.empty()) return sofic_certificate_from_json(load_json(base_path), G);
          if (cycle == 0) return regular_representation(G, F, eps);
          std::vector<Element> sigma;
          for (const auto& w : W) sigma.push_back(pair.H.coset_rep(G, G.parse(w)));
          return cyclic_shift_representation(G, cycle, F, finite_stabilizer_domain(G, pair.H, F, sigma), eps);
        }();
        emit(certificate_to_json(build_finite_stabilizer(a, pair, base, F, W, eps)));
      } else if (*b_product || *b_coproduct) {
        auto c1 = load_cert(left_path), c2 = load_cert(right_path);
        if (*b_product) {
          auto r = (!rule.empty() && rule.front() == '[') ? ProductRule([&] {
            ProductRule::Table t{};
            auto j = Json::parse(rule);
            for (std::size_t x = 0; x < 3; ++x)
              for (std::size_t y = 0; y < 3; ++y) t[x][y] = j.at(x).at(y).get<bool>();
            return t;
          }())
                                                          : ProductRule::named(rule);
          emit(certificate_to_json(combine_product(c1, c2, r)));
        } else {
          emit(certificate_to_json(combine_coproduct(c1, c2)));
        }
      } else if (*b_complement) {
        emit(certificate_to_json(transform_complement(load_cert(cert_path))));
      } else if (*b_vertex) {
        emit(certificate_to_json(
            transform_vertex(load_cert(cert_path), mode == "complete" ? VertexMode::complete : VertexMode::edgeless)));
      } else if (*b_precompose) {
        auto c = load_cert(cert_path);
        auto src = (!source_group.empty() && source_group.front() == '{') ? group_from_json(Json::parse(source_group))
                                                                          : group_from_name(source_group);
        Homomorphism hom(src, c.family, parse_elements(c.family, images));
        emit(certificate_to_json(transform_precompose(c, hom, parse_elements(src, common.F_list))));
      } else if (*b_restrict) {
        emit(certificate_to_json(transform_restrict(load_cert(cert_path), split_list(common.W_list))));
      }
      return kAccept;
    }
    if (*tile) {
      auto t = tiling_from_json(load_json(tiling_path));
      auto gens = t.family.generators();
      Json out = tiling_to_json(t);
      out["invariance_defect"] = to_string(invariance_defect(t.family, t.shapes[0], gens));
      std::vector<Element> Bset = t.kind == TilingKind::box ? lattice_box(t.family.rank(), 0, M) : t.family.elements();
      auto A = folner_union_of_tiles(t, Bset);
      out["union_size"] = A.size();
      out["union_defect"] = to_string(invariance_defect(t.family, A, gens));
      out["partition"] = tiles_partition(t, Bset);
      emit(out);
      return out["partition"].get<bool>() ? kAccept : kReject;
    }
    if (*eppa) {
      auto in = eppa_input_from_json(load_json(eppa_path));
      auto sol = eppa_extend(in.graph, in.partials, eppa_cap);
      Json out = eppa_solution_to_json(in.graph, sol);
      out["valid"] = check_eppa_solution(in.graph, in.partials, sol);
      emit(out);
      return out["valid"].get<bool>() ? kAccept : kReject;
    }
    if (*gromov) {
      auto sj = load_json(source_path), tj = load_json(target_path);
      auto G = group_from_json(tj.at("group"));
      PointedTransitiveAction pn{G, pair_from_json(G, sj.at("graph"))};
      PointedTransitiveAction p{G, pair_from_json(G, tj.at("graph"))};
      auto F = common.F_list.empty() ? radius_ball(G, common.F_r()) : parse_elements(G, common.F_list);
      if (close_only) {
        auto m = gh_mismatch(pn, p, F);
        Json out = {{"close", !m}};
        if (m) out["mismatch"] = G.format(*m);
        emit(out);
        return m ? kReject : kAccept;
      }
      auto W = common.W_list.empty() ? orbit_window(p.action(), radius_ball(G, common.W_r())) : split_list(common.W_list);
      emit(certificate_to_json(transfer_certificate(certificate_from_json(load_json(cert_path), G), pn, p, F, W)));
      return kAccept;
    }
    if (*wreath) {
      WreathCheckOptions opts{max_syllables, samples, seed};
      Json H_json = H_spec;
      if (!config_path.empty()) {
        auto cfg = load_json(config_path);
        if (cfg.contains("H")) H_json = cfg.at("H");
        opts.samples = cfg.value("samples", opts.samples);
        opts.seed = cfg.value("seed", opts.seed);
      } else if (H_spec.find(".json") != std::string::npos) {
        H_json = load_json(H_spec);
      }
      auto H = H_json.is_object() && !H_json.contains("kind") ? GroupFamily::finite(table_from_json(H_json))
                                                               : group_from_json(H_json);
      if (H.kind() != FamilyKind::finite) throw Error(ErrorKind::unsupported_family, "H must be a finite group");
      auto a = load_action(action_path);
      auto report = check_wreath_embedding(certificate_from_json(load_json(cert_path), a.family), a, H.table(), opts);
      emit(wreath_report_to_json(report));
      return report.bound_holds && report.separation_holds ? kAccept : kReject;
    }
  } catch (const Error& e) {
    if (is_rejection(e.kind())) {
      emit(Json{{"error", to_string(e.kind())}, {"message", e.what()}});
      return kReject;
    }
    std::cerr << "error [" << to_string(e.kind()) << "]: " << e.what() << "\n";
    return kMalformed;
  } catch (const Json::exception& e) {
    std::cerr << "error [malformed-input]: " << e.what() << "\n";
    return kMalformed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  }
  return kAccept;
}
