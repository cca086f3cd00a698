#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "sofic/constructors.hpp"
#include "sofic/error.hpp"
#include "sofic/gromov.hpp"
#include "sofic/io.hpp"
#include "sofic/tiling.hpp"
#include "sofic/wreath.hpp"

namespace py = pybind11;
using namespace sofic;

namespace {

using Labels = std::vector<std::string>;

std::vector<Element> parse_all(const GroupFamily& G, const Labels& xs) {
  std::vector<Element> out;
  for (const auto& x : xs) out.push_back(G.parse(x));
  return out;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::parse_error, e.what());
  }
}

GraphAction action_of(const std::string& spec) { return action_from_json(parse(spec)); }
OrbitCertificate cert_of(const std::string& text) { return certificate_from_json(parse(text)); }
std::string dump(const Json& j) { return canonical_dump(j); }

GroupFamily group_of(const std::string& spec) {
  if (!spec.empty() && spec.front() == '{') {
    auto j = parse(spec);
    if (!j.contains("kind")) return GroupFamily::finite(table_from_json(j));
    return group_from_json(j);
  }
  return group_from_name(spec);
}

PointedTransitiveAction pointed(const std::string& spec) {
  auto j = parse(spec);
  auto G = group_from_json(j.at("group"));
  return {G, pair_from_json(G, j.at("graph"))};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite certificates for sofic approximations of group actions on graphs";

  static py::handle error_type = PyErr_NewException("sofic._core.SoficError", PyExc_ValueError, nullptr);
  m.attr("SoficError") = error_type;
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::reinterpret_borrow<py::object>(error_type)(e.what());
      inst.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(error_type.ptr(), inst.ptr());
    }
  });

  m.def(
      "verify",
      [](const std::string& cert, const std::string& action, std::size_t jobs) {
        auto a = action_of(action);
        return dump(report_to_json(verify_orbit_certificate(certificate_from_json(parse(cert), a.family), a, {jobs})));
      },
      py::arg("cert"), py::arg("action"), py::arg("jobs") = 1);
  m.def(
      "verify_group",
      [](const std::string& cert, std::size_t jobs) {
        return dump(report_to_json(verify_sofic_group_certificate(sofic_certificate_from_json(parse(cert)), {jobs})));
      },
      py::arg("cert"), py::arg("jobs") = 1);

  m.def(
      "build_folner",
      [](const std::string& action, const Labels& A, const Labels& F, const Labels& W, const std::string& eps) {
        auto a = action_of(action);
        return dump(certificate_to_json(
            build_folner(a, parse_all(a.family, A), parse_all(a.family, F), W, parse_rational(eps))));
      },
      py::arg("action"), py::arg("A"), py::arg("F"), py::arg("W"), py::arg("epsilon"));
  m.def(
      "build_finite",
      [](const std::string& action, const Labels& F, const Labels& W, const std::string& eps, std::size_t cap) {
        auto a = action_of(action);
        return dump(certificate_to_json(build_finite_action(a, parse_all(a.family, F), W, parse_rational(eps), cap)));
      },
      py::arg("action"), py::arg("F"), py::arg("W"), py::arg("epsilon"), py::arg("group_cap") = 5040);
  m.def(
      "build_free",
      [](const std::string& action, const Labels& F, const Labels& W, const std::string& eps, std::size_t eppa_cap,
         std::size_t aut_cap) {
        auto a = action_of(action);
        return dump(certificate_to_json(
            build_free(a, parse_all(a.family, F), W, parse_rational(eps), eppa_cap, aut_cap)));
      },
      py::arg("action"), py::arg("F"), py::arg("W"), py::arg("epsilon"), py::arg("eppa_cap") = 12,
      py::arg("aut_cap") = 10);

  m.def(
      "combine_product",
      [](const std::string& c1, const std::string& c2, const std::string& rule) {
        return dump(certificate_to_json(combine_product(cert_of(c1), cert_of(c2), ProductRule::named(rule))));
      },
      py::arg("left"), py::arg("right"), py::arg("rule") = "cartesian");
  m.def(
      "combine_coproduct",
      [](const std::string& c1, const std::string& c2) {
        return dump(certificate_to_json(combine_coproduct(cert_of(c1), cert_of(c2))));
      },
      py::arg("left"), py::arg("right"));
  m.def(
      "complement", [](const std::string& c) { return dump(certificate_to_json(transform_complement(cert_of(c)))); },
      py::arg("cert"));
  m.def(
      "vertex_transform",
      [](const std::string& c, const std::string& mode) {
        if (mode != "edgeless" && mode != "complete")
          throw Error(ErrorKind::malformed_input, "mode must be edgeless or complete");
        return dump(certificate_to_json(
            transform_vertex(cert_of(c), mode == "edgeless" ? VertexMode::edgeless : VertexMode::complete)));
      },
      py::arg("cert"), py::arg("mode"));
  m.def(
      "restrict",
      [](const std::string& c, const Labels& W) { return dump(certificate_to_json(transform_restrict(cert_of(c), W))); },
      py::arg("cert"), py::arg("W"));
  m.def("measured_delta", [](const std::string& c) { return to_string(measured_delta(cert_of(c))); }, py::arg("cert"));

  m.def(
      "eppa",
      [](const std::string& input, std::size_t cap) {
        auto in = eppa_input_from_json(parse(input));
        auto sol = eppa_extend(in.graph, in.partials, cap);
        Json out = eppa_solution_to_json(in.graph, sol);
        out["valid"] = check_eppa_solution(in.graph, in.partials, sol);
        return dump(out);
      },
      py::arg("input"), py::arg("cap") = 12);

  m.def(
      "tile_of",
      [](const std::string& tiling, const std::string& g) {
        auto t = tiling_from_json(parse(tiling));
        Labels out;
        for (const auto& x : tile_of(t, t.family.parse(g))) out.push_back(t.family.format(x));
        return out;
      },
      py::arg("tiling"), py::arg("element"));
  m.def(
      "invariance_defect",
      [](const std::string& group, const Labels& shape, const Labels& K) {
        auto G = group_of(group);
        return to_string(invariance_defect(G, parse_all(G, shape), parse_all(G, K)));
      },
      py::arg("group"), py::arg("shape"), py::arg("K"));

  m.def(
      "gh_mismatch",
      [](const std::string& source, const std::string& target, const Labels& F) -> std::optional<std::string> {
        auto pn = pointed(source), p = pointed(target);
        auto mm = gh_mismatch(pn, p, parse_all(p.family, F));
        if (!mm) return std::nullopt;
        return p.family.format(*mm);
      },
      py::arg("source"), py::arg("target"), py::arg("F"));
  m.def(
      "transfer",
      [](const std::string& cert, const std::string& source, const std::string& target, const Labels& F,
         const Labels& W) {
        auto pn = pointed(source), p = pointed(target);
        return dump(certificate_to_json(
            transfer_certificate(certificate_from_json(parse(cert), p.family), pn, p, parse_all(p.family, F), W)));
      },
      py::arg("cert"), py::arg("source"), py::arg("target"), py::arg("F"), py::arg("W"));

  m.def(
      "wreath_check",
      [](const std::string& cert, const std::string& action, const std::string& H, std::size_t samples,
         std::uint64_t seed, std::size_t max_syllables) {
        auto a = action_of(action);
        auto group = group_of(H);
        if (group.kind() != FamilyKind::finite) throw Error(ErrorKind::unsupported_family, "H must be a finite group");
        WreathCheckOptions opts{max_syllables, samples, seed};
        return dump(wreath_report_to_json(
            check_wreath_embedding(certificate_from_json(parse(cert), a.family), a, group.table(), opts)));
      },
      py::arg("cert"), py::arg("action"), py::arg("H") = "C_2", py::arg("samples") = 0, py::arg("seed") = 0,
      py::arg("max_syllables") = 2);

  m.def(
      "hamming",
      [](const std::vector<std::uint32_t>& p, const std::vector<std::uint32_t>& q) {
        return to_string(hamming(Permutation(p), Permutation(q)));
      },
      py::arg("p"), py::arg("q"));
}
