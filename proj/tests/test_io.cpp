#include "corpus.hpp"
#include "doctest.h"
#include "sofic/error.hpp"
#include "sofic/io.hpp"
#include "sofic/tiling.hpp"

using namespace sofic;
using namespace sofic::testing;

TEST_CASE("group round trips") {
  for (const auto& name : {"Z", "Z^3", "F_2", "F3", "C_5", "Z_4", "S_3"}) {
    auto G = group_from_name(name);
    auto j = group_to_json(G);
    CHECK(canonical_dump(group_to_json(group_from_json(j))) == canonical_dump(j));
  }
  auto P = GroupFamily::product({GroupFamily::lattice(1), GroupFamily::cyclic(3)});
  CHECK(canonical_dump(group_to_json(group_from_json(group_to_json(P)))) == canonical_dump(group_to_json(P)));
  CHECK_THROWS_AS(group_from_name("Q_8"), Error);
  CHECK_THROWS_AS(group_from_json(Json{{"kind", "lattice"}}), Error);
  auto t = GroupFamily::symmetric(3).table();
  CHECK(table_to_json(table_from_json(table_to_json(t))) == table_to_json(t));
}

TEST_CASE("certificates round trip byte for byte") {
  for (const auto& sc : corpus()) {
    CAPTURE(sc.name);
    auto c = sc.build();
    auto text = canonical_dump(certificate_to_json(c));
    auto back = certificate_from_json(Json::parse(text));
    CHECK(canonical_dump(certificate_to_json(back)) == text);
    CHECK(verify_orbit_certificate(back, sc.action).accepted);
  }
}

TEST_CASE("sofic group certificates round trip") {
  auto G = Z();
  auto F = ball_of(G, 1);
  auto c = cyclic_shift_representation(G, 12, F, required_phi_domain(G, F), Rational(1, 10));
  auto text = canonical_dump(sofic_certificate_to_json(c));
  CHECK(canonical_dump(sofic_certificate_to_json(sofic_certificate_from_json(Json::parse(text)))) == text);
}

TEST_CASE("malformed certificates") {
  auto j = certificate_to_json(finite_z4_c4());
  auto expect_error = [](const Json& bad) { CHECK_THROWS_AS(certificate_from_json(bad), Error); };
  auto bad = j;
  bad.erase("pi");
  expect_error(bad);
  bad = j;
  bad["epsilon"] = "3/2";
  expect_error(bad);
  bad = j;
  bad["carrier"] = "four";
  expect_error(bad);
  bad = j;
  bad["S"] = Json::array({3, 1});
  expect_error(bad);
  bad = j;
  bad["epsilon"] = "1/0";
  expect_error(bad);
  CHECK_THROWS_AS(certificate_from_json(Json::array()), Error);
}

TEST_CASE("actions from JSON") {
  auto line = action_from_json(Json::parse(R"j({"group": "Z", "graph": {"kind": "cayley", "connection": ["(1)", "(-1)"]},
                                               "action": "left-mult"})j"));
  CHECK(line(Z().vec({3}), "(1)") == "(4)");
  CHECK(window(line.graph, {"(0)", "(1)", "(2)"}).edge_count() == 2);

  auto cyc = action_from_json(Json::parse(R"j({"group": "Z", "graph": {"kind": "coset",
      "H": {"kind": "sublattice", "basis": [[5]]},
      "S": {"kind": "double-coset-union", "reps": ["(1)", "(-1)"]}}, "action": "coset"})j"));
  CHECK(cyc.graph.enumerate().size() == 5);

  auto rot = action_from_json(Json::parse(R"j({"group": "F_1", "graph": {"kind": "explicit",
      "vertices": ["0", "1", "2", "3"], "edges": [["0", "1"], ["1", "2"], ["2", "3"], ["3", "0"]]},
      "action": "generator-images", "images": [[1, 2, 3, 0]]})j"));
  CHECK(rot(rot.family.free_word("a a"), "0") == "2");

  auto prod = action_from_json(Json{{"combine", "product"},
                                    {"rule", "cartesian"},
                                    {"left", Json::parse(R"j({"group": "C_3", "graph": {"kind": "cayley",
                                        "connection": ["1", "2"]}, "action": "left-mult"})j")},
                                    {"right", Json::parse(R"j({"group": "C_3", "graph": {"kind": "cayley",
                                        "connection": ["1", "2"]}, "action": "left-mult"})j")}});
  CHECK(prod.graph.enumerate().size() == 9);

  CHECK_THROWS_AS(action_from_json(Json::parse(R"j({"group": "Z", "graph": {"kind": "nope"}})j")), Error);
  CHECK_THROWS_AS(action_from_json(Json::parse(R"j({"group": "Z", "graph": {"kind": "cayley",
                                                   "connection": ["(1)"]}, "action": "left-mult"})j")),
                  Error);
}

TEST_CASE("tilings and EPPA inputs") {
  auto t = box_tiling(2, 3);
  auto back = tiling_from_json(tiling_to_json(t));
  CHECK(tile_of(back, back.family.vec({4, 5})) == tile_of(t, t.family.vec({4, 5})));
  auto in = eppa_input_from_json(Json::parse(R"j({"graph": {"vertices": ["0", "1", "2"], "edges": [["0", "1"], ["1", "2"]]},
                                                 "partials": [{"0": "1", "1": "2"}]})j"));
  auto sol = eppa_extend(in.graph, in.partials);
  auto j = eppa_solution_to_json(in.graph, sol);
  CHECK(j["B"]["vertices"].size() == 4);
  CHECK(j["autos"].size() == 1);
}
