// One line per acceptance criterion; exits non-zero if any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "corpus.hpp"
#include "oracles.hpp"
#include "sofic/error.hpp"
#include "sofic/gromov.hpp"
#include "sofic/io.hpp"
#include "sofic/tiling.hpp"
#include "sofic/wreath.hpp"

using namespace sofic;
using namespace sofic::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void line(int id, const std::string& name, bool ok, const std::string& detail) {
  std::printf("%s %2d %-28s %s\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

template <class F>
void guarded(int id, const std::string& name, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    line(id, name, false, std::string("exception: ") + e.what());
  }
}

std::string str(const Rational& r) { return to_string(r); }

void criterion1() {
  auto t0 = Clock::now();
  std::size_t accepted = 0, total = 0;
  std::string first_failure;
  for (const auto& sc : corpus()) {
    ++total;
    auto report = verify_orbit_certificate(sc.build(), sc.action);
    if (report.accepted)
      ++accepted;
    else if (first_failure.empty())
      first_failure = sc.name;
  }
  double secs = seconds_since(t0);
  std::ostringstream d;
  d << accepted << "/" << total << " scenarios accepted in " << secs << " s (limit 30 s, need >= 20)";
  if (!first_failure.empty()) d << "; first rejected: " << first_failure;
  line(1, "verifier-self-consistency", accepted == total && total >= 20 && secs < 30.0, d.str());
}

void criterion2() {
  auto c = folner_line(100);
  auto defect = multiplicativity_defect(c.family, c.phi, c.F);
  auto frac = ratio(c.S.size(), c.carrier);
  bool ok = defect <= Rational(1, 25) && frac == Rational(98, 100) && verify_orbit_certificate(c, z_line()).accepted;
  line(2, "folner-arithmetic", ok,
       "defect " + str(defect) + " (<= 1/25), |S|/|A| " + str(frac) + " (== 49/50), exact rationals");
}

void criterion3() {
  std::size_t instances = 0;
  bool exact = true;
  for (const auto& sc : corpus()) {
    if (sc.constructor != "free") continue;
    ++instances;
    auto c = sc.build();
    exact = exact && multiplicativity_defect(c.family, c.phi, c.F) == Rational(0) && c.S.size() == c.carrier;
  }
  auto c = free_line_cert();
  bool c4 = c.B.size() == 4 && is_isomorphic(c.B, cycle_graph(4));
  auto brute = oracle::automorphisms(c.B);
  bool ok = exact && instances >= 3 && c4 && brute.size() == 8 && c.carrier == 8;
  line(3, "free-constructor", ok,
       std::to_string(instances) + " instances with defect 0 and S = A; Z path W=ball(1): |B| = " +
           std::to_string(c.B.size()) + (c4 ? " (C4)" : " (not C4)") + ", |Aut(B)| = " + std::to_string(c.carrier) +
           ", brute force " + std::to_string(brute.size()));
}

void criterion4() {
  auto t0 = Clock::now();
  std::size_t runs = 0, passed = 0;
  for (std::size_t n = 0; n <= 4; ++n)
    for (const auto& g : oracle::all_labelled_graphs(n))
      for (const auto& p : oracle::all_partial_isomorphisms(g)) {
        ++runs;
        auto sol = eppa_extend(g, {p}, 12);
        if (check_eppa_solution(g, {p}, sol) && oracle::eppa_solution_ok(g, {p}, sol)) ++passed;
      }
  auto p3 = path_graph(3);
  PartialIso shift{{{"0", "1"}, {"1", "2"}}};
  auto sol = eppa_extend(p3, {shift}, 12);
  double secs = seconds_since(t0);
  bool ok = runs == passed && sol.B.size() == 4 && check_eppa_solution(p3, {shift}, sol) && secs < 60.0;
  std::ostringstream d;
  d << passed << "/" << runs << " graph/partial pairs on <= 4 vertices solved within cap 12; P3 shift -> "
    << sol.B.size() << " vertices; " << secs << " s (limit 60 s)";
  line(4, "eppa", ok, d.str());
}

void criterion5() {
  auto t = box_tiling(1, 10);
  auto G = t.family;
  auto defect = invariance_defect(G, t.shapes[0], G.generators());
  bool ok = defect == Rational(1, 5);
  std::string d = "box(1,10) defect " + str(defect) + " (== 1/5)";
  for (std::size_t M : {10, 50, 100}) {
    auto A = folner_union_of_tiles(t, lattice_box(1, 0, M));
    auto dA = invariance_defect(G, A, {G.vec({1})});
    ok = ok && dA <= Rational(2, static_cast<std::int64_t>(M));
    d += "; M=" + std::to_string(M) + ": " + str(dA) + " <= 2/" + std::to_string(M);
  }
  line(5, "tiling-bounds", ok, d);
}

void criterion6() {
  struct Case {
    std::function<OrbitCertificate()> a, b;
    ProductRule rule;
    bool coproduct;
  };
  std::vector<Case> cases = {
      {[] { return folner_line(60); }, [] { return folner_line(60); }, ProductRule::cartesian(), false},
      {finite_z4_c4, folner_c4_coset, ProductRule::tensor(), false},
      {folner_c4_coset, folner_c4_coset, ProductRule::named("strong"), false},
      {free_c4, [] { return folner_line(60); }, ProductRule::named("lexicographic"), false},
      {folner_c4_coset, [] { return folner_line(60); }, ProductRule::cartesian(), true},
  };
  bool ok = true;
  std::string d;
  for (const auto& cs : cases) {
    auto c1 = cs.a(), c2 = cs.b();
    auto c = cs.coproduct ? combine_coproduct(c1, c2) : combine_product(c1, c2, cs.rule);
    auto d1 = measured_delta(c1), d2 = measured_delta(c2), dc = measured_delta(c);
    auto bound = Rational(1) - (Rational(1) - d1) * (Rational(1) - d2);
    bool this_ok = dc <= bound && c.S.size() == c1.S.size() * c2.S.size();
    ok = ok && this_ok;
    if (!d.empty()) d += "; ";
    d += str(dc) + " <= " + str(bound);
  }
  line(6, "combinator-arithmetic", ok, "5 scenarios, delta vs bound: " + d);
}

void criterion7() {
  std::size_t n = 0, same = 0;
  for (const auto& sc : corpus()) {
    auto c = sc.build();
    ++n;
    if (canonical_dump(certificate_to_json(transform_complement(transform_complement(c)))) ==
        canonical_dump(certificate_to_json(c)))
      ++same;
  }
  line(7, "complement-involution", n == same,
       std::to_string(same) + "/" + std::to_string(n) + " corpus certificates byte-identical after two complements");
}

void criterion8() {
  auto G = GroupFamily::symmetric(3);
  auto a = s3_on_triangle();
  auto F = G.elements();
  auto base = regular_representation(G, F, Rational(1, 10));
  auto c = build_finite_stabilizer(a, s3_triangle_pair(), base, F, a.graph.enumerate(), Rational(1, 10));
  bool k3 = c.B.size() == 3 && c.B.edge_count() == 3;
  bool ok = k3 && c.S.size() == c.carrier && verify_orbit_certificate(c, a).accepted;
  line(8, "finite-stabilizer", ok,
       "|B| = " + std::to_string(c.B.size()) + ", edges " + std::to_string(c.B.edge_count()) + ", |S| = " +
           std::to_string(c.S.size()) + " of " + std::to_string(c.carrier) + ", accepted at 1/10");
}

void criterion9() {
  auto G = Z();
  PointedTransitiveAction line_action{G, CharacteristicPair{Subgroup::trivial(), {G.vec({1}), G.vec({-1})}}};
  bool ok = true;
  std::string d;
  for (std::int64_t n : {3, 4}) {
    std::int64_t fact = n == 3 ? 6 : 24;
    PointedTransitiveAction pn{G, z_cycle_pair(fact)};
    auto src = build_finite_action(pn.action(), ball_of(G, 1), pn.action().graph.enumerate(), Rational(1, 10));
    auto out = transfer_certificate(src, pn, line_action, ball_of(G, 1), labels_of(G, ball_of(G, 1)));
    auto r_src = verify_orbit_certificate(src, pn.action());
    auto r_out = verify_orbit_certificate(out, line_action.action());
    bool same = out.epsilon == src.epsilon && r_out.s_fraction == r_src.s_fraction;
    std::vector<Vertex> far;
    for (std::int64_t k = 0; k <= fact; ++k) far.push_back(G.format(G.vec({k})));
    std::string failure;
    try {
      transfer_certificate(src, pn, line_action, ball_of(G, 1), far);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::gh_closeness_violated) failure = e.what();
    }
    bool named = failure.find("(" + std::to_string(fact) + ")") != std::string::npos ||
                 failure.find("(-" + std::to_string(fact) + ")") != std::string::npos;
    ok = ok && r_src.accepted && r_out.accepted && same && named;
    d += "n=" + std::to_string(n) + ": accepted " + (r_out.accepted ? "yes" : "no") + ", eps " + str(out.epsilon) +
         ", |S|/|A| " + str(r_out.s_fraction) + ", closeness failure: " + (failure.empty() ? "none" : failure) + "; ";
  }
  line(9, "gromov-transfer", ok, d);
}

void criterion10() {
  auto t0 = Clock::now();
  auto H = GroupFamily::cyclic(2).table();
  bool ok = true;
  std::size_t pairs = 0;
  std::string d;
  auto run = [&](const std::string& name, const OrbitCertificate& c, const GraphAction& a) {
    auto r = check_wreath_embedding(c, a, H);
    pairs += r.pairs;
    ok = ok && r.bound_holds && r.separation_holds;
    d += name + ": " + str(r.max_defect) + " <= 5*" + str(r.delta) + ", sep " + str(r.min_separation) + "; ";
    return r;
  };
  run("Z/4 on C4", finite_z4_c4(), cyclic_on_cycle(4));
  run("Z on C4 folner", folner_c4_coset(), z_cycle(4));
  auto fc = free_c4();
  auto rf = run("free C4", fc, free_rotation_c4());
  ok = ok && rf.max_defect == Rational(0) && multiplicativity_defect(fc.family, fc.phi, fc.F) == Rational(0);

  auto corrupted = finite_z4_c4();
  std::swap(corrupted.pi[0], corrupted.pi[1]);
  auto rc = check_wreath_embedding(corrupted, cyclic_on_cycle(4), H);
  bool detected = rc.separation_holds && !rc.bound_holds;
  ok = ok && detected;
  double secs = seconds_since(t0);
  ok = ok && pairs >= 200 && secs < 60.0;
  std::ostringstream tail;
  tail << "corrupted pi: separation " << (rc.separation_holds ? "holds" : "fails") << ", bound "
       << (rc.bound_holds ? "holds" : "fails") << " (defect " << str(rc.max_defect) << "); " << pairs << " pairs in "
       << secs << " s";
  line(10, "wreath-bounds", ok, d + tail.str());
}

void criterion11() {
  std::mt19937_64 rng(11);
  std::size_t cases = 1000, bad = 0;
  auto K = GraphProduct(cycle_graph(3), GroupFamily::cyclic(2).table());
  for (std::size_t t = 0; t < cases; ++t) {
    std::size_t n = 1 + rng() % 8;
    auto p = oracle::random_permutation(n, rng), q = oracle::random_permutation(n, rng),
         r = oracle::random_permutation(n, rng);
    bool h_ok = hamming(p, q) == hamming(q, p) && hamming(p, r) <= hamming(p, q) + hamming(q, r) &&
                hamming(p.compose(r), q.compose(r)) == hamming(p, q) &&
                hamming(r.compose(p), r.compose(q)) == hamming(p, q) && (hamming(p, q) == Rational(0)) == (p == q);
    auto x = oracle::random_wreath(K, n, rng), y = oracle::random_wreath(K, n, rng), z = oracle::random_wreath(K, n, rng);
    auto dxy = dGA(x, y);
    bool w_ok = dxy == dGA(y, x) && dGA(x, z) <= dxy + dGA(y, z) &&
                dGA(wreath_mul(K, z, x), wreath_mul(K, z, y)) == dxy &&
                dGA(wreath_mul(K, x, z), wreath_mul(K, y, z)) == dxy && (dxy == Rational(0)) == (x == y);
    bad += !(h_ok && w_ok);
  }
  line(11, "metric-axioms", bad == 0,
       std::to_string(cases) + " random cases (hamming and dGA: symmetry, triangle, bi-invariance), " +
           std::to_string(bad) + " failures");
}

}  // namespace

int main() {
  guarded(1, "verifier-self-consistency", criterion1);
  guarded(2, "folner-arithmetic", criterion2);
  guarded(3, "free-constructor", criterion3);
  guarded(4, "eppa", criterion4);
  guarded(5, "tiling-bounds", criterion5);
  guarded(6, "combinator-arithmetic", criterion6);
  guarded(7, "complement-involution", criterion7);
  guarded(8, "finite-stabilizer", criterion8);
  guarded(9, "gromov-transfer", criterion9);
  guarded(10, "wreath-bounds", criterion10);
  guarded(11, "metric-axioms", criterion11);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
