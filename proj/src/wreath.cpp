#include "sofic/wreath.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "sofic/error.hpp"

namespace sofic {

GraphProduct::GraphProduct(FiniteGraph gamma, FiniteTable H) : gamma_(std::move(gamma)), H_(std::move(H)) {}

GPElement GraphProduct::syllable(std::uint32_t vertex, std::size_t value) const {
  if (vertex >= gamma_.size() || value >= H_.size())
    throw Error(ErrorKind::malformed_input, "syllable outside the graph product");
  if (value == H_.identity()) return {};
  return GPElement{{Syllable{vertex, value}}};
}

void GraphProduct::push(std::vector<Syllable>& word, Syllable s) const {
  if (s.value == H_.identity()) return;
  for (std::size_t p = word.size(); p-- > 0;) {
    if (word[p].vertex == s.vertex) {
      word[p].value = H_.mul(word[p].value, s.value);
      if (word[p].value == H_.identity()) word.erase(word.begin() + static_cast<std::ptrdiff_t>(p));
      return;
    }
    if (!commute(word[p].vertex, s.vertex)) break;
  }
  word.push_back(s);
}

GPElement GraphProduct::normalize(std::vector<Syllable> rest) const {
  GPElement out;
  while (!rest.empty()) {
    std::size_t best = rest.size();
    for (std::size_t i = 0; i < rest.size(); ++i) {
      bool front = true;
      for (std::size_t j = 0; j < i && front; ++j) front = commute(rest[j].vertex, rest[i].vertex);
      if (front && (best == rest.size() || rest[i].vertex < rest[best].vertex)) best = i;
    }
    out.syllables.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

GPElement GraphProduct::from_word(const std::vector<Syllable>& word) const {
  std::vector<Syllable> reduced;
  for (const auto& s : word) {
    if (s.vertex >= gamma_.size() || s.value >= H_.size())
      throw Error(ErrorKind::malformed_input, "syllable outside the graph product");
    push(reduced, s);
  }
  return normalize(std::move(reduced));
}

GPElement GraphProduct::mul(const GPElement& x, const GPElement& y) const {
  auto word = x.syllables;
  for (const auto& s : y.syllables) push(word, s);
  return normalize(std::move(word));
}

GPElement GraphProduct::inv(const GPElement& x) const {
  std::vector<Syllable> word;
  for (auto it = x.syllables.rbegin(); it != x.syllables.rend(); ++it) word.push_back({it->vertex, H_.inv(it->value)});
  return normalize(std::move(word));
}

std::string GraphProduct::format(const GPElement& x) const {
  if (x.is_identity()) return "e";
  std::string out;
  for (const auto& s : x.syllables) {
    if (!out.empty()) out += "*";
    out += gamma_.vertex(s.vertex) + "^" + H_.label(s.value);
  }
  return out;
}

WreathElement wreath_identity(std::size_t n) { return {std::vector<GPElement>(n), Permutation::identity(n)}; }

WreathElement wreath_mul(const GraphProduct& K, const WreathElement& x, const WreathElement& y) {
  const std::size_t n = x.perm.size();
  if (y.perm.size() != n || x.coords.size() != n || y.coords.size() != n)
    throw Error(ErrorKind::size_mismatch, "wreath elements over different carriers");
  auto sinv = x.perm.inverse();
  WreathElement out{std::vector<GPElement>(n), x.perm.compose(y.perm)};
  for (std::size_t a = 0; a < n; ++a) out.coords[a] = K.mul(x.coords[a], y.coords[sinv[a]]);
  return out;
}

WreathElement wreath_inv(const GraphProduct& K, const WreathElement& x) {
  const std::size_t n = x.perm.size();
  WreathElement out{std::vector<GPElement>(n), x.perm.inverse()};
  for (std::size_t a = 0; a < n; ++a) out.coords[a] = K.inv(x.coords[x.perm[a]]);
  return out;
}

Rational dGA(const WreathElement& x, const WreathElement& y) {
  const std::size_t n = x.perm.size();
  if (y.perm.size() != n || x.coords.size() != n || y.coords.size() != n)
    throw Error(ErrorKind::size_mismatch, "wreath elements over different carriers");
  if (n == 0) return Rational(0);
  std::size_t bad = 0;
  for (std::size_t a = 0; a < n; ++a)
    bad += x.perm[a] != y.perm[a] || x.coords[x.perm[a]] != y.coords[y.perm[a]];
  return ratio(bad, n);
}

namespace {

std::vector<Vertex> extended_vertices(const OrbitCertificate& cert, const GraphAction& action) {
  std::vector<Vertex> out = cert.W;
  std::set<Vertex> seen(out.begin(), out.end());
  for (const auto& g : cert.F)
    for (const auto& w : cert.W) {
      auto v = action.apply(g, w);
      if (seen.insert(v).second) out.push_back(v);
    }
  return out;
}

}  // namespace

WreathContext::WreathContext(const OrbitCertificate& c, const GraphAction& a, const FiniteTable& H)
    : cert(c),
      action(a),
      window_product(window(a.graph, c.W), H),
      extended_product(window(a.graph, extended_vertices(c, a)), H),
      target_product(c.B, H) {
  check_well_formed(c);
  const auto& ext = extended_product.graph();
  window_slot.assign(ext.size(), -1);
  for (std::size_t j = 0; j < c.W.size(); ++j) window_slot[ext.at(c.W[j])] = static_cast<std::int64_t>(j);
}

GPElement WreathContext::lift(const GPElement& h) const {
  std::vector<Syllable> word;
  for (const auto& s : h.syllables)
    word.push_back({static_cast<std::uint32_t>(extended_product.graph().at(cert.W[s.vertex])), s.value});
  return extended_product.from_word(word);
}

WreathWord WreathContext::mul(const WreathWord& x, const WreathWord& y) const {
  const auto& ext = extended_product.graph();
  std::vector<Syllable> moved;
  for (const auto& s : y.h.syllables) {
    auto v = action.apply(x.g, ext.vertex(s.vertex));
    auto idx = ext.index_of(v);
    if (!idx)
      throw Error(ErrorKind::support_escapes_window,
                  "'" + v + "' = " + cert.family.format(x.g) + "·" + ext.vertex(s.vertex) + " is outside the window");
    moved.push_back({static_cast<std::uint32_t>(*idx), s.value});
  }
  return {extended_product.mul(x.h, extended_product.from_word(moved)), cert.family.mul(x.g, y.g)};
}

WreathElement rho_embed(const WreathContext& ctx, const WreathWord& x) {
  const auto& cert = ctx.cert;
  const auto& perm = phi_at(cert.phi, cert.family, x.g);
  WreathElement out{std::vector<GPElement>(cert.carrier), perm};
  std::vector<Syllable> truncated;
  for (const auto& s : x.h.syllables) {
    if (s.vertex >= ctx.window_slot.size())
      throw Error(ErrorKind::support_escapes_window, "syllable outside the extended window");
    if (ctx.window_slot[s.vertex] >= 0)
      truncated.push_back({static_cast<std::uint32_t>(ctx.window_slot[s.vertex]), s.value});
  }
  if (truncated.empty()) return out;
  for (std::size_t k = 0; k < cert.S.size(); ++k) {
    std::vector<Syllable> word;
    for (const auto& s : truncated) word.push_back({cert.pi[k][s.vertex], s.value});
    out.coords[cert.S[k]] = ctx.target_product.from_word(word);
  }
  return out;
}

namespace {

void words_up_to(const GraphProduct& P, std::size_t len, std::vector<Syllable>& prefix, std::set<GPElement>& out) {
  out.insert(P.from_word(prefix));
  if (prefix.size() == len) return;
  for (std::uint32_t v = 0; v < P.graph().size(); ++v)
    for (std::size_t x = 0; x < P.vertex_group().size(); ++x) {
      if (x == P.vertex_group().identity()) continue;
      prefix.push_back({v, x});
      words_up_to(P, len, prefix, out);
      prefix.pop_back();
    }
}

}  // namespace

WreathReport check_wreath_embedding(const OrbitCertificate& cert, const GraphAction& action, const FiniteTable& H,
                                    const WreathCheckOptions& options) {
  WreathContext ctx(cert, action, H);
  const auto& G = cert.family;
  WreathReport report;
  report.delta = measured_delta(cert);
  report.bound = report.delta * Rational(5);
  report.expected_separation = ratio(cert.S.size(), cert.carrier);

  std::set<GPElement> hs;
  std::vector<Syllable> prefix;
  words_up_to(ctx.window_product, options.max_syllables, prefix, hs);
  std::set<Element> gs(cert.F.begin(), cert.F.end());

  std::vector<WreathWord> corpus;
  for (const auto& h : hs)
    for (const auto& g : gs) corpus.push_back({ctx.lift(h), g});
  std::vector<WreathElement> images;
  for (const auto& x : corpus) images.push_back(rho_embed(ctx, x));

  auto id = wreath_identity(cert.carrier);
  for (const auto& h : hs) {
    if (h.is_identity()) continue;
    auto d = dGA(rho_embed(ctx, {ctx.lift(h), G.identity()}), id);
    report.min_separation = std::min(report.min_separation, d);
  }
  report.separation_holds = report.min_separation == report.expected_separation;

  auto describe = [&](const WreathWord& x) {
    return ctx.extended_product.format(x.h) + " " + G.format(x.g);
  };
  auto record = [&](const WreathWord& x, const WreathWord& y, const WreathElement& rx, const WreathElement& ry) {
    auto xy = ctx.mul(x, y);
    for (const auto& syl : xy.h.syllables)
      if (ctx.window_slot[syl.vertex] < 0) {
        ++report.skipped;
        return;
      }
    auto d = dGA(rho_embed(ctx, xy), wreath_mul(ctx.target_product, rx, ry));
    ++report.pairs;
    if (d > report.max_defect || report.worst_pair.empty()) {
      if (d > report.max_defect) report.max_defect = d;
      report.worst_pair = "(" + describe(x) + ", " + describe(y) + ")";
    }
  };
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t j = 0; j < corpus.size(); ++j) record(corpus[i], corpus[j], images[i], images[j]);

  if (options.samples > 0) {
    std::mt19937_64 rng(options.seed);
    const auto& P = ctx.window_product;
    std::vector<Element> glist(gs.begin(), gs.end());
    auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
    auto random_word = [&]() {
      std::vector<Syllable> word;
      std::size_t len = pick(5);
      for (std::size_t l = 0; l < len && P.graph().size() > 0; ++l)
        word.push_back({static_cast<std::uint32_t>(pick(P.graph().size())), pick(H.size())});
      return WreathWord{ctx.lift(P.from_word(word)), glist[pick(glist.size())]};
    };
    for (std::size_t t = 0; t < options.samples && !glist.empty(); ++t) {
      auto x = random_word(), y = random_word();
      record(x, y, rho_embed(ctx, x), rho_embed(ctx, y));
    }
  }
  report.bound_holds = report.max_defect <= report.bound;
  return report;
}

}  // namespace sofic
