#include "sofic/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <set>

#include "sofic/error.hpp"
#include "sofic/labels.hpp"

namespace sofic {

FiniteTable::FiniteTable(std::vector<std::string> labels, const std::string& identity,
                         std::vector<std::vector<std::size_t>> table)
    : labels_(std::move(labels)), table_(std::move(table)) {
  const std::size_t n = labels_.size();
  auto fail = [](const std::string& msg) { throw Error(ErrorKind::invalid_group_table, msg); };
  if (n == 0) fail("empty element list");
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) fail("empty element label");
    if (l.find_first_of("<>|") != std::string::npos) fail("label '" + l + "' uses a reserved character");
    if (!seen.insert(l).second) fail("duplicate label '" + l + "'");
  }
  auto id = find(identity);
  if (!id) fail("identity '" + identity + "' is not an element");
  identity_ = *id;
  if (table_.size() != n) fail("table must have one row per element");
  for (const auto& row : table_) {
    if (row.size() != n) fail("table rows must have one entry per element");
    for (auto v : row)
      if (v >= n) fail("table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a)
    if (table_[identity_][a] != a || table_[a][identity_] != a)
      fail("identity is not neutral for '" + labels_[a] + "'");
  inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
    if (inverse_[a] == n) fail("'" + labels_[a] + "' has no inverse");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          fail("associativity fails on (" + labels_[a] + "," + labels_[b] + "," + labels_[c] + ")");
}

std::optional<std::size_t> FiniteTable::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

struct GroupFamily::Impl {
  FamilyKind kind;
  std::size_t rank = 0;
  std::optional<FiniteTable> table;
  std::vector<GroupFamily> factors;
};

GroupFamily GroupFamily::free(std::size_t rank) {
  if (rank == 0 || rank > 26) throw Error(ErrorKind::unsupported_family, "free rank must be in [1,26]");
  return GroupFamily(std::make_shared<const Impl>(Impl{FamilyKind::free, rank, std::nullopt, {}}));
}

GroupFamily GroupFamily::lattice(std::size_t dim) {
  if (dim == 0) throw Error(ErrorKind::unsupported_family, "lattice dimension must be positive");
  return GroupFamily(std::make_shared<const Impl>(Impl{FamilyKind::lattice, dim, std::nullopt, {}}));
}

GroupFamily GroupFamily::finite(FiniteTable table) {
  return GroupFamily(std::make_shared<const Impl>(Impl{FamilyKind::finite, 0, std::move(table), {}}));
}

GroupFamily GroupFamily::product(std::vector<GroupFamily> factors) {
  if (factors.size() < 2) throw Error(ErrorKind::unsupported_family, "a product needs at least two factors");
  return GroupFamily(std::make_shared<const Impl>(Impl{FamilyKind::product, 0, std::nullopt, std::move(factors)}));
}

GroupFamily GroupFamily::cyclic(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::invalid_group_table, "cyclic group of order 0");
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  }
  return finite(FiniteTable(std::move(labels), "0", std::move(table)));
}

GroupFamily GroupFamily::symmetric(std::size_t n) {
  if (n == 0 || n > 5) throw Error(ErrorKind::unsupported_family, "symmetric groups are built for n in [1,5]");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, std::size_t> index;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    index[perms[i]] = i;
    std::string label;
    for (int v : perms[i]) label += static_cast<char>('1' + v);
    labels.push_back(label);
  }
  std::vector<std::vector<std::size_t>> table(perms.size(), std::vector<std::size_t>(perms.size()));
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b) {
      std::vector<int> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      table[a][b] = index.at(c);
    }
  std::string id = labels[0];
  return finite(FiniteTable(std::move(labels), id, std::move(table)));
}

FamilyKind GroupFamily::kind() const { return impl_->kind; }
std::size_t GroupFamily::rank() const { return impl_->rank; }

const FiniteTable& GroupFamily::table() const {
  if (!impl_->table) throw Error(ErrorKind::unsupported_family, describe() + " has no multiplication table");
  return *impl_->table;
}

const std::vector<GroupFamily>& GroupFamily::factors() const { return impl_->factors; }

Element GroupFamily::identity() const {
  switch (impl_->kind) {
    case FamilyKind::free: return {};
    case FamilyKind::lattice: return Element{std::vector<std::int64_t>(impl_->rank, 0), {}};
    case FamilyKind::finite: return Element{{static_cast<std::int64_t>(impl_->table->identity())}, {}};
    case FamilyKind::product: {
      Element e;
      for (const auto& f : impl_->factors) e.parts.push_back(f.identity());
      return e;
    }
  }
  return {};
}

bool GroupFamily::belongs(const Element& x) const {
  switch (impl_->kind) {
    case FamilyKind::free: {
      if (!x.parts.empty()) return false;
      const auto r = static_cast<std::int64_t>(impl_->rank);
      for (std::size_t i = 0; i < x.word.size(); ++i) {
        auto l = x.word[i];
        if (l == 0 || l > r || l < -r) return false;
        if (i > 0 && x.word[i - 1] == -l) return false;
      }
      return true;
    }
    case FamilyKind::lattice:
      return x.parts.empty() && x.word.size() == impl_->rank;
    case FamilyKind::finite:
      return x.parts.empty() && x.word.size() == 1 && x.word[0] >= 0 &&
             static_cast<std::size_t>(x.word[0]) < impl_->table->size();
    case FamilyKind::product: {
      if (!x.word.empty() || x.parts.size() != impl_->factors.size()) return false;
      for (std::size_t i = 0; i < x.parts.size(); ++i)
        if (!impl_->factors[i].belongs(x.parts[i])) return false;
      return true;
    }
  }
  return false;
}

void GroupFamily::require(const Element& x) const {
  if (!belongs(x)) throw Error(ErrorKind::family_mismatch, "element is not a normal form of " + describe());
}

Element GroupFamily::mul(const Element& x, const Element& y) const {
  require(x);
  require(y);
  switch (impl_->kind) {
    case FamilyKind::free: {
      Element out = x;
      for (auto l : y.word) {
        if (!out.word.empty() && out.word.back() == -l)
          out.word.pop_back();
        else
          out.word.push_back(l);
      }
      return out;
    }
    case FamilyKind::lattice: {
      Element out = x;
      for (std::size_t i = 0; i < out.word.size(); ++i) out.word[i] += y.word[i];
      return out;
    }
    case FamilyKind::finite:
      return Element{{static_cast<std::int64_t>(
                         impl_->table->mul(static_cast<std::size_t>(x.word[0]), static_cast<std::size_t>(y.word[0])))},
                     {}};
    case FamilyKind::product: {
      Element out;
      for (std::size_t i = 0; i < x.parts.size(); ++i) out.parts.push_back(impl_->factors[i].mul(x.parts[i], y.parts[i]));
      return out;
    }
  }
  return {};
}

Element GroupFamily::inv(const Element& x) const {
  require(x);
  switch (impl_->kind) {
    case FamilyKind::free: {
      Element out;
      for (auto it = x.word.rbegin(); it != x.word.rend(); ++it) out.word.push_back(-*it);
      return out;
    }
    case FamilyKind::lattice: {
      Element out = x;
      for (auto& c : out.word) c = -c;
      return out;
    }
    case FamilyKind::finite:
      return Element{{static_cast<std::int64_t>(impl_->table->inv(static_cast<std::size_t>(x.word[0])))}, {}};
    case FamilyKind::product: {
      Element out;
      for (std::size_t i = 0; i < x.parts.size(); ++i) out.parts.push_back(impl_->factors[i].inv(x.parts[i]));
      return out;
    }
  }
  return {};
}

Element GroupFamily::pow(const Element& x, std::int64_t k) const {
  Element base = k < 0 ? inv(x) : x;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  Element out = identity();
  while (e) {
    if (e & 1) out = mul(out, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return out;
}

std::vector<Element> GroupFamily::generators() const {
  std::vector<Element> gens;
  switch (impl_->kind) {
    case FamilyKind::free:
      for (std::size_t i = 0; i < impl_->rank; ++i) {
        gens.push_back(Element{{static_cast<std::int64_t>(i + 1)}, {}});
        gens.push_back(Element{{-static_cast<std::int64_t>(i + 1)}, {}});
      }
      break;
    case FamilyKind::lattice:
      for (std::size_t i = 0; i < impl_->rank; ++i)
        for (std::int64_t s : {1, -1}) {
          Element e = identity();
          e.word[i] = s;
          gens.push_back(e);
        }
      break;
    case FamilyKind::finite:
      for (std::size_t a = 0; a < impl_->table->size(); ++a)
        if (a != impl_->table->identity()) gens.push_back(Element{{static_cast<std::int64_t>(a)}, {}});
      break;
    case FamilyKind::product:
      for (std::size_t i = 0; i < impl_->factors.size(); ++i)
        for (const auto& g : impl_->factors[i].generators()) {
          Element e = identity();
          e.parts[i] = g;
          gens.push_back(e);
        }
      break;
  }
  return gens;
}

bool GroupFamily::is_abelian() const {
  switch (impl_->kind) {
    case FamilyKind::free: return impl_->rank == 1;
    case FamilyKind::lattice: return true;
    case FamilyKind::finite: {
      const auto& t = *impl_->table;
      for (std::size_t a = 0; a < t.size(); ++a)
        for (std::size_t b = 0; b < a; ++b)
          if (t.mul(a, b) != t.mul(b, a)) return false;
      return true;
    }
    case FamilyKind::product:
      return std::all_of(impl_->factors.begin(), impl_->factors.end(), [](const auto& f) { return f.is_abelian(); });
  }
  return false;
}

bool GroupFamily::is_amenable() const {
  switch (impl_->kind) {
    case FamilyKind::free: return impl_->rank == 1;
    case FamilyKind::lattice:
    case FamilyKind::finite: return true;
    case FamilyKind::product:
      return std::all_of(impl_->factors.begin(), impl_->factors.end(), [](const auto& f) { return f.is_amenable(); });
  }
  return false;
}

std::optional<std::size_t> GroupFamily::order() const {
  switch (impl_->kind) {
    case FamilyKind::finite: return impl_->table->size();
    case FamilyKind::product: {
      std::size_t n = 1;
      for (const auto& f : impl_->factors) {
        auto o = f.order();
        if (!o) return std::nullopt;
        n *= *o;
      }
      return n;
    }
    default: return std::nullopt;
  }
}

std::vector<Element> GroupFamily::elements() const {
  if (!order()) throw Error(ErrorKind::unsupported_family, describe() + " is infinite");
  std::vector<Element> out;
  if (impl_->kind == FamilyKind::finite) {
    for (std::size_t a = 0; a < impl_->table->size(); ++a) out.push_back(Element{{static_cast<std::int64_t>(a)}, {}});
    return out;
  }
  out.push_back(Element{});
  for (const auto& f : impl_->factors) {
    std::vector<Element> next;
    for (const auto& prefix : out)
      for (const auto& e : f.elements()) {
        Element x = prefix;
        x.parts.push_back(e);
        next.push_back(std::move(x));
      }
    out = std::move(next);
  }
  return out;
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::int64_t parse_coord(std::string_view text, std::string_view whole) {
  std::string t = trim(text);
  std::string_view v = t;
  if (!v.empty() && v.front() == '+') v.remove_prefix(1);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), value);
  if (v.empty() || ec != std::errc() || ptr != v.data() + v.size())
    throw Error(ErrorKind::parse_error, "bad lattice vector '" + std::string(whole) + "'");
  return value;
}

}  // namespace

Element GroupFamily::parse(std::string_view text) const {
  std::string t = trim(text);
  switch (impl_->kind) {
    case FamilyKind::free: {
      Element out;
      if (t == "1" || t.empty()) return out;
      for (char c : t) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        std::int64_t letter;
        if (c >= 'a' && c <= 'z')
          letter = c - 'a' + 1;
        else if (c >= 'A' && c <= 'Z')
          letter = -(c - 'A' + 1);
        else
          throw Error(ErrorKind::parse_error, "bad free-group word '" + t + "'");
        if (static_cast<std::size_t>(std::abs(letter)) > impl_->rank)
          throw Error(ErrorKind::family_mismatch, "generator '" + std::string(1, c) + "' outside " + describe());
        if (!out.word.empty() && out.word.back() == -letter)
          out.word.pop_back();
        else
          out.word.push_back(letter);
      }
      return out;
    }
    case FamilyKind::lattice: {
      Element out;
      if (!t.empty() && t.front() == '(') {
        if (t.back() != ')') throw Error(ErrorKind::parse_error, "bad lattice vector '" + t + "'");
        std::string_view body(t.data() + 1, t.size() - 2);
        std::size_t start = 0;
        while (true) {
          auto comma = body.find(',', start);
          out.word.push_back(parse_coord(body.substr(start, comma - start), t));
          if (comma == std::string_view::npos) break;
          start = comma + 1;
        }
      } else {
        out.word.push_back(parse_coord(t, t));
      }
      if (out.word.size() != impl_->rank)
        throw Error(ErrorKind::family_mismatch, "vector '" + t + "' has wrong dimension for " + describe());
      return out;
    }
    case FamilyKind::finite: {
      auto idx = impl_->table->find(t);
      if (!idx) throw Error(ErrorKind::parse_error, "unknown element label '" + t + "'");
      return Element{{static_cast<std::int64_t>(*idx)}, {}};
    }
    case FamilyKind::product: {
      auto pieces = split_tuple(t);
      if (pieces.size() != impl_->factors.size())
        throw Error(ErrorKind::family_mismatch, "tuple '" + t + "' has wrong arity for " + describe());
      Element out;
      for (std::size_t i = 0; i < pieces.size(); ++i) out.parts.push_back(impl_->factors[i].parse(pieces[i]));
      return out;
    }
  }
  return {};
}

std::string GroupFamily::format(const Element& x) const {
  require(x);
  switch (impl_->kind) {
    case FamilyKind::free: {
      if (x.word.empty()) return "1";
      std::string out;
      for (auto l : x.word) {
        if (!out.empty()) out += ' ';
        out += l > 0 ? static_cast<char>('a' + l - 1) : static_cast<char>('A' - l - 1);
      }
      return out;
    }
    case FamilyKind::lattice: {
      std::string out = "(";
      for (std::size_t i = 0; i < x.word.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(x.word[i]);
      }
      return out + ")";
    }
    case FamilyKind::finite: return impl_->table->label(static_cast<std::size_t>(x.word[0]));
    case FamilyKind::product: {
      std::vector<std::string> parts;
      for (std::size_t i = 0; i < x.parts.size(); ++i) parts.push_back(impl_->factors[i].format(x.parts[i]));
      return join_tuple(parts);
    }
  }
  return {};
}

std::string GroupFamily::describe() const {
  switch (impl_->kind) {
    case FamilyKind::free: return "F_" + std::to_string(impl_->rank);
    case FamilyKind::lattice: return impl_->rank == 1 ? "Z" : "Z^" + std::to_string(impl_->rank);
    case FamilyKind::finite: return "finite(" + std::to_string(impl_->table->size()) + ")";
    case FamilyKind::product: {
      std::string out;
      for (const auto& f : impl_->factors) out += (out.empty() ? "" : " x ") + f.describe();
      return out;
    }
  }
  return {};
}

Element GroupFamily::vec(std::vector<std::int64_t> coords) const {
  Element e{std::move(coords), {}};
  if (impl_->kind != FamilyKind::lattice) throw Error(ErrorKind::family_mismatch, describe() + " is not a lattice");
  require(e);
  return e;
}

Element GroupFamily::label(std::string_view name) const {
  if (impl_->kind != FamilyKind::finite) throw Error(ErrorKind::family_mismatch, describe() + " is not finite");
  return parse(name);
}

Element GroupFamily::tuple(std::vector<Element> parts) const {
  Element e{{}, std::move(parts)};
  require(e);
  return e;
}

bool operator==(const GroupFamily& a, const GroupFamily& b) {
  if (a.impl_ == b.impl_) return true;
  if (a.impl_->kind != b.impl_->kind || a.impl_->rank != b.impl_->rank) return false;
  if (a.impl_->kind == FamilyKind::finite)
    return a.impl_->table->labels() == b.impl_->table->labels() && a.impl_->table->rows() == b.impl_->table->rows() &&
           a.impl_->table->identity() == b.impl_->table->identity();
  return a.impl_->factors == b.impl_->factors;
}

std::vector<Element> ball(const GroupFamily& family, std::span<const Element> generators, std::size_t radius) {
  for (const auto& g : generators) family.require(g);
  std::set<Element> seen{family.identity()};
  std::vector<Element> frontier{family.identity()};
  for (std::size_t r = 0; r < radius && !frontier.empty(); ++r) {
    std::vector<Element> next;
    for (const auto& x : frontier)
      for (const auto& g : generators) {
        Element y = family.mul(x, g);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

Subgroup Subgroup::trivial() { return Subgroup{}; }

Subgroup Subgroup::of_elements(const GroupFamily& family, std::vector<Element> elements) {
  for (const auto& e : elements) family.require(e);
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  auto has = [&](const Element& x) { return std::binary_search(elements.begin(), elements.end(), x); };
  if (!has(family.identity())) throw Error(ErrorKind::unsupported_subgroup, "subgroup element list lacks the identity");
  for (const auto& a : elements)
    for (const auto& b : elements)
      if (!has(family.mul(a, b)))
        throw Error(ErrorKind::unsupported_subgroup, "element list is not closed: " + family.format(a) + " * " +
                                                         family.format(b) + " is missing");
  Subgroup s;
  if (elements.size() == 1) return s;
  s.kind_ = SubgroupKind::elements;
  s.elements_ = std::move(elements);
  return s;
}

Subgroup Subgroup::sublattice(const GroupFamily& family, std::vector<std::vector<std::int64_t>> basis) {
  if (family.kind() != FamilyKind::lattice)
    throw Error(ErrorKind::unsupported_subgroup, "sublattice of non-lattice family " + family.describe());
  const std::size_t d = family.rank();
  std::vector<std::vector<std::int64_t>> rows;
  for (auto& b : basis) {
    if (b.size() != d) throw Error(ErrorKind::family_mismatch, "sublattice basis vector has wrong dimension");
    if (std::any_of(b.begin(), b.end(), [](auto v) { return v != 0; })) rows.push_back(std::move(b));
  }
  // Integer row echelon form: for each column, Euclid among the remaining
  // rows leaves a single row with a positive pivot.
  std::size_t r = 0;
  for (std::size_t col = 0; col < d && r < rows.size(); ++col) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][col] != 0 && (best == rows.size() || std::abs(rows[i][col]) < std::abs(rows[best][col]))) best = i;
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        std::int64_t q = rows[i][col] / rows[r][col];
        for (std::size_t j = col; j < d; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[r][col] == 0) continue;
    if (rows[r][col] < 0)
      for (auto& v : rows[r]) v = -v;
    ++r;
  }
  rows.resize(r);
  Subgroup s;
  if (rows.empty()) return s;
  s.kind_ = SubgroupKind::sublattice;
  s.echelon_ = std::move(rows);
  return s;
}

Subgroup Subgroup::custom(Member member, CosetRep coset_rep) {
  if (!member || !coset_rep) throw Error(ErrorKind::unsupported_subgroup, "custom subgroup needs both callbacks");
  Subgroup s;
  s.kind_ = SubgroupKind::custom;
  s.member_ = std::move(member);
  s.coset_rep_ = std::move(coset_rep);
  return s;
}

std::vector<Element> Subgroup::finite_elements(const GroupFamily& family) const {
  if (kind_ == SubgroupKind::trivial) return {family.identity()};
  if (kind_ == SubgroupKind::elements) return elements_;
  throw Error(ErrorKind::unsupported_subgroup, "subgroup is not given by a finite element list");
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::vector<std::int64_t> reduce(const std::vector<std::vector<std::int64_t>>& rows, std::vector<std::int64_t> v) {
  for (const auto& row : rows) {
    std::size_t c = 0;
    while (row[c] == 0) ++c;
    std::int64_t q = floor_div(v[c], row[c]);
    if (q != 0)
      for (std::size_t j = c; j < v.size(); ++j) v[j] -= q * row[j];
  }
  return v;
}

}  // namespace

bool Subgroup::contains(const GroupFamily& family, const Element& x) const {
  family.require(x);
  switch (kind_) {
    case SubgroupKind::trivial: return family.is_identity(x);
    case SubgroupKind::elements: return std::binary_search(elements_.begin(), elements_.end(), x);
    case SubgroupKind::sublattice: {
      auto v = reduce(echelon_, x.word);
      return std::all_of(v.begin(), v.end(), [](auto c) { return c == 0; });
    }
    case SubgroupKind::custom: return member_(x);
  }
  return false;
}

Element Subgroup::coset_rep(const GroupFamily& family, const Element& x) const {
  family.require(x);
  switch (kind_) {
    case SubgroupKind::trivial: return x;
    case SubgroupKind::elements: {
      Element best = family.mul(x, elements_.front());
      for (const auto& h : elements_) best = std::min(best, family.mul(x, h));
      return best;
    }
    case SubgroupKind::sublattice: return Element{reduce(echelon_, x.word), {}};
    case SubgroupKind::custom: return coset_rep_(x);
  }
  return x;
}

std::optional<std::vector<Element>> Subgroup::coset_reps(const GroupFamily& family) const {
  if (family.order()) {
    std::set<Element> reps;
    for (const auto& g : family.elements()) reps.insert(coset_rep(family, g));
    return std::vector<Element>(reps.begin(), reps.end());
  }
  if (kind_ != SubgroupKind::sublattice || echelon_.size() != family.rank()) return std::nullopt;
  const std::size_t d = family.rank();
  std::vector<std::int64_t> bound(d);
  for (std::size_t i = 0; i < d; ++i) bound[i] = echelon_[i][i];
  std::vector<Element> reps;
  std::vector<std::int64_t> v(d, 0);
  while (true) {
    reps.push_back(Element{v, {}});
    std::size_t i = d;
    while (i > 0) {
      --i;
      if (++v[i] < bound[i]) break;
      v[i] = 0;
      if (i == 0) {
        std::sort(reps.begin(), reps.end());
        return reps;
      }
    }
  }
}

Homomorphism::Homomorphism(GroupFamily source, GroupFamily target, std::vector<Element> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  for (const auto& im : images_) target_.require(im);
  switch (source_.kind()) {
    case FamilyKind::free:
      if (images_.size() != source_.rank())
        throw Error(ErrorKind::relation_violation, "need one image per free generator");
      break;
    case FamilyKind::lattice:
      if (images_.size() != source_.rank())
        throw Error(ErrorKind::relation_violation, "need one image per lattice basis vector");
      for (std::size_t i = 0; i < images_.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
          if (target_.mul(images_[i], images_[j]) != target_.mul(images_[j], images_[i]))
            throw Error(ErrorKind::relation_violation,
                        "images of e_" + std::to_string(j + 1) + " and e_" + std::to_string(i + 1) + " do not commute");
      break;
    case FamilyKind::finite: {
      const auto& t = source_.table();
      if (images_.size() != t.size()) throw Error(ErrorKind::relation_violation, "need one image per table element");
      for (std::size_t a = 0; a < t.size(); ++a)
        for (std::size_t b = 0; b < t.size(); ++b)
          if (images_[t.mul(a, b)] != target_.mul(images_[a], images_[b]))
            throw Error(ErrorKind::relation_violation,
                        "image of " + t.label(a) + "*" + t.label(b) + " is not the product of the images");
      break;
    }
    case FamilyKind::product:
      throw Error(ErrorKind::unsupported_family, "homomorphisms out of products are given per factor");
  }
}

Homomorphism Homomorphism::identity(const GroupFamily& family) {
  std::vector<Element> images;
  switch (family.kind()) {
    case FamilyKind::free:
      for (std::size_t i = 0; i < family.rank(); ++i) images.push_back(Element{{static_cast<std::int64_t>(i + 1)}, {}});
      break;
    case FamilyKind::lattice:
      for (std::size_t i = 0; i < family.rank(); ++i) {
        Element e = family.identity();
        e.word[i] = 1;
        images.push_back(e);
      }
      break;
    case FamilyKind::finite: images = family.elements(); break;
    case FamilyKind::product: throw Error(ErrorKind::unsupported_family, "identity on a product family");
  }
  return Homomorphism(family, family, std::move(images));
}

Element Homomorphism::operator()(const Element& x) const {
  source_.require(x);
  switch (source_.kind()) {
    case FamilyKind::free: {
      Element out = target_.identity();
      for (auto l : x.word) {
        const auto& im = images_[static_cast<std::size_t>(std::abs(l)) - 1];
        out = target_.mul(out, l > 0 ? im : target_.inv(im));
      }
      return out;
    }
    case FamilyKind::lattice: {
      Element out = target_.identity();
      for (std::size_t i = 0; i < x.word.size(); ++i) out = target_.mul(out, target_.pow(images_[i], x.word[i]));
      return out;
    }
    case FamilyKind::finite: return images_[static_cast<std::size_t>(x.word[0])];
    case FamilyKind::product: break;
  }
  return target_.identity();
}

}  // namespace sofic
