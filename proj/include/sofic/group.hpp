#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sofic {

// Group elements are plain values whose meaning depends on the family they
// belong to:
//   free     -> word holds letters +(i+1) for generator i, -(i+1) for its inverse
//   lattice  -> word holds the integer coordinates
//   finite   -> word holds a single table index
//   product  -> parts holds one element per factor
// Every operation returns normal forms, so == is equality in the group.
struct Element {
  std::vector<std::int64_t> word;
  std::vector<Element> parts;

  friend bool operator==(const Element&, const Element&) = default;
  friend std::strong_ordering operator<=>(const Element& a, const Element& b) {
    if (auto c = a.word <=> b.word; c != 0) return c;
    return a.parts <=> b.parts;
  }
};

enum class FamilyKind { free, lattice, finite, product };

/// Multiplication table of a finite group. The constructor checks closure,
/// identity, inverses and (exhaustively) associativity.
class FiniteTable {
 public:
  FiniteTable(std::vector<std::string> labels, const std::string& identity,
              std::vector<std::vector<std::size_t>> table);

  std::size_t size() const { return labels_.size(); }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inv(std::size_t a) const { return inverse_[a]; }
  const std::string& label(std::size_t a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<std::size_t>>& rows() const { return table_; }
  std::optional<std::size_t> find(std::string_view label) const;

 private:
  std::vector<std::string> labels_;
  std::size_t identity_ = 0;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
};

class GroupFamily {
 public:
  static GroupFamily free(std::size_t rank);
  static GroupFamily lattice(std::size_t dim);
  static GroupFamily finite(FiniteTable table);
  static GroupFamily product(std::vector<GroupFamily> factors);

  /// Z/n with labels "0".."n-1".
  static GroupFamily cyclic(std::size_t n);
  /// Sym(n) for n <= 5, labels in one-line notation, e.g. "213".
  static GroupFamily symmetric(std::size_t n);

  FamilyKind kind() const;
  /// Free rank or lattice dimension; zero for the other kinds.
  std::size_t rank() const;
  const FiniteTable& table() const;
  const std::vector<GroupFamily>& factors() const;

  Element identity() const;
  Element mul(const Element& x, const Element& y) const;
  Element inv(const Element& x) const;
  Element pow(const Element& x, std::int64_t k) const;
  bool is_identity(const Element& x) const { return x == identity(); }

  /// True iff x is a well-formed normal form of this family.
  bool belongs(const Element& x) const;
  /// Throws Error(family_mismatch) unless belongs(x).
  void require(const Element& x) const;

  /// Standard symmetric generating set: a_i^{+-1}, +-e_i, all non-identity
  /// elements of a finite table, or the embedded factor generators.
  std::vector<Element> generators() const;

  bool is_abelian() const;
  /// Lattices, finite groups, free groups of rank one and products thereof.
  bool is_amenable() const;
  /// Number of elements for finite families (finite tables and products of them).
  std::optional<std::size_t> order() const;
  /// All elements, for finite families only.
  std::vector<Element> elements() const;

  Element parse(std::string_view text) const;
  std::string format(const Element& x) const;
  std::string describe() const;

  Element free_word(std::string_view letters) const { return parse(letters); }
  Element vec(std::vector<std::int64_t> coords) const;
  Element label(std::string_view name) const;
  Element tuple(std::vector<Element> parts) const;

  friend bool operator==(const GroupFamily& a, const GroupFamily& b);

 private:
  struct Impl;
  explicit GroupFamily(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// All products of at most `radius` generators, sorted and deduplicated.
std::vector<Element> ball(const GroupFamily& family, std::span<const Element> generators,
                          std::size_t radius);

enum class SubgroupKind { trivial, elements, sublattice, custom };

/// Membership oracle for a subgroup H together with a canonical
/// representative of each left coset xH.
class Subgroup {
 public:
  using Member = std::function<bool(const Element&)>;
  using CosetRep = std::function<Element(const Element&)>;

  static Subgroup trivial();
  /// Finite subgroup given by all of its elements (closure is checked).
  static Subgroup of_elements(const GroupFamily& family, std::vector<Element> elements);
  /// Sublattice of Z^d spanned by the given integer vectors.
  static Subgroup sublattice(const GroupFamily& family,
                             std::vector<std::vector<std::int64_t>> basis);
  /// Arbitrary subgroup; the caller supplies decidability.
  static Subgroup custom(Member member, CosetRep coset_rep);

  SubgroupKind kind() const { return kind_; }
  bool is_finite() const { return kind_ == SubgroupKind::trivial || kind_ == SubgroupKind::elements; }
  /// Elements of a finite subgroup (the identity alone for the trivial one).
  std::vector<Element> finite_elements(const GroupFamily& family) const;
  /// Echelon rows of a sublattice (positive pivots).
  const std::vector<std::vector<std::int64_t>>& echelon() const { return echelon_; }

  bool contains(const GroupFamily& family, const Element& x) const;
  Element coset_rep(const GroupFamily& family, const Element& x) const;
  /// Representatives of G/H when the quotient is finite and enumerable.
  std::optional<std::vector<Element>> coset_reps(const GroupFamily& family) const;

 private:
  SubgroupKind kind_ = SubgroupKind::trivial;
  std::vector<Element> elements_;
  std::vector<std::vector<std::int64_t>> echelon_;
  Member member_;
  CosetRep coset_rep_;
};

inline bool subgroup_member(const GroupFamily& family, const Element& x, const Subgroup& sub) {
  return sub.contains(family, x);
}

/// Homomorphism out of a free group, a lattice or a finite group, given by
/// the images of the standard generators (free: a_i, lattice: e_i) or of
/// every element (finite).
class Homomorphism {
 public:
  Homomorphism(GroupFamily source, GroupFamily target, std::vector<Element> images);

  static Homomorphism identity(const GroupFamily& family);

  const GroupFamily& source() const { return source_; }
  const GroupFamily& target() const { return target_; }
  const std::vector<Element>& images() const { return images_; }

  Element operator()(const Element& x) const;

 private:
  GroupFamily source_;
  GroupFamily target_;
  std::vector<Element> images_;
};

}  // namespace sofic
