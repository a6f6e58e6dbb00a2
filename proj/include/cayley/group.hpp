#pragma once

#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cayley/element_set.hpp"
#include "cayley/error.hpp"

namespace cayley {

/// Size bounds for the expensive operations. Every bound is checked, never
/// silently degraded.
struct Limits {
  int max_order = 1024;      // full-table validation
  int max_lattice = 128;     // subgroup lattice enumeration
  int max_clique = 512;      // non-commuting clique number
  int max_isoclinism = 64;   // central quotient order in the isoclinism search
};

/// A finite group given by its full multiplication table.
///
/// Element 0 is the two-sided identity. Construction validates the identity,
/// the Latin-square property, associativity over all triples, and two-sided
/// inverses; an instance therefore always represents a group. Immutable after
/// construction and cheap to copy (shared table), so instances may be used
/// from many threads at once.
class FiniteGroup {
 public:
  /// The trivial group.
  FiniteGroup();

  /// Validates and adopts a square table; entry (i,j) is the product i*j.
  static FiniteGroup from_cayley_table(const std::vector<std::vector<int>>& rows,
                                       std::string name = "",
                                       int max_order = Limits().max_order);

  /// Same, from a row-major flat table of order*order entries.
  static FiniteGroup from_flat_table(int order, std::vector<int> table,
                                     std::string name = "",
                                     int max_order = Limits().max_order);

  int order() const noexcept { return d_->n; }

  /// Product with index checking.
  int product(int a, int b) const;

  /// Unchecked product, for hot loops.
  int at(int a, int b) const noexcept { return d_->table[a * d_->n + b]; }

  int inverse(int a) const;

  /// Least k >= 1 with a^k = identity.
  int element_order(int a) const;

  bool is_abelian() const noexcept { return d_->abelian; }

  const std::string& name() const noexcept { return d_->name; }

  /// Copy with a different label; the table is shared.
  FiniteGroup renamed(std::string name) const;

  const std::vector<int>& flat_table() const noexcept { return d_->table; }
  std::vector<std::vector<int>> table_rows() const;

  /// True if the two handles share one underlying table object.
  bool same_data(const FiniteGroup& o) const noexcept { return d_ == o.d_; }

  /// Entry-for-entry table equality; names are ignored.
  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.d_ == b.d_ || (a.d_->n == b.d_->n && a.d_->table == b.d_->table);
  }

 private:
  struct Data {
    int n = 1;
    std::vector<int> table;
    std::vector<int> inv;
    bool abelian = true;
    std::string name;
  };

  explicit FiniteGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  std::shared_ptr<const Data> d_;
};

/// A validated subgroup of a fixed parent group, kept in canonical form:
/// a strictly sorted, duplicate-free element list. Two subgroups of the same
/// parent are equal iff their element lists are equal.
class Subgroup {
 public:
  /// Canonicalizes and validates: must contain the identity and be closed
  /// under product and inverse.
  Subgroup(FiniteGroup parent, std::vector<int> elements);

  const FiniteGroup& parent() const noexcept { return parent_; }
  const std::vector<int>& elements() const noexcept { return elems_; }
  const ElementSet& bits() const noexcept { return bits_; }
  int order() const noexcept { return static_cast<int>(elems_.size()); }
  bool contains(int x) const noexcept { return bits_.contains(x); }

  /// Whether all members commute with each other.
  bool is_abelian() const;

  /// The subgroup as a standalone group; element i of the result is
  /// elements()[i], so the identity stays at index 0.
  FiniteGroup as_group(std::string name = "") const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.elems_ == b.elems_;
  }

 private:
  FiniteGroup parent_;
  std::vector<int> elems_;
  ElementSet bits_;
};

/// A total multiplicative map between two groups: images(a*b) = images(a)*images(b)
/// and images(0) = 0, validated at construction.
class GroupMap {
 public:
  GroupMap(FiniteGroup domain, FiniteGroup codomain, std::vector<int> images);

  const FiniteGroup& domain() const noexcept { return domain_; }
  const FiniteGroup& codomain() const noexcept { return codomain_; }
  const std::vector<int>& images() const noexcept { return images_; }

  int operator()(int a) const;

  bool is_isomorphism() const noexcept { return bijective_; }
  bool is_surjective() const;

  Subgroup kernel() const;

  /// Inverse map; requires an isomorphism.
  GroupMap inverted() const;

  /// g after f; requires f.codomain() == g.domain().
  static GroupMap compose(const GroupMap& f, const GroupMap& g);

 private:
  FiniteGroup domain_;
  FiniteGroup codomain_;
  std::vector<int> images_;
  bool bijective_ = false;
};

// Core operations. All are pure functions of immutable inputs.

/// [a,b] = a^-1 b^-1 a b.
int commutator(const FiniteGroup& g, int a, int b);

/// Least subgroup containing the generators (the trivial subgroup for none).
Subgroup generated_subgroup(const FiniteGroup& g, std::span<const int> gens);

Subgroup center(const FiniteGroup& g);

/// C_G(x): all elements commuting with x.
Subgroup centralizer(const FiniteGroup& g, int x);

/// Subgroup generated by all commutators.
Subgroup derived_subgroup(const FiniteGroup& g);

bool is_normal(const FiniteGroup& g, const Subgroup& s);

/// Quotient by a normal subgroup, together with the projection map.
/// Coset i of the quotient is the coset whose minimal representative is the
/// i-th smallest among all coset minima; the identity coset is element 0.
std::pair<FiniteGroup, GroupMap> quotient(const FiniteGroup& g, const Subgroup& n);

/// Conjugacy classes, each sorted, ordered by smallest member ({0} first).
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);

/// {a*b : a in s, b in t} as a bitset.
ElementSet set_product(const FiniteGroup& g, const ElementSet& s, const ElementSet& t);

}  // namespace cayley
