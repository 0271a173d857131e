#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "profusion/perm.hpp"

namespace profusion {

using Elem = std::uint32_t;

inline constexpr std::size_t kDefaultEnumerationBound = 200000;

/// A finite permutation group with its full element list.
///
/// Elements are sorted lexicographically by image vector, so the identity is
/// always index 0 and element indices are stable for a given element set.
/// The class is a cheap shared handle; copies refer to the same data.
class PermGroup {
 public:
  PermGroup();

  /// Throws NonBijection for malformed generators and EnumerationBoundExceeded
  /// when the group is larger than `bound`.
  static PermGroup from_generators(std::size_t degree, std::vector<Perm> generators,
                                   std::size_t bound = kDefaultEnumerationBound);

  /// Builds a group from a known closed, sorted element list (no closure run).
  static PermGroup from_sorted_elements(std::size_t degree, std::vector<Perm> generators,
                                        std::vector<Perm> sorted_elements);

  std::size_t degree() const;
  std::size_t order() const;
  const std::vector<Perm>& generators() const;
  const std::vector<Elem>& generator_elems() const;
  const std::vector<Perm>& elements() const;

  const Perm& perm(Elem x) const;
  std::optional<Elem> find(const Perm& p) const;
  Elem index_of(const Perm& p) const;

  static constexpr Elem identity() { return 0; }
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  /// x^g = g^-1 x g.
  Elem conj(Elem x, Elem g) const;
  Elem commutator(Elem x, Elem y) const;
  Elem pow(Elem x, std::int64_t n) const;
  std::uint64_t element_order(Elem x) const;

  /// True when both handles share the same underlying data.
  bool same_as(const PermGroup& other) const { return data_ == other.data_; }
  /// True when both groups have the same degree and the same element set.
  bool same_elements(const PermGroup& other) const;

  std::string describe() const;

 private:
  struct Data;
  explicit PermGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  static PermGroup finish(std::size_t degree, std::vector<Perm> generators, std::vector<Perm> elements);
  std::shared_ptr<const Data> data_;
};

/// A subgroup of a fixed parent group, stored as a sorted list of parent
/// element indices together with a generating list.
class Subgroup {
 public:
  Subgroup() = default;

  static Subgroup generated(const PermGroup& parent, std::span<const Elem> generators);
  /// Throws NotSubgroup when `elements` is not closed under multiplication.
  static Subgroup from_elements(const PermGroup& parent, std::vector<Elem> elements);
  static Subgroup whole(const PermGroup& parent);
  static Subgroup trivial(const PermGroup& parent);

  const PermGroup& parent() const { return parent_; }
  std::size_t order() const { return elems_.size(); }
  const std::vector<Elem>& elements() const { return elems_; }
  const std::vector<Elem>& generators() const { return gens_; }
  bool contains(Elem x) const { return x < mask_.size() && mask_[x]; }
  bool contains(const Subgroup& other) const;
  bool is_trivial() const { return elems_.size() == 1; }

  /// The subgroup as a standalone group; its element i is `elements()[i]`.
  PermGroup as_group() const;
  /// Position of a parent element inside `elements()`.
  Elem local_index(Elem x) const;

  Subgroup conjugate(Elem g) const;
  Subgroup intersect(const Subgroup& other) const;
  /// The subgroup generated by this and `other`.
  Subgroup join(const Subgroup& other) const;

  std::string describe() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elems_ == b.elems_; }
  /// Canonical order: by order, then by sorted element list.
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    if (a.elems_.size() != b.elems_.size()) return a.elems_.size() < b.elems_.size();
    return a.elems_ < b.elems_;
  }

 private:
  Subgroup(PermGroup parent, std::vector<Elem> elems, std::vector<Elem> gens);
  PermGroup parent_;
  std::vector<Elem> elems_;
  std::vector<Elem> gens_;
  std::vector<bool> mask_;
  mutable std::shared_ptr<PermGroup> standalone_;
};

}  // namespace profusion
