#pragma once

#include <optional>
#include <span>
#include <vector>

#include "profusion/perm_group.hpp"

namespace profusion {

/// A homomorphism between permutation groups, stored as its full element map.
class GroupHom {
 public:
  GroupHom() = default;

  /// Extends generator images (aligned with `domain.generator_elems()`) to a
  /// homomorphism. Throws PreconditionViolated if the images do not respect
  /// the relations of the domain.
  static GroupHom from_generator_images(const PermGroup& domain, const PermGroup& codomain,
                                        std::span<const Elem> images);
  static std::optional<GroupHom> try_from_generator_images(const PermGroup& domain, const PermGroup& codomain,
                                                           std::span<const Elem> images);
  /// Wraps a full element map; verifies the homomorphism property on all pairs.
  static GroupHom from_map(const PermGroup& domain, const PermGroup& codomain, std::vector<Elem> map);
  static GroupHom identity(const PermGroup& group);

  const PermGroup& domain() const { return domain_; }
  const PermGroup& codomain() const { return codomain_; }
  Elem operator()(Elem x) const { return map_[x]; }
  const std::vector<Elem>& map() const { return map_; }
  std::vector<Elem> generator_images() const;

  Subgroup image() const;
  Subgroup image(const Subgroup& s) const;
  Subgroup kernel() const;
  /// Full preimage of a subgroup of the codomain.
  Subgroup preimage(const Subgroup& s) const;
  bool injective() const;
  bool surjective() const;

  /// `then` applied after this map.
  GroupHom compose(const GroupHom& then) const;

 private:
  GroupHom(PermGroup domain, PermGroup codomain, std::vector<Elem> map)
      : domain_(std::move(domain)), codomain_(std::move(codomain)), map_(std::move(map)) {}
  PermGroup domain_;
  PermGroup codomain_;
  std::vector<Elem> map_;
};

/// The map h on the codomain of `surjection` with h(surjection(x)) = map(x).
/// Throws BaseMismatch or PreconditionViolated when no such map exists.
GroupHom induced_hom(const GroupHom& surjection, const GroupHom& map);

}  // namespace profusion
