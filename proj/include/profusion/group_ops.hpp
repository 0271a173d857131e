#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "profusion/group_hom.hpp"
#include "profusion/perm_group.hpp"

namespace profusion {

inline constexpr std::size_t kDefaultSubgroupBound = 256;

bool is_prime(std::uint64_t n);
/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);
bool is_p_power(std::uint64_t n, std::uint64_t p);

Subgroup sylow_subgroup(const PermGroup& g, std::uint64_t p);

/// Throws SubgroupNotContained when `s` belongs to another group.
Subgroup centralizer(const PermGroup& g, const Subgroup& s);
Subgroup normalizer(const PermGroup& g, const Subgroup& s);
Subgroup center(const PermGroup& g);

bool is_normal(const Subgroup& n, const Subgroup& in);
bool is_normal(const PermGroup& g, const Subgroup& n);
Subgroup normal_closure(const PermGroup& g, const Subgroup& s);

/// g^-1 S g contained in T for all returned g, in increasing element order.
std::vector<Elem> transporter(const PermGroup& g, const Subgroup& s, const Subgroup& t);
std::optional<Elem> is_conjugate(const PermGroup& g, const Subgroup& s, const Subgroup& t);
std::optional<Elem> is_conjugate(const PermGroup& g, Elem x, Elem y);
/// Classes ordered by least element; each class sorted.
std::vector<std::vector<Elem>> conjugacy_classes(const PermGroup& g);

struct Quotient {
  PermGroup group;
  GroupHom projection;
  /// Least element of each coset, aligned with the coset points.
  std::vector<Elem> coset_reps;
};

/// Realizes G/N on the right cosets of N, labelled in order of least element.
/// Throws NotNormal. For N = 1 the group itself is returned with the identity.
Quotient quotient(const PermGroup& g, const Subgroup& n);

/// All subgroups in canonical order. Throws EnumerationBoundExceeded.
std::vector<Subgroup> subgroups_of(const PermGroup& g, std::size_t bound = kDefaultSubgroupBound);
/// All subgroups of `s`, as subgroups of its parent, in canonical order.
std::vector<Subgroup> subgroups_of(const Subgroup& s, std::size_t bound = kDefaultSubgroupBound);
std::vector<Subgroup> normal_subgroups(const PermGroup& g);
/// Moves a subgroup of `s.as_group()` back into the parent of `s`.
Subgroup lift_from(const Subgroup& s, const Subgroup& inner);

struct FrattiniData {
  Subgroup frattini;
  std::size_t rank = 0;
  /// Elements of P whose images form a basis of P / Phi(P).
  std::vector<Elem> basis_lifts;
  Quotient quotient;
};

/// Throws NotPGroup.
FrattiniData frattini_quotient(const PermGroup& p);

bool is_p_group(const PermGroup& g, std::uint64_t p);
/// The prime when g is a nontrivial p-group.
std::optional<std::uint64_t> prime_of_p_group(const PermGroup& g);
bool is_abelian(const PermGroup& g);
bool is_abelian(const Subgroup& s);
bool is_cyclic(const PermGroup& g);
std::uint64_t exponent(const PermGroup& g);

/// A small generating set found greedily from the given generators.
std::vector<Elem> minimal_generators(const PermGroup& g);

/// An isomorphism a -> b when one exists.
std::optional<GroupHom> find_isomorphism(const PermGroup& a, const PermGroup& b);
bool is_dihedral(const PermGroup& g);

}  // namespace profusion
