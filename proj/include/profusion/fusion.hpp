#pragma once

#include <map>
#include <string>
#include <vector>

#include "profusion/brauer_pairs.hpp"
#include "profusion/group_ops.hpp"

namespace profusion {

enum class Provenance { Sylow, Block, Quotient, Image, Transported, Synthetic };
std::string provenance_name(Provenance p);

/// A fusion system on a finite p-group with every hom set stored
/// extensionally. Subgroups of the base are indexed in canonical order; a
/// morphism from subgroup i is the list of images of `subgroup(i).elements()`.
class FusionSystem {
 public:
  using Map = std::vector<Elem>;

  FusionSystem(PermGroup base, Provenance provenance);

  const PermGroup& base() const { return base_; }
  Provenance provenance() const { return provenance_; }
  const std::vector<Subgroup>& subgroups() const { return subgroups_; }
  const Subgroup& subgroup(std::size_t i) const { return subgroups_.at(i); }
  std::size_t subgroup_count() const { return subgroups_.size(); }
  /// Throws NotSubgroup when `s` is not a subgroup of the base.
  std::size_t index_of(const Subgroup& s) const;
  std::size_t index_of_elements(const std::vector<Elem>& sorted) const;

  const std::vector<Map>& homs(std::size_t i, std::size_t j) const { return homs_[i * subgroups_.size() + j]; }
  bool contains(std::size_t i, std::size_t j, const Map& m) const;
  /// Inserts a morphism, keeping the hom set sorted and duplicate free.
  void add_morphism(std::size_t i, std::size_t j, Map m);
  std::size_t morphism_count() const;

  /// Image of an element of subgroup i under a stored map.
  Elem apply(std::size_t i, const Map& m, Elem x) const;
  /// Sorted image set of a map.
  std::vector<Elem> image(const Map& m) const;

  /// Base group, subgroup list, then per-pair morphisms as generator images.
  std::string serialize() const;

 private:
  PermGroup base_;
  Provenance provenance_;
  std::vector<Subgroup> subgroups_;
  std::map<std::vector<Elem>, std::size_t> lookup_;
  std::vector<std::vector<Map>> homs_;
};

/// F_P(P).
FusionSystem inner_fusion(const PermGroup& p);
/// F_P(G), morphisms induced by conjugation in G. Throws NotPSubgroup.
FusionSystem sylow_fusion(const PermGroup& g, const Subgroup& p);
/// F_(D,e)(G,b) for a maximal b-Brauer pair (D,e). Throws NotMaximalPair.
FusionSystem block_fusion(const BrauerPairs& pairs, const AlgebraElement& block, const BrauerPair& maximal);

struct CategoryReport {
  bool identities = true;
  bool inclusions = true;
  bool injective = true;
  bool composition_closed = true;
  bool restriction_closed = true;
  bool inner_automorphisms = true;
  bool ok() const {
    return identities && inclusions && injective && composition_closed && restriction_closed && inner_automorphisms;
  }
};
CategoryReport check_category_laws(const FusionSystem& f);

bool is_strongly_closed(const FusionSystem& f, const Subgroup& s);
std::vector<Subgroup> strongly_closed_subgroups(const FusionSystem& f);

struct FusionQuotient {
  FusionSystem system;
  Quotient quotient;
  /// Morphisms dropped because they do not preserve the kernel (image systems only).
  std::size_t dropped = 0;
};

/// F/S on P/S. Throws NotStronglyClosed.
FusionQuotient quotient_fusion(const FusionSystem& f, const Subgroup& s);
/// The system on P/N generated by the images of morphisms between subgroups
/// containing N that map N onto itself. N must be normal in P (NotNormal).
FusionQuotient image_fusion(const FusionSystem& f, const Subgroup& n);

struct LiftReport {
  std::size_t checked = 0;
  std::size_t lifted = 0;
};
/// Every morphism Q -> R lifts to QS -> RS modulo S. Throws LiftNotFound
/// naming the first morphism without a lift, or NotStronglyClosed.
LiftReport quotient_morphism_check(const FusionSystem& f, const Subgroup& s);

struct MorphismReport {
  std::size_t checked = 0;
  /// Morphisms not mapping Q n ker into ker.
  std::size_t kernel_violations = 0;
  /// Induced maps missing from the target system.
  std::size_t missing = 0;
  /// Target morphisms not induced by any source morphism.
  std::size_t uncovered = 0;
  bool is_morphism() const { return kernel_violations == 0 && missing == 0; }
  bool surjective_on_morphisms() const { return uncovered == 0; }
};
/// Checks that a group epimorphism between the bases induces a morphism of
/// fusion systems. Throws BaseMismatch.
MorphismReport check_morphism(const FusionSystem& from, const FusionSystem& to, const GroupHom& alpha);

/// Aut_F(R) as a permutation group on the elements of R.
PermGroup aut_group(const FusionSystem& f, const Subgroup& r);
/// Every Aut_F(R) is a p-group.
bool is_nilpotent(const FusionSystem& f);

/// Hom-set containment and equality. Throws BaseMismatch.
bool is_subsystem(const FusionSystem& a, const FusionSystem& b);
bool systems_equal(const FusionSystem& a, const FusionSystem& b);

/// The same system carried along an isomorphism of the base.
FusionSystem transport(const FusionSystem& f, const GroupHom& iso);

}  // namespace profusion
