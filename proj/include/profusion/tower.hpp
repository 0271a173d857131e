#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "profusion/brauer_pairs.hpp"
#include "profusion/fusion.hpp"

namespace profusion {

/// The natural map kG -> k[G/N] attached to a surjection G -> G/N.
class QuotientMap {
 public:
  /// Throws SurjectivityFailure when the projection is not onto.
  QuotientMap(GroupHom projection, Field field, std::uint32_t p);
  /// Realizes G/N with `quotient`. Throws NotNormal.
  static QuotientMap of(const PermGroup& g, const Subgroup& n, const Field& field, std::uint32_t p);

  const PermGroup& group() const { return projection_.domain(); }
  const PermGroup& quotient() const { return projection_.codomain(); }
  const Subgroup& kernel() const { return kernel_; }
  const GroupHom& projection() const { return projection_; }
  const Field& field() const { return field_; }
  std::uint32_t prime() const { return p_; }

  /// QN/N.
  Subgroup image(const Subgroup& q) const { return projection_.image(q); }
  AlgebraElement apply(const AlgebraElement& x) const { return x.push_forward(projection_); }
  /// Q n N is a Sylow p-subgroup of N.
  bool sylow_condition(const Subgroup& q) const;

 private:
  GroupHom projection_;
  Subgroup kernel_;
  Field field_;
  std::uint32_t p_;
};

/// {g : [g, Q] in Q n N}. Throws NotNormal.
Subgroup c_group(const PermGroup& g, const Subgroup& n, const Subgroup& q);

/// The primitive idempotent f of Z(kC_G(Q))^C with nu(f) e = e, where C is
/// the c_group of Q and e is a block of kC_{G/N}(QN/N). Throws
/// SylowConditionViolated, PreconditionViolated or NonSplitField.
BlockIdempotent nu_minus(const QuotientMap& nu, const Subgroup& q, const AlgebraElement& e);
/// nu_minus at Q^g of e^(g N) equals nu_minus(Q, e)^g.
bool nu_minus_equivariant(const QuotientMap& nu, const Subgroup& q, const AlgebraElement& e, Elem g);

/// The unique block b~ of kG with nu(b~) b = b. Throws PreconditionViolated
/// when b is not a block of k[G/N].
BlockIdempotent lift_block(const QuotientMap& nu, const AlgebraElement& b);

struct CommutationReport {
  std::size_t checked = 0;
  /// nu(Br_Q(x)) != Br_{QN/N}(nu(x)).
  std::size_t mismatches = 0;
  /// nu(x) outside Z(kC_{G/N}(PN/N)).
  std::size_t outside_target = 0;
  bool ok() const { return checked > 0 && mismatches == 0 && outside_target == 0; }
};
/// Runs x over the orbit-sum basis of Z(kC_G(P))^(C Q) with C the c_group
/// of P. Requires P normal in Q (NotNormalIn) and the Sylow condition on P.
CommutationReport brauer_commutation_check(const QuotientMap& nu, const Subgroup& p, const Subgroup& q);

struct LiftingReport {
  std::size_t checked = 0;
  std::size_t found = 0;
  bool ok() const { return checked == found; }
};
/// For P <= Q with the Sylow condition: whenever (PN/N, c) <= (QN/N, d) and
/// (P, c~), (Q, d~) lie under nu_minus(c), nu_minus(d), searches for x in the
/// c_group of P with (P, c~^x) <= (Q, d~).
LiftingReport nu_minus_lifting_check(const QuotientMap& nu, const Subgroup& p, const Subgroup& q);

struct GrowthReport {
  BlockIdempotent lifted_block;
  BrauerPair quotient_pair;
  /// Pairs (D, e~) with nu_minus(e) e~ != 0.
  std::vector<BrauerPair> candidates;
  bool all_maximal = false;
  bool contained = false;
  bool equal = false;
  /// Every candidate gives the same quotient system.
  bool choice_independent = false;
  std::size_t quotient_morphisms = 0;
  std::size_t lifted_morphisms = 0;
  bool ok() const { return all_maximal && contained && choice_independent; }
};
/// Throws PreconditionViolated naming the failed hypothesis.
GrowthReport growth_check(const QuotientMap& nu, const Subgroup& d, const AlgebraElement& b);

/// A finite surjective system G/N_1 <- G/N_2 <- ... indexed from the
/// coarsest level. The deepest level stands in for G when no ambient group
/// is given.
struct TowerSpec {
  std::vector<PermGroup> levels;
  /// maps[i] : levels[i + 1] -> levels[i].
  std::vector<GroupHom> maps;
  std::optional<PermGroup> ambient;
  /// ambient -> levels[i], present with the ambient group.
  std::vector<GroupHom> projections;

  std::size_t depth() const { return levels.size(); }
  const PermGroup& deepest() const { return levels.back(); }
  /// Throws SurjectivityFailure or PreconditionViolated.
  void validate() const;
  /// levels[from] -> levels[to] for to <= from.
  GroupHom down(std::size_t from, std::size_t to) const;
  /// N_i as a subgroup of the deepest level.
  Subgroup kernel_at(std::size_t level) const;
  /// N_i as a subgroup of the ambient group. Throws PreconditionViolated
  /// without an ambient group.
  Subgroup ambient_kernel(std::size_t level) const;
  /// False only when an ambient group maps onto the deepest level with a
  /// nontrivial kernel.
  bool reaches_trivial() const;
};

/// Levels G/N_i for a descending chain of normal subgroups of G.
TowerSpec tower_from_chain(const PermGroup& g, const std::vector<Subgroup>& chain);

/// Parses a tower file in one of two layouts. Levels, coarsest first, each
/// in the group text format, with generator images for every connecting map
/// and an optional ambient group with one projection per level:
///
///     level
///     S3
///     level
///     S4
///     map 1          # images in level 0 of the generators of level 1
///     (0 1)
///     (0 1 2)
///
/// or one group and a descending chain of normal subgroups, each given by
/// generators (an empty block is the trivial subgroup):
///
///     group
///     S4
///     normal
///     (0 1)(2 3)
///     (0 2)(1 3)
///     normal
///
/// Throws ParseError, or the validation errors of TowerSpec.
TowerSpec parse_tower_text(std::string_view text);
TowerSpec load_tower(const std::string& path);

/// Per-level Brauer pair data and step maps of a tower.
class TowerContext {
 public:
  TowerContext(TowerSpec tower, Field field, std::uint32_t p);

  const TowerSpec& tower() const { return tower_; }
  const Field& field() const { return field_; }
  std::uint32_t prime() const { return p_; }
  std::size_t depth() const { return tower_.depth(); }
  const BrauerPairs& pairs(std::size_t level) const { return *pairs_.at(level); }
  /// levels[i + 1] -> levels[i].
  const QuotientMap& step(std::size_t i) const { return steps_.at(i); }
  /// PN_i/N_i for P in the deepest level.
  Subgroup image(const Subgroup& p, std::size_t level) const;
  /// Least i0 with P n N_i Sylow in N_i for all i >= i0.
  std::size_t sylow_threshold(const Subgroup& p) const;

 private:
  TowerSpec tower_;
  Field field_;
  std::uint32_t p_;
  std::vector<std::unique_ptr<BrauerPairs>> pairs_;
  std::vector<QuotientMap> steps_;
  std::vector<GroupHom> from_deepest_;
};

/// Primitive idempotents e_i of Z(kC_{G/N_i}(PN_i/N_i)) for i >= start with
/// nu_minus(e_i) e_{i+1} != 0.
struct CompatibleIdempotentSequence {
  Subgroup subgroup;
  std::size_t start = 0;
  std::vector<AlgebraElement> idempotents;

  const AlgebraElement& at(std::size_t level) const { return idempotents.at(level - start); }
  /// Agreement from the later of the two starts on.
  bool equivalent(const CompatibleIdempotentSequence& other) const;
};

/// Idempotents e' at level + 1 with nu_minus(e) e' != 0.
std::vector<AlgebraElement> compatible_successors(const TowerContext& ctx, const Subgroup& p, std::size_t level,
                                                  const AlgebraElement& e);
/// Extends a seed at `level` by the first successor at each step. Throws
/// SeedIncompatible when the seed is not a block of the centralizer or sits
/// below the Sylow threshold.
CompatibleIdempotentSequence compatible_sequence(const TowerContext& ctx, const Subgroup& p, std::size_t level,
                                                 const AlgebraElement& seed);
bool is_compatible(const TowerContext& ctx, const CompatibleIdempotentSequence& s);

/// A block b_s at level s; deeper levels use lift_block.
struct TowerBlock {
  std::size_t level = 0;
  AlgebraElement idempotent;
};

/// Lifts of the seed block at every level from the seed on.
std::vector<AlgebraElement> block_sequence(const TowerContext& ctx, const TowerBlock& block);
/// The coarsest seed whose lifts end in the given block of the deepest
/// level. Throws PreconditionViolated when `b` is not a block there.
TowerBlock seed_from_deepest(const TowerContext& ctx, const AlgebraElement& b);

struct MaximalTruncatedPair {
  /// Defect group of the deepest block.
  Subgroup defect;
  std::size_t i0 = 0;
  /// Blocks b_i from the seed level on.
  std::size_t block_level = 0;
  std::vector<AlgebraElement> blocks;
  CompatibleIdempotentSequence sequence;
  /// (DN_i/N_i, e_i) is a maximal b_i-pair for every i >= i0.
  bool maximal_at_every_level = false;

  const AlgebraElement& block_at(std::size_t level) const;
};

/// `choice` selects among the maximal pairs on DN_i0/N_i0. Throws
/// SeedIncompatible or PreconditionViolated.
MaximalTruncatedPair maximal_truncated_pair(const TowerContext& ctx, const TowerBlock& block, std::size_t choice = 0);
/// Number of maximal pairs available as the `choice` above.
std::size_t maximal_choice_count(const TowerContext& ctx, const TowerBlock& block);

/// g in the deepest level with (D_i, e_i)^g = (D'_i, e'_i) at every level
/// from the later start on. Throws NoCommonConjugator.
Elem common_conjugator(const TowerContext& ctx, const MaximalTruncatedPair& a, const MaximalTruncatedPair& b);

struct LevelStabilization {
  std::size_t level = 0;
  /// Least m >= level with stationary quotients from m on.
  std::size_t least = 0;
  std::size_t mu = 0;
  /// mu lies beyond the deepest level; those levels repeat the deepest.
  bool virtual_level = false;
  /// Deeper levels compared against level mu and found equal.
  std::vector<std::size_t> equal_levels;
  bool monotone = true;
  std::size_t morphisms = 0;
};

struct StabilizationReport {
  MaximalTruncatedPair pair;
  std::size_t i0 = 0;
  std::vector<LevelStabilization> levels;
  /// F_i on DN_i/N_i for i >= i0.
  std::vector<FusionSystem> level_systems;
  /// F_mu(i) / ((D n N_i)N_mu(i)/N_mu(i)) carried onto DN_i/N_i.
  std::vector<FusionSystem> limit_quotients;
  bool strictly_increasing = false;
  bool ok() const;
};

/// Offset of the stationary tail of an ascending chain of systems on one
/// group. Throws DepthInsufficient when the last step still grows and the
/// chain cannot be extended.
std::size_t stationary_start(const std::vector<FusionSystem>& chain, bool may_extend);
/// max(least, previous + 1). Throws DepthInsufficient past `depth` unless
/// the tower may be extended by repeating its deepest level.
std::size_t next_mu(std::size_t least, std::optional<std::size_t> previous, std::size_t depth, bool may_extend);

/// Throws DepthInsufficient when the quotient chain is still growing at the
/// deepest level of a tower that does not reach the trivial subgroup.
StabilizationReport stabilization_mu(const TowerContext& ctx, const TowerBlock& block);

struct EmbeddingReport {
  std::size_t level = 0;
  bool contained = false;
  bool equal = false;
  std::size_t level_morphisms = 0;
  std::size_t limit_morphisms = 0;
};
/// Throws DepthInsufficient below i0 or past the deepest level.
EmbeddingReport embedding_check(const TowerContext& ctx, const TowerBlock& block, std::size_t level);

struct CommonLevel {
  /// Order of the shared kernel.
  std::size_t kernel_order = 0;
  std::string towers;
  bool identical = false;
  bool conjugate = false;
};

struct IndependenceReport {
  /// Kernel orders of the interleaved chain.
  std::vector<std::size_t> interleaved;
  std::vector<CommonLevel> common;
  bool ok() const;
};

/// Both towers need the same ambient group; `block` is a block of its group
/// algebra. Throws NotInterleavable.
IndependenceReport independence_check(const TowerSpec& a, const TowerSpec& b, const AlgebraElement& block,
                                      const Field& field, std::uint32_t p);

struct TameQuotientReport {
  std::string family;
  std::size_t order = 0;
  struct Entry {
    std::size_t kernel_order = 0;
    bool abelian = false;
    bool dihedral = false;
  };
  std::vector<Entry> quotients;
  bool ok() const;
};
/// Throws UnsupportedFamily outside dihedral, semidihedral and generalized
/// quaternion groups of order 8 to 64.
TameQuotientReport tame_quotient_check(const PermGroup& p);

/// Fusion systems on a surjective system of groups, coarsest first.
struct FusionTower {
  std::vector<FusionSystem> systems;
  /// maps[i] : base of systems[i + 1] -> base of systems[i].
  std::vector<GroupHom> maps;
};

struct DihedralLevelReport {
  std::size_t level = 0;
  std::size_t order = 0;
  bool skipped = false;
  std::string reason;
  /// Saturation is taken on trust from the provenance.
  bool saturation_flagged = false;
  std::size_t cyclic_or_dihedral_checked = 0;
  bool large_subgroups_ok = true;
  std::size_t klein_fours = 0;
  /// Every Klein four preimage is dihedral of order >= 8.
  bool preimages_dihedral = true;
  /// The image of Aut(W) in Aut(V) is a 2-group and covers Aut(V).
  bool klein_images_ok = true;
  bool nilpotent = false;
  bool equals_inner = false;
  bool certified() const { return skipped || (large_subgroups_ok && klein_images_ok && nilpotent && equals_inner); }
};

struct DihedralReport {
  std::vector<DihedralLevelReport> levels;
  bool ok() const;
};

/// Certifies every non-top level on a dihedral group of order >= 8 as the
/// inner system. Throws NotDihedralBase or SurjectivityFailure.
DihedralReport dihedral_triviality_check(const FusionTower& tower);

struct BijectionStep {
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t blocks = 0;
  std::size_t to_blocks = 0;
  std::size_t to_zero = 0;
  bool ok = true;
};

struct BijectionReport {
  /// Levels kept after thinning, deepest last.
  std::vector<std::size_t> kept;
  std::vector<BijectionStep> steps;
  /// Compatible idempotent sequences over the kept levels past the first.
  std::size_t full_sequences = 0;
  /// Primitive idempotents of Z(kC_G(P)).
  std::size_t idempotents = 0;
  /// Compatible families of blocks of kC_G(P)N_i/N_i, and those lifting to a
  /// unique compatible sequence.
  std::size_t families = 0;
  std::size_t lifted = 0;
  bool forward_ok = true;
  bool bijective = false;
  bool ok() const;
};

/// Throws ThinningFailed when the chain does not reach the trivial subgroup.
BijectionReport centralizer_bijection_check(const TowerContext& ctx, const Subgroup& p);

}  // namespace profusion
