#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "profusion/algebra.hpp"

namespace profusion {

struct BrauerPair {
  Subgroup subgroup;
  /// Primitive idempotent of Z(kC_G(subgroup)), stored in kG.
  AlgebraElement idempotent;

  BrauerPair conjugate(Elem g) const { return {subgroup.conjugate(g), idempotent.conjugate(g)}; }
  std::string to_string() const;
  friend bool operator==(const BrauerPair& a, const BrauerPair& b) {
    return a.subgroup == b.subgroup && a.idempotent == b.idempotent;
  }
};

/// Successive pairs, each normally contained in the next.
struct InclusionChain {
  std::vector<BrauerPair> steps;
};

struct MaximalPairs {
  /// Maximal pairs whose subgroup lies in the fixed Sylow subgroup.
  std::vector<BrauerPair> pairs;
  BrauerPair representative;
  /// Number of G-conjugates of the representative.
  std::size_t orbit_size = 0;
  bool all_conjugate = false;
};

/// Brauer pairs of kG at a prime, with per-subgroup caches of the centralizer
/// algebras and their primitive idempotents.
class BrauerPairs {
 public:
  BrauerPairs(PermGroup g, Field field, std::uint32_t p);

  const PermGroup& group() const { return group_; }
  const Field& field() const { return field_; }
  std::uint32_t prime() const { return p_; }
  const Subgroup& sylow() const { return sylow_; }

  const CommutativeAlgebra& centralizer_center(const Subgroup& p) const;
  const std::vector<BlockIdempotent>& centralizer_blocks(const Subgroup& p) const;

  /// Checks that P is a p-subgroup and e a block of kC_G(P). Throws
  /// NotPSubgroup or PreconditionViolated.
  BrauerPair make_pair(const Subgroup& p, const AlgebraElement& e) const;
  std::vector<BrauerPair> pairs_at(const Subgroup& p) const;

  /// For P normal in Q: e is Q-stable and Br_Q(e) f = f. Throws NotNormalIn.
  bool normal_leq(const BrauerPair& a, const BrauerPair& b) const;
  /// Witness along the chain P, N_Q(P), N_Q(N_Q(P)), ..., Q. Throws NotSubgroup.
  std::optional<InclusionChain> leq(const BrauerPair& a, const BrauerPair& b) const;
  /// The unique pair on P below (Q, f). Throws NotSubgroup.
  BrauerPair restrict_pair(const BrauerPair& q, const Subgroup& p) const;
  /// Restricts through every subgroup R with P <= R <= Q using every
  /// admissible normalizing step and checks that all routes agree.
  bool chain_independent(const BrauerPair& q, const Subgroup& p) const;

  /// Pairs (Q, f) with (1, b) <= (Q, f) and Q in the fixed Sylow subgroup.
  std::vector<BrauerPair> block_pairs(const AlgebraElement& block) const;
  MaximalPairs maximal_pairs(const AlgebraElement& block) const;
  /// An element g with a^g = b when one exists.
  std::optional<Elem> pair_conjugator(const BrauerPair& a, const BrauerPair& b) const;

 private:
  /// Unique e on P with (P, e) normally below (Q, f); P normal in Q.
  AlgebraElement restrict_normal(const Subgroup& p, const BrauerPair& q) const;

  struct Cached {
    std::unique_ptr<CommutativeAlgebra> center;
    std::vector<BlockIdempotent> blocks;
  };
  const Cached& cached(const Subgroup& p) const;

  PermGroup group_;
  Field field_;
  std::uint32_t p_;
  Subgroup sylow_;
  mutable std::map<std::vector<Elem>, Cached> cache_;
};

}  // namespace profusion
