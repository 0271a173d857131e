#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "profusion/ffield.hpp"
#include "profusion/matrix.hpp"
#include "profusion/perm_group.hpp"

namespace profusion {

struct Arrow {
  std::size_t source = 0;
  std::size_t target = 0;
  std::string label;
};

/// A path: the vertex idempotent when `arrows` is empty, otherwise arrow
/// indices in written order, so the leftmost arrow is traversed last.
struct PathWord {
  std::size_t vertex = 0;
  std::vector<std::size_t> arrows;

  std::size_t length() const { return arrows.size(); }
  /// Orders by length, then vertex for idempotents, then arrows lexicographically.
  friend bool operator<(const PathWord& a, const PathWord& b);
  /// `vertex` is ignored once the path has an arrow.
  friend bool operator==(const PathWord& a, const PathWord& b);
};

/// Finite linear combination of paths with nonzero coefficients.
using PathSum = std::map<PathWord, FqElem>;

class Quiver {
 public:
  /// Throws PreconditionViolated on an endpoint out of range, an empty or
  /// duplicate label, or a label starting with a digit.
  Quiver(std::size_t vertices, std::vector<Arrow> arrows);
  /// One vertex with loops labelled a, b, c, ... (x1, x2, ... past 26).
  static Quiver bouquet(std::size_t loops);

  std::size_t vertex_count() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::optional<std::size_t> arrow_index(std::string_view label) const;

  std::size_t source(const PathWord& w) const;
  std::size_t target(const PathWord& w) const;
  bool is_path(const PathWord& w) const;
  static PathWord vertex(std::size_t v) { return PathWord{v, {}}; }
  /// x * y: y first, then x. Empty when x and y do not compose.
  std::optional<PathWord> compose(const PathWord& x, const PathWord& y) const;
  /// All paths of the given length in increasing order.
  std::vector<PathWord> paths_of_length(std::size_t n) const;

  /// Labels concatenated left to right; idempotents print as e<i>.
  std::string to_string(const PathWord& w) const;
  std::string to_string(const PathSum& x, const Field& field) const;
  /// Parses one path: longest label match at each position, `^k` repeats
  /// the preceding label, `e<i>` is an idempotent. Throws ParseError.
  PathWord parse_path(std::string_view text) const;
  /// Parses terms joined by + or -, each an optional integer coefficient
  /// (with optional `*`) followed by a path. Throws ParseError.
  PathSum parse_sum(std::string_view text, const Field& field) const;

 private:
  std::size_t vertices_;
  std::vector<Arrow> arrows_;
};

/// kQ / (I + J^s) for the ideal I generated by relations in J^2, held as a
/// subspace of the span of paths of length below s. Coordinates are those
/// paths ordered as PathWord; the ideal is stored in row echelon form with
/// pivots at lowest-degree terms, so the non-pivot paths form a basis of
/// standard monomials graded by the associated graded algebra.
class TruncatedAlgebra {
 public:
  /// Throws GeneratorNotInJSquared, or PreconditionViolated when s == 0 or a
  /// generator is not a combination of paths of `quiver`.
  TruncatedAlgebra(Quiver quiver, Field field, std::vector<PathSum> generators, std::size_t s);

  const Quiver& quiver() const { return quiver_; }
  const Field& field() const { return field_; }
  std::size_t truncation() const { return s_; }
  const std::vector<PathSum>& generators() const { return generators_; }

  /// Paths of length below s.
  const std::vector<PathWord>& coordinates() const { return coords_; }
  std::optional<std::size_t> coordinate(const PathWord& w) const;
  /// (I + J^s) / J^s inside the coordinate space.
  const RowSpace& ideal() const { return ideal_; }
  /// Dimension of the ideal in each degree below s, by pivot degree.
  std::vector<std::size_t> ideal_degree_dims() const;

  /// Standard monomials, increasing.
  const std::vector<PathWord>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  /// Number of standard monomials of each degree below s.
  std::vector<std::size_t> degree_dims() const;

  /// Coordinates of x modulo I + J^s, one entry per standard monomial.
  FqVector reduce(const PathSum& x) const;
  PathSum to_sum(const FqVector& coords) const;
  bool in_ideal(const PathSum& x) const;
  /// Product of basis elements i and j in standard-monomial coordinates.
  const FqVector& product(std::size_t i, std::size_t j) const { return table_[i][j]; }
  FqVector multiply(const FqVector& x, const FqVector& y) const;
  /// Checks (xy)z = x(yz) on every basis triple.
  bool associative() const;

 private:
  FqVector to_dense(const PathSum& x) const;

  Quiver quiver_;
  Field field_;
  std::vector<PathSum> generators_;
  std::size_t s_;
  std::vector<PathWord> coords_;
  std::map<PathWord, std::size_t> index_;
  RowSpace ideal_;
  std::vector<PathWord> basis_;
  std::vector<std::size_t> basis_coord_;
  std::vector<std::vector<FqVector>> table_;
};

/// A quiver with relations read from text:
///
///     vertices: 3
///     a: 0 -> 1
///     b: 1 -> 2
///     relation: ba
///
/// Throws ParseError.
struct QuiverSpec {
  Quiver quiver;
  std::vector<PathSum> relations;
};
QuiverSpec parse_quiver_text(std::string_view text, const Field& field);
QuiverSpec load_quiver(const std::string& path, const Field& field);

TruncatedAlgebra truncated_quotient(const Quiver& quiver, const std::vector<PathSum>& generators, std::size_t s,
                                    const Field& field = Field());

/// Least n in [2, bound] whose degree-n component of kQ/I vanishes, or
/// nothing. Throws PreconditionViolated when bound < 2.
std::optional<std::size_t> is_admissible(const Quiver& quiver, const std::vector<PathSum>& generators,
                                         std::size_t bound, const Field& field = Field());

/// Generator sets of I_1 >= I_2 >= ... on one quiver.
struct IdealChain {
  Quiver quiver;
  Field field;
  std::vector<std::vector<PathSum>> levels;
};

struct ChainTruncation {
  std::size_t s = 0;
  /// dim kQ/(I_n + J^s) for each level n.
  std::vector<std::size_t> dims;
  /// 1-based level from which dims stay constant to the end of the chain.
  std::size_t stable_from = 0;
  /// Degree dimensions of the stabilized quotient.
  std::vector<std::size_t> limit_degree_dims;
  /// The stabilized ideal, as pivot degree dimensions.
  std::vector<std::size_t> limit_ideal_degree_dims;
  /// Constancy is witnessed on at least two levels.
  bool witnessed(std::size_t level_count) const { return stable_from < level_count; }
};

struct ChainLimitReport {
  std::size_t levels = 0;
  std::vector<ChainTruncation> truncations;
  bool ok() const;
};

/// For s = 1..s_max checks I_(n+1) + J^s <= I_n + J^s and records where
/// dim kQ/(I_n + J^s) settles. Throws NotAChain or PreconditionViolated on
/// an empty chain.
ChainLimitReport chain_limit_check(const IdealChain& chain, std::size_t s_max);

struct GroupPresentation {
  PermGroup group;
  /// Loop i maps to 1 - generators[i].
  std::vector<Elem> generators;
  Quiver quiver;
  std::size_t truncation = 0;
  /// Basis of ker(kQ/J^s -> kP/J(kP)^s) in row echelon form.
  std::vector<PathSum> kernel;
  std::vector<std::size_t> kernel_degree_dims;
  /// dim kP/J(kP)^s.
  std::size_t target_dim = 0;
  /// Pairs of standard monomials on which the map respects products.
  std::size_t products_checked = 0;
  bool multiplicative = false;
  TruncatedAlgebra algebra;
};

/// Bouquet presentation of kP truncated at s. Generators default to lifts of
/// a basis of P / Phi(P). Throws NotPGroup, GeneratorsDoNotSpan, or
/// PreconditionViolated when s == 0 or the field characteristic is not p.
GroupPresentation group_algebra_presentation(const PermGroup& p, std::size_t s, const Field& field = Field(),
                                             std::optional<std::vector<Elem>> generators = std::nullopt);

/// Image of a word of loops under the presentation map, as a dense vector
/// over the group elements.
FqVector presentation_image(const GroupPresentation& pres, const PathWord& w);

/// Chain of presentation kernels, one level per presentation. Throws
/// PreconditionViolated when the loop counts or truncations differ.
IdealChain kernel_chain(const std::vector<GroupPresentation>& levels);

/// The three tame algebras: 1 = two loops modulo squares, 2 = a loop and a
/// 2-cycle, 3 = two 2-cycles on three vertices. Throws BadIndex, or
/// PreconditionViolated when s < 2.
TruncatedAlgebra tame_algebra(int index, std::size_t s, const Field& field = Field());

}  // namespace profusion
