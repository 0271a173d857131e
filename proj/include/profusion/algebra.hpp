#pragma once

#include <string>
#include <utility>
#include <vector>

#include "profusion/ffield.hpp"
#include "profusion/group_hom.hpp"
#include "profusion/matrix.hpp"
#include "profusion/perm_group.hpp"

namespace profusion {

/// Sparse element of the group algebra kG: sorted (element, coefficient)
/// terms with no zero coefficients.
class AlgebraElement {
 public:
  using Term = std::pair<Elem, FqElem>;

  AlgebraElement() = default;
  AlgebraElement(PermGroup group, Field field, std::vector<Term> terms);

  static AlgebraElement zero(const PermGroup& g, const Field& f) { return AlgebraElement(g, f, {}); }
  static AlgebraElement one(const PermGroup& g, const Field& f);
  static AlgebraElement basis(const PermGroup& g, const Field& f, Elem x);
  /// Sum of the given elements with coefficient 1.
  static AlgebraElement sum_of(const PermGroup& g, const Field& f, const std::vector<Elem>& elems);
  static AlgebraElement from_dense(const PermGroup& g, const Field& f, const FqVector& dense);

  const PermGroup& group() const { return group_; }
  const Field& field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  FqElem coeff(Elem x) const;
  FqVector dense() const;
  FqElem augmentation() const;

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator*(const AlgebraElement& o) const;
  AlgebraElement scale(FqElem k) const;
  /// Conjugate by g termwise: x -> g^-1 x g.
  AlgebraElement conjugate(Elem g) const;
  /// Keeps only the terms supported on `s`.
  AlgebraElement truncate(const Subgroup& s) const;
  bool supported_on(const Subgroup& s) const;
  bool commutes_with(Elem g) const;
  bool is_central() const;
  /// Image under a group homomorphism extended linearly.
  AlgebraElement push_forward(const GroupHom& hom) const;

  /// Serialized as a sorted list of (cycle notation, coefficient digits).
  std::string to_string() const;

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.terms_ == b.terms_; }
  friend bool operator<(const AlgebraElement& a, const AlgebraElement& b) { return a.terms_ < b.terms_; }

 private:
  PermGroup group_;
  Field field_;
  std::vector<Term> terms_;
};

/// A commutative subalgebra of kG spanned by the orbit sums of a group K
/// acting by conjugation on a subgroup H (K normalizes H). With K = H this
/// is the center of kH; with K = <C, X> it is Z(kC)^X.
class CommutativeAlgebra {
 public:
  CommutativeAlgebra(const Subgroup& support, const Subgroup& acting, const Field& field);

  std::size_t dim() const { return orbits_.size(); }
  const Field& field() const { return field_; }
  const PermGroup& group() const { return support_.parent(); }
  const Subgroup& support() const { return support_; }
  const Subgroup& acting() const { return acting_; }
  const std::vector<std::vector<Elem>>& orbits() const { return orbits_; }
  /// Orbit-sum basis element i.
  AlgebraElement basis_element(std::size_t i) const;
  /// Structure constants: basis_i * basis_j = sum_k c(i,j,k) basis_k.
  FqElem structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    return constants_[(i * dim() + j) * dim() + k];
  }

  FqVector unit() const;
  FqVector multiply(const FqVector& a, const FqVector& b) const;
  FqVector power(const FqVector& a, std::uint64_t e) const;
  AlgebraElement element(const FqVector& coords) const;
  /// Coordinates of an element of the span. Throws SupportOutsideCentralizer
  /// or NotInvariant when the element is not in the subalgebra.
  FqVector coordinates(const AlgebraElement& x) const;
  bool contains(const AlgebraElement& x) const;

  /// Dimension of the Jacobson radical.
  std::size_t radical_dim() const;
  /// Checks commutativity and associativity of the structure constants.
  bool verify_structure() const;
  std::string describe() const;

 private:
  Subgroup support_;
  Subgroup acting_;
  Field field_;
  std::vector<std::vector<Elem>> orbits_;
  std::vector<std::size_t> orbit_of_;  // indexed by group element; dim() when outside
  std::vector<FqElem> constants_;
};

/// A primitive idempotent of a named commutative algebra.
struct BlockIdempotent {
  AlgebraElement element;
  std::string ambient;
  friend bool operator==(const BlockIdempotent& a, const BlockIdempotent& b) { return a.element == b.element; }
};

CommutativeAlgebra center_basis(const PermGroup& g, const Field& field);

/// Primitive idempotents sorted canonically. Throws NonSplitField.
std::vector<BlockIdempotent> primitive_idempotents(const CommutativeAlgebra& a);

/// Field with the splitting degree for g at prime p.
Field splitting_field(const PermGroup& g, std::uint32_t p);

/// Block idempotents of kG (primitive idempotents of Z(kG)).
std::vector<BlockIdempotent> blocks(const PermGroup& g, const Field& field);
/// True when the block count is unchanged over the degree-2 extension.
bool block_count_stable(const PermGroup& g, const Field& field);

/// Truncation of x to C_G(Q) after checking P normal in Q, support in
/// C_G(P) and Q-invariance. Throws NotNormalIn, SupportOutsideCentralizer,
/// NotInvariant.
AlgebraElement brauer_map(const PermGroup& g, const Subgroup& p, const Subgroup& q, const AlgebraElement& x);

struct DefectResult {
  Subgroup defect_group;
  /// All maximal-order subgroups of the chosen Sylow with nonzero image.
  std::vector<Subgroup> maximizers;
  bool maximizers_conjugate = false;
};

DefectResult defect_group(const PermGroup& g, const AlgebraElement& block, std::uint32_t p);

BlockIdempotent principal_block(const PermGroup& g, const Field& field);
/// The block of kG with augmentation 1, chosen from a precomputed list.
const BlockIdempotent& principal_of(const std::vector<BlockIdempotent>& blocks);

/// Principal block idempotent of kN computed inside kG.
AlgebraElement principal_block_of_subgroup(const Subgroup& n, const Field& field);

std::size_t left_ideal_dim(const AlgebraElement& x);

struct NormalPrincipalReport {
  std::size_t ideal_dim = 0;
  std::size_t quotient_order = 0;
  bool idempotent_central = false;
  bool surjective = false;
  bool isomorphism = false;
  bool p_divides_normal = false;
  /// isomorphism holds exactly when p does not divide |N|.
  bool criterion_holds = false;
  AlgebraElement idempotent;
};

/// Throws NotNormal.
NormalPrincipalReport normal_principal_check(const PermGroup& g, const Subgroup& n, const Field& field);

/// Dimensions of J^t / J^(t+1) for the augmentation ideal J of kP.
std::vector<std::size_t> radical_layers(const PermGroup& p, const Field& field);

}  // namespace profusion
