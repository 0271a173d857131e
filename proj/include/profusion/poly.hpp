#pragma once

#include <string>
#include <utility>
#include <vector>

#include "profusion/ffield.hpp"

namespace profusion {

/// Univariate polynomial over a Field, coefficients low degree first,
/// trailing zeros trimmed (the zero polynomial has no coefficients).
class Poly {
 public:
  Poly() = default;
  Poly(Field field, std::vector<FqElem> coeffs);

  static Poly zero(const Field& f) { return Poly(f, {}); }
  static Poly constant(const Field& f, FqElem c) { return Poly(f, {c}); }
  static Poly x(const Field& f) { return Poly(f, {Field::zero(), Field::one()}); }
  /// x - r.
  static Poly linear(const Field& f, FqElem root);

  const Field& field() const { return field_; }
  const std::vector<FqElem>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  FqElem leading() const { return c_.empty() ? Field::zero() : c_.back(); }
  FqElem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Field::zero(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == Field::one(); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scale(FqElem k) const;
  Poly monic() const;
  FqElem eval(FqElem x) const;
  Poly derivative() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  std::string to_string() const;

 private:
  void trim();
  Field field_;
  std::vector<FqElem> c_;
};

/// Throws ZeroPolynomial when dividing by zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// Monic gcd (zero only when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);
Poly powmod(const Poly& base, std::uint64_t e, const Poly& mod);
/// Polynomial g with g^p = f; requires f' = 0.
Poly pth_root(const Poly& f);

struct Factor {
  Poly poly;
  int multiplicity;
};

/// Monic irreducible factors with multiplicities, sorted by (degree,
/// coefficients). The leading coefficient of `f` is dropped. Throws
/// ZeroPolynomial.
std::vector<Factor> factor(const Poly& f);
bool is_irreducible(const Poly& f);
/// Distinct roots in increasing encoding.
std::vector<FqElem> roots(const Poly& f);

}  // namespace profusion
