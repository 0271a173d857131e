#include "profusion/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "profusion/error.hpp"
#include "profusion/group_ops.hpp"
#include "profusion/poly.hpp"

namespace profusion {

// ---------------------------------------------------------------------------
// AlgebraElement

AlgebraElement::AlgebraElement(PermGroup group, Field field, std::vector<Term> terms)
    : group_(std::move(group)), field_(std::move(field)), terms_(std::move(terms)) {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> merged;
  for (const auto& t : terms_) {
    if (t.first >= group_.order()) throw Error(Errc::BadIndex, "algebra term outside the group");
    if (!merged.empty() && merged.back().first == t.first)
      merged.back().second = field_.add(merged.back().second, t.second);
    else
      merged.push_back(t);
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(), [](const Term& t) { return t.second == Field::zero(); }),
               merged.end());
  terms_ = std::move(merged);
}

AlgebraElement AlgebraElement::one(const PermGroup& g, const Field& f) {
  return AlgebraElement(g, f, {{PermGroup::identity(), Field::one()}});
}

AlgebraElement AlgebraElement::basis(const PermGroup& g, const Field& f, Elem x) {
  return AlgebraElement(g, f, {{x, Field::one()}});
}

AlgebraElement AlgebraElement::sum_of(const PermGroup& g, const Field& f, const std::vector<Elem>& elems) {
  std::vector<Term> terms;
  for (Elem x : elems) terms.emplace_back(x, Field::one());
  return AlgebraElement(g, f, std::move(terms));
}

AlgebraElement AlgebraElement::from_dense(const PermGroup& g, const Field& f, const FqVector& dense) {
  if (dense.size() != g.order()) throw Error(Errc::DimensionMismatch, "dense vector length differs from group order");
  std::vector<Term> terms;
  for (Elem x = 0; x < dense.size(); ++x)
    if (dense[x] != Field::zero()) terms.emplace_back(x, dense[x]);
  return AlgebraElement(g, f, std::move(terms));
}

FqElem AlgebraElement::coeff(Elem x) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), x, [](const Term& t, Elem v) { return t.first < v; });
  return (it != terms_.end() && it->first == x) ? it->second : Field::zero();
}

FqVector AlgebraElement::dense() const {
  FqVector out(group_.order(), Field::zero());
  for (const auto& [x, c] : terms_) out[x] = c;
  return out;
}

FqElem AlgebraElement::augmentation() const {
  FqElem acc = Field::zero();
  for (const auto& t : terms_) acc = field_.add(acc, t.second);
  return acc;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  std::vector<Term> terms = terms_;
  terms.insert(terms.end(), o.terms_.begin(), o.terms_.end());
  return AlgebraElement(group_, field_, std::move(terms));
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const { return *this + o.scale(field_.neg(Field::one())); }

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
  if (!group_.same_elements(o.group_)) throw Error(Errc::BaseMismatch, "product of elements of different group algebras");
  FqVector acc(group_.order(), Field::zero());
  std::vector<bool> touched(group_.order(), false);
  std::vector<Elem> support;
  for (const auto& [x, a] : terms_)
    for (const auto& [y, b] : o.terms_) {
      Elem z = group_.mul(x, y);
      acc[z] = field_.add(acc[z], field_.mul(a, b));
      if (!touched[z]) {
        touched[z] = true;
        support.push_back(z);
      }
    }
  std::vector<Term> terms;
  for (Elem z : support) terms.emplace_back(z, acc[z]);
  return AlgebraElement(group_, field_, std::move(terms));
}

AlgebraElement AlgebraElement::scale(FqElem k) const {
  std::vector<Term> terms;
  for (const auto& [x, c] : terms_) terms.emplace_back(x, field_.mul(c, k));
  return AlgebraElement(group_, field_, std::move(terms));
}

AlgebraElement AlgebraElement::conjugate(Elem g) const {
  std::vector<Term> terms;
  for (const auto& [x, c] : terms_) terms.emplace_back(group_.conj(x, g), c);
  return AlgebraElement(group_, field_, std::move(terms));
}

AlgebraElement AlgebraElement::truncate(const Subgroup& s) const {
  std::vector<Term> terms;
  for (const auto& t : terms_)
    if (s.contains(t.first)) terms.push_back(t);
  return AlgebraElement(group_, field_, std::move(terms));
}

bool AlgebraElement::supported_on(const Subgroup& s) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) { return s.contains(t.first); });
}

bool AlgebraElement::commutes_with(Elem g) const { return conjugate(g) == *this; }

bool AlgebraElement::is_central() const {
  for (Elem g : group_.generator_elems())
    if (!commutes_with(g)) return false;
  return true;
}

AlgebraElement AlgebraElement::push_forward(const GroupHom& hom) const {
  if (!hom.domain().same_elements(group_)) throw Error(Errc::BaseMismatch, "push-forward along a map from another group");
  std::vector<Term> terms;
  for (const auto& [x, c] : terms_) terms.emplace_back(hom(x), c);
  return AlgebraElement(hom.codomain(), field_, std::move(terms));
}

std::string AlgebraElement::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out << ", ";
    out << "(" << group_.perm(terms_[i].first).to_string() << ", " << field_.to_string(terms_[i].second) << ")";
  }
  out << "]";
  return out.str();
}

// ---------------------------------------------------------------------------
// CommutativeAlgebra

CommutativeAlgebra::CommutativeAlgebra(const Subgroup& support, const Subgroup& acting, const Field& field)
    : support_(support), acting_(acting), field_(field) {
  const PermGroup& g = support_.parent();
  if (!acting_.parent().same_elements(g)) throw Error(Errc::SubgroupNotContained, "acting group in another group");
  for (Elem k : acting_.generators())
    for (Elem h : support_.generators())
      if (!support_.contains(g.conj(h, k)))
        throw Error(Errc::PreconditionViolated, "acting group does not normalize the support");
  const std::size_t none = static_cast<std::size_t>(-1);
  orbit_of_.assign(g.order(), none);
  for (Elem x : support_.elements()) {
    if (orbit_of_[x] != none) continue;
    std::vector<Elem> orbit{x};
    orbit_of_[x] = orbits_.size();
    for (std::size_t head = 0; head < orbit.size(); ++head)
      for (Elem k : acting_.generators()) {
        Elem y = g.conj(orbit[head], k);
        if (orbit_of_[y] == none) {
          orbit_of_[y] = orbits_.size();
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    orbits_.push_back(std::move(orbit));
  }
  const std::size_t d = dim();
  for (auto& o : orbit_of_)
    if (o == none) o = d;
  constants_.assign(d * d * d, Field::zero());
  for (std::size_t k = 0; k < d; ++k) {
    const Elem r = orbits_[k].front();
    for (std::size_t i = 0; i < d; ++i)
      for (Elem x : orbits_[i]) {
        std::size_t j = orbit_of_[g.mul(g.inv(x), r)];
        if (j == d) continue;
        FqElem& c = constants_[(i * d + j) * d + k];
        c = field_.add(c, Field::one());
      }
  }
}

AlgebraElement CommutativeAlgebra::basis_element(std::size_t i) const {
  return AlgebraElement::sum_of(group(), field_, orbits_.at(i));
}

FqVector CommutativeAlgebra::unit() const {
  FqVector u(dim(), Field::zero());
  u[orbit_of_[PermGroup::identity()]] = Field::one();
  return u;
}

FqVector CommutativeAlgebra::multiply(const FqVector& a, const FqVector& b) const {
  const std::size_t d = dim();
  if (a.size() != d || b.size() != d) throw Error(Errc::DimensionMismatch, "coordinate vector has wrong length");
  FqVector out(d, Field::zero());
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i] == Field::zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b[j] == Field::zero()) continue;
      FqElem ab = field_.mul(a[i], b[j]);
      const FqElem* row = &constants_[(i * d + j) * d];
      for (std::size_t k = 0; k < d; ++k)
        if (row[k] != Field::zero()) out[k] = field_.add(out[k], field_.mul(ab, row[k]));
    }
  }
  return out;
}

FqVector CommutativeAlgebra::power(const FqVector& a, std::uint64_t e) const {
  FqVector result = unit();
  FqVector base = a;
  while (e > 0) {
    if (e & 1) result = multiply(result, base);
    e >>= 1;
    if (e) base = multiply(base, base);
  }
  return result;
}

AlgebraElement CommutativeAlgebra::element(const FqVector& coords) const {
  if (coords.size() != dim()) throw Error(Errc::DimensionMismatch, "coordinate vector has wrong length");
  std::vector<AlgebraElement::Term> terms;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (coords[i] == Field::zero()) continue;
    for (Elem x : orbits_[i]) terms.emplace_back(x, coords[i]);
  }
  return AlgebraElement(group(), field_, std::move(terms));
}

FqVector CommutativeAlgebra::coordinates(const AlgebraElement& x) const {
  if (!x.supported_on(support_))
    throw Error(Errc::SupportOutsideCentralizer, "element has support outside " + support_.describe());
  FqVector out(dim(), Field::zero());
  for (std::size_t i = 0; i < dim(); ++i) {
    FqElem c = x.coeff(orbits_[i].front());
    for (Elem y : orbits_[i])
      if (x.coeff(y) != c) throw Error(Errc::NotInvariant, "element is not constant on orbits of " + acting_.describe());
    out[i] = c;
  }
  return out;
}

bool CommutativeAlgebra::contains(const AlgebraElement& x) const {
  try {
    coordinates(x);
    return true;
  } catch (const Error&) {
    return false;
  }
}

namespace {

/// Smallest power q^k with q^k >= n.
std::uint64_t frobenius_exponent(std::uint64_t q, std::size_t n) {
  std::uint64_t e = q;
  while (e < n) e *= q;
  return e;
}

}  // namespace

std::size_t CommutativeAlgebra::radical_dim() const {
  const std::size_t d = dim();
  const std::uint64_t e = frobenius_exponent(field_.size(), d);
  FqMatrix m(field_, d, d);
  for (std::size_t i = 0; i < d; ++i) {
    FqVector b(d, Field::zero());
    b[i] = Field::one();
    FqVector img = power(b, e);
    for (std::size_t r = 0; r < d; ++r) m.at(r, i) = img[r];
  }
  return d - rank(m);
}

bool CommutativeAlgebra::verify_structure() const {
  const std::size_t d = dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (structure_constant(i, j, k) != structure_constant(j, i, k)) return false;
  const std::size_t step = d <= 12 ? 1 : d / 6;
  auto unit_vec = [&](std::size_t i) {
    FqVector v(d, Field::zero());
    v[i] = Field::one();
    return v;
  };
  for (std::size_t i = 0; i < d; i += step)
    for (std::size_t j = 0; j < d; j += step)
      for (std::size_t l = 0; l < d; l += step) {
        auto lhs = multiply(multiply(unit_vec(i), unit_vec(j)), unit_vec(l));
        auto rhs = multiply(unit_vec(i), multiply(unit_vec(j), unit_vec(l)));
        if (lhs != rhs) return false;
      }
  return true;
}

std::string CommutativeAlgebra::describe() const {
  std::ostringstream out;
  if (support_ == acting_)
    out << "Z(k" << support_.describe() << ")";
  else
    out << "Z(k" << support_.describe() << ")^" << acting_.describe();
  return out.str();
}

CommutativeAlgebra center_basis(const PermGroup& g, const Field& field) {
  Subgroup whole = Subgroup::whole(g);
  return CommutativeAlgebra(whole, whole, field);
}

// ---------------------------------------------------------------------------
// Idempotents

namespace {

/// Minimal polynomial of z inside the unital algebra eA (unit e).
Poly minimal_polynomial(const CommutativeAlgebra& a, const FqVector& e, const FqVector& z) {
  const Field& f = a.field();
  const std::size_t d = a.dim();
  std::vector<FqVector> powers{e};
  for (;;) {
    FqVector next = a.multiply(powers.back(), z);
    FqMatrix m(f, d, powers.size());
    for (std::size_t c = 0; c < powers.size(); ++c)
      for (std::size_t r = 0; r < d; ++r) m.at(r, c) = powers[c][r];
    if (auto sol = solve(m, next)) {
      std::vector<FqElem> coeffs;
      for (auto c : *sol) coeffs.push_back(f.neg(c));
      coeffs.push_back(Field::one());
      return Poly(f, std::move(coeffs));
    }
    powers.push_back(std::move(next));
    ensure(powers.size() <= d + 1, "minimal polynomial degree bound");
  }
}

}  // namespace

std::vector<BlockIdempotent> primitive_idempotents(const CommutativeAlgebra& a) {
  const Field& f = a.field();
  const std::size_t d = a.dim();
  const std::uint64_t e_pow = frobenius_exponent(f.size(), d);
  std::vector<FqVector> idempotents{a.unit()};
  for (std::size_t b = 0; b < d; ++b) {
    FqVector basis(d, Field::zero());
    basis[b] = Field::one();
    std::vector<FqVector> refined;
    for (const auto& e : idempotents) {
      FqVector z = a.power(a.multiply(basis, e), e_pow);
      Poly minpoly = minimal_polynomial(a, e, z);
      auto factors = factor(minpoly);
      std::vector<FqElem> roots;
      for (const auto& fac : factors) {
        if (fac.poly.degree() != 1)
          throw Error(Errc::NonSplitField, "semisimple quotient of " + a.describe() + " needs a larger field than GF(" +
                                               std::to_string(f.size()) + ")");
        ensure(fac.multiplicity == 1, "semisimple element has squarefree minimal polynomial");
        roots.push_back(f.neg(fac.poly.coeff(0)));
      }
      if (roots.size() == 1) {
        refined.push_back(e);
        continue;
      }
      for (std::size_t j = 0; j < roots.size(); ++j) {
        FqVector piece = e;
        for (std::size_t l = 0; l < roots.size(); ++l) {
          if (l == j) continue;
          FqVector factor_vec(d);
          FqElem denom_inv = f.inv(f.sub(roots[j], roots[l]));
          for (std::size_t k = 0; k < d; ++k)
            factor_vec[k] = f.mul(f.sub(z[k], f.mul(roots[l], e[k])), denom_inv);
          piece = a.multiply(piece, factor_vec);
        }
        refined.push_back(std::move(piece));
      }
    }
    idempotents = std::move(refined);
  }
  ensure(idempotents.size() == d - a.radical_dim(), "idempotent count equals dim A/rad A");
  std::vector<BlockIdempotent> out;
  const std::string ambient = a.describe();
  for (const auto& e : idempotents) {
    ensure(a.multiply(e, e) == e, "computed element is idempotent");
    out.push_back(BlockIdempotent{a.element(e), ambient});
  }
  std::sort(out.begin(), out.end(), [](const BlockIdempotent& x, const BlockIdempotent& y) { return x.element < y.element; });
  return out;
}

Field splitting_field(const PermGroup& g, std::uint32_t p) {
  return Field::make(p, splitting_degree(p, exponent(g)));
}

std::vector<BlockIdempotent> blocks(const PermGroup& g, const Field& field) {
  return primitive_idempotents(center_basis(g, field));
}

bool block_count_stable(const PermGroup& g, const Field& field) {
  Field bigger = Field::make(field.characteristic(), 2 * field.degree());
  return blocks(g, field).size() == blocks(g, bigger).size();
}

// ---------------------------------------------------------------------------
// Brauer map and defect groups

AlgebraElement brauer_map(const PermGroup& g, const Subgroup& p, const Subgroup& q, const AlgebraElement& x) {
  if (!is_normal(p, q)) throw Error(Errc::NotNormalIn, p.describe() + " is not normal in " + q.describe());
  Subgroup cp = centralizer(g, p);
  if (!x.supported_on(cp)) throw Error(Errc::SupportOutsideCentralizer, "element not supported on C_G(P)");
  for (Elem h : q.generators())
    if (!x.commutes_with(h)) throw Error(Errc::NotInvariant, "element is not invariant under " + q.describe());
  return x.truncate(centralizer(g, q));
}

DefectResult defect_group(const PermGroup& g, const AlgebraElement& block, std::uint32_t p) {
  Subgroup sylow = sylow_subgroup(g, p);
  auto subs = subgroups_of(sylow);
  DefectResult result;
  std::size_t best = 0;
  for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
    if (it->order() < best) break;
    if (block.truncate(centralizer(g, *it)).is_zero()) continue;
    best = it->order();
    result.maximizers.push_back(*it);
  }
  ensure(!result.maximizers.empty(), "trivial subgroup always has nonzero Brauer image");
  std::sort(result.maximizers.begin(), result.maximizers.end());
  result.defect_group = result.maximizers.front();
  result.maximizers_conjugate = true;
  for (const auto& m : result.maximizers)
    if (!is_conjugate(g, result.defect_group, m)) result.maximizers_conjugate = false;
  return result;
}

const BlockIdempotent& principal_of(const std::vector<BlockIdempotent>& blocks) {
  for (const auto& b : blocks)
    if (b.element.augmentation() == Field::one()) return b;
  throw Error(Errc::InternalInvariant, "no block with augmentation 1");
}

BlockIdempotent principal_block(const PermGroup& g, const Field& field) { return principal_of(blocks(g, field)); }

AlgebraElement principal_block_of_subgroup(const Subgroup& n, const Field& field) {
  CommutativeAlgebra z(n, n, field);
  return principal_of(primitive_idempotents(z)).element;
}

std::size_t left_ideal_dim(const AlgebraElement& x) {
  const PermGroup& g = x.group();
  RowSpace span(x.field(), g.order());
  for (Elem h = 0; h < g.order(); ++h) span.insert((AlgebraElement::basis(g, x.field(), h) * x).dense());
  return span.rank();
}

NormalPrincipalReport normal_principal_check(const PermGroup& g, const Subgroup& n, const Field& field) {
  if (!is_normal(g, n)) throw Error(Errc::NotNormal, n.describe() + " is not normal");
  NormalPrincipalReport r;
  r.idempotent = principal_block_of_subgroup(n, field);
  r.idempotent_central = r.idempotent.is_central();
  r.ideal_dim = left_ideal_dim(r.idempotent);
  Quotient q = quotient(g, n);
  r.quotient_order = q.group.order();
  r.surjective = r.idempotent.push_forward(q.projection) == AlgebraElement::one(q.group, field);
  r.isomorphism = r.surjective && r.ideal_dim == r.quotient_order;
  r.p_divides_normal = n.order() % field.characteristic() == 0;
  r.criterion_holds = r.isomorphism == !r.p_divides_normal;
  return r;
}

std::vector<std::size_t> radical_layers(const PermGroup& p, const Field& field) {
  if (!prime_of_p_group(p) && p.order() != 1) throw Error(Errc::NotPGroup, "radical layers need a p-group");
  if (p.order() > 1 && *prime_of_p_group(p) != field.characteristic())
    throw Error(Errc::PreconditionViolated, "group order is prime to the characteristic");
  const std::size_t n = p.order();
  auto one = AlgebraElement::one(p, field);
  std::vector<AlgebraElement> gens_minus_one;
  for (Elem g : p.generator_elems()) gens_minus_one.push_back(one - AlgebraElement::basis(p, field, g));
  std::vector<std::size_t> dims{n};
  std::vector<AlgebraElement> layer;
  for (Elem h = 0; h < n; ++h) layer.push_back(AlgebraElement::basis(p, field, h));
  for (;;) {
    RowSpace next(field, n);
    std::vector<AlgebraElement> next_basis;
    for (const auto& v : layer)
      for (const auto& h : gens_minus_one) {
        AlgebraElement w = v * h;
        if (next.insert(w.dense())) next_basis.push_back(w);
      }
    dims.push_back(next.rank());
    if (next.rank() == 0) break;
    layer = std::move(next_basis);
  }
  std::vector<std::size_t> layers;
  for (std::size_t t = 0; t + 1 < dims.size(); ++t) layers.push_back(dims[t] - dims[t + 1]);
  return layers;
}

}  // namespace profusion
