#include <algorithm>

#include "profusion/error.hpp"
#include "profusion/group_ops.hpp"
#include "profusion/tower.hpp"
#include "tower_internal.hpp"

namespace profusion {

QuotientMap::QuotientMap(GroupHom projection, Field field, std::uint32_t p)
    : projection_(std::move(projection)), field_(std::move(field)), p_(p) {
  if (!projection_.surjective()) throw Error(Errc::SurjectivityFailure, "projection is not onto");
  kernel_ = projection_.kernel();
}

QuotientMap QuotientMap::of(const PermGroup& g, const Subgroup& n, const Field& field, std::uint32_t p) {
  return QuotientMap(profusion::quotient(g, n).projection, field, p);
}

bool QuotientMap::sylow_condition(const Subgroup& q) const {
  return is_p_power(q.order(), p_) && q.intersect(kernel_).order() == p_part(kernel_.order(), p_);
}

Subgroup c_group(const PermGroup& g, const Subgroup& n, const Subgroup& q) {
  if (!is_normal(g, n)) throw Error(Errc::NotNormal, n.describe() + " is not normal");
  Subgroup meet = q.intersect(n);
  std::vector<Elem> elems;
  for (Elem x = 0; x < g.order(); ++x)
    if (std::all_of(q.elements().begin(), q.elements().end(),
                    [&](Elem y) { return meet.contains(g.commutator(x, y)); }))
      elems.push_back(x);
  Subgroup c = Subgroup::from_elements(g, std::move(elems));
  ensure(c.contains(centralizer(g, q)), "C_G(Q) lies in C_{Q,N}");
  ensure(normalizer(g, q).contains(c), "C_{Q,N} normalizes Q");
  return c;
}

BlockIdempotent nu_minus(const QuotientMap& nu, const Subgroup& q, const AlgebraElement& e) {
  if (!nu.sylow_condition(q))
    throw Error(Errc::SylowConditionViolated, q.describe() + " meets the kernel outside a Sylow subgroup");
  const PermGroup& g = nu.group();
  Subgroup below = centralizer(nu.quotient(), nu.image(q));
  CommutativeAlgebra target(below, below, nu.field());
  auto targets = primitive_idempotents(target);
  if (std::none_of(targets.begin(), targets.end(), [&](const BlockIdempotent& t) { return t.element == e; }))
    throw Error(Errc::PreconditionViolated, "idempotent is not a block of " + target.describe());

  CommutativeAlgebra source(centralizer(g, q), c_group(g, nu.kernel(), q), nu.field());
  std::optional<BlockIdempotent> found;
  std::size_t hits = 0;
  for (auto& f : primitive_idempotents(source)) {
    auto product = nu.apply(f.element) * e;
    if (product.is_zero()) continue;
    ensure(product == e, "nu of an idempotent above e fixes e");
    ++hits;
    found = std::move(f);
  }
  ensure(hits == 1, "exactly one invariant idempotent lies above e");
  return *found;
}

bool nu_minus_equivariant(const QuotientMap& nu, const Subgroup& q, const AlgebraElement& e, Elem g) {
  auto moved = nu_minus(nu, q.conjugate(g), e.conjugate(nu.projection()(g)));
  return moved.element == nu_minus(nu, q, e).element.conjugate(g);
}

BlockIdempotent lift_block(const QuotientMap& nu, const AlgebraElement& b) {
  auto below = blocks(nu.quotient(), nu.field());
  if (std::none_of(below.begin(), below.end(), [&](const BlockIdempotent& t) { return t.element == b; }))
    throw Error(Errc::PreconditionViolated, "idempotent is not a block of the quotient");
  std::optional<BlockIdempotent> found;
  std::size_t hits = 0;
  for (auto& f : blocks(nu.group(), nu.field())) {
    auto product = nu.apply(f.element) * b;
    if (product.is_zero()) continue;
    ensure(product == b, "nu of a block above b fixes b");
    ++hits;
    found = std::move(f);
  }
  ensure(hits == 1, "exactly one block lies above b");
  return *found;
}

CommutationReport brauer_commutation_check(const QuotientMap& nu, const Subgroup& p, const Subgroup& q) {
  if (!is_normal(p, q)) throw Error(Errc::NotNormalIn, p.describe() + " is not normal in " + q.describe());
  if (!nu.sylow_condition(p) || !is_p_power(q.order(), nu.prime()))
    throw Error(Errc::SylowConditionViolated, p.describe() + " meets the kernel outside a Sylow subgroup");
  const PermGroup& g = nu.group();
  const PermGroup& h = nu.quotient();
  Subgroup pbar = nu.image(p), qbar = nu.image(q);
  Subgroup acting = c_group(g, nu.kernel(), p).join(q);
  CommutativeAlgebra source(centralizer(g, p), acting, nu.field());
  Subgroup below = centralizer(h, pbar);
  CommutativeAlgebra target(below, below, nu.field());

  CommutationReport rep;
  for (std::size_t i = 0; i < source.dim(); ++i) {
    auto x = source.basis_element(i);
    auto image = nu.apply(x);
    ++rep.checked;
    if (!target.contains(image)) {
      ++rep.outside_target;
      continue;
    }
    if (nu.apply(brauer_map(g, p, q, x)) != brauer_map(h, pbar, qbar, image)) ++rep.mismatches;
  }
  return rep;
}

LiftingReport nu_minus_lifting_check(const QuotientMap& nu, const Subgroup& p, const Subgroup& q) {
  if (!q.contains(p)) throw Error(Errc::NotSubgroup, p.describe() + " is not contained in " + q.describe());
  const PermGroup& g = nu.group();
  BrauerPairs above(g, nu.field(), nu.prime());
  BrauerPairs below(nu.quotient(), nu.field(), nu.prime());
  Subgroup pbar = nu.image(p), qbar = nu.image(q);
  Subgroup c = c_group(g, nu.kernel(), p);
  LiftingReport rep;
  for (const auto& small : below.pairs_at(pbar))
    for (const auto& large : below.pairs_at(qbar)) {
      if (!below.leq(small, large)) continue;
      auto lift_small = nu_minus(nu, p, small.idempotent).element;
      auto lift_large = nu_minus(nu, q, large.idempotent).element;
      for (const auto& ps : above.pairs_at(p)) {
        if ((lift_small * ps.idempotent).is_zero()) continue;
        for (const auto& qs : above.pairs_at(q)) {
          if ((lift_large * qs.idempotent).is_zero()) continue;
          ++rep.checked;
          bool hit = std::any_of(c.elements().begin(), c.elements().end(), [&](Elem x) {
            return above.leq(BrauerPair{p, ps.idempotent.conjugate(x)}, qs).has_value();
          });
          if (hit) ++rep.found;
        }
      }
    }
  return rep;
}

GrowthReport growth_check(const QuotientMap& nu, const Subgroup& d, const AlgebraElement& b) {
  const PermGroup& g = nu.group();
  const PermGroup& h = nu.quotient();
  const std::uint32_t p = nu.prime();
  if (!is_p_power(d.order(), p)) throw Error(Errc::PreconditionViolated, d.describe() + " is not a p-subgroup");
  if (!nu.sylow_condition(d))
    throw Error(Errc::PreconditionViolated, "D n N is not a Sylow subgroup of N for D = " + d.describe());
  GrowthReport rep;
  rep.lifted_block = lift_block(nu, b);
  Subgroup dbar = nu.image(d);
  if (!is_conjugate(h, defect_group(h, b, p).defect_group, dbar))
    throw Error(Errc::PreconditionViolated, "DN/N is not a defect group of the quotient block");
  if (!is_conjugate(g, defect_group(g, rep.lifted_block.element, p).defect_group, d))
    throw Error(Errc::PreconditionViolated, "D is not a defect group of the lifted block");

  BrauerPairs above(g, nu.field(), p);
  BrauerPairs below(h, nu.field(), p);
  auto bottom = below.make_pair(Subgroup::trivial(h), b);
  std::optional<BrauerPair> top;
  for (const auto& pr : below.pairs_at(dbar))
    if (below.leq(bottom, pr)) {
      top = pr;
      break;
    }
  ensure(top.has_value(), "a defect group carries a maximal pair");
  rep.quotient_pair = *top;
  FusionSystem lower = block_fusion(below, b, *top);
  rep.quotient_morphisms = lower.morphism_count();

  auto lift = nu_minus(nu, d, top->idempotent).element;
  auto lifted_bottom = above.make_pair(Subgroup::trivial(g), rep.lifted_block.element);
  std::size_t defect_order = above.maximal_pairs(rep.lifted_block.element).representative.subgroup.order();
  for (const auto& pr : above.pairs_at(d))
    if (!(lift * pr.idempotent).is_zero()) rep.candidates.push_back(pr);
  ensure(!rep.candidates.empty(), "nu_minus(e) is a nonzero sum of blocks");

  rep.all_maximal = true;
  std::vector<FusionSystem> quotients;
  for (const auto& pr : rep.candidates) {
    bool maximal = d.order() == defect_order && above.leq(lifted_bottom, pr).has_value();
    rep.all_maximal = rep.all_maximal && maximal;
    if (!maximal) continue;
    FusionSystem upper = block_fusion(above, rep.lifted_block.element, pr);
    quotients.push_back(detail::quotient_onto(upper, d, nu.projection(), dbar));
  }
  if (quotients.empty()) return rep;
  rep.lifted_morphisms = quotients.front().morphism_count();
  rep.contained = is_subsystem(lower, quotients.front());
  rep.equal = systems_equal(lower, quotients.front());
  rep.choice_independent = std::all_of(quotients.begin(), quotients.end(),
                                       [&](const FusionSystem& f) { return systems_equal(f, quotients.front()); });
  return rep;
}

namespace detail {

FusionSystem quotient_onto(const FusionSystem& f, const Subgroup& hi, const GroupHom& down, const Subgroup& lo) {
  const PermGroup& base = f.base();
  PermGroup target = lo.as_group();
  std::vector<Elem> local(base.order());
  std::vector<Elem> kernel;
  for (Elem x = 0; x < base.order(); ++x) {
    Elem y = down(hi.elements()[x]);
    ensure(lo.contains(y), "the image of D is the lower subgroup");
    local[x] = lo.local_index(y);
    if (y == PermGroup::identity()) kernel.push_back(x);
  }
  GroupHom natural = GroupHom::from_map(base, target, std::move(local));
  auto q = quotient_fusion(f, Subgroup::from_elements(base, std::move(kernel)));
  return transport(q.system, induced_hom(q.quotient.projection, natural));
}

}  // namespace detail

}  // namespace profusion
