#include <gtest/gtest.h>

#include <algorithm>

#include "oracles/fusion_oracles.hpp"
#include "oracles/group_oracles.hpp"
#include "oracles/tower_oracles.hpp"
#include "profusion/constructors.hpp"
#include "profusion/error.hpp"
#include "profusion/group_ops.hpp"
#include "profusion/tower.hpp"

using namespace profusion;

namespace {

Subgroup sub(const PermGroup& g, std::initializer_list<const char*> cycles) {
  std::vector<Elem> gens;
  for (const char* c : cycles) gens.push_back(g.index_of(Perm::parse(c, g.degree())));
  return Subgroup::generated(g, gens);
}

template <typename F>
Errc error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InternalInvariant;
}

const Field kF2 = Field::make(2, 1);
const Field kF3 = Field::make(3, 1);
const Field kF4 = Field::make(2, 2);

struct S4Data {
  PermGroup g = symmetric(4);
  Subgroup v = sub(g, {"(0 1)(2 3)", "(0 2)(1 3)"});
  Subgroup a4 = sub(g, {"(0 1 2)", "(0 1)(2 3)"});
  Subgroup d8 = sylow_subgroup(g, 2);
  Subgroup one = Subgroup::trivial(g);
};

/// D16 = <a, b> with Z = <a^4>.
struct D16Data {
  PermGroup g = dihedral(16);
  Elem a = g.generator_elems()[0];
  Subgroup rot = Subgroup::generated(g, std::vector<Elem>{a});
  Subgroup z = Subgroup::generated(g, std::vector<Elem>{g.pow(a, 4)});
  Subgroup one = Subgroup::trivial(g);
};

std::vector<Elem> elems(const Subgroup& s) { return s.elements(); }

/// The invariant primitive idempotents over Q whose push meets e, by enumeration.
std::vector<oracle::Dense> oracle_lifts(const QuotientMap& nu, const Subgroup& q, const AlgebraElement& e) {
  const PermGroup& g = nu.group();
  auto candidates = oracle::invariant_primitive_idempotents(
      g, elems(centralizer(g, q)), oracle::c_group_sweep(g, elems(nu.kernel()), elems(q)), nu.field());
  std::vector<oracle::Dense> out;
  const oracle::Dense zero(nu.quotient().order(), Field::zero());
  for (const auto& f : candidates) {
    auto pushed = oracle::push(nu.projection().map(), nu.quotient().order(), nu.field(), f);
    if (oracle::multiply(nu.quotient(), nu.field(), pushed, e.dense()) != zero) out.push_back(f);
  }
  return out;
}

std::vector<AlgebraElement> centralizer_blocks(const PermGroup& g, const Subgroup& q, const Field& f) {
  Subgroup c = centralizer(g, q);
  std::vector<AlgebraElement> out;
  for (auto& b : primitive_idempotents(CommutativeAlgebra(c, c, f))) out.push_back(b.element);
  return out;
}

// c_group -------------------------------------------------------------------

TEST(CGroup, TrivialKernelGivesCentralizer) {
  S4Data s;
  for (const auto& q : {s.v, s.d8, s.one, sub(s.g, {"(0 1)"})}) EXPECT_EQ(c_group(s.g, s.one, q), centralizer(s.g, q));
}

TEST(CGroup, WholeGroupGivesNormalizer) {
  S4Data s;
  Subgroup all = Subgroup::whole(s.g);
  for (const auto& q : {s.v, s.d8, s.one, sub(s.g, {"(0 1)"}), sub(s.g, {"(0 1 2 3)"})})
    EXPECT_EQ(c_group(s.g, all, q), normalizer(s.g, q));
}

TEST(CGroup, S4KleinD8MatchesSweep) {
  S4Data s;
  Subgroup c = c_group(s.g, s.v, s.d8);
  EXPECT_EQ(c.elements(), oracle::c_group_sweep(s.g, elems(s.v), elems(s.d8)));
  EXPECT_TRUE(c.contains(centralizer(s.g, s.d8)));
  EXPECT_TRUE(normalizer(s.g, s.d8).contains(c));
}

TEST(CGroup, SweepAgreesOnEverySubgroupOfD16) {
  D16Data d;
  for (const auto& n : normal_subgroups(d.g))
    for (const auto& q : subgroups_of(d.g))
      EXPECT_EQ(c_group(d.g, n, q).elements(), oracle::c_group_sweep(d.g, elems(n), elems(q)));
}

TEST(CGroup, RejectsNonNormalKernel) {
  S4Data s;
  EXPECT_EQ(error_of([&] { c_group(s.g, sub(s.g, {"(0 1)"}), s.v); }), Errc::NotNormal);
}

// QuotientMap -----------------------------------------------------------------

TEST(QuotientMapTest, RecordsKernelAndSylowCondition) {
  S4Data s;
  auto nu = QuotientMap::of(s.g, s.v, kF2, 2);
  EXPECT_EQ(nu.quotient().order(), 6u);
  EXPECT_EQ(nu.kernel().order(), 4u);
  EXPECT_TRUE(nu.sylow_condition(s.d8));
  EXPECT_TRUE(nu.sylow_condition(s.v));
  EXPECT_FALSE(nu.sylow_condition(sub(s.g, {"(0 1)"})));
  EXPECT_FALSE(nu.sylow_condition(s.a4));
}

TEST(QuotientMapTest, RejectsMapsThatAreNotOnto) {
  PermGroup c2 = cyclic(2);
  EXPECT_EQ(error_of([&] { QuotientMap(GroupHom::from_map(c2, c2, {0, 0}), kF2, 2); }), Errc::SurjectivityFailure);
}

// nu_minus --------------------------------------------------------------------

TEST(NuMinus, TrivialKernelIsIdentity) {
  S4Data s;
  auto nu = QuotientMap::of(s.g, s.one, kF2, 2);
  for (const auto& q : {s.one, s.v, s.d8, sub(s.g, {"(0 1)"})})
    for (const auto& e : centralizer_blocks(nu.quotient(), nu.image(q), kF2))
      EXPECT_EQ(nu_minus(nu, q, e).element.dense(), e.dense());
}

TEST(NuMinus, CoprimeKernelMatchesEnumeration) {
  struct Case {
    PermGroup g;
    Subgroup n;
    Subgroup q;
    std::uint32_t p;
  };
  PermGroup v4 = group_by_name("C2xC2");
  PermGroup c2s3 = group_by_name("C2xS3");
  std::vector<Case> cases{
      {v4, Subgroup::generated(v4, std::vector<Elem>{v4.generator_elems()[0]}), Subgroup::trivial(v4), 3},
      {c2s3, Subgroup::generated(c2s3, std::vector<Elem>{c2s3.generator_elems()[0]}), sylow_subgroup(c2s3, 3), 3},
  };
  for (const auto& c : cases) {
    ASSERT_EQ(c.n.order(), 2u);
    auto nu = QuotientMap::of(c.g, c.n, kF3, c.p);
    std::vector<AlgebraElement> lifts;
    for (const auto& e : centralizer_blocks(nu.quotient(), nu.image(c.q), kF3)) {
      auto f = nu_minus(nu, c.q, e).element;
      auto expected = oracle_lifts(nu, c.q, e);
      ASSERT_EQ(expected.size(), 1u);
      EXPECT_EQ(f.dense(), expected.front());
      EXPECT_EQ(nu.apply(f), e);
      lifts.push_back(f);
    }
    std::sort(lifts.begin(), lifts.end());
    EXPECT_EQ(std::adjacent_find(lifts.begin(), lifts.end()), lifts.end());
  }
}

TEST(NuMinus, CoprimeKernelSplitsTheKleinGroup) {
  PermGroup v4 = group_by_name("C2xC2");
  auto nu = QuotientMap::of(v4, Subgroup::generated(v4, std::vector<Elem>{v4.generator_elems()[0]}), kF3, 3);
  EXPECT_EQ(blocks(v4, kF3).size(), 4u);
  EXPECT_EQ(blocks(nu.quotient(), kF3).size(), 2u);
}

TEST(NuMinus, LocalAlgebrasGiveOne) {
  D16Data d;
  auto nu = QuotientMap::of(d.g, d.z, kF2, 2);
  for (const auto& q : subgroups_of(d.g)) {
    if (!q.contains(d.z)) continue;
    auto one = AlgebraElement::one(nu.quotient(), kF2);
    auto f = nu_minus(nu, q, one);
    EXPECT_EQ(f.element, AlgebraElement::one(d.g, kF2)) << q.describe();
  }
}

TEST(NuMinus, UniqueByExhaustion) {
  S4Data s;
  auto nu = QuotientMap::of(s.g, s.v, kF2, 2);
  for (const auto& q : subgroups_of(s.g)) {
    if (!nu.sylow_condition(q)) continue;
    for (const auto& e : centralizer_blocks(nu.quotient(), nu.image(q), kF2)) {
      auto expected = oracle_lifts(nu, q, e);
      ASSERT_EQ(expected.size(), 1u) << q.describe();
      EXPECT_EQ(nu_minus(nu, q, e).element.dense(), expected.front());
    }
  }
  D16Data d;
  auto mu = QuotientMap::of(d.g, d.z, kF2, 2);
  for (const auto& q : subgroups_of(d.g)) {
    if (!mu.sylow_condition(q)) continue;
    auto one = AlgebraElement::one(mu.quotient(), kF2);
    ASSERT_EQ(oracle_lifts(mu, q, one).size(), 1u);
  }
}

TEST(NuMinus, EquivariantUnderConjugation) {
  S4Data s;
  auto nu = QuotientMap::of(s.g, s.v, kF2, 2);
  for (const auto& q : {s.v, s.d8})
    for (const auto& e : centralizer_blocks(nu.quotient(), nu.image(q), kF2))
      for (Elem g = 0; g < s.g.order(); ++g) EXPECT_TRUE(nu_minus_equivariant(nu, q, e, g));
  PermGroup d8c3 = group_by_name("D8xC3");
  Subgroup c3 = sylow_subgroup(d8c3, 3);
  auto mu = QuotientMap::of(d8c3, c3, kF4, 2);
  Subgroup p = sylow_subgroup(d8c3, 2);
  for (const auto& q : subgroups_of(p))
    for (const auto& e : centralizer_blocks(mu.quotient(), mu.image(q), kF4))
      for (Elem g = 0; g < d8c3.order(); g += 5) EXPECT_TRUE(nu_minus_equivariant(mu, q, e, g));
}

TEST(NuMinus, Errors) {
  S4Data s;
  auto nu = QuotientMap::of(s.g, s.v, kF2, 2);
  auto one = AlgebraElement::one(nu.quotient(), kF2);
  EXPECT_EQ(error_of([&] { nu_minus(nu, sub(s.g, {"(0 1)"}), one); }), Errc::SylowConditionViolated);
  EXPECT_EQ(error_of([&] { nu_minus(nu, s.a4, one); }), Errc::SylowConditionViolated);
  auto not_block = AlgebraElement::basis(nu.quotient(), kF2, 1);
  EXPECT_EQ(error_of([&] { nu_minus(nu, s.d8, not_block); }), Errc::PreconditionViolated);
}

// lift_block ------------------------------------------------------------------

/// Blocks b~ of kG whose naive push meets b.
std::vector<AlgebraElement> naive_lifts(const QuotientMap& nu, const AlgebraElement& b) {
  std::vector<AlgebraElement> out;
  const oracle::Dense zero(nu.quotient().order(), Field::zero());
  for (const auto& f : blocks(nu.group(), nu.field())) {
    auto pushed = oracle::push(nu.projection().map(), nu.quotient().order(), nu.field(), f.element.dense());
    if (oracle::multiply(nu.quotient(), nu.field(), pushed, b.dense()) != zero) out.push_back(f.element);
  }
  return out;
}

TEST(LiftBlock, TrivialKernel) {
  PermGroup g = group_by_name("C3xS3");
  auto nu = QuotientMap::of(g, Subgroup::trivial(g), kF4, 2);
  for (const auto& b : blocks(g, kF4)) EXPECT_EQ(lift_block(nu, b.element).element, b.element);
}

TEST(LiftBlock, S4OverKleinGivesPrincipal) {
  S4Data s;
  auto nu = QuotientMap::of(s.g, s.v, kF2, 2);
  auto quotient_blocks = blocks(nu.quotient(), kF2);
  ASSERT_EQ(quotient_blocks.size(), 2u);
  auto b = principal_of(quotient_blocks).element;
  auto expected = naive_lifts(nu, b);
  ASSERT_EQ(expected.size(), 1u);
  EXPECT_EQ(lift_block(nu, b).element, expected.front());
  EXPECT_EQ(lift_block(nu, b).element, principal_block(s.g, kF2).element);
  for (const auto& c : quotient_blocks) EXPECT_EQ(naive_lifts(nu, c.element).size(), 1u);
}

TEST(LiftBlock, NilpotentBlocksOverTheCoprimeFactor) {
  PermGroup g = group_by_name("D8xC3");
  Subgroup c3 = sylow_subgroup(g, 3);
  auto nu = QuotientMap::of(g, c3, kF4, 2);
  auto one = AlgebraElement::one(nu.quotient(), kF4);
  auto expected = naive_lifts(nu, one);
  ASSERT_EQ(expected.size(), 1u);
  auto lifted = lift_block(nu, one).element;
  EXPECT_EQ(lifted, expected.front());
  EXPECT_FALSE(nu.apply(lifted).is_zero());
  EXPECT_EQ(lifted, principal_block(g, kF4).element);
}

TEST(LiftBlock, RejectsNonBlocks) {
  S4Data s;
  auto nu = QuotientMap::of(s.g, s.v, kF2, 2);
  EXPECT_EQ(error_of([&] { lift_block(nu, AlgebraElement::zero(nu.quotient(), kF2)); }), Errc::PreconditionViolated);
}

// Brauer map commutation and the lifting property ---------------------------------

/// nu(Br_Q(x)) and Br_{QN/N}(nu(x)) by coefficient truncation and naive push.
void expect_naive_commutation(const QuotientMap& nu, const Subgroup& p, const Subgroup& q) {
  const PermGroup& g = nu.group();
  const PermGroup& h = nu.quotient();
  auto upper = oracle::commuting_elements(g, elems(q));
  auto lower = oracle::commuting_elements(h, elems(nu.image(q)));
  CommutativeAlgebra source(centralizer(g, p), c_group(g, nu.kernel(), p).join(q), nu.field());
  for (std::size_t i = 0; i < source.dim(); ++i) {
    auto x = source.basis_element(i).dense();
    oracle::Dense cut = x;
    for (Elem y = 0; y < g.order(); ++y)
      if (!oracle::in_list(upper, y)) cut[y] = Field::zero();
    auto lhs = oracle::push(nu.projection().map(), h.order(), nu.field(), cut);
    auto rhs = oracle::push(nu.projection().map(), h.order(), nu.field(), x);
    for (Elem y = 0; y < h.order(); ++y)
      if (!oracle::in_list(lower, y)) rhs[y] = Field::zero();
    EXPECT_EQ(lhs, rhs) << p.describe() << " in " << q.describe();
  }
}

TEST(BrauerCommutation, HoldsOnS4OverKlein) {
  S4Data s;
  auto nu = QuotientMap::of(s.g, s.v, kF2, 2);
  std::size_t instances = 0;
  for (const auto& q : subgroups_of(s.g))
    for (const auto& p : subgroups_of(q)) {
      if (!is_p_power(q.order(), 2) || !nu.sylow_condition(p) || !is_normal(p, q)) continue;
      auto rep = brauer_commutation_check(nu, p, q);
      EXPECT_TRUE(rep.ok()) << p.describe() << " in " << q.describe();
      expect_naive_commutation(nu, p, q);
      ++instances;
    }
  EXPECT_GE(instances, 7u);
}

TEST(BrauerCommutation, HoldsOnD16OverCenterAndS3xC2) {
  D16Data d;
  auto nu = QuotientMap::of(d.g, d.z, kF2, 2);
  for (const auto& q : subgroups_of(d.g))
    for (const auto& p : subgroups_of(q)) {
      if (!nu.sylow_condition(p) || !is_normal(p, q)) continue;
      EXPECT_TRUE(brauer_commutation_check(nu, p, q).ok());
      expect_naive_commutation(nu, p, q);
    }
  PermGroup g = group_by_name("S3xC2");
  Subgroup c2 = center(g);
  ASSERT_EQ(c2.order(), 2u);
  auto mu = QuotientMap::of(g, c2, kF2, 2);
  Subgroup p2 = sylow_subgroup(g, 2);
  for (const auto& p : subgroups_of(p2)) {
    if (!mu.sylow_condition(p)) continue;
    EXPECT_TRUE(brauer_commutation_check(mu, p, p2).ok());
    expect_naive_commutation(mu, p, p2);
  }
}

TEST(BrauerCommutation, Errors) {
  S4Data s;
  auto nu = QuotientMap::of(s.g, s.v, kF2, 2);
  Subgroup t = sub(s.g, {"(0 1)"});
  EXPECT_EQ(error_of([&] { brauer_commutation_check(nu, s.d8, s.v); }), Errc::NotNormalIn);
  EXPECT_EQ(error_of([&] { brauer_commutation_check(nu, t, t); }), Errc::SylowConditionViolated);
}

TEST(NuMinusLifting, ConjugatorAlwaysFound) {
  S4Data s;
  auto nu = QuotientMap::of(s.g, s.v, kF2, 2);
  auto rep = nu_minus_lifting_check(nu, s.v, s.d8);
  EXPECT_GT(rep.checked, 0u);
  EXPECT_TRUE(rep.ok());
  PermGroup g = group_by_name("D8xC3");
  auto mu = QuotientMap::of(g, sylow_subgroup(g, 3), kF4, 2);
  Subgroup p2 = sylow_subgroup(g, 2);
  std::size_t checked = 0;
  for (const auto& q : subgroups_of(p2))
    for (const auto& p : subgroups_of(q)) {
      auto r = nu_minus_lifting_check(mu, p, q);
      EXPECT_TRUE(r.ok()) << p.describe() << " <= " << q.describe();
      checked += r.checked;
    }
  EXPECT_GT(checked, 0u);
  EXPECT_EQ(error_of([&] { nu_minus_lifting_check(nu, s.d8, s.v); }), Errc::NotSubgroup);
}

// growth_check ------------------------------------------------------------------

/// Hom counts of F against conjugation maps in G between subgroups of D.
void expect_conjugation_counts(const PermGroup& g, const Subgroup& d, const FusionSystem& f) {
  for (std::size_t i = 0; i < f.subgroup_count(); ++i)
    for (std::size_t j = 0; j < f.subgroup_count(); ++j) {
      std::vector<Elem> r, t;
      for (Elem x : f.subgroup(i).elements()) r.push_back(d.elements()[x]);
      for (Elem x : f.subgroup(j).elements()) t.push_back(d.elements()[x]);
      EXPECT_EQ(f.homs(i, j).size(), oracle::conjugation_maps(g, r, t).size());
    }
}

TEST(Growth, TrivialKernelGivesEquality) {
  S4Data s;
  auto nu = QuotientMap::of(s.g, s.one, kF2, 2);
  auto rep = growth_check(nu, s.d8, principal_block(nu.quotient(), kF2).element);
  EXPECT_TRUE(rep.ok());
  EXPECT_TRUE(rep.equal);
  EXPECT_EQ(rep.quotient_morphisms, rep.lifted_morphisms);
}

TEST(Growth, S4OverKleinContainsTheQuotientSystem) {
  S4Data s;
  auto nu = QuotientMap::of(s.g, s.v, kF2, 2);
  auto b = principal_block(nu.quotient(), kF2).element;
  auto rep = growth_check(nu, s.d8, b);
  EXPECT_TRUE(rep.ok());
  EXPECT_TRUE(rep.contained);
  EXPECT_EQ(rep.lifted_block.element, principal_block(s.g, kF2).element);
  ASSERT_EQ(rep.candidates.size(), 1u);
  // on D8/V = C2 both sides carry only the identity automorphism
  EXPECT_EQ(rep.quotient_morphisms, 3u);
  EXPECT_EQ(rep.lifted_morphisms, 3u);
  Subgroup c2 = nu.image(s.d8);
  expect_conjugation_counts(nu.quotient(), c2, block_fusion(BrauerPairs(nu.quotient(), kF2, 2), b, rep.quotient_pair));
}

TEST(Growth, D16OverCenterIsInnerOnBothSides) {
  D16Data d;
  auto nu = QuotientMap::of(d.g, d.z, kF2, 2);
  auto rep = growth_check(nu, Subgroup::whole(d.g), AlgebraElement::one(nu.quotient(), kF2));
  EXPECT_TRUE(rep.ok());
  EXPECT_TRUE(rep.equal);
  PermGroup d8 = nu.quotient();
  auto inner = inner_fusion(d8);
  EXPECT_EQ(rep.quotient_morphisms, inner.morphism_count());
  EXPECT_EQ(rep.lifted_morphisms, inner.morphism_count());
  expect_conjugation_counts(d8, Subgroup::whole(d8), inner);
}

TEST(Growth, PreconditionsNamed) {
  S4Data s;
  auto nu = QuotientMap::of(s.g, s.v, kF2, 2);
  auto quotient_blocks = blocks(nu.quotient(), kF2);
  auto principal = principal_of(quotient_blocks).element;
  EXPECT_EQ(error_of([&] { growth_check(nu, s.a4, principal); }), Errc::PreconditionViolated);
  EXPECT_EQ(error_of([&] { growth_check(nu, sub(s.g, {"(0 1)"}), principal); }), Errc::PreconditionViolated);
  // V is a Sylow of N but VN/N = 1 is not a defect group of the principal block
  EXPECT_EQ(error_of([&] { growth_check(nu, s.v, principal); }), Errc::PreconditionViolated);
  for (const auto& b : quotient_blocks) {
    if (b.element == principal) continue;
    EXPECT_EQ(error_of([&] { growth_check(nu, s.d8, b.element); }), Errc::PreconditionViolated);
  }
}

// Towers ------------------------------------------------------------------------

TEST(TowerSpecTest, ChainLevelsAndKernels) {
  S4Data s;
  auto t = tower_from_chain(s.g, {s.a4, s.v, s.one});
  t.validate();
  ASSERT_EQ(t.depth(), 3u);
  EXPECT_EQ(t.levels[0].order(), 2u);
  EXPECT_EQ(t.levels[1].order(), 6u);
  EXPECT_EQ(t.levels[2].order(), 24u);
  EXPECT_EQ(t.kernel_at(0).order(), 12u);
  EXPECT_EQ(t.kernel_at(1).order(), 4u);
  EXPECT_EQ(t.kernel_at(2).order(), 1u);
  EXPECT_EQ(t.ambient_kernel(1).order(), 4u);
  EXPECT_TRUE(t.reaches_trivial());
  EXPECT_EQ(t.down(2, 0).kernel().order(), 12u);
  EXPECT_TRUE(t.down(1, 1).injective());
}

TEST(TowerSpecTest, RejectsBadInput) {
  S4Data s;
  EXPECT_EQ(error_of([&] { tower_from_chain(s.g, {s.v, s.a4}); }), Errc::NotAChain);
  EXPECT_EQ(error_of([&] { tower_from_chain(s.g, {sub(s.g, {"(0 1)"})}); }), Errc::NotNormal);
  PermGroup c2 = cyclic(2);
  TowerSpec bad;
  bad.levels = {c2, c2};
  bad.maps = {GroupHom::from_map(c2, c2, {0, 0})};
  EXPECT_EQ(error_of([&] { bad.validate(); }), Errc::SurjectivityFailure);
  TowerSpec missing;
  missing.levels = {c2, c2};
  EXPECT_EQ(error_of([&] { missing.validate(); }), Errc::PreconditionViolated);
  TowerSpec bare;
  bare.levels = {c2};
  EXPECT_EQ(error_of([&] { bare.ambient_kernel(0); }), Errc::PreconditionViolated);
}

TEST(TowerSpecTest, AmbientTowerDoesNotReachTrivial) {
  S4Data s;
  auto q = quotient(s.g, s.v);
  TowerSpec t;
  t.levels = {q.group};
  t.ambient = s.g;
  t.projections = {q.projection};
  t.validate();
  EXPECT_FALSE(t.reaches_trivial());
  EXPECT_EQ(t.ambient_kernel(0), s.v);
}

TEST(TowerContextTest, SylowThreshold) {
  S4Data s;
  TowerContext ctx(tower_from_chain(s.g, {s.a4, s.v, s.one}), kF2, 2);
  const PermGroup& g = ctx.tower().deepest();
  EXPECT_EQ(ctx.sylow_threshold(sylow_subgroup(g, 2)), 0u);
  EXPECT_EQ(ctx.sylow_threshold(ctx.tower().kernel_at(1)), 0u);
  EXPECT_EQ(ctx.sylow_threshold(sub(g, {"(0 1)(2 3)"})), 2u);
  EXPECT_EQ(ctx.sylow_threshold(Subgroup::trivial(g)), 2u);
  EXPECT_EQ(ctx.image(sylow_subgroup(g, 2), 1).order(), 2u);
}

TEST(CompatibleSequence, S4KleinChainProductsNonzero) {
  S4Data s;
  TowerContext ctx(tower_from_chain(s.g, {s.v, s.one}), kF2, 2);
  const PermGroup& g = ctx.tower().deepest();
  auto seed = seed_from_deepest(ctx, principal_block(g, kF2).element);
  auto m = maximal_truncated_pair(ctx, seed);
  ASSERT_EQ(m.i0, 0u);
  EXPECT_TRUE(m.maximal_at_every_level);
  EXPECT_TRUE(is_compatible(ctx, m.sequence));
  const auto& e1 = m.sequence.at(0);
  const auto& e2 = m.sequence.at(1);
  EXPECT_EQ(e1.group().order(), 6u);
  EXPECT_EQ(e2.group().order(), 24u);
  auto lifts = oracle_lifts(ctx.step(0), m.defect, e1);
  ASSERT_EQ(lifts.size(), 1u);
  const oracle::Dense zero(24, Field::zero());
  EXPECT_NE(oracle::multiply(g, kF2, lifts.front(), e2.dense()), zero);
}

TEST(CompatibleSequence, SuccessorsAndSeeds) {
  PermGroup g = group_by_name("D8xC3");
  Subgroup c3 = sylow_subgroup(g, 3);
  TowerContext ctx(tower_from_chain(g, {c3, Subgroup::trivial(g)}), kF4, 2);
  Subgroup p = sylow_subgroup(ctx.tower().deepest(), 2);
  auto at0 = ctx.pairs(0).centralizer_blocks(ctx.image(p, 0));
  ASSERT_EQ(at0.size(), 1u);
  auto next = compatible_successors(ctx, p, 0, at0.front().element);
  ASSERT_EQ(next.size(), 1u);
  auto seq = compatible_sequence(ctx, p, 0, at0.front().element);
  EXPECT_EQ(seq.at(1), next.front());
  EXPECT_TRUE(is_compatible(ctx, seq));
  // Z(D8) x C3 carries three blocks, only the principal one lies over level 0
  EXPECT_EQ(ctx.pairs(1).centralizer_blocks(p).size(), 3u);
  auto late = compatible_sequence(ctx, p, 1, ctx.pairs(1).centralizer_blocks(p).back().element);
  EXPECT_EQ(late.start, 1u);
  EXPECT_TRUE(late.equivalent(late));
  EXPECT_EQ(seq.equivalent(late), seq.at(1) == late.at(1));
}

TEST(CompatibleSequence, SeedIncompatible) {
  S4Data s;
  TowerContext ctx(tower_from_chain(s.g, {s.v, s.one}), kF2, 2);
  const PermGroup& g = ctx.tower().deepest();
  Subgroup t = sub(g, {"(0 1)"});
  auto e = ctx.pairs(0).centralizer_blocks(ctx.image(t, 0)).front().element;
  EXPECT_EQ(error_of([&] { compatible_sequence(ctx, t, 0, e); }), Errc::SeedIncompatible);
  Subgroup d8 = sylow_subgroup(g, 2);
  auto not_block = AlgebraElement::zero(ctx.tower().levels[0], kF2);
  EXPECT_EQ(error_of([&] { compatible_sequence(ctx, d8, 0, not_block); }), Errc::SeedIncompatible);
}

TEST(MaximalPair, LengthOneTowerReducesToMaximalPairs) {
  for (const char* name : {"S4", "D8xC3", "A4"}) {
    PermGroup g = group_by_name(name);
    Field f = splitting_field(g, 2);
    TowerContext ctx(tower_from_chain(g, {Subgroup::trivial(g)}), f, 2);
    BrauerPairs bp(ctx.tower().deepest(), f, 2);
    for (const auto& b : blocks(ctx.tower().deepest(), f)) {
      auto seed = seed_from_deepest(ctx, b.element);
      EXPECT_EQ(seed.level, 0u);
      auto m = maximal_truncated_pair(ctx, seed);
      auto expected = bp.maximal_pairs(b.element);
      BrauerPair got{m.defect, m.sequence.at(0)};
      EXPECT_NE(std::find(expected.pairs.begin(), expected.pairs.end(), got), expected.pairs.end()) << name;
      EXPECT_EQ(maximal_choice_count(ctx, seed),
                static_cast<std::size_t>(std::count_if(expected.pairs.begin(), expected.pairs.end(),
                                                       [&](const BrauerPair& pr) { return pr.subgroup == m.defect; })));
    }
  }
}

TEST(MaximalPair, SeedFromDeepestFindsCoarsestSeed) {
  PermGroup g = group_by_name("D8xC3");
  Subgroup c3 = sylow_subgroup(g, 3);
  TowerContext ctx(tower_from_chain(g, {c3, Subgroup::trivial(g)}), kF4, 2);
  const PermGroup& top = ctx.tower().deepest();
  std::size_t at_zero = 0;
  for (const auto& b : blocks(top, kF4)) {
    auto seed = seed_from_deepest(ctx, b.element);
    if (seed.level == 0) ++at_zero;
    auto chain = block_sequence(ctx, seed);
    EXPECT_EQ(chain.back(), b.element);
  }
  EXPECT_EQ(at_zero, 1u);
  EXPECT_EQ(error_of([&] { seed_from_deepest(ctx, AlgebraElement::one(ctx.tower().levels[0], kF4)); }),
            Errc::PreconditionViolated);
}

/// The pair m moved by g of the deepest level.
MaximalTruncatedPair moved(const TowerContext& ctx, const MaximalTruncatedPair& m, Elem g) {
  MaximalTruncatedPair out = m;
  const std::size_t last = ctx.depth() - 1;
  out.defect = m.defect.conjugate(g);
  out.sequence.subgroup = m.sequence.subgroup.conjugate(g);
  for (std::size_t i = m.sequence.start; i < ctx.depth(); ++i)
    out.sequence.idempotents[i - m.sequence.start] = m.sequence.at(i).conjugate(ctx.tower().down(last, i)(g));
  for (std::size_t i = m.block_level; i < ctx.depth(); ++i)
    out.blocks[i - m.block_level] = m.block_at(i).conjugate(ctx.tower().down(last, i)(g));
  return out;
}

std::vector<oracle::LevelPairs> level_pairs(const TowerContext& ctx, const MaximalTruncatedPair& a,
                                            const MaximalTruncatedPair& b) {
  std::vector<oracle::LevelPairs> out;
  const std::size_t last = ctx.depth() - 1;
  for (std::size_t i = std::max(a.sequence.start, b.sequence.start); i < ctx.depth(); ++i)
    out.push_back({&ctx.tower().levels[i], ctx.tower().down(last, i).map(), elems(ctx.image(a.defect, i)),
                   elems(ctx.image(b.defect, i)), a.sequence.at(i).dense(), b.sequence.at(i).dense()});
  return out;
}

TEST(MaximalPair, ConjugateSequencesShareAConjugator) {
  S4Data s;
  TowerContext ctx(tower_from_chain(s.g, {s.a4, s.v, s.one}), kF2, 2);
  const PermGroup& g = ctx.tower().deepest();
  auto m = maximal_truncated_pair(ctx, seed_from_deepest(ctx, principal_block(g, kF2).element));
  for (Elem h : {Elem{1}, Elem{5}, Elem{17}, Elem{23}}) {
    auto other = moved(ctx, m, h);
    Elem x = common_conjugator(ctx, m, other);
    auto all = oracle::transporter_intersection(g, level_pairs(ctx, m, other));
    ASSERT_FALSE(all.empty());
    EXPECT_TRUE(oracle::in_list(all, x));
    EXPECT_TRUE(oracle::in_list(all, h));
  }
  PermGroup d8c3 = group_by_name("D8xC3");
  TowerContext ctx2(tower_from_chain(d8c3, {sylow_subgroup(d8c3, 3), Subgroup::trivial(d8c3)}), kF4, 2);
  for (const auto& b : blocks(ctx2.tower().deepest(), kF4)) {
    auto mb = maximal_truncated_pair(ctx2, seed_from_deepest(ctx2, b.element));
    auto other = moved(ctx2, mb, 7);
    auto all = oracle::transporter_intersection(ctx2.tower().deepest(), level_pairs(ctx2, mb, other));
    EXPECT_TRUE(oracle::in_list(all, common_conjugator(ctx2, mb, other)));
  }
}

TEST(MaximalPair, NoConjugatorForDifferentBlocks) {
  PermGroup g = group_by_name("D8xC3");
  TowerContext ctx(tower_from_chain(g, {Subgroup::trivial(g)}), kF4, 2);
  auto bs = blocks(ctx.tower().deepest(), kF4);
  ASSERT_EQ(bs.size(), 3u);
  auto a = maximal_truncated_pair(ctx, seed_from_deepest(ctx, bs[0].element));
  auto b = maximal_truncated_pair(ctx, seed_from_deepest(ctx, bs[1].element));
  EXPECT_EQ(error_of([&] { common_conjugator(ctx, a, b); }), Errc::NoCommonConjugator);
}

// Stabilization ---------------------------------------------------------------

TEST(Stabilization, IdentityTowerGivesMuEqualToLevel) {
  PermGroup g = symmetric(4);
  TowerSpec t;
  t.levels = {g, g, g};
  t.maps = {GroupHom::identity(g), GroupHom::identity(g)};
  TowerContext ctx(t, kF2, 2);
  auto rep = stabilization_mu(ctx, {0, principal_block(g, kF2).element});
  ASSERT_EQ(rep.levels.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(rep.levels[i].mu, i);
    EXPECT_EQ(rep.levels[i].least, i);
    EXPECT_FALSE(rep.levels[i].virtual_level);
  }
  EXPECT_TRUE(rep.ok());
  EXPECT_TRUE(rep.strictly_increasing);
}

TEST(Stabilization, S4KleinChain) {
  S4Data s;
  TowerContext ctx(tower_from_chain(s.g, {s.v, s.one}), kF2, 2);
  const PermGroup& g = ctx.tower().deepest();
  auto rep = stabilization_mu(ctx, seed_from_deepest(ctx, principal_block(g, kF2).element));
  ASSERT_EQ(rep.levels.size(), 2u);
  EXPECT_LE(rep.levels[0].mu, 1u);
  EXPECT_TRUE(rep.ok());
  EXPECT_TRUE(systems_equal(rep.limit_quotients[0], rep.level_systems[0]));
  const PermGroup& s3 = ctx.tower().levels[0];
  Subgroup c2 = ctx.image(rep.pair.defect, 0);
  expect_conjugation_counts(s3, c2, rep.limit_quotients[0]);
  expect_conjugation_counts(g, rep.pair.defect, rep.level_systems[1]);
  EXPECT_EQ(rep.levels[1].mu, 1u);
}

TEST(Stabilization, NilpotentTowerIsInnerEverywhere) {
  for (const char* name : {"D8xC3", "Q8xC3"}) {
    PermGroup g = group_by_name(name);
    Subgroup c3 = sylow_subgroup(g, 3);
    TowerContext ctx(tower_from_chain(g, {c3, Subgroup::trivial(g)}), kF4, 2);
    for (const auto& b : blocks(ctx.tower().deepest(), kF4)) {
      auto rep = stabilization_mu(ctx, seed_from_deepest(ctx, b.element));
      for (std::size_t k = 0; k < rep.levels.size(); ++k) {
        EXPECT_EQ(rep.levels[k].mu, rep.levels[k].level);
        EXPECT_TRUE(is_nilpotent(rep.level_systems[k]));
        EXPECT_TRUE(systems_equal(rep.limit_quotients[k], inner_fusion(rep.limit_quotients[k].base())));
      }
      EXPECT_TRUE(rep.ok());
    }
  }
}

TEST(Stabilization, StationaryStartAndDepth) {
  PermGroup a4 = alternating(4);
  Subgroup v = sylow_subgroup(a4, 2);
  auto large = sylow_fusion(a4, v);
  auto small = inner_fusion(large.base());
  EXPECT_EQ(stationary_start({small, small, small}, false), 0u);
  EXPECT_EQ(stationary_start({small, large, large}, false), 1u);
  EXPECT_EQ(stationary_start({small, large}, true), 1u);
  EXPECT_EQ(error_of([&] { stationary_start({small, large}, false); }), Errc::DepthInsufficient);
  EXPECT_EQ(error_of([&] { stationary_start({}, true); }), Errc::PreconditionViolated);
  EXPECT_EQ(next_mu(2, std::nullopt, 3, false), 2u);
  EXPECT_EQ(next_mu(1, 1, 3, false), 2u);
  EXPECT_EQ(next_mu(0, 2, 3, true), 3u);
  EXPECT_EQ(error_of([&] { next_mu(0, 2, 3, false); }), Errc::DepthInsufficient);
}

TEST(Stabilization, AmbientTowerWithoutGrowthIsAccepted) {
  S4Data s;
  auto q = quotient(s.g, s.v);
  TowerSpec t;
  t.levels = {q.group};
  t.ambient = s.g;
  t.projections = {q.projection};
  TowerContext ctx(t, kF2, 2);
  auto rep = stabilization_mu(ctx, {0, principal_block(q.group, kF2).element});
  ASSERT_EQ(rep.levels.size(), 1u);
  EXPECT_EQ(rep.levels[0].mu, 0u);
}

// Embedding -----------------------------------------------------------------------

TEST(Embedding, DeepestLevelIsEqual) {
  S4Data s;
  TowerContext ctx(tower_from_chain(s.g, {s.v, s.one}), kF2, 2);
  auto seed = seed_from_deepest(ctx, principal_block(ctx.tower().deepest(), kF2).element);
  auto rep = embedding_check(ctx, seed, 1);
  EXPECT_TRUE(rep.equal);
  EXPECT_EQ(rep.level_morphisms, rep.limit_morphisms);
}

TEST(Embedding, KleinLevelAgreesWithGrowth) {
  S4Data s;
  TowerContext ctx(tower_from_chain(s.g, {s.v, s.one}), kF2, 2);
  auto seed = seed_from_deepest(ctx, principal_block(ctx.tower().deepest(), kF2).element);
  auto rep = embedding_check(ctx, seed, 0);
  EXPECT_TRUE(rep.contained);
  auto nu = QuotientMap::of(s.g, s.v, kF2, 2);
  auto growth = growth_check(nu, s.d8, principal_block(nu.quotient(), kF2).element);
  EXPECT_EQ(rep.contained, growth.contained);
  EXPECT_EQ(rep.equal, growth.equal);
  EXPECT_EQ(rep.level_morphisms, growth.quotient_morphisms);
  EXPECT_EQ(rep.limit_morphisms, growth.lifted_morphisms);
}

TEST(Embedding, NilpotentTowerTrivialOnBothSides) {
  PermGroup g = group_by_name("D8xC3");
  TowerContext ctx(tower_from_chain(g, {sylow_subgroup(g, 3), Subgroup::trivial(g)}), kF4, 2);
  auto seed = seed_from_deepest(ctx, principal_block(ctx.tower().deepest(), kF4).element);
  auto rep = embedding_check(ctx, seed, 0);
  EXPECT_TRUE(rep.equal);
  EXPECT_EQ(rep.level_morphisms, inner_fusion(dihedral(8)).morphism_count());
}

TEST(Embedding, OutsideTheStableRange) {
  PermGroup g = group_by_name("D8xC3");
  TowerContext ctx(tower_from_chain(g, {sylow_subgroup(g, 3), Subgroup::trivial(g)}), kF4, 2);
  for (const auto& b : blocks(ctx.tower().deepest(), kF4)) {
    auto seed = seed_from_deepest(ctx, b.element);
    if (seed.level == 0) {
      EXPECT_EQ(error_of([&] { embedding_check(ctx, seed, 2); }), Errc::DepthInsufficient);
    } else {
      EXPECT_EQ(error_of([&] { embedding_check(ctx, seed, 0); }), Errc::DepthInsufficient);
    }
  }
}

// Independence ------------------------------------------------------------------

TEST(Independence, IdenticalChainsAgreeExactly) {
  S4Data s;
  auto a = tower_from_chain(s.g, {s.v, s.one});
  auto rep = independence_check(a, a, principal_block(s.g, kF2).element, kF2, 2);
  EXPECT_TRUE(rep.ok());
  for (const auto& c : rep.common) EXPECT_TRUE(c.identical);
}

TEST(Independence, KleinChainAgainstDirect) {
  S4Data s;
  auto a = tower_from_chain(s.g, {s.v, s.one});
  auto b = tower_from_chain(s.g, {s.one});
  auto rep = independence_check(a, b, principal_block(s.g, kF2).element, kF2, 2);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.interleaved, (std::vector<std::size_t>{4, 1}));
  ASSERT_FALSE(rep.common.empty());
  EXPECT_EQ(rep.common.back().kernel_order, 1u);
  EXPECT_TRUE(rep.common.back().conjugate);
}

TEST(Independence, RefinementKeepsTheFusionData) {
  S4Data s;
  auto coarse = tower_from_chain(s.g, {s.v, s.one});
  auto fine = tower_from_chain(s.g, {s.a4, s.v, s.one});
  auto rep = independence_check(fine, coarse, principal_block(s.g, kF2).element, kF2, 2);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.interleaved, (std::vector<std::size_t>{12, 4, 1}));
  // fine/coarse share V and 1; each shares all of its levels with the interleaving
  EXPECT_EQ(rep.common.size(), 7u);
  for (const auto& c : rep.common) EXPECT_TRUE(c.identical);
}

TEST(Independence, NotInterleavable) {
  S4Data s;
  auto a = tower_from_chain(s.g, {s.v, s.one});
  PermGroup d8 = dihedral(8);
  auto b = tower_from_chain(d8, {Subgroup::trivial(d8)});
  EXPECT_EQ(error_of([&] { independence_check(a, b, principal_block(s.g, kF2).element, kF2, 2); }),
            Errc::NotInterleavable);
  auto q = quotient(s.g, s.v);
  TowerSpec open;
  open.levels = {q.group};
  open.ambient = s.g;
  open.projections = {q.projection};
  EXPECT_EQ(error_of([&] { independence_check(a, open, principal_block(s.g, kF2).element, kF2, 2); }),
            Errc::NotInterleavable);
}

// Tame quotients ------------------------------------------------------------------

void expect_quotients_match_oracle(const PermGroup& p, const TameQuotientReport& rep) {
  std::size_t at = 0;
  for (const auto& k : normal_subgroups(p)) {
    if (k.is_trivial()) continue;
    ASSERT_LT(at, rep.quotients.size());
    const auto& e = rep.quotients[at++];
    EXPECT_EQ(e.kernel_order, k.order());
    EXPECT_EQ(e.abelian, oracle::quotient_abelian(p, elems(k)));
    EXPECT_EQ(e.dihedral, oracle::quotient_dihedral(p, elems(k)));
  }
  EXPECT_EQ(at, rep.quotients.size());
}

TEST(TameQuotient, DihedralQuaternionSemidihedral16) {
  for (auto [name, family] : {std::pair{"D16", "dihedral"}, {"Q16", "quaternion"}, {"SD16", "semidihedral"}}) {
    PermGroup p = group_by_name(name);
    auto rep = tame_quotient_check(p);
    EXPECT_EQ(rep.family, family);
    EXPECT_TRUE(rep.ok()) << name;
    expect_quotients_match_oracle(p, rep);
    // the quotient by the center is D8
    auto by_center = std::find_if(rep.quotients.begin(), rep.quotients.end(),
                                  [](const TameQuotientReport::Entry& e) { return e.kernel_order == 2; });
    ASSERT_NE(by_center, rep.quotients.end());
    EXPECT_TRUE(by_center->dihedral);
  }
}

TEST(TameQuotient, SmallAndLargeOrders) {
  for (const char* name : {"D8", "Q8", "D32", "Q32", "SD32"}) {
    PermGroup p = group_by_name(name);
    auto rep = tame_quotient_check(p);
    EXPECT_TRUE(rep.ok()) << name;
    expect_quotients_match_oracle(p, rep);
  }
}

TEST(TameQuotient, UnsupportedFamilies) {
  for (const char* name : {"C8", "V4", "C2xC2xC2", "C4xC2", "D12", "D128", "A4"})
    EXPECT_EQ(error_of([&] { tame_quotient_check(group_by_name(name)); }), Errc::UnsupportedFamily) << name;
}

// Dihedral triviality -----------------------------------------------------------------

TEST(DihedralTriviality, ConstantTowerIsInner) {
  PermGroup d16 = dihedral(16);
  FusionTower t{{inner_fusion(d16), inner_fusion(d16), inner_fusion(d16)},
                {GroupHom::identity(d16), GroupHom::identity(d16)}};
  auto rep = dihedral_triviality_check(t);
  EXPECT_TRUE(rep.ok());
  ASSERT_EQ(rep.levels.size(), 3u);
  EXPECT_FALSE(rep.levels[0].skipped);
  EXPECT_TRUE(rep.levels[0].equals_inner);
  EXPECT_TRUE(rep.levels[0].nilpotent);
  EXPECT_EQ(rep.levels[0].klein_fours, 4u);
  EXPECT_TRUE(rep.levels[2].skipped);
  EXPECT_EQ(rep.levels[2].reason, "top level");
  EXPECT_FALSE(rep.levels[0].saturation_flagged);
}

TEST(DihedralTriviality, PGL27OntoD8) {
  PermGroup g = pgl2(7);
  Subgroup p = sylow_subgroup(g, 2);
  auto top = sylow_fusion(g, p);
  PermGroup d16 = top.base();
  auto image = image_fusion(top, center(d16));
  FusionTower t{{image.system, top}, {image.quotient.projection}};
  auto rep = dihedral_triviality_check(t);
  EXPECT_TRUE(rep.ok());
  ASSERT_EQ(rep.levels.size(), 2u);
  const auto& low = rep.levels[0];
  EXPECT_EQ(low.order, 8u);
  EXPECT_TRUE(low.preimages_dihedral);
  EXPECT_TRUE(low.klein_images_ok);
  EXPECT_EQ(low.klein_fours, 2u);
  EXPECT_TRUE(low.equals_inner);
  EXPECT_TRUE(low.saturation_flagged);
  // full hom tables: the top against conjugation in PGL(2,7), the bottom against D8 itself
  expect_conjugation_counts(g, p, top);
  PermGroup d8 = image.system.base();
  expect_conjugation_counts(d8, Subgroup::whole(d8), image.system);
}

TEST(DihedralTriviality, SmallLevelsSkipped) {
  PermGroup d8 = dihedral(8);
  auto q = quotient(d8, center(d8));
  FusionTower t{{inner_fusion(q.group), inner_fusion(d8)}, {q.projection}};
  auto rep = dihedral_triviality_check(t);
  EXPECT_TRUE(rep.ok());
  EXPECT_TRUE(rep.levels[0].skipped);
  EXPECT_EQ(rep.levels[0].reason, "order at most 4");
}

TEST(DihedralTriviality, Errors) {
  PermGroup q16 = quaternion(16);
  FusionTower quaternion_tower{{inner_fusion(q16), inner_fusion(q16)}, {GroupHom::identity(q16)}};
  EXPECT_EQ(error_of([&] { dihedral_triviality_check(quaternion_tower); }), Errc::NotDihedralBase);
  PermGroup d8 = dihedral(8);
  FusionTower flat{{inner_fusion(d8), inner_fusion(d8)},
                   {GroupHom::from_map(d8, d8, std::vector<Elem>(d8.order(), 0))}};
  EXPECT_EQ(error_of([&] { dihedral_triviality_check(flat); }), Errc::SurjectivityFailure);
  FusionTower unbalanced{{inner_fusion(d8)}, {GroupHom::identity(d8)}};
  EXPECT_EQ(error_of([&] { dihedral_triviality_check(unbalanced); }), Errc::PreconditionViolated);
  // an automorphism of a Klein four below that no kernel-preserving map above induces
  PermGroup s4 = symmetric(4);
  auto big = sylow_fusion(s4, sylow_subgroup(s4, 2));
  FusionTower lifted{{big, inner_fusion(big.base())}, {GroupHom::identity(big.base())}};
  EXPECT_EQ(error_of([&] { dihedral_triviality_check(lifted); }), Errc::SurjectivityFailure);
}

// Centralizer bijection -----------------------------------------------------------------

TEST(Bijection, LengthOneIsIdentity) {
  S4Data s;
  TowerContext ctx(tower_from_chain(s.g, {s.one}), kF2, 2);
  Subgroup p = sylow_subgroup(ctx.tower().deepest(), 2);
  auto rep = centralizer_bijection_check(ctx, p);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.kept, (std::vector<std::size_t>{0}));
  EXPECT_EQ(rep.full_sequences, rep.idempotents);
  EXPECT_EQ(rep.idempotents, centralizer_blocks(ctx.tower().deepest(), p, kF2).size());
}

TEST(Bijection, S4KleinChainMatchesEnumeration) {
  S4Data s;
  TowerContext ctx(tower_from_chain(s.g, {s.v, s.one}), kF2, 2);
  const PermGroup& g = ctx.tower().deepest();
  Subgroup p = sylow_subgroup(g, 2);
  auto rep = centralizer_bijection_check(ctx, p);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.kept, (std::vector<std::size_t>{0, 1}));
  ASSERT_EQ(rep.steps.size(), 1u);
  EXPECT_TRUE(rep.steps[0].ok);
  // both sides by brute force: idempotents of Z(kC_G(P)) and of the image algebra
  auto top = oracle::invariant_primitive_idempotents(g, elems(centralizer(g, p)), elems(centralizer(g, p)), kF2);
  EXPECT_EQ(rep.idempotents, top.size());
  EXPECT_EQ(rep.full_sequences, top.size());
  EXPECT_EQ(rep.families, rep.lifted);
}

TEST(Bijection, D16CenterChainIsLocal) {
  D16Data d;
  TowerContext ctx(tower_from_chain(d.g, {d.z, d.one}), kF2, 2);
  Subgroup rot = Subgroup::generated(ctx.tower().deepest(), std::vector<Elem>{d.a});
  auto rep = centralizer_bijection_check(ctx, rot);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.kept.size(), 2u);
  EXPECT_EQ(rep.idempotents, 1u);
  EXPECT_EQ(rep.full_sequences, 1u);
  EXPECT_EQ(rep.families, 1u);
}

TEST(Bijection, NilpotentBlocksVanishOnTheCoarseLevel) {
  PermGroup g = group_by_name("D8xC3");
  TowerContext ctx(tower_from_chain(g, {sylow_subgroup(g, 3), Subgroup::trivial(g)}), kF4, 2);
  Subgroup p = sylow_subgroup(ctx.tower().deepest(), 2);
  auto rep = centralizer_bijection_check(ctx, p);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.idempotents, 3u);
  ASSERT_EQ(rep.steps.size(), 1u);
  EXPECT_EQ(rep.steps[0].to_blocks, 1u);
  EXPECT_EQ(rep.steps[0].to_zero, 2u);
}

TEST(Bijection, ThinningFailedWithoutTrivialBottom) {
  S4Data s;
  auto q = quotient(s.g, s.v);
  TowerSpec t;
  t.levels = {q.group};
  t.ambient = s.g;
  t.projections = {q.projection};
  TowerContext ctx(t, kF2, 2);
  EXPECT_EQ(error_of([&] { centralizer_bijection_check(ctx, sylow_subgroup(q.group, 2)); }), Errc::ThinningFailed);
}

TEST(Bijection, SweepOverSmallTowers) {
  for (const char* name : {"S4", "A4", "C2xS3", "D12", "Q8xC3"})
    for (std::uint32_t p : {2u, 3u}) {
      PermGroup g = group_by_name(name);
      Field f = splitting_field(g, p);
      for (const auto& n : normal_subgroups(g)) {
        if (n.is_trivial() || n.order() == g.order()) continue;
        TowerContext ctx(tower_from_chain(g, {n, Subgroup::trivial(g)}), f, p);
        auto rep = centralizer_bijection_check(ctx, sylow_subgroup(ctx.tower().deepest(), p));
        EXPECT_TRUE(rep.ok()) << name << " p=" << p << " |N|=" << n.order();
      }
    }
}

}  // namespace

// Tower files ---------------------------------------------------------------------------

TEST(TowerFile, ChainLayout) {
  auto t = parse_tower_text(
      "# S4 over the Klein four\n"
      "group\nS4\n"
      "normal\n(0 1)(2 3)\n(0 2)(1 3)\n"
      "normal\n");
  ASSERT_EQ(t.depth(), 2u);
  EXPECT_EQ(t.levels[0].order(), 6u);
  EXPECT_EQ(t.levels[1].order(), 24u);
  EXPECT_TRUE(t.ambient.has_value());
  EXPECT_TRUE(t.reaches_trivial());
  EXPECT_EQ(t.kernel_at(0).order(), 4u);
}

TEST(TowerFile, LevelLayout) {
  auto t = parse_tower_text(
      "level\nS3\n"
      "level\ndegree: 4\n(0 1)\n(0 1 2 3)\n"
      "map 1\n(1 2)\n(0 2)\n");
  ASSERT_EQ(t.depth(), 2u);
  EXPECT_FALSE(t.ambient.has_value());
  EXPECT_TRUE(t.maps[0].surjective());
  EXPECT_EQ(t.kernel_at(0).order(), 4u);
  EXPECT_EQ(t.kernel_at(1).order(), 1u);
}

TEST(TowerFile, AmbientLayout) {
  auto t = parse_tower_text(
      "level\nS3\nlevel\nS4\nmap 1\n(1 2)\n(0 2)\n"
      "ambient\nS4\nprojection 0\n(1 2)\n(0 2)\nprojection 1\n(0 1)\n(0 1 2 3)\n");
  ASSERT_TRUE(t.ambient.has_value());
  EXPECT_EQ(t.ambient_kernel(0).order(), 4u);
  EXPECT_TRUE(t.reaches_trivial());
}

TEST(TowerFile, Errors) {
  auto code = [](const char* text) { return error_of([&] { parse_tower_text(text); }); };
  EXPECT_EQ(code(""), Errc::ParseError);
  EXPECT_EQ(code("S4\n"), Errc::ParseError);
  EXPECT_EQ(code("level\nS3\nlevel\nS4\n"), Errc::ParseError);                    // missing map
  EXPECT_EQ(code("level\nS3\nlevel\nS4\nmap 1\n(1 2)\n"), Errc::ParseError);      // too few images
  EXPECT_EQ(code("level\nS3\nlevel\nS4\nmap 1\n(1 2)\n(0 1 2)\n"), Errc::ParseError);  // not a homomorphism
  EXPECT_EQ(code("level\nS3\nlevel\nS4\nmap 2\n(1 2)\n(0 2)\n"), Errc::ParseError);
  EXPECT_EQ(code("level\nS3\nlevel\nS4\nmap 1\n(1 2)\n(0 5)\n"), Errc::ParseError);
  EXPECT_EQ(code("group\nS4\n"), Errc::ParseError);
  EXPECT_EQ(code("group\nS4\nlevel\nS3\n"), Errc::ParseError);
  EXPECT_EQ(code("level\nS3\nprojection 0\n()\n()\n"), Errc::ParseError);
  EXPECT_EQ(code("level\nnonsense\n"), Errc::ParseError);
  EXPECT_EQ(code("group\nS4\nnormal\n(0 1)\n"), Errc::NotNormal);
  EXPECT_EQ(code("level\nS3\nlevel\nS3\nmap 1\n()\n()\n"), Errc::SurjectivityFailure);
  EXPECT_EQ(error_of([] { load_tower("/nonexistent/tower.txt"); }), Errc::ParseError);
}
