#include <gtest/gtest.h>

#include <set>

#include "oracles/algebra_oracles.hpp"
#include "oracles/group_oracles.hpp"
#include "profusion/algebra.hpp"
#include "profusion/constructors.hpp"
#include "profusion/error.hpp"
#include "profusion/group_ops.hpp"

using namespace profusion;

namespace {

Subgroup sub(const PermGroup& g, std::initializer_list<const char*> cycles) {
  std::vector<Elem> gens;
  for (const char* c : cycles) gens.push_back(g.index_of(Perm::parse(c, g.degree())));
  return Subgroup::generated(g, gens);
}

void expect_block_invariants(const PermGroup& g, const std::vector<BlockIdempotent>& bs) {
  const Field& f = bs.front().element.field();
  AlgebraElement total = AlgebraElement::zero(g, f);
  for (std::size_t i = 0; i < bs.size(); ++i) {
    const auto& e = bs[i].element;
    EXPECT_FALSE(e.is_zero());
    EXPECT_TRUE(e.is_central());
    EXPECT_EQ(e * e, e);
    for (std::size_t j = i + 1; j < bs.size(); ++j) EXPECT_TRUE((e * bs[j].element).is_zero());
    total = total + e;
  }
  EXPECT_EQ(total, AlgebraElement::one(g, f));
}

struct Case {
  const char* name;
  std::uint32_t p;
};

}  // namespace

TEST(Center, Dimensions) {
  Field f2 = Field::make(2, 1);
  EXPECT_EQ(center_basis(symmetric(3), Field::make(2, 2)).dim(), 3u);
  EXPECT_EQ(center_basis(cyclic(1), f2).dim(), 1u);
  EXPECT_EQ(center_basis(symmetric(4), f2).dim(), 5u);
}

TEST(Center, StructureConstantsCommutativeAndAssociative) {
  for (const char* name : {"S4", "D16", "Q16", "A5"}) {
    auto g = group_by_name(name);
    auto z = center_basis(g, Field::make(3, 1));
    EXPECT_TRUE(z.verify_structure()) << name;
  }
}

TEST(Center, ProductsMatchGroupAlgebra) {
  auto g = symmetric(4);
  Field f = Field::make(3, 1);
  auto z = center_basis(g, f);
  for (std::size_t i = 0; i < z.dim(); ++i)
    for (std::size_t j = 0; j < z.dim(); ++j) {
      FqVector a(z.dim(), Field::zero()), b(z.dim(), Field::zero());
      a[i] = b[j] = Field::one();
      EXPECT_EQ(z.element(z.multiply(a, b)), z.basis_element(i) * z.basis_element(j));
    }
}

TEST(Center, CoordinatesRejectNonInvariant) {
  auto g = symmetric(3);
  Field f = Field::make(2, 1);
  auto z = center_basis(g, f);
  auto x = AlgebraElement::basis(g, f, g.index_of(Perm::parse("(0 1)", 3)));
  try {
    z.coordinates(x);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotInvariant);
  }
  CommutativeAlgebra small(Subgroup::trivial(g), Subgroup::trivial(g), f);
  try {
    small.coordinates(x);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SupportOutsideCentralizer);
  }
}

TEST(Idempotents, MatchExhaustiveOracle) {
  for (auto [name, p] : std::vector<Case>{{"S3", 2}, {"S3", 3}, {"S4", 2}, {"A4", 2}, {"A4", 3}, {"D8", 2}}) {
    auto g = group_by_name(name);
    Field f = splitting_field(g, p);
    ASSERT_LE(f.size(), 4u);
    std::set<oracle::Dense> computed;
    for (const auto& b : blocks(g, f)) computed.insert(b.element.dense());
    EXPECT_EQ(computed, oracle::primitive_central_idempotents(g, f)) << name << " p=" << p;
  }
}

TEST(Idempotents, CountsFromOracle) {
  EXPECT_EQ(blocks(symmetric(3), Field::make(2, 2)).size(), 2u);
  EXPECT_EQ(blocks(symmetric(4), Field::make(2, 1)).size(), 1u);
  EXPECT_EQ(blocks(symmetric(4), Field::make(2, 2)).size(), 1u);
  EXPECT_EQ(blocks(group_by_name("D8"), Field::make(2, 1)).size(), 1u);
}

TEST(Idempotents, InvariantsAcrossSuite) {
  for (const char* name : {"S4", "A5", "D16", "Q16", "SD16", "C2xC3"})
    for (std::uint32_t p : {2u, 3u}) {
      auto g = group_by_name(name);
      auto bs = blocks(g, splitting_field(g, p));
      expect_block_invariants(g, bs);
    }
}

TEST(Idempotents, PGroupHasSingleBlock) {
  for (const char* name : {"D8", "Q16", "C4", "V4"}) {
    auto g = group_by_name(name);
    auto bs = blocks(g, Field::make(2, 1));
    ASSERT_EQ(bs.size(), 1u);
    EXPECT_EQ(bs[0].element, AlgebraElement::one(g, Field::make(2, 1)));
  }
}

TEST(Idempotents, NonSplitFieldRaised) {
  // C3 over GF(2): x^2+x+1 does not split
  try {
    blocks(cyclic(3), Field::make(2, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NonSplitField);
  }
}

TEST(Idempotents, SplittingStability) {
  for (const char* name : {"S3", "S4", "A5", "C2xC3"})
    for (std::uint32_t p : {2u, 3u}) {
      auto g = group_by_name(name);
      EXPECT_TRUE(block_count_stable(g, splitting_field(g, p))) << name << " " << p;
    }
}

TEST(Idempotents, RadicalDimension) {
  // Z(kD8) over GF(2) is local of dimension 5
  EXPECT_EQ(center_basis(group_by_name("D8"), Field::make(2, 1)).radical_dim(), 4u);
  // semisimple in coprime characteristic
  EXPECT_EQ(center_basis(symmetric(3), Field::make(5, 1)).radical_dim(), 0u);
}

TEST(BrauerMap, IdentityAtTrivialSubgroup) {
  auto g = symmetric(4);
  Field f = Field::make(2, 2);
  auto one = Subgroup::trivial(g);
  for (const auto& b : blocks(g, f)) EXPECT_EQ(brauer_map(g, one, one, b.element), b.element);
}

TEST(BrauerMap, PrincipalBlockOfS4AtSylow) {
  auto g = symmetric(4);
  Field f = Field::make(2, 1);
  auto d = sylow_subgroup(g, 2);
  auto b = principal_block(g, f).element;
  auto image = brauer_map(g, Subgroup::trivial(g), d, b);
  // oracle: truncate coefficients to elements centralizing every element of D
  auto cd = oracle::commuting_elements(g, d.elements());
  std::vector<AlgebraElement::Term> kept;
  for (const auto& t : b.terms())
    if (std::binary_search(cd.begin(), cd.end(), t.first)) kept.push_back(t);
  EXPECT_EQ(image, AlgebraElement(g, f, kept));
  EXPECT_FALSE(image.is_zero());
}

TEST(BrauerMap, OrbitSumOutsideCentralizerVanishes) {
  auto g = symmetric(4);
  Field f = Field::make(2, 1);
  auto q = sub(g, {"(0 1)(2 3)", "(0 2)(1 3)"});
  // a V-orbit of 3-cycles: length 4, no element centralizes V
  std::vector<Elem> orbit;
  for (const char* c : {"(0 1 2)", "(0 3 1)", "(1 3 2)", "(0 2 3)"}) orbit.push_back(g.index_of(Perm::parse(c, 4)));
  auto x = AlgebraElement::sum_of(g, f, orbit);
  EXPECT_TRUE(brauer_map(g, Subgroup::trivial(g), q, x).is_zero());
}

TEST(BrauerMap, Errors) {
  auto g = symmetric(4);
  Field f = Field::make(2, 1);
  auto c2 = sub(g, {"(0 2)"});
  auto d8 = sub(g, {"(0 1 2 3)", "(0 2)"});
  auto v = sub(g, {"(0 1)(2 3)", "(0 2)(1 3)"});
  auto x = AlgebraElement::basis(g, f, g.index_of(Perm::parse("(0 1 2)", 4)));
  auto expect_code = [&](auto&& fn, Errc code) {
    try {
      fn();
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), code);
    }
  };
  expect_code([&] { brauer_map(g, c2, d8, x); }, Errc::NotNormalIn);
  expect_code([&] { brauer_map(g, v, v, x); }, Errc::SupportOutsideCentralizer);
  expect_code([&] { brauer_map(g, Subgroup::trivial(g), v, x); }, Errc::NotInvariant);
}

TEST(Defect, PrincipalBlocksHaveSylowDefect) {
  for (const char* name : {"S3", "S4", "A4", "A5", "D8", "D16", "Q16", "SD16", "C2xC3"})
    for (std::uint32_t p : {2u, 3u}) {
      auto g = group_by_name(name);
      Field f = splitting_field(g, p);
      auto res = defect_group(g, principal_block(g, f).element, p);
      EXPECT_TRUE(res.maximizers_conjugate);
      EXPECT_EQ(res.defect_group.order(), p_part(g.order(), p)) << name << " " << p;
    }
}

TEST(Defect, NonPrincipalBlockOfS3IsDefectZero) {
  auto g = symmetric(3);
  Field f = Field::make(2, 2);
  auto bs = blocks(g, f);
  ASSERT_EQ(bs.size(), 2u);
  for (const auto& b : bs) {
    if (b.element.augmentation() == Field::one()) continue;
    EXPECT_TRUE(defect_group(g, b.element, 2).defect_group.is_trivial());
    // defect zero: block algebra is a full matrix algebra on the 2-dimensional simple
    EXPECT_EQ(left_ideal_dim(b.element), 4u);
  }
  auto principal = principal_block(g, f).element;
  EXPECT_EQ(defect_group(g, principal, 2).defect_group.order(), 2u);
  EXPECT_NE(left_ideal_dim(principal), 1u);
}

TEST(Defect, PGroupBlockHasFullDefect) {
  auto g = group_by_name("D16");
  auto res = defect_group(g, AlgebraElement::one(g, Field::make(2, 1)), 2);
  EXPECT_EQ(res.defect_group.order(), 16u);
}

TEST(PrincipalBlock, Examples) {
  Field f4 = Field::make(2, 2);
  auto c3 = cyclic(3);
  std::vector<Elem> all{0, 1, 2};
  EXPECT_EQ(principal_block(c3, f4).element, AlgebraElement::sum_of(c3, f4, all));
  auto d8 = group_by_name("D8");
  EXPECT_EQ(principal_block(d8, Field::make(2, 1)).element, AlgebraElement::one(d8, Field::make(2, 1)));
  auto s3 = symmetric(3);
  EXPECT_EQ(principal_block(s3, f4).element.augmentation(), Field::one());
}

TEST(NormalPrincipal, S3ModC3IsIsomorphism) {
  auto g = symmetric(3);
  Field f = Field::make(2, 2);
  auto n = sub(g, {"(0 1 2)"});
  auto r = normal_principal_check(g, n, f);
  EXPECT_TRUE(r.idempotent_central);
  EXPECT_TRUE(r.surjective);
  EXPECT_TRUE(r.isomorphism);
  EXPECT_EQ(r.ideal_dim, 2u);
  EXPECT_EQ(r.quotient_order, 2u);
  EXPECT_TRUE(r.criterion_holds);
  EXPECT_EQ(r.idempotent, AlgebraElement::sum_of(g, f, n.elements()));
}

TEST(NormalPrincipal, S4ModV4IsNotInjective) {
  auto g = symmetric(4);
  Field f = Field::make(2, 1);
  auto r = normal_principal_check(g, sub(g, {"(0 1)(2 3)", "(0 2)(1 3)"}), f);
  EXPECT_EQ(r.idempotent, AlgebraElement::one(g, f));
  EXPECT_TRUE(r.surjective);
  EXPECT_FALSE(r.isomorphism);
  EXPECT_EQ(r.ideal_dim, 24u);
  EXPECT_TRUE(r.p_divides_normal);
  EXPECT_TRUE(r.criterion_holds);
}

TEST(NormalPrincipal, TrivialNormalSubgroup) {
  auto g = symmetric(3);
  auto r = normal_principal_check(g, Subgroup::trivial(g), Field::make(2, 2));
  EXPECT_TRUE(r.isomorphism);
  EXPECT_EQ(r.ideal_dim, 6u);
  EXPECT_TRUE(r.criterion_holds);
}

TEST(NormalPrincipal, RejectsNonNormal) {
  auto g = symmetric(3);
  try {
    normal_principal_check(g, sub(g, {"(0 1)"}), Field::make(2, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotNormal);
  }
}

TEST(RadicalLayers, MatchOracle) {
  Field f2 = Field::make(2, 1);
  EXPECT_EQ(radical_layers(group_by_name("D8"), f2), (std::vector<std::size_t>{1, 2, 2, 2, 1}));
  EXPECT_EQ(radical_layers(group_by_name("V4"), f2), (std::vector<std::size_t>{1, 2, 1}));
  for (const char* name : {"D8", "V4", "C4", "Q8", "D16"}) {
    auto g = group_by_name(name);
    EXPECT_EQ(radical_layers(g, f2), oracle::radical_series(g, f2)) << name;
  }
}
