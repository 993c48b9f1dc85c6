#include <gtest/gtest.h>

#include <stdexcept>

#include "hforge/gradedorth.hpp"

using namespace hforge;

namespace {

FqMatrix hyperbolic(const FqContext& f, std::size_t half) {
  FqMatrix g(f, 2 * half, 2 * half);
  for (std::size_t i = 0; i < half; ++i) g(i, half + i) = g(half + i, i) = f.one();
  return g;
}

FqMatrix block_diagonal(const FqContext& f, const FqMatrix& a, const FqMatrix& b) {
  FqMatrix g(f, a.rows() + b.rows(), a.rows() + b.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) g(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) g(a.rows() + i, a.rows() + j) = b(i, j);
  return g;
}

GradedQuadraticSpace one_asym(std::uint64_t q) {
  auto f = FqContext::of_order(q);
  return GradedQuadraticSpace(f, BlockIndex({{"a", OrbitKind::asym, 2}}), hyperbolic(*f, 1));
}

GradedQuadraticSpace two_asym_f3() {
  auto f = FqContext::make(3);
  return GradedQuadraticSpace(f, BlockIndex({{"a", OrbitKind::asym, 2}, {"b", OrbitKind::asym, 2}}),
                              block_diagonal(*f, hyperbolic(*f, 1), hyperbolic(*f, 1)));
}

GradedQuadraticSpace asym_sym_f3() {
  auto f = FqContext::make(3);
  return GradedQuadraticSpace(f, BlockIndex({{"a", OrbitKind::asym, 2}, {"0", OrbitKind::sym, 2}}),
                              block_diagonal(*f, hyperbolic(*f, 1), FqMatrix::identity(*f, 2)));
}

FqMatrix permutation(const FqContext& f, const std::vector<std::size_t>& image) {
  FqMatrix m(f, image.size(), image.size());
  for (std::size_t j = 0; j < image.size(); ++j) m(image[j], j) = f.one();
  return m;
}

}  // namespace

TEST(GradedMu4, GroupLaw) {
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      EXPECT_EQ(Mu4Value::power_of_i(a) * Mu4Value::power_of_i(b), Mu4Value::power_of_i((a + b) % 4));
  EXPECT_EQ(Mu4Value::i().pow(2), Mu4Value::minus_one());
  EXPECT_EQ(Mu4Value::i().pow(4), Mu4Value::one());
  EXPECT_EQ(Mu4Value::power_of_i(-1), Mu4Value::minus_i());
  for (const char* s : {"1", "i", "-1", "-i"}) EXPECT_EQ(Mu4Value::parse(s).to_string(), s);
  EXPECT_THROW(Mu4Value::parse("2"), std::invalid_argument);
}

TEST(GradedIndex, Validation) {
  auto f = FqContext::make(3);
  EXPECT_THROW(BlockIndex({{"a", OrbitKind::asym, 3}}), std::invalid_argument);
  EXPECT_THROW(BlockIndex({{"a", OrbitKind::asym, 2}, {"a", OrbitKind::sym, 1}}), std::invalid_argument);
  BlockIndex idx({{"a", OrbitKind::asym, 2}, {"0", OrbitKind::sym, 1}});
  EXPECT_EQ(idx.total_dim(), 3u);
  EXPECT_EQ(idx.orbit_of_coordinate(2), 1u);
  EXPECT_EQ(idx.negate("a"), "-a");
  EXPECT_EQ(idx.negate("-a"), "a");
  EXPECT_EQ(idx.negate("0"), "0");
  // Cross-orbit pairing is not of the label-pairing shape.
  FqMatrix g = block_diagonal(*f, hyperbolic(*f, 1), FqMatrix::identity(*f, 1));
  g(0, 2) = g(2, 0) = f->one();
  EXPECT_THROW(GradedQuadraticSpace(f, idx, g), std::invalid_argument);
}

TEST(GradedGlplus, SpecValues) {
  auto V = two_asym_f3();
  const auto& f = *V.extension_field();
  auto id = glplus_membership(V, FqMatrix::identity(f, 4));
  ASSERT_TRUE(id.has_value());
  EXPECT_EQ(*id, (std::vector<std::size_t>{0, 1}));

  auto swap = glplus_membership(V, permutation(f, {2, 3, 0, 1}));
  ASSERT_TRUE(swap.has_value());
  EXPECT_EQ(*swap, (std::vector<std::size_t>{1, 0}));

  auto W = asym_sym_f3();
  FqMatrix mix = FqMatrix::identity(*W.extension_field(), 4);
  mix(2, 0) = W.extension_field()->one();
  EXPECT_FALSE(glplus_membership(W, mix).has_value());
  EXPECT_FALSE(glplus_membership(W, permutation(*W.extension_field(), {2, 3, 0, 1})).has_value());
}

TEST(GradedZeta, ScalingIdentities) {
  auto V = two_asym_f3();
  const auto z0 = zeta_scaling(V, 0).matrix;
  const auto z1 = zeta_scaling(V, 1).matrix;
  auto sq = V.descend(z0 * z0);
  ASSERT_TRUE(sq.has_value());
  EXPECT_EQ(*sq, FqMatrix::from_ints(*V.base_field(), 4, 4, {-1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1}));
  EXPECT_TRUE(V.form().is_orthogonal(*sq));
  EXPECT_EQ(z0 * z1, z1 * z0);
  EXPECT_TRUE((z0 * z0 * z0 * z0).is_identity());
  EXPECT_FALSE(V.descend(z0).has_value());
  EXPECT_THROW(zeta_scaling(asym_sym_f3(), 1), std::invalid_argument);
}

TEST(GradedOtilde, SpecValues) {
  auto V = asym_sym_f3();
  const auto& fe = *V.extension_field();
  auto m = otilde_membership(V, FqMatrix::identity(fe, 4));
  ASSERT_TRUE(m.has_value());
  EXPECT_TRUE(m->h.is_identity());
  EXPECT_EQ(m->zeta_exponent, (std::vector<bool>{false, false}));

  auto z = otilde_membership(V, zeta_scaling(V, 0).matrix);
  ASSERT_TRUE(z.has_value());
  EXPECT_TRUE(z->h.is_identity());
  EXPECT_EQ(z->zeta_exponent, (std::vector<bool>{true, false}));

  FqMatrix zsym = FqMatrix::identity(fe, 4);
  zsym(2, 2) = zsym(3, 3) = V.zeta();
  EXPECT_FALSE(otilde_membership(V, zsym).has_value());
  EXPECT_THROW(extended_sn(V, zsym), std::domain_error);
}

TEST(GradedOtilde, RationalIsometryDecomposesTrivially) {
  auto V = two_asym_f3();
  for (const auto& h : enumerate_orthogonal_group(V.form())) {
    const auto m = V.lift(h.matrix());
    if (!glplus_membership(V, m)) continue;
    auto d = otilde_membership(V, m);
    ASSERT_TRUE(d.has_value());
    EXPECT_EQ(d->h, h);
    EXPECT_EQ(d->zeta_exponent, (std::vector<bool>{false, false}));
  }
}

TEST(GradedExtendedSn, SpecValues) {
  auto V5 = one_asym(5);
  EXPECT_EQ(V5.root(), Mu4Value::one());
  EXPECT_EQ(extended_sn(V5, FqMatrix::identity(*V5.extension_field(), 2)), Mu4Value::one());
  EXPECT_EQ(extended_sn(V5, zeta_scaling(V5, 0).matrix), Mu4Value::one());

  auto V3 = one_asym(3);
  EXPECT_EQ(V3.root(), Mu4Value::i());
  const auto z = zeta_scaling(V3, 0).matrix;
  EXPECT_EQ(extended_sn(V3, z), Mu4Value::i());
  EXPECT_EQ(extended_sn(V3, z * z), Mu4Value::minus_one());
  // -id on the hyperbolic plane over F_3: factor through e+f, e-f with
  // phi-values 1 and -1; -1 is not among the squares {1} of F_3.
  auto minus = V3.descend(z * z);
  ASSERT_TRUE(minus.has_value());
  EXPECT_EQ(Mu4Value::from_sign(sgn_spinor(OrthogonalMap(V3.form(), *minus))), Mu4Value::minus_one());
}

TEST(GradedExtendedSn, ChosenRootPropagates) {
  auto f = FqContext::make(3);
  GradedQuadraticSpace V(f, BlockIndex({{"a", OrbitKind::asym, 2}}), hyperbolic(*f, 1), Mu4Value::minus_i());
  EXPECT_EQ(extended_sn(V, zeta_scaling(V, 0).matrix), Mu4Value::minus_i());
  EXPECT_THROW(GradedQuadraticSpace(f, BlockIndex({{"a", OrbitKind::asym, 2}}), hyperbolic(*f, 1), Mu4Value::one()),
               std::invalid_argument);
}

TEST(GradedExtendedSn, HigherDimensionalOrbitValue) {
  // f-dimension 4: root^(4/2) = -1 over F_3.
  auto f = FqContext::make(3);
  GradedQuadraticSpace V(f, BlockIndex({{"a", OrbitKind::asym, 4}}), hyperbolic(*f, 2));
  EXPECT_EQ(extended_sn(V, zeta_scaling(V, 0).matrix), Mu4Value::minus_one());
}

TEST(GradedExtendedSn, HomomorphismOnGeneratedGroup) {
  auto V = two_asym_f3();
  std::vector<FqMatrix> gens{zeta_scaling(V, 0).matrix, zeta_scaling(V, 1).matrix,
                             permutation(*V.extension_field(), {2, 3, 0, 1})};
  auto group = generate_group(gens);
  EXPECT_EQ(group.size(), 32u);
  for (const auto& g : group)
    for (const auto& h : group) ASSERT_EQ(extended_sn(V, g * h), extended_sn(V, g) * extended_sn(V, h));
}
