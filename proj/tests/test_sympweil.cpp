#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "hforge/sympweil.hpp"

using namespace hforge;

namespace {

Cyclotomic zeta_p(const HeisenbergRep& rho, std::int64_t a) {
  const auto& cf = rho.coefficients();
  const std::int64_t p = static_cast<std::int64_t>(rho.space().p());
  return Cyclotomic::zeta(cf, (cf.conductor() / p) * (((a % p) + p) % p));
}

FqMatrix mat2(const FqContext& f, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return FqMatrix::from_ints(f, 2, 2, {a, b, c, d});
}

bool proportional(const CycloMatrix& a, const CycloMatrix& b) {
  std::optional<Cyclotomic> ratio;
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c) {
      if (a(r, c).is_zero() != b(r, c).is_zero()) return false;
      if (a(r, c).is_zero()) continue;
      const auto q = a(r, c) / b(r, c);
      if (!ratio) ratio = q;
      else if (!(*ratio == q)) return false;
    }
  return ratio.has_value();
}

}  // namespace

TEST(SympHeisenberg, SpecValues) {
  SymplecticSpace V(3, 1);
  const auto& f = V.field();
  const auto e = unit_vector(f, 2, 0);
  const auto fv = unit_vector(f, 2, 1);
  auto x = heisenberg_mul(V, {e, f.zero()}, {fv, f.zero()});
  EXPECT_EQ(x.v, add(e, fv));
  EXPECT_EQ(x.a, f.from_int(2));
  auto c = heisenberg_mul(V, {zero_vector(f, 2), f.from_int(1)}, {zero_vector(f, 2), f.from_int(1)});
  EXPECT_EQ(c.a, f.from_int(2));
}

TEST(SympHeisenberg, CommutatorIsPairing) {
  SymplecticSpace V(5, 2);
  const auto& f = V.field();
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> d(0, 4);
  for (int t = 0; t < 100; ++t) {
    FqVector v(4), w(4);
    for (auto& x : v) x = f.from_int(d(rng));
    for (auto& x : w) x = f.from_int(d(rng));
    const HeisenbergElement a{v, f.zero()}, b{w, f.zero()};
    auto comm = heisenberg_mul(V, heisenberg_mul(V, heisenberg_mul(V, a, b), heisenberg_inv(V, a)), heisenberg_inv(V, b));
    EXPECT_TRUE(is_zero(comm.v));
    EXPECT_EQ(comm.a, V.pair(v, w));
  }
}

TEST(SympHeisenberg, RepresentationSpecValues) {
  HeisenbergRep rho(SymplecticSpace(3, 1));
  EXPECT_EQ(rho.dim(), 3u);
  const auto& f = rho.space().field();
  auto center = rho.matrix({zero_vector(f, 2), f.one()});
  EXPECT_EQ(center, CycloMatrix::identity(rho.coefficients(), 3).scaled(zeta_p(rho, 1)));
  EXPECT_EQ(rho.character_norm(), Cyclotomic::one(rho.coefficients()));
}

TEST(SympHeisenberg, ExhaustiveMultiplicativityP3) {
  HeisenbergRep rho(SymplecticSpace(3, 1));
  const auto els = heisenberg_elements(rho.space());
  EXPECT_EQ(els.size(), 27u);
  for (const auto& x : els)
    for (const auto& y : els)
      ASSERT_EQ(rho.matrix(x) * rho.matrix(y), rho.matrix(heisenberg_mul(rho.space(), x, y)));
}

TEST(SympHeisenberg, OtherCentralCharacter) {
  HeisenbergRep rho(SymplecticSpace(5, 1), CentralCharacterChoice{2});
  const auto& f = rho.space().field();
  for (std::int64_t a = 0; a < 5; ++a)
    EXPECT_EQ(rho.character({zero_vector(f, 2), f.from_int(a)}), zeta_p(rho, 2 * a).scaled(5));
  EXPECT_EQ(rho.character_norm(), Cyclotomic::one(rho.coefficients()));
}

TEST(SympWeil, SpecValuesP3) {
  HeisenbergRep rho(SymplecticSpace(3, 1));
  WeilSL2 omega(rho);
  const auto& f = rho.space().field();
  EXPECT_TRUE(omega(FqMatrix::identity(f, 2)).is_identity());
  const auto m = omega(mat2(f, -1, 0, 0, -1));
  EXPECT_TRUE((m * m).is_identity());
  EXPECT_EQ(m.trace().abs2(), Cyclotomic::one(rho.coefficients()));
  EXPECT_THROW(omega(mat2(f, 1, 1, 1, 1)), std::invalid_argument);
  EXPECT_EQ(enumerate_sl2(f).size(), 24u);
}

TEST(SympWeil, ExhaustiveGenuineP3) {
  HeisenbergRep rho(SymplecticSpace(3, 1));
  WeilSL2 omega(rho);
  const auto group = enumerate_sl2(rho.space().field());
  std::vector<CycloMatrix> ops;
  for (const auto& g : group) ops.push_back(omega(g));
  for (std::size_t i = 0; i < group.size(); ++i)
    for (std::size_t j = 0; j < group.size(); ++j) {
      auto k = std::find(group.begin(), group.end(), group[i] * group[j]) - group.begin();
      ASSERT_EQ(ops[i] * ops[j], ops[k]);
    }
}

// The intertwiner solved from the Heisenberg relations alone must agree with
// the explicit Weil operators up to a scalar.
TEST(SympWeil, ProportionalToProjectiveIntertwiner) {
  for (std::uint64_t p : {3, 5}) {
    HeisenbergRep rho(SymplecticSpace(p, 1));
    WeilSL2 omega(rho);
    for (const auto& g : enumerate_sl2(rho.space().field())) {
      const auto w = omega(g);
      ASSERT_TRUE(proportional(w, projective_weil(rho, g))) << p;
      for (const auto& h : heisenberg_elements(rho.space())) {
        ASSERT_TRUE(intertwines(rho, w, g, h));
        if (p == 5) break;
      }
    }
  }
}

TEST(SympWeil, ProjectiveIdentityAndCocycleSp4) {
  HeisenbergRep rho(SymplecticSpace(3, 2));
  const auto& f = rho.space().field();
  EXPECT_TRUE(projective_weil(rho, FqMatrix::identity(f, 4)).is_identity());
  std::mt19937_64 rng(9);
  for (int t = 0; t < 20; ++t) {
    const auto g = random_symplectic(rho.space(), rng);
    const auto h = random_symplectic(rho.space(), rng);
    ASSERT_TRUE(rho.space().is_symplectic(g));
    auto c = weil_cocycle(rho, g, h);
    ASSERT_TRUE(c.has_value());
    EXPECT_FALSE(c->is_zero());
  }
  EXPECT_THROW(projective_weil(rho, FqMatrix::from_ints(f, 4, 4, {1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1})),
               std::invalid_argument);
}

TEST(SympWeil, GaussNormalization) {
  // gamma = (1/p) sum_x psi(x^2/2); p^2 gamma^2 = sgn(-1) p.
  for (std::uint64_t p : {3, 5, 7}) {
    HeisenbergRep rho(SymplecticSpace(p, 1));
    WeilSL2 omega(rho);
    const auto g = omega.gauss_normalization();
    const std::int64_t pp = static_cast<std::int64_t>(p);
    EXPECT_EQ((g * g).scaled(pp * pp), Cyclotomic::rational(rho.coefficients(), p % 4 == 1 ? pp : -pp));
  }
}

TEST(SympDetSign, SpecValues) {
  SymplecticSpace V(5, 2);
  const auto& f = V.field();
  const std::vector<FqVector> U{unit_vector(f, 4, 0), unit_vector(f, 4, 1)};
  EXPECT_EQ(det_sign_character(V, FqMatrix::identity(f, 4), U), SignValue::plus());
  // diag(2, 1) on span(e1, e2) extends to diag(2, 1, 1/2, 1).
  FqMatrix g = FqMatrix::identity(f, 4);
  g(0, 0) = f.from_int(2);
  g(2, 2) = f.from_int(3);
  ASSERT_TRUE(V.is_symplectic(g));
  EXPECT_EQ(det_sign_character(V, g, U), SignValue::minus());

  SymplecticSpace W(5, 1);
  const std::vector<FqVector> line{unit_vector(W.field(), 2, 0)};
  for (std::int64_t t = 1; t < 5; ++t) {
    FqMatrix d = mat2(W.field(), t, 0, 0, 1);
    d(1, 1) = W.field().from_int(t).inv();
    EXPECT_EQ(det_sign_character(W, d, line), sgn(W.field().from_int(t)));
  }
  EXPECT_THROW(det_sign_character(W, mat2(W.field(), 0, 1, -1, 0), line), std::invalid_argument);
  EXPECT_THROW(det_sign_character(V, FqMatrix::identity(f, 4), {unit_vector(f, 4, 0), unit_vector(f, 4, 2)}),
               std::invalid_argument);
}

TEST(SympReduction, SpecValues) {
  SymplecticSpace V2(3, 1);
  auto r0 = isotropic_reduction(V2, {});
  EXPECT_EQ(r0.perp.size(), 2u);
  EXPECT_EQ(r0.quotient_dim(), 2u);

  auto r1 = isotropic_reduction(V2, {unit_vector(V2.field(), 2, 0)});
  EXPECT_EQ(r1.perp.size(), 1u);
  EXPECT_EQ(r1.quotient_dim(), 0u);

  SymplecticSpace V4(3, 2);
  const auto& f = V4.field();
  auto r2 = isotropic_reduction(V4, {unit_vector(f, 4, 0)});
  EXPECT_EQ(r2.perp.size(), 3u);
  ASSERT_EQ(r2.quotient_dim(), 2u);
  EXPECT_EQ(r2.quotient_form, FqMatrix::from_ints(f, 2, 2, {0, 1, -1, 0}));
  EXPECT_TRUE(r2.quotient_form.is_alternating());
  EXPECT_EQ(r2.quotient_coordinates(unit_vector(f, 4, 1)).size(), 2u);

  EXPECT_THROW(isotropic_reduction(V4, {unit_vector(f, 4, 0), unit_vector(f, 4, 2)}), std::invalid_argument);
}

TEST(SympSplit, HandComputedInstances) {
  auto f = FqContext::make(3);
  SymplecticSpace V(3, 2);
  // e1: +1, e2: 0, f1: -1, f2: 0.
  auto s = graded_symplectic_split(V.form(), {1, 0, -1, 0});
  EXPECT_TRUE(same_subspace(*f, 4, s.negative, {unit_vector(*f, 4, 2)}));
  EXPECT_TRUE(same_subspace(*f, 4, s.zero, {unit_vector(*f, 4, 1), unit_vector(*f, 4, 3)}));
  EXPECT_TRUE(same_subspace(*f, 4, s.positive, {unit_vector(*f, 4, 0)}));
  EXPECT_FALSE(check_graded_split(V.form(), s).has_value());

  auto z = graded_symplectic_split(V.form(), {0, 0, 0, 0});
  EXPECT_TRUE(z.negative.empty());
  EXPECT_TRUE(z.positive.empty());
  EXPECT_EQ(z.zero.size(), 4u);

  SymplecticSpace W(3, 1);
  auto h = graded_symplectic_split(W.form(), {0.5, -0.5});
  EXPECT_EQ(h.negative.size(), 1u);
  EXPECT_EQ(h.positive.size(), 1u);
  EXPECT_TRUE(h.zero.empty());

  // Pairing e1 (+1) with f1 (+1) violates the weight constraint.
  EXPECT_THROW(graded_symplectic_split(W.form(), {1, 1}), std::invalid_argument);
}

TEST(SympSplit, RandomWeightedForms) {
  std::mt19937_64 rng(17);
  for (std::uint64_t p : {3, 5, 7}) {
    auto f = FqContext::make(p);
    for (std::size_t dim : {2, 4, 6, 8}) {
      for (int t = 0; t < 20; ++t) {
        auto wf = random_weighted_form(*f, dim, rng);
        EXPECT_TRUE(wf.form.is_alternating());
        EXPECT_EQ(wf.form.rank(), dim);
        auto s = graded_symplectic_split(wf.form, wf.weights);
        EXPECT_EQ(s.negative.size(), s.positive.size());
        EXPECT_EQ(s.negative.size() + s.zero.size() + s.positive.size(), dim);
        EXPECT_FALSE(check_graded_split(wf.form, s).has_value());
      }
    }
  }
}

TEST(SympInduction, TwistIsNecessaryForEveryLagrangian) {
  for (std::uint64_t p : {3, 5}) {
    HeisenbergRep rho(SymplecticSpace(p, 1));
    for (const auto& u : projective_points(rho.space().field(), 2)) {
      auto with = induction_identity_check(rho, {u}, InductionMode::with_sl2_levi, true);
      auto without = induction_identity_check(rho, {u}, InductionMode::with_sl2_levi, false);
      EXPECT_TRUE(with.equal) << p;
      EXPECT_FALSE(without.equal) << p;
      EXPECT_EQ(with.lhs_dim, p);
      EXPECT_EQ(with.rhs_dim, p);
      EXPECT_EQ(with.lhs.size(), with.group_order);
      EXPECT_EQ(with.group_order, p * (p - 1) * p * p * p);
    }
  }
}

TEST(SympInduction, HeisenbergOnlyAndRejections) {
  HeisenbergRep rho(SymplecticSpace(3, 1));
  const auto& f = rho.space().field();
  auto r = induction_identity_check(rho, {unit_vector(f, 2, 1)}, InductionMode::heisenberg_only);
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(r.group_order, 27u);
  EXPECT_THROW(induction_identity_check(rho, {}, InductionMode::with_sl2_levi), std::invalid_argument);
  HeisenbergRep rho4(SymplecticSpace(3, 2));
  EXPECT_THROW(induction_identity_check(rho4, {unit_vector(rho4.space().field(), 4, 0)}, InductionMode::with_sl2_levi),
               std::invalid_argument);
}
