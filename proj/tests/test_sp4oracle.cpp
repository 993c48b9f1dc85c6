#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "hforge/sp4oracle.hpp"

using namespace hforge;

namespace {

TruncSeries cst(const FqContextPtr& f, unsigned N, std::int64_t v) { return TruncSeries::constant(f, N, f->from_int(v)); }

// Hand-derived closed form: for g = [[a, b], [c, d]] with c a unit the
// decomposition k1 = [[-1/c, -a], [0, -c]], k2 = u(d/c) gives
// phi(g) = sgn(-c mod t) under the sign twist and 1 under the trivial one.
int closed_form_phi(const Mat2& g, TwistChoice twist) {
  if (!g.c.is_unit()) return 0;
  if (twist == TwistChoice::trivial) return 1;
  return sgn(-g.c.residue()).value();
}

std::int64_t direct_coset_sum(TwistChoice twist, std::uint64_t q, unsigned N, ConvolutionPoint point) {
  auto f = FqContext::of_order(q);
  const Mat2 s = Mat2::weyl(f, N);
  const Mat2 s_inv = s.inverse();
  std::int64_t total = 0;
  for (const auto& x : f->elements()) {
    const TruncSeries tx = TruncSeries::constant(f, N, x);
    const Mat2 left = Mat2::upper(tx) * s;
    Mat2 right = s_inv * Mat2::upper(-tx);
    if (point == ConvolutionPoint::s) right = right * s;
    total += closed_form_phi(left, twist) * closed_form_phi(right, twist);
  }
  return total;
}

}  // namespace

TEST(TruncSeries, RingOperations) {
  auto f = FqContext::make(5);
  const auto t = TruncSeries::uniformizer(f, 3);
  EXPECT_EQ(t.valuation(), 1u);
  EXPECT_TRUE((t * t * t).is_zero());
  const auto u = cst(f, 3, 2) + t;
  EXPECT_TRUE(u.is_unit());
  EXPECT_EQ(u * u.inv(), cst(f, 3, 1));
  EXPECT_THROW(t.inv(), std::domain_error);
  EXPECT_THROW(t + TruncSeries::uniformizer(f, 4), std::invalid_argument);
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    const auto a = TruncSeries::random(f, 4, rng);
    const auto b = TruncSeries::random(f, 4, rng);
    const auto c = TruncSeries::random(f, 4, rng);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    if (a.is_unit()) EXPECT_EQ(a.inv() * a, cst(f, 4, 1));
  }
}

TEST(Sp4Iwahori, SpecValues) {
  auto f = FqContext::make(3);
  EXPECT_TRUE(iwahori_member(Mat2::identity(f, 3)));
  EXPECT_FALSE(iwahori_member(Mat2::weyl(f, 3)));
  EXPECT_TRUE(iwahori_member(Mat2::upper(cst(f, 3, 2))));
  EXPECT_TRUE(iwahori_member(Mat2::lower(TruncSeries::uniformizer(f, 3))));
  const Mat2 bad{cst(f, 3, 1), cst(f, 3, 1), cst(f, 3, 1), cst(f, 3, 1)};
  EXPECT_THROW(iwahori_member(bad), std::invalid_argument);
}

TEST(Sp4Bruhat, SpecValues) {
  auto f = FqContext::make(5);
  const unsigned N = 3;
  const auto id = Mat2::identity(f, N);
  const auto s = Mat2::weyl(f, N);
  auto ds = bruhat_decompose(s);
  EXPECT_TRUE(ds.big_cell);
  EXPECT_EQ(ds.k1, id);
  EXPECT_EQ(ds.k2, id);

  for (std::int64_t xv = 1; xv < 5; ++xv) {
    const auto x = cst(f, N, xv);
    const Mat2 g = s.inverse() * Mat2::upper(-x) * s;
    EXPECT_EQ(g, Mat2::lower(x));
    auto d = bruhat_decompose(g);
    ASSERT_TRUE(d.big_cell);
    EXPECT_EQ(d.k1, Mat2::coroot(-x.inv()) * Mat2::upper(x));
    EXPECT_EQ(d.k2, Mat2::upper(x.inv()));
    EXPECT_EQ(d.k1 * s * d.k2, g);
  }

  auto de = bruhat_decompose(s.inverse() * s);
  EXPECT_FALSE(de.big_cell);
  EXPECT_EQ(de.k1, id);
}

TEST(Sp4Epsilon, SpecValues) {
  auto f = FqContext::make(5);
  const unsigned N = 3;
  for (auto tw : {TwistChoice::trivial, TwistChoice::sign})
    EXPECT_EQ(epsilon_char(Mat2::identity(f, N), tw), SignValue::plus());
  EXPECT_EQ(epsilon_char(Mat2::coroot(cst(f, N, 2)), TwistChoice::sign), SignValue::minus());
  EXPECT_EQ(epsilon_char(Mat2::coroot(cst(f, N, 2)), TwistChoice::trivial), SignValue::plus());
  std::mt19937_64 rng(4);
  for (int i = 0; i < 20; ++i)
    EXPECT_EQ(epsilon_char(Mat2::upper(TruncSeries::random(f, N, rng)), TwistChoice::sign), SignValue::plus());
  EXPECT_THROW(epsilon_char(Mat2::weyl(f, N), TwistChoice::sign), std::invalid_argument);
}

TEST(Sp4Epsilon, MultiplicativeOnIwahori) {
  std::mt19937_64 rng(6);
  for (std::uint64_t q : {3, 5, 7, 9}) {
    auto f = FqContext::of_order(q);
    for (int i = 0; i < 100; ++i) {
      const auto a = random_iwahori(f, 3, rng);
      const auto b = random_iwahori(f, 3, rng);
      ASSERT_TRUE(iwahori_member(a));
      EXPECT_EQ(epsilon_char(a * b, TwistChoice::sign), epsilon_char(a, TwistChoice::sign) * epsilon_char(b, TwistChoice::sign));
    }
  }
}

TEST(Sp4Phi, MatchesClosedForm) {
  std::mt19937_64 rng(8);
  for (std::uint64_t q : {3, 5, 7, 9}) {
    auto f = FqContext::of_order(q);
    for (unsigned N : {2u, 3u, 4u}) {
      for (int i = 0; i < 60; ++i) {
        const auto g = random_special(f, N, rng);
        ASSERT_TRUE(g.is_special());
        for (auto tw : {TwistChoice::trivial, TwistChoice::sign}) ASSERT_EQ(phi_value(g, tw), closed_form_phi(g, tw));
        const auto h = random_big_cell(f, N, rng);
        EXPECT_TRUE(h.c.is_unit());
        ASSERT_EQ(phi_value(h, TwistChoice::sign), closed_form_phi(h, TwistChoice::sign));
      }
    }
  }
  auto f = FqContext::make(3);
  EXPECT_EQ(phi_value(Mat2::weyl(f, 3), TwistChoice::sign), 1);
  EXPECT_EQ(phi_value(Mat2::identity(f, 3), TwistChoice::sign), 0);
}

TEST(Sp4Convolution, SpecValues) {
  EXPECT_EQ(convolve_s(TwistChoice::trivial, 3), 2);
  EXPECT_EQ(convolve_s(TwistChoice::sign, 3), 0);
  EXPECT_EQ(convolve_s(TwistChoice::trivial, 5), 4);
  EXPECT_EQ(convolve_e(TwistChoice::trivial, 3), 3);
  EXPECT_EQ(convolve_e(TwistChoice::trivial, 5), 5);
  EXPECT_THROW(convolve_s(TwistChoice::sign, 4), std::invalid_argument);
  EXPECT_THROW(convolve_e(TwistChoice::sign, 6), std::invalid_argument);
  EXPECT_THROW(convolve_s(TwistChoice::sign, 3, 1), std::invalid_argument);
}

TEST(Sp4Convolution, MatchesDirectCosetSum) {
  for (std::uint64_t q : {3, 5, 7, 9, 11, 25}) {
    for (unsigned N : {2u, 3u, 4u}) {
      for (auto tw : {TwistChoice::trivial, TwistChoice::sign}) {
        EXPECT_EQ(convolve_s(tw, q, N), direct_coset_sum(tw, q, N, ConvolutionPoint::s)) << q;
        EXPECT_EQ(convolve_e(tw, q, N), direct_coset_sum(tw, q, N, ConvolutionPoint::e)) << q;
      }
      const std::int64_t minus_one_sign = q % 4 == 1 ? 1 : -1;
      EXPECT_EQ(convolve_e(TwistChoice::sign, q, N), minus_one_sign * static_cast<std::int64_t>(q));
    }
  }
}

TEST(Sp4Convolution, TermStructure) {
  auto f = FqContext::make(7);
  const auto terms = convolution_terms(TwistChoice::sign, f, 3, ConvolutionPoint::s);
  ASSERT_EQ(terms.size(), 7u);
  for (const auto& t : terms) {
    EXPECT_TRUE(t.left_in_big_cell);
    EXPECT_EQ(t.right_in_big_cell, !t.x.is_zero());
    EXPECT_EQ(t.value, t.x.is_zero() ? 0 : sgn(-t.x).value());
  }
}

TEST(Sp4Checks, Properties) {
  for (std::uint64_t q : {3, 5, 9}) {
    EXPECT_TRUE(coset_completeness_check(q, 3, 100, 1).pass) << q;
    EXPECT_TRUE(bruhat_reconstruction_check(q, 3, 100, 2).pass) << q;
    for (auto tw : {TwistChoice::trivial, TwistChoice::sign}) EXPECT_TRUE(welldefinedness_check(tw, q, 3, 200, 3).pass) << q;
  }
  EXPECT_TRUE(welldefinedness_check(TwistChoice::sign, 3, 3, 500, 4).pass);
}

TEST(Sp4Checks, MinusIdentityDecomposition) {
  // s = (-id) s (-id) and eps(-id)^2 = sgn(-1)^2 = 1.
  auto f = FqContext::make(3);
  const auto m = Mat2::coroot(cst(f, 3, -1));
  EXPECT_EQ(m * Mat2::weyl(f, 3) * m, Mat2::weyl(f, 3));
  const auto e = epsilon_char(m, TwistChoice::sign);
  EXPECT_EQ(e, SignValue::minus());
  EXPECT_EQ(e * e, SignValue::plus());
}

TEST(Sp4TwistWitness, NoRescalingForQ3) {
  const auto w = twist_necessity_witness(3);
  EXPECT_EQ(w.trivial.a, 2);
  EXPECT_EQ(w.trivial.b, 3);
  EXPECT_EQ(w.sign.a, 0);
  EXPECT_EQ(w.sign.b, -3);
  EXPECT_TRUE(w.rescalings.empty());
  EXPECT_FALSE(w.plus_one.pass);
  EXPECT_FALSE(w.minus_one.pass);
  EXPECT_TRUE(w.no_isomorphism);
}

TEST(Sp4TwistWitness, RescalingSolver) {
  // T^2 = 2T + 3 -> (T/2)^2 = T/2 + 3/4 under c = 2.
  const auto sols = rescaling_solutions({2, 12}, {1, 3});
  ASSERT_EQ(sols.size(), 1u);
  EXPECT_EQ(sols[0].first, 2);
  EXPECT_EQ(sols[0].second, 1);
  const auto two = rescaling_solutions({0, 4}, {0, 1});
  EXPECT_EQ(two.size(), 2u);
  EXPECT_TRUE(rescaling_solutions({0, 3}, {0, 1}).empty());
  const auto H = rank_one_algebra({2, 3});
  EXPECT_TRUE(check_quadratic_relations(H).pass);
}

TEST(Sp4Twist, Parsing) {
  EXPECT_EQ(parse_twist("trivial"), TwistChoice::trivial);
  EXPECT_EQ(parse_twist("sign"), TwistChoice::sign);
  EXPECT_EQ(twist_name(TwistChoice::sign), "sign");
  EXPECT_THROW(parse_twist("other"), std::invalid_argument);
}
