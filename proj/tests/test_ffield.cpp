#include <gtest/gtest.h>

#include <set>
#include <stdexcept>

#include "hforge/ffield.hpp"

using namespace hforge;

namespace {

// Set of squares computed by enumerating x*x, independent of sgn.
std::set<std::uint64_t> squares_of(const FqContext& f) {
  std::set<std::uint64_t> out;
  for (const auto& x : f.nonzero_elements()) out.insert((x * x).index());
  return out;
}

const std::uint64_t kOrders[] = {3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29, 31, 37, 41, 43, 47, 49};

}  // namespace

TEST(FfieldSgn, SpecValuesF5) {
  auto f = FqContext::make(5);
  EXPECT_EQ(sgn(f->from_int(1)), SignValue::plus());
  EXPECT_EQ(sgn(f->from_int(2)), SignValue::minus());
  EXPECT_EQ(sgn(f->from_int(4)), SignValue::plus());
  EXPECT_THROW(sgn(f->zero()), std::domain_error);
}

TEST(FfieldSgn, MatchesSquareEnumeration) {
  for (auto q : kOrders) {
    auto f = FqContext::of_order(q);
    const auto sq = squares_of(*f);
    EXPECT_EQ(sq.size(), (q - 1) / 2) << q;
    int sum = 0;
    for (const auto& a : f->nonzero_elements()) {
      EXPECT_EQ(sgn(a).is_plus(), sq.count(a.index()) == 1) << q << " " << a;
      sum += sgn(a).value();
    }
    EXPECT_EQ(sum, 0) << q;
    EXPECT_EQ(sgn(f->from_int(-1)).is_plus(), q % 4 == 1) << q;
  }
}

TEST(FfieldSgn, Multiplicative) {
  for (auto q : kOrders) {
    auto f = FqContext::of_order(q);
    for (const auto& a : f->nonzero_elements())
      for (const auto& b : f->nonzero_elements()) ASSERT_EQ(sgn(a * b), sgn(a) * sgn(b)) << q;
  }
}

TEST(FfieldArithmetic, SpecValuesF5) {
  auto f = FqContext::make(5);
  FqElement inv2;
  for (const auto& x : f->nonzero_elements())
    if ((x * f->from_int(2)).is_one()) inv2 = x;
  EXPECT_EQ(inv2, f->from_int(3));
  EXPECT_EQ(f->from_int(2).inv(), inv2);
  EXPECT_EQ(-f->zero(), f->zero());
}

TEST(FfieldArithmetic, FieldAxiomsF9) {
  auto f = FqContext::make(3, std::vector<std::uint64_t>{1, 0, 1});
  EXPECT_EQ(f->order(), 9u);
  const auto x = f->generator();
  EXPECT_EQ(x * x, f->from_int(-1));
  for (const auto& a : f->nonzero_elements()) {
    EXPECT_TRUE((a * a.inv()).is_one());
    EXPECT_EQ(a.pow(8), f->one());
  }
  for (const auto& a : f->elements())
    for (const auto& b : f->elements()) {
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ((a - b) + b, a);
    }
}

TEST(FfieldArithmetic, DefaultModulusIsLeastIrreducible) {
  auto f = FqContext::make(3, 2);
  EXPECT_EQ(f->modulus(), (std::vector<std::uint64_t>{1, 0, 1}));
  EXPECT_TRUE(fp_poly::is_irreducible(3, f->modulus()));
  EXPECT_FALSE(fp_poly::is_irreducible(3, {2, 0, 1}));  // x^2 - 1
}

TEST(FfieldArithmetic, RejectsBadInput) {
  EXPECT_THROW(FqContext::make(4), std::invalid_argument);
  EXPECT_THROW(FqContext::make(2), std::invalid_argument);
  EXPECT_THROW(FqContext::of_order(15), std::invalid_argument);
  EXPECT_THROW(FqContext::of_order(8), std::invalid_argument);
  EXPECT_THROW(FqContext::make(3, std::vector<std::uint64_t>{2, 0, 1}), std::invalid_argument);
  auto f = FqContext::make(5);
  EXPECT_THROW(f->zero().inv(), std::domain_error);
}

TEST(FfieldArithmetic, MixedContextsRejected) {
  auto f = FqContext::make(5);
  auto g = FqContext::make(7);
  EXPECT_THROW(f->one() + g->one(), std::invalid_argument);
}

TEST(FfieldSquareRoot, SpecValues) {
  auto f = FqContext::make(5);
  auto r = square_root(f->from_int(4));
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r, f->from_int(2));
  EXPECT_FALSE(square_root(f->from_int(2)).has_value());
  EXPECT_EQ(*square_root(f->zero()), f->zero());
}

TEST(FfieldSquareRoot, RootsSquareAndTieBreak) {
  for (auto q : kOrders) {
    auto f = FqContext::of_order(q);
    for (const auto& a : f->nonzero_elements()) {
      auto r = square_root(a);
      ASSERT_EQ(r.has_value(), sgn(a).is_plus());
      if (!r) continue;
      EXPECT_EQ(*r * *r, a);
      EXPECT_FALSE(coeff_lex_less(-*r, *r)) << q;
    }
  }
}

TEST(FfieldSquareRoot, LargePrimeUsesTonelliShanks) {
  auto f = FqContext::make(10007);
  for (std::int64_t v : {2, 3, 5, 10006, 1234}) {
    auto a = f->from_int(v);
    auto r = square_root(a);
    EXPECT_EQ(r.has_value(), sgn(a).is_plus()) << v;
    if (r) EXPECT_EQ(*r * *r, a);
  }
}

TEST(FfieldZeta, SpecValues) {
  auto f5 = FqContext::make(5);
  auto z5 = adjoin_zeta(f5);
  EXPECT_EQ(z5.field, f5);
  EXPECT_EQ(z5.zeta, f5->from_int(2));

  auto f13 = FqContext::make(13);
  EXPECT_EQ(adjoin_zeta(f13).zeta, f13->from_int(5));

  auto f3 = FqContext::make(3);
  auto z3 = adjoin_zeta(f3);
  EXPECT_EQ(z3.field->order(), 9u);
  EXPECT_EQ(z3.field->modulus(), (std::vector<std::uint64_t>{1, 0, 1}));
  EXPECT_EQ(z3.zeta, z3.field->generator());
}

TEST(FfieldZeta, EmbeddingIsRingHomomorphism) {
  for (std::uint64_t q : {3, 7, 9, 11, 27}) {
    auto f = FqContext::of_order(q);
    auto z = adjoin_zeta(f);
    EXPECT_EQ(z.zeta * z.zeta, z.field->from_int(-1)) << q;
    for (const auto& a : f->elements()) {
      EXPECT_EQ(z.embedding.preimage(z.embedding(a)), a);
      for (const auto& b : f->elements()) {
        EXPECT_EQ(z.embedding(a * b), z.embedding(a) * z.embedding(b));
        EXPECT_EQ(z.embedding(a + b), z.embedding(a) + z.embedding(b));
      }
    }
    EXPECT_EQ(z.embedding.preimage(z.zeta).has_value(), q % 4 == 1) << q;
  }
}
