#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hforge/heckealg.hpp"

using namespace hforge;

namespace {

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// Words reachable from w by braid moves (s t s ... -> t s t ... of length m).
std::set<Word> braid_closure(const CoxeterSystem& W, const Word& w) {
  std::set<Word> seen{w};
  std::vector<Word> stack{w};
  while (!stack.empty()) {
    const Word cur = stack.back();
    stack.pop_back();
    for (int s = 0; s < static_cast<int>(W.rank()); ++s)
      for (int t = 0; t < static_cast<int>(W.rank()); ++t) {
        if (s == t) continue;
        const int m = W.m(s, t);
        if (m == kCoxeterInfinity || static_cast<std::size_t>(m) > cur.size()) continue;
        for (std::size_t i = 0; i + m <= cur.size(); ++i) {
          bool match = true;
          for (int k = 0; k < m && match; ++k) match = cur[i + k] == (k % 2 == 0 ? s : t);
          if (!match) continue;
          Word next = cur;
          for (int k = 0; k < m; ++k) next[i + k] = (k % 2 == 0 ? t : s);
          if (seen.insert(next).second) stack.push_back(next);
        }
      }
  }
  return seen;
}

// Tits' solution of the word problem: a word is reduced iff no braid-move
// rearrangement contains a repeated letter; deleting such pairs reduces it.
Word tits_normal_form(const CoxeterSystem& W, Word w) {
  for (;;) {
    auto closure = braid_closure(W, w);
    bool reduced = true;
    for (const Word& v : closure) {
      for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] == v[i + 1]) {
          w = v;
          w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
          reduced = false;
          break;
        }
      if (!reduced) break;
    }
    if (reduced) return *std::min_element(closure.begin(), closure.end(), shortlex_less);
  }
}

std::vector<Word> all_words(std::size_t rank, std::size_t max_len) {
  std::vector<Word> out{{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].size() == max_len) continue;
    for (std::size_t s = 0; s < rank; ++s) {
      Word w = out[i];
      w.push_back(static_cast<int>(s));
      out.push_back(w);
    }
  }
  return out;
}

// Structure constants by left recursion along the letters of a chosen
// reduced word of the left factor.
HeckeElement multiply_along(const HeckeAlgebra& H, const Word& reduced, const HeckeElement& x) {
  HeckeElement r = x;
  for (auto it = reduced.rbegin(); it != reduced.rend(); ++it) r = H.left_generator_multiply(*it, r);
  return r;
}

CoxeterSystem affine_a2() {
  return CoxeterSystem({{1, 3, 3}, {3, 1, 3}, {3, 3, 1}}, {"s0", "s1", "s2"}, 64, "A2~");
}

}  // namespace

TEST(Coxeter, SpecNormalForms) {
  const auto A11 = CoxeterSystem::from_type("A1xA1");
  EXPECT_TRUE(A11.normal_form({}).empty());
  EXPECT_EQ(A11.normal_form({1, 0}), (Word{0, 1}));
  const auto A2 = CoxeterSystem::from_type("A2");
  EXPECT_EQ(A2.normal_form({0, 1, 0}), A2.normal_form({1, 0, 1}));
  EXPECT_EQ(A2.normal_form({1, 0, 1}), (Word{0, 1, 0}));
}

TEST(Coxeter, NormalFormsMatchTitsOracle) {
  std::vector<CoxeterSystem> systems;
  for (const char* t : {"A1", "A1xA1", "A2", "B2", "G2", "A1~"}) systems.push_back(CoxeterSystem::from_type(t));
  systems.push_back(affine_a2());
  systems.push_back(CoxeterSystem({{1, 4, 2}, {4, 1, 3}, {2, 3, 1}}, {}, 64, "B3"));
  for (const auto& W : systems) {
    const std::size_t len = W.rank() == 2 ? 8 : 5;
    for (const auto& w : all_words(W.rank(), len)) {
      const Word nf = W.normal_form(w);
      ASSERT_EQ(nf, tits_normal_form(W, w)) << W.type() << " " << word_to_string(w, W.names());
      EXPECT_EQ(W.normal_form(nf), nf);
    }
  }
}

TEST(Coxeter, FiniteGroupOrders) {
  EXPECT_EQ(CoxeterSystem::from_type("A2").elements_up_to_length(10).size(), 6u);
  EXPECT_EQ(CoxeterSystem::from_type("B2").elements_up_to_length(10).size(), 8u);
  EXPECT_EQ(CoxeterSystem::from_type("G2").elements_up_to_length(10).size(), 12u);
  EXPECT_EQ(CoxeterSystem({{1, 4, 2}, {4, 1, 3}, {2, 3, 1}}).elements_up_to_length(20).size(), 48u);
  // A1~ has exactly two elements of each positive length.
  EXPECT_EQ(CoxeterSystem::from_type("A1~").elements_up_to_length(6).size(), 13u);
}

TEST(Coxeter, GroupOperations) {
  const auto W = CoxeterSystem::from_type("G2");
  for (const auto& w : W.elements_up_to_length(6)) {
    EXPECT_TRUE(W.multiply(w, W.inverse(w)).empty());
    for (int s = 0; s < 2; ++s) {
      Word sw{s};
      sw.insert(sw.end(), w.begin(), w.end());
      EXPECT_EQ(W.is_left_descent(s, w), W.length(sw) < w.size());
    }
  }
}

TEST(Coxeter, Validation) {
  EXPECT_THROW(CoxeterSystem({{1, 3}, {4, 1}}), std::invalid_argument);
  EXPECT_THROW(CoxeterSystem({{1, 5}, {5, 1}}), std::invalid_argument);
  EXPECT_THROW(CoxeterSystem({{2, 3}, {3, 1}}), std::invalid_argument);
  EXPECT_THROW(CoxeterSystem::from_type("E8"), std::invalid_argument);
  const auto W = CoxeterSystem::from_type("A1~", 10);
  EXPECT_THROW(W.normal_form(Word{0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0}), std::length_error);
  EXPECT_THROW(W.normal_form({2}), std::out_of_range);
}

TEST(Parameters, ConjugacyConstraint) {
  const auto A2 = CoxeterSystem::from_type("A2");
  EXPECT_THROW(ParameterFunction(A2, {"q", "r"}), std::invalid_argument);
  const auto B2 = CoxeterSystem::from_type("B2");
  ParameterFunction pb(B2, {"q0", "q1"});
  EXPECT_EQ(pb.parameter_names().size(), 2u);
  EXPECT_EQ(ParameterFunction::generic(A2).parameter_names(), (std::vector<std::string>{"q"}));
  EXPECT_EQ(ParameterFunction::generic(B2).parameter_names().size(), 2u);
  EXPECT_EQ(ParameterFunction::generic(CoxeterSystem::from_type("G2")).parameter_names().size(), 2u);
}

TEST(Hecke, SpecProducts) {
  const auto W = CoxeterSystem::from_type("B2");
  HeckeAlgebra H(W, ParameterFunction::generic(W));
  const auto Ts = H.generator(0);
  const auto sq = H.multiply(Ts, Ts);
  const auto qs = LaurentPoly::variable(2, ParameterFunction::generic(W).parameter_of(0));
  EXPECT_EQ(sq, Ts.scaled(qs - H.scalar(1)) + H.one().scaled(qs));
  EXPECT_EQ(H.multiply(Ts, H.generator(1)), H.basis({0, 1}));
  auto left = H.multiply(H.multiply(H.multiply(H.generator(0), H.generator(1)), H.generator(0)), H.generator(1));
  auto right = H.multiply(H.multiply(H.multiply(H.generator(1), H.generator(0)), H.generator(1)), H.generator(0));
  EXPECT_EQ(left, right);
  EXPECT_EQ(left, H.basis({0, 1, 0, 1}));
}

TEST(Hecke, RelationChecksAllTypes) {
  for (const char* t : {"A1", "A1xA1", "A2", "B2", "G2", "A1~"}) {
    const auto W = CoxeterSystem::from_type(t);
    HeckeAlgebra H(W, ParameterFunction::generic(W));
    EXPECT_TRUE(check_braid_relations(H).pass) << t;
    EXPECT_TRUE(check_quadratic_relations(H).pass) << t;
    EXPECT_TRUE(check_length_additivity(H, 4).pass) << t;
    EXPECT_TRUE(check_associativity(H, 50, 4, 7).pass) << t;
  }
}

// Independence of the reduced word: multiply T_w via every reduced word of w.
TEST(Hecke, ReducedWordIndependenceB2) {
  const auto W = CoxeterSystem::from_type("B2", 64);
  HeckeAlgebra H(W, ParameterFunction::generic(W));
  const auto elements = W.elements_up_to_length(6);
  for (const auto& w : elements)
    for (const auto& v : elements) {
      const HeckeElement expected = H.multiply(H.basis(w), H.basis(v));
      for (const auto& r : braid_closure(W, w)) ASSERT_EQ(multiply_along(H, r, H.basis(v)), expected);
    }
}

TEST(Hecke, AffineA2Braids) {
  const auto W = affine_a2();
  HeckeAlgebra H(W, ParameterFunction::generic(W));
  EXPECT_TRUE(check_braid_relations(H).pass);
  EXPECT_TRUE(check_associativity(H, 30, 4, 3).pass);
}

TEST(Hecke, CustomRelations) {
  const auto W = CoxeterSystem::from_type("A1");
  HeckeAlgebra H(W, {}, {{LaurentPoly::constant(0, 0), LaurentPoly::constant(0, 1)}});
  EXPECT_EQ(H.multiply(H.generator(0), H.generator(0)), H.one());
  EXPECT_THROW(HeckeAlgebra(CoxeterSystem::from_type("A2"), {},
                            {{LaurentPoly::constant(0, 0), LaurentPoly::constant(0, 1)},
                             {LaurentPoly::constant(0, 1), LaurentPoly::constant(0, 2)}}),
               std::invalid_argument);
}

TEST(Twisted, SpecProducts) {
  TwistedGroupAlgebra Z2(FiniteGroup::cyclic(2), 0);
  EXPECT_EQ(Z2.multiply(Z2.basis(1), Z2.basis(1)), Z2.basis(0));
  const auto K = TwistedGroupAlgebra::klein_nontrivial();
  EXPECT_TRUE(K.satisfies_cocycle_identity());
  EXPECT_TRUE(K.is_normalized());
  const auto ab = K.multiply(K.basis(2), K.basis(1));
  const auto ba = K.multiply(K.basis(1), K.basis(2));
  EXPECT_EQ(ab, ba.scaled(LaurentPoly::constant(0, -1)));
  for (int g = 0; g < 4; ++g) EXPECT_EQ(K.multiply(K.basis(0), K.basis(g)), K.basis(g));
  EXPECT_TRUE(K.check_associativity().pass);
}

TEST(Twisted, CorruptedCocycle) {
  auto mu = std::vector<std::vector<LaurentPoly>>(4, std::vector<LaurentPoly>(4, LaurentPoly::constant(0, 1)));
  mu[1][1] = LaurentPoly::constant(0, -1);
  const auto group = FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  EXPECT_THROW(TwistedGroupAlgebra(group, mu), std::invalid_argument);
  const auto bad = TwistedGroupAlgebra::unchecked(group, mu);
  EXPECT_FALSE(bad.satisfies_cocycle_identity());
  EXPECT_FALSE(bad.check_associativity().pass);
  auto not_unit = std::vector<std::vector<LaurentPoly>>(2, std::vector<LaurentPoly>(2, LaurentPoly::constant(0, 1)));
  not_unit[1][1] = LaurentPoly::constant(0, 2);
  EXPECT_THROW(TwistedGroupAlgebra(FiniteGroup::cyclic(2), not_unit), std::invalid_argument);
}

TEST(Twisted, FiniteGroupValidation) {
  EXPECT_THROW(FiniteGroup({{0, 1}, {0, 1}}), std::invalid_argument);
  EXPECT_EQ(FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)).order(), 6);
}

TEST(Semidirect, SpecExamples) {
  const auto A = affine_a1_with_flip();
  const auto swapped = A.multiply(A.basis(1, {0}), A.basis(1, {}));
  EXPECT_EQ(swapped, A.basis(0, {1}));
  EXPECT_EQ(A.act(1, {0, 1, 0}), (Word{1, 0, 1}));
  EXPECT_TRUE(A.check_associativity(200, 4, 5).pass);

  const auto& H = A.hecke();
  const auto x = H.multiply(H.generator(0), H.basis({1, 0}));
  EXPECT_EQ(A.multiply(A.embed(H.generator(0)), A.embed(H.basis({1, 0}))), A.embed(x));
  const auto& T = A.twisted();
  EXPECT_EQ(A.multiply(A.embed(T.basis(1)), A.embed(T.basis(1))), A.embed(T.basis(0)));
}

TEST(Semidirect, TrivialOmegaIsHecke) {
  const auto W = CoxeterSystem::from_type("A2");
  HeckeAlgebra H(W, ParameterFunction::generic(W));
  SemidirectAlgebra S(H, TwistedGroupAlgebra(FiniteGroup::cyclic(1), 1), {{0, 1}});
  for (const auto& u : W.elements_up_to_length(3))
    for (const auto& v : W.elements_up_to_length(3))
      EXPECT_EQ(S.multiply(S.basis(0, u), S.basis(0, v)), S.embed(H.multiply(H.basis(u), H.basis(v))));
}

TEST(LengthZero, Validation) {
  const auto W = CoxeterSystem::from_type("A1~");
  EXPECT_EQ(length_zero_subgroup(W, FiniteGroup::cyclic(1), {{0, 1}}).order(), 1);
  EXPECT_EQ(length_zero_subgroup(W, FiniteGroup::cyclic(2), {{0, 1}, {1, 0}}).order(), 2);
  const CoxeterSystem A2xA1({{1, 3, 2}, {3, 1, 2}, {2, 2, 1}});
  EXPECT_THROW(length_zero_subgroup(A2xA1, FiniteGroup::cyclic(2), {{0, 1, 2}, {2, 1, 0}}), std::invalid_argument);
  EXPECT_THROW(length_zero_subgroup(W, FiniteGroup::cyclic(2), {{0, 1}, {0, 0}}), std::invalid_argument);
  // Z/3 acting through a non-homomorphism.
  EXPECT_THROW(length_zero_subgroup(W, FiniteGroup::cyclic(3), {{0, 1}, {1, 0}, {0, 1}}), std::invalid_argument);
}

TEST(SupportPreserving, SpecExamples) {
  const auto W = CoxeterSystem::from_type("A1");
  HeckeAlgebra H(W, ParameterFunction::generic(W));
  HeckeAlgebra H2(W, ParameterFunction::generic(W));
  const auto one = [](const Word&) { return LaurentPoly::constant(1, 1); };
  EXPECT_TRUE(support_preserving_map_check(H, H, one, 4).pass);
  EXPECT_TRUE(support_preserving_map_check(H, H2, one, 4).pass);
  const auto minus = [](const Word& w) { return LaurentPoly::constant(1, w.size() % 2 ? -1 : 1); };
  EXPECT_FALSE(support_preserving_map_check(H, H, minus, 4).pass);
  // -T_s satisfies the other normalization T^2 = -(q-1) T + q.
  const auto q = LaurentPoly::variable(1, 0);
  HeckeAlgebra Hneg(W, {"q"}, {{LaurentPoly::constant(1, 1) - q, q}});
  EXPECT_TRUE(support_preserving_map_check(H, Hneg, minus, 4).pass);
}
