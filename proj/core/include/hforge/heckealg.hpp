#pragma once

// Coxeter groups with ShortLex normal forms, generic Iwahori-Hecke algebras
// over integer Laurent polynomials, twisted group algebras of finite groups
// and their semidirect products.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hforge/check.hpp"
#include "hforge/laurent.hpp"

namespace hforge {

/// Word in the generators, letters are generator indices.
using Word = std::vector<int>;

/// Coxeter matrix entry standing for m = infinity.
inline constexpr int kCoxeterInfinity = 0;

std::string word_to_string(const Word& w, const std::vector<std::string>& names);

/// Coxeter system realised on the root lattice of a generalised Cartan
/// matrix with a_st a_ts = 4 cos^2(pi / m_st) (m = infinity: a_st = a_ts = -2).
class CoxeterSystem {
 public:
  /// m must be symmetric with m(s,s) = 1 and off-diagonal entries in
  /// {2, 3, 4, 6, kCoxeterInfinity}.
  explicit CoxeterSystem(std::vector<std::vector<int>> m, std::vector<std::string> names = {}, std::size_t length_cap = 64,
                         std::string type = "custom");
  /// "A1", "A1xA1", "A2", "B2", "G2", "A1~".
  static CoxeterSystem from_type(const std::string& type, std::size_t length_cap = 64);

  std::size_t rank() const { return m_.size(); }
  int m(int s, int t) const { return m_.at(s).at(t); }
  const std::vector<std::vector<int>>& coxeter_matrix() const { return m_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& type() const { return type_; }
  std::size_t length_cap() const { return cap_; }

  /// ShortLex-least reduced word; throws std::length_error beyond the cap.
  Word normal_form(const Word& w) const;
  std::size_t length(const Word& w) const { return normal_form(w).size(); }
  bool is_left_descent(int s, const Word& w) const;
  bool equal(const Word& a, const Word& b) const { return normal_form(a) == normal_form(b); }
  Word multiply(const Word& a, const Word& b) const;
  Word inverse(const Word& w) const;
  /// Normal forms of all elements of length <= max_length, by length then ShortLex.
  std::vector<Word> elements_up_to_length(std::size_t max_length) const;
  bool operator==(const CoxeterSystem& o) const { return m_ == o.m_; }

 private:
  using IntMatrix = std::vector<std::vector<std::int64_t>>;
  IntMatrix inverse_action(const Word& w) const;
  bool column_negative(const IntMatrix& mat, int s) const;
  void right_reflect(IntMatrix& mat, int s) const;
  void check_letters(const Word& w) const;

  std::vector<std::vector<int>> m_;
  std::vector<std::string> names_;
  std::size_t cap_;
  std::string type_;
  std::vector<std::vector<std::int64_t>> cartan_;
};

/// s -> q_s, with equal parameters on generators joined by odd-m edges.
class ParameterFunction {
 public:
  /// Throws std::invalid_argument when an odd-m pair gets different names.
  ParameterFunction(const CoxeterSystem& W, std::vector<std::string> per_generator);
  /// One parameter per odd-edge component: "q" if there is one, else q0, q1, ...
  static ParameterFunction generic(const CoxeterSystem& W);

  const std::vector<std::string>& parameter_names() const { return distinct_; }
  std::size_t parameter_of(int s) const { return index_.at(s); }
  const std::string& name_of(int s) const { return per_generator_.at(s); }

 private:
  std::vector<std::string> per_generator_;
  std::vector<std::string> distinct_;
  std::vector<std::size_t> index_;
};

/// Finite linear combination with Laurent polynomial coefficients.
template <class Key>
class LinearCombination {
 public:
  LinearCombination() = default;
  explicit LinearCombination(std::size_t nvars) : nvars_(nvars) {}

  std::size_t nvars() const { return nvars_; }
  const std::map<Key, LaurentPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? LaurentPoly(nvars_) : it->second;
  }

  void add_term(const Key& k, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  LinearCombination operator+(const LinearCombination& o) const {
    LinearCombination r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, c);
    return r;
  }
  LinearCombination operator-(const LinearCombination& o) const {
    LinearCombination r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
    return r;
  }
  LinearCombination scaled(const LaurentPoly& s) const {
    LinearCombination r(nvars_);
    for (const auto& [k, c] : terms_) r.add_term(k, c * s);
    return r;
  }
  bool operator==(const LinearCombination& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const LinearCombination& o) const { return !(*this == o); }

 private:
  std::size_t nvars_ = 0;
  std::map<Key, LaurentPoly> terms_;
};

using HeckeElement = LinearCombination<Word>;

/// T_s^2 = a T_s + b T_e.
struct QuadraticRelation {
  LaurentPoly a;
  LaurentPoly b;
};

class HeckeAlgebra {
 public:
  /// T_s^2 = (q_s - 1) T_s + q_s T_e.
  HeckeAlgebra(CoxeterSystem W, const ParameterFunction& q);
  /// Arbitrary relations; generators joined by odd-m edges must share them.
  HeckeAlgebra(CoxeterSystem W, std::vector<std::string> parameter_names, std::vector<QuadraticRelation> relations);

  const CoxeterSystem& coxeter() const { return W_; }
  const std::vector<std::string>& parameter_names() const { return names_; }
  std::size_t nvars() const { return names_.size(); }
  const QuadraticRelation& relation(int s) const { return rel_.at(s); }

  HeckeElement zero() const { return HeckeElement(nvars()); }
  HeckeElement one() const { return basis({}); }
  HeckeElement basis(const Word& w) const;
  HeckeElement generator(int s) const { return basis({s}); }
  LaurentPoly scalar(std::int64_t c) const { return LaurentPoly::constant(nvars(), c); }

  /// T_s x by the left recursion.
  HeckeElement left_generator_multiply(int s, const HeckeElement& x) const;
  HeckeElement multiply(const HeckeElement& a, const HeckeElement& b) const;

  std::string to_string(const HeckeElement& x) const;

 private:
  CoxeterSystem W_;
  std::vector<std::string> names_;
  std::vector<QuadraticRelation> rel_;
};

/// Alternating products of T_s, T_t of length m(s,t) agree for all finite m.
CheckOutcome check_braid_relations(const HeckeAlgebra& H);
/// T_s T_s = a_s T_s + b_s for every generator.
CheckOutcome check_quadratic_relations(const HeckeAlgebra& H);
/// (ab)c = a(bc) on random triples supported on elements of length <= max_length.
CheckOutcome check_associativity(const HeckeAlgebra& H, std::size_t samples, std::size_t max_length, std::uint64_t seed);
/// T_w T_w' = T_ww' whenever lengths add, for all w, w' of length <= max_length.
CheckOutcome check_length_additivity(const HeckeAlgebra& H, std::size_t max_length);

HeckeElement random_hecke_element(const HeckeAlgebra& H, std::mt19937_64& rng, std::size_t max_length, std::size_t max_terms = 3);

// ---------------------------------------------------------------------------

/// Finite group given by its multiplication table.
class FiniteGroup {
 public:
  /// Validates closure, associativity, identity and inverses.
  explicit FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> names = {});
  static FiniteGroup cyclic(int n);
  static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b);

  int order() const { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const { return table_.at(a).at(b); }
  int identity() const { return identity_; }
  int inverse(int a) const { return inverse_.at(a); }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::vector<int>> table_;
  std::vector<std::string> names_;
  int identity_ = 0;
  std::vector<int> inverse_;
};

using TwistedElement = LinearCombination<int>;

/// Lambda[Omega, mu]: e_a e_b = mu(a, b) e_ab, with mu valued in units.
class TwistedGroupAlgebra {
 public:
  /// Throws std::invalid_argument unless mu is a normalised 2-cocycle of units.
  TwistedGroupAlgebra(FiniteGroup group, std::vector<std::vector<LaurentPoly>> cocycle);
  /// Trivial cocycle.
  TwistedGroupAlgebra(FiniteGroup group, std::size_t nvars);
  /// Skips validation, for exhibiting what goes wrong with a bad table.
  static TwistedGroupAlgebra unchecked(FiniteGroup group, std::vector<std::vector<LaurentPoly>> cocycle);
  /// Z/2 x Z/2 with mu((a1,a2),(b1,b2)) = (-1)^{a1 b2}, elements indexed 2 a1 + a2.
  static TwistedGroupAlgebra klein_nontrivial(std::size_t nvars = 0);

  const FiniteGroup& group() const { return group_; }
  std::size_t nvars() const { return nvars_; }
  const LaurentPoly& cocycle(int a, int b) const { return mu_.at(a).at(b); }

  bool satisfies_cocycle_identity() const;
  bool is_normalized() const;
  CheckOutcome check_associativity() const;

  TwistedElement basis(int a) const;
  TwistedElement multiply(const TwistedElement& x, const TwistedElement& y) const;

 private:
  TwistedGroupAlgebra(FiniteGroup group, std::vector<std::vector<LaurentPoly>> cocycle, bool validate);
  FiniteGroup group_;
  std::size_t nvars_ = 0;
  std::vector<std::vector<LaurentPoly>> mu_;
};

/// Omega acting on (W, S) by permutations of S: action[omega][s].
/// Validated: each map is a permutation preserving m; the map omega ->
/// permutation is a homomorphism. Returns Omega.
FiniteGroup length_zero_subgroup(const CoxeterSystem& W, const FiniteGroup& omega,
                                        const std::vector<std::vector<int>>& action);

using SemidirectKey = std::pair<int, Word>;
using SemidirectElement = LinearCombination<SemidirectKey>;

/// Lambda[Omega, mu] x| H with basis e_omega T_w and
/// (e_a T_w)(e_b T_w') = mu(a, b) e_ab (T_{b^{-1}(w)} T_w').
class SemidirectAlgebra {
 public:
  SemidirectAlgebra(HeckeAlgebra H, TwistedGroupAlgebra T, std::vector<std::vector<int>> action);

  const HeckeAlgebra& hecke() const { return H_; }
  const TwistedGroupAlgebra& twisted() const { return T_; }
  Word act(int omega, const Word& w) const;

  SemidirectElement basis(int omega, const Word& w) const;
  SemidirectElement embed(const HeckeElement& x) const;
  SemidirectElement embed(const TwistedElement& x) const;
  SemidirectElement multiply(const SemidirectElement& x, const SemidirectElement& y) const;

  CheckOutcome check_associativity(std::size_t samples, std::size_t max_length, std::uint64_t seed) const;

 private:
  HeckeAlgebra H_;
  TwistedGroupAlgebra T_;
  std::vector<std::vector<int>> action_;
};

/// Affine A1 with the diagram flip, trivial cocycle, generic parameters
/// q0 = q1 = q (the flip forces equal parameters).
SemidirectAlgebra affine_a1_with_flip();

/// Whether T_w -> c(w) T'_w is multiplicative on T_s T_w for all generators
/// s and all w with length <= max_length, and sends 1 to 1.
CheckOutcome support_preserving_map_check(const HeckeAlgebra& A, const HeckeAlgebra& B,
                                          const std::function<LaurentPoly(const Word&)>& c, std::size_t max_length);

}  // namespace hforge
