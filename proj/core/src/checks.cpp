#include "hforge/checks.hpp"

#include <deque>
#include <random>
#include <set>
#include <stdexcept>

#include "hforge/ffield.hpp"
#include "hforge/gradedorth.hpp"
#include "hforge/heckealg.hpp"
#include "hforge/quadspace.hpp"
#include "hforge/sp4oracle.hpp"
#include "hforge/sympweil.hpp"

namespace hforge {

namespace {

std::string q_str(std::uint64_t q) { return "q=" + std::to_string(q); }

FqElement first_nonsquare(const FqContext& f) {
  for (const auto& a : f.nonzero_elements())
    if (!sgn(a).is_plus()) return a;
  throw std::logic_error("no nonsquare");
}

void absorb(CheckOutcome& out, const CheckOutcome& part, const std::string& context) {
  out.cases += part.cases;
  if (!part.pass) out.fail(context + ": " + part.witness);
}

// ---------------------------------------------------------------------------
// ffield

CheckOutcome sgn_character_laws() {
  CheckOutcome out;
  for (std::uint64_t q = 3; q <= 49; q += 2) {
    FqContextPtr f;
    try {
      f = FqContext::of_order(q);
    } catch (const std::invalid_argument&) {
      continue;
    }
    const auto units = f->nonzero_elements();
    std::size_t squares = 0;
    int total = 0;
    for (const auto& a : units) {
      const SignValue sa = sgn(a);
      squares += sa.is_plus() ? 1 : 0;
      total += sa.value();
      for (const auto& b : units) {
        ++out.cases;
        if (sgn(a * b) != sa * sgn(b)) out.fail(q_str(q) + ": sgn(ab) != sgn(a)sgn(b) for a=" + a.to_string() + ", b=" + b.to_string());
      }
    }
    out.cases += 3;
    if (squares != (q - 1) / 2) out.fail(q_str(q) + ": wrong number of squares");
    if (total != 0) out.fail(q_str(q) + ": sum of sgn is not 0");
    if (sgn(-f->one()).is_plus() != (q % 4 == 1)) out.fail(q_str(q) + ": sgn(-1) law fails");
  }
  return out;
}

CheckOutcome zeta_adjunction() {
  CheckOutcome out;
  for (std::uint64_t q : {3, 5, 7, 9, 11}) {
    const FqContextPtr f = FqContext::of_order(q);
    const ZetaAdjunction z = adjoin_zeta(f);
    ++out.cases;
    if (z.zeta * z.zeta != -z.field->one()) out.fail(q_str(q) + ": zeta^2 != -1");
    for (const auto& a : f->elements())
      for (const auto& b : f->elements()) {
        ++out.cases;
        if (z.embedding(a + b) != z.embedding(a) + z.embedding(b) || z.embedding(a * b) != z.embedding(a) * z.embedding(b)) {
          out.fail(q_str(q) + ": embedding is not a ring map at " + a.to_string() + ", " + b.to_string());
        }
      }
  }
  return out;
}

// ---------------------------------------------------------------------------
// quadspace

// Diagonal forms diag(1, ..., 1) and diag(1, ..., 1, nu) of dimension n.
std::vector<QuadraticSpace> diagonal_spaces(const FqContextPtr& f, std::size_t n) {
  std::vector<QuadraticSpace> out;
  for (bool twisted : {false, true}) {
    FqMatrix g = FqMatrix::identity(*f, n);
    if (twisted) g(n - 1, n - 1) = first_nonsquare(*f);
    out.emplace_back(f, g);
  }
  return out;
}

CheckOutcome spinor_multiplicative_dim2() {
  CheckOutcome out;
  for (std::uint64_t q : {3, 5}) {
    for (const auto& V : diagonal_spaces(FqContext::of_order(q), 2)) {
      const auto group = enumerate_orthogonal_group(V);
      for (const auto& g : group)
        for (const auto& h : group) {
          ++out.cases;
          if (spinor_norm(g * h) != spinor_norm(g) * spinor_norm(h)) out.fail(q_str(q) + ": sn(gh) != sn(g)sn(h)");
        }
    }
  }
  return out;
}

CheckOutcome reflection_value_law() {
  CheckOutcome out;
  for (std::uint64_t q : {3, 5}) {
    const FqContextPtr f = FqContext::of_order(q);
    for (std::size_t n = 1; n <= 3; ++n) {
      for (const auto& V : diagonal_spaces(f, n)) {
        for (const auto& v : all_vectors(*f, n)) {
          const FqElement phi = V.evaluate_form(v);
          if (phi.is_zero()) continue;
          ++out.cases;
          if (spinor_norm(reflection(V, v)) != square_class_of(phi)) out.fail(q_str(q) + ": sn(r_v) is not the class of phi(v)");
        }
      }
    }
  }
  return out;
}

CheckOutcome factorization_independence() {
  CheckOutcome out;
  std::mt19937_64 rng(0x5EED01);
  for (std::size_t k = 0; k < 1000; ++k) {
    const std::uint64_t q = (k % 2 == 0) ? 3 : 5;
    const std::size_t n = 1 + k % 4;
    const auto spaces = diagonal_spaces(FqContext::of_order(q), n);
    const QuadraticSpace& V = spaces[(k / 2) % 2];
    const OrthogonalMap g = random_orthogonal(V, rng, 6);
    const SquareClass a = spinor_norm(g, {FactorizationStrategy::Order::forward, 0});
    const SquareClass b = spinor_norm(g, {FactorizationStrategy::Order::reverse, 0});
    const SquareClass c = spinor_norm(g, {FactorizationStrategy::Order::seeded, k + 1});
    ++out.cases;
    if (a != b || a != c) out.fail(q_str(q) + ", dim " + std::to_string(n) + ": factorizations disagree");
  }
  return out;
}

CheckOutcome spinor_multiplicative_random() {
  CheckOutcome out;
  std::mt19937_64 rng(0x5EED02);
  for (std::size_t k = 0; k < 1000; ++k) {
    const std::uint64_t q = (k % 2 == 0) ? 3 : 5;
    const std::size_t n = 1 + k % 4;
    const auto spaces = diagonal_spaces(FqContext::of_order(q), n);
    const QuadraticSpace& V = spaces[(k / 2) % 2];
    const OrthogonalMap g = random_orthogonal(V, rng, 5), h = random_orthogonal(V, rng, 5);
    ++out.cases;
    if (spinor_norm(g * h) != spinor_norm(g) * spinor_norm(h)) out.fail(q_str(q) + ", dim " + std::to_string(n) + ": sn(gh) != sn(g)sn(h)");
  }
  return out;
}

CheckOutcome orthogonal_sum_multiplicativity() {
  CheckOutcome out;
  const auto spaces = diagonal_spaces(FqContext::of_order(3), 2);
  for (const auto& V1 : spaces)
    for (const auto& V2 : spaces) {
      const OrthogonalSum sum = orthogonal_sum(V1, V2);
      const auto g1s = enumerate_orthogonal_group(V1), g2s = enumerate_orthogonal_group(V2);
      for (const auto& g1 : g1s)
        for (const auto& g2 : g2s) {
          ++out.cases;
          if (spinor_norm(sum.embed(g1, g2)) != spinor_norm(g1) * spinor_norm(g2)) out.fail("sn(g1 + g2) != sn(g1) sn(g2)");
        }
    }
  return out;
}

// ---------------------------------------------------------------------------
// gradedorth

FqMatrix hyperbolic(const FqContext& f, std::size_t half) {
  FqMatrix g(f, 2 * half, 2 * half);
  for (std::size_t i = 0; i < half; ++i) g(i, half + i) = g(half + i, i) = f.one();
  return g;
}

FqMatrix block_diagonal(const FqContext& f, const std::vector<FqMatrix>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  FqMatrix g(f, n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) g(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  return g;
}

GradedQuadraticSpace one_asym_space(std::uint64_t q) {
  const FqContextPtr f = FqContext::of_order(q);
  return GradedQuadraticSpace(f, BlockIndex({{"a", OrbitKind::asym, 2}}), hyperbolic(*f, 1));
}

// Test spaces of dimension <= 4 over F_3.
std::vector<GradedQuadraticSpace> small_graded_spaces() {
  const FqContextPtr f = FqContext::of_order(3);
  std::vector<GradedQuadraticSpace> out;
  out.push_back(one_asym_space(3));
  out.emplace_back(f, BlockIndex({{"a", OrbitKind::asym, 4}}), hyperbolic(*f, 2));
  out.emplace_back(f, BlockIndex({{"a", OrbitKind::asym, 2}, {"b", OrbitKind::asym, 2}}),
                   block_diagonal(*f, {hyperbolic(*f, 1), hyperbolic(*f, 1)}));
  out.emplace_back(f, BlockIndex({{"a", OrbitKind::asym, 2}, {"0", OrbitKind::sym, 2}}),
                   block_diagonal(*f, {hyperbolic(*f, 1), FqMatrix::identity(*f, 2)}));
  return out;
}

std::vector<FqMatrix> otilde_group(const GradedQuadraticSpace& V) {
  std::vector<FqMatrix> gens;
  for (const auto& h : enumerate_orthogonal_group(V.form())) {
    const FqMatrix m = V.lift(h.matrix());
    if (glplus_membership(V, m)) gens.push_back(m);
  }
  for (std::size_t b = 0; b < V.index().orbit_count(); ++b)
    if (V.index().kind(b) == OrbitKind::asym) gens.push_back(zeta_scaling(V, b).matrix);
  return generate_group(gens);
}

CheckOutcome extended_sn_homomorphism() {
  CheckOutcome out;
  for (std::uint64_t q : {3, 5}) {
    const GradedQuadraticSpace V = one_asym_space(q);
    const auto group = otilde_group(V);
    std::vector<Mu4Value> values;
    for (const auto& g : group) values.push_back(extended_sn(V, g));
    for (std::size_t i = 0; i < group.size(); ++i)
      for (std::size_t j = 0; j < group.size(); ++j) {
        ++out.cases;
        if (extended_sn(V, group[i] * group[j]) != values[i] * values[j]) out.fail(q_str(q) + ": extended sn is not multiplicative");
      }
  }
  return out;
}

CheckOutcome extended_sn_restriction() {
  CheckOutcome out;
  for (const auto& V : small_graded_spaces()) {
    for (const auto& h : enumerate_orthogonal_group(V.form())) {
      const FqMatrix m = V.lift(h.matrix());
      if (!glplus_membership(V, m)) continue;
      ++out.cases;
      if (extended_sn(V, m) != Mu4Value::from_sign(sgn_spinor(h))) {
        out.fail("dim " + std::to_string(V.dim()) + ": extended sn differs from sgn o sn on an f-rational isometry");
      }
    }
  }
  return out;
}

CheckOutcome extended_sn_values() {
  CheckOutcome out;
  for (std::uint64_t q : {3, 5}) {
    const GradedQuadraticSpace V = one_asym_space(q);
    const bool quadratic = sgn(-V.base_field()->one()).is_plus();
    for (const auto& g : otilde_group(V)) {
      const Mu4Value v = extended_sn(V, g);
      ++out.cases;
      if (v.exponent() < 0 || v.exponent() > 3) out.fail(q_str(q) + ": value outside mu_4");
      if (quadratic && v * v != Mu4Value::one()) out.fail(q_str(q) + ": extended sn is not quadratic although sgn(-1) = 1");
    }
    ++out.cases;
    if (extended_sn(V, zeta_scaling(V, 0).matrix) != V.root()) out.fail(q_str(q) + ": zeta-scaling value is not root^(d/2)");
  }
  return out;
}

CheckOutcome zeta_consistency() {
  CheckOutcome out;
  std::vector<GradedQuadraticSpace> spaces = small_graded_spaces();
  spaces.push_back(one_asym_space(5));
  for (const auto& V : spaces) {
    for (std::size_t b = 0; b < V.index().orbit_count(); ++b) {
      if (V.index().kind(b) != OrbitKind::asym) continue;
      const FqMatrix z = zeta_scaling(V, b).matrix;
      const auto z2 = V.descend(z * z);
      ++out.cases;
      if (!z2) {
        out.fail("zeta^2 is not f-rational");
        continue;
      }
      const Mu4Value v = extended_sn(V, z);
      if (v * v != Mu4Value::from_sign(sgn_spinor(OrthogonalMap(V.form(), *z2)))) out.fail("extended sn(zeta)^2 != sgn o sn(zeta^2)");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// sympweil

CheckOutcome weil_genuine_sl2_f3() {
  CheckOutcome out;
  const HeisenbergRep rho(SymplecticSpace(3, 1));
  const WeilSL2 w(rho);
  const auto group = enumerate_sl2(rho.space().field());
  std::vector<CycloMatrix> ops;
  for (const auto& g : group) ops.push_back(w(g));
  for (std::size_t i = 0; i < group.size(); ++i)
    for (std::size_t j = 0; j < group.size(); ++j) {
      ++out.cases;
      if (ops[i] * ops[j] != w(group[i] * group[j])) out.fail("omega(g) omega(h) != omega(gh) over F_3");
    }
  return out;
}

CheckOutcome weil_genuine_random() {
  CheckOutcome out;
  for (std::uint64_t p : {5, 7}) {
    const HeisenbergRep rho(SymplecticSpace(p, 1));
    const WeilSL2 w(rho);
    std::mt19937_64 rng(0x5EED10 + p);
    for (int k = 0; k < 500; ++k) {
      const FqMatrix g = random_sl2(rho.space().field(), rng), h = random_sl2(rho.space().field(), rng);
      ++out.cases;
      if (w(g) * w(h) != w(g * h)) out.fail("p=" + std::to_string(p) + ": omega(g) omega(h) != omega(gh)");
    }
  }
  return out;
}

CheckOutcome weil_intertwining() {
  CheckOutcome out;
  for (std::uint64_t p : {3, 5, 7}) {
    const HeisenbergRep rho(SymplecticSpace(p, 1));
    const WeilSL2 w(rho);
    const FqContext& f = rho.space().field();
    std::vector<FqMatrix> gs;
    std::vector<HeisenbergElement> hs;
    if (p == 3) {
      gs = enumerate_sl2(f);
      hs = heisenberg_elements(rho.space());
    } else {
      std::mt19937_64 rng(0x5EED20 + p);
      for (int k = 0; k < 100; ++k) gs.push_back(random_sl2(f, rng));
      // Generators of V#.
      hs = {{{f.one(), f.zero()}, f.zero()}, {{f.zero(), f.one()}, f.zero()}, {{f.zero(), f.zero()}, f.one()}};
    }
    for (const auto& g : gs) {
      const CycloMatrix A = w(g);
      for (const auto& h : hs) {
        ++out.cases;
        if (!intertwines(rho, A, g, h)) out.fail("p=" + std::to_string(p) + ": omega(g) rho(h) != rho(gh) omega(g)");
      }
    }
  }
  return out;
}

CheckOutcome projective_weil_cocycle() {
  CheckOutcome out;
  const HeisenbergRep rho(SymplecticSpace(3, 2));
  std::mt19937_64 rng(0x5EED30);
  for (int k = 0; k < 10; ++k) {
    const FqMatrix g = random_symplectic(rho.space(), rng), h = random_symplectic(rho.space(), rng);
    ++out.cases;
    const CycloMatrix T = projective_weil(rho, g);
    if (!intertwines(rho, T, g, {unit_vector(rho.space().field(), 4, 0), rho.space().field().zero()}) ||
        !intertwines(rho, T, g, {unit_vector(rho.space().field(), 4, 3), rho.space().field().zero()})) {
      out.fail("projective Weil operator does not intertwine");
    }
    ++out.cases;
    if (!weil_cocycle(rho, g, h)) out.fail("T(g) T(h) is not a scalar multiple of T(gh)");
  }
  return out;
}

CheckOutcome heisenberg_central_character() {
  CheckOutcome out;
  for (auto [p, n] : std::vector<std::pair<std::uint64_t, std::size_t>>{{3, 1}, {5, 1}, {3, 2}}) {
    const HeisenbergRep rho(SymplecticSpace(p, n));
    const FqContext& f = rho.space().field();
    for (const auto& a : f.elements()) {
      ++out.cases;
      // iota^{-1}(a) = zeta_p^a with zeta_p = zeta_{4p}^4.
      const Cyclotomic want = Cyclotomic::zeta(rho.coefficients(), 4 * static_cast<std::int64_t>(a.index()));
      const CycloMatrix expect = CycloMatrix::identity(rho.coefficients(), rho.dim()).scaled(want);
      if (rho.matrix({zero_vector(f, 2 * n), a}) != expect) out.fail("p=" + std::to_string(p) + ": rho(0, a) != iota^{-1}(a)");
    }
  }
  return out;
}

CheckOutcome heisenberg_irreducible() {
  CheckOutcome out;
  for (auto [p, n] : std::vector<std::pair<std::uint64_t, std::size_t>>{{3, 1}, {5, 1}, {3, 2}}) {
    const HeisenbergRep rho(SymplecticSpace(p, n));
    ++out.cases;
    if (rho.character_norm() != Cyclotomic::one(rho.coefficients())) {
      out.fail("p=" + std::to_string(p) + ", n=" + std::to_string(n) + ": <chi, chi> != 1");
    }
  }
  return out;
}

CheckOutcome stone_von_neumann() {
  CheckOutcome out;
  for (std::uint64_t p : {3, 5}) {
    const HeisenbergRep rho(SymplecticSpace(p, 1));
    std::mt19937_64 rng(0x5EED40 + p);
    const auto elems = heisenberg_elements(rho.space());
    for (int k = 0; k < 5; ++k) {
      const FqMatrix g = random_sl2(rho.space().field(), rng);
      for (const auto& h : elems) {
        ++out.cases;
        if (rho.character(heisenberg_act(g, h)) != rho.character(h)) out.fail("p=" + std::to_string(p) + ": twisted model has another character");
      }
    }
  }
  return out;
}

CheckOutcome det_sign_multiplicative() {
  CheckOutcome out;
  const SymplecticSpace V(3, 1);
  const auto group = enumerate_sl2(V.field());
  for (const auto& u : projective_points(V.field(), 2)) {
    const std::vector<FqVector> U{u};
    std::vector<FqMatrix> stab;
    for (const auto& g : group)
      if (in_span(V.field(), 2, U, g * u)) stab.push_back(g);
    for (const auto& g : stab)
      for (const auto& h : stab) {
        ++out.cases;
        if (det_sign_character(V, g * h, U) != det_sign_character(V, g, U) * det_sign_character(V, h, U)) {
          out.fail("chi^U(gh) != chi^U(g) chi^U(h)");
        }
      }
  }
  return out;
}

CheckOutcome graded_split() {
  CheckOutcome out;
  std::mt19937_64 rng(0x5EED50);
  for (std::uint64_t p : {3, 5}) {
    const FqContextPtr f = FqContext::of_order(p);
    for (std::size_t dim : {2, 4, 6}) {
      for (int k = 0; k < 200; ++k) {
        const WeightedForm wf = random_weighted_form(*f, dim, rng);
        ++out.cases;
        if (auto err = check_graded_split(wf.form, graded_symplectic_split(wf.form, wf.weights))) {
          out.fail("p=" + std::to_string(p) + ", dim " + std::to_string(dim) + ": " + *err);
        }
      }
    }
  }
  return out;
}

CheckOutcome induction_identity() {
  CheckOutcome out;
  for (std::uint64_t p : {3, 5}) {
    const HeisenbergRep rho(SymplecticSpace(p, 1));
    for (const auto& u : projective_points(rho.space().field(), 2)) {
      const std::vector<FqVector> U{u};
      out.cases += 2;
      if (!induction_identity_check(rho, U, InductionMode::with_sl2_levi, true).equal) out.fail("p=" + std::to_string(p) + ": identity fails with chi^U");
      if (induction_identity_check(rho, U, InductionMode::with_sl2_levi, false).equal) out.fail("p=" + std::to_string(p) + ": identity holds without chi^U");
    }
  }
  return out;
}

CheckOutcome induction_heisenberg_only() {
  CheckOutcome out;
  const HeisenbergRep rho(SymplecticSpace(3, 2));
  const FqContext& f = rho.space().field();
  const std::vector<std::vector<FqVector>> subspaces{
      {},
      {unit_vector(f, 4, 0)},
      {unit_vector(f, 4, 3)},
      {unit_vector(f, 4, 0), unit_vector(f, 4, 1)},
      {add(unit_vector(f, 4, 0), unit_vector(f, 4, 3)), add(unit_vector(f, 4, 1), unit_vector(f, 4, 2))},
  };
  for (const auto& U : subspaces) {
    ++out.cases;
    const InductionResult r = induction_identity_check(rho, U, InductionMode::heisenberg_only);
    if (!r.equal || r.rhs_dim != rho.dim()) out.fail("restriction and induced characters differ for dim U = " + std::to_string(U.size()));
  }
  return out;
}

// ---------------------------------------------------------------------------
// heckealg

std::vector<HeckeAlgebra> generic_algebras() {
  std::vector<HeckeAlgebra> out;
  for (const char* t : {"A2", "B2", "G2", "A1~"}) {
    CoxeterSystem W = CoxeterSystem::from_type(t);
    const ParameterFunction q = ParameterFunction::generic(W);
    out.emplace_back(std::move(W), q);
  }
  return out;
}

// All words reachable from w by braid moves: by Matsumoto's theorem these are
// exactly the reduced words of the same element when w is reduced.
std::set<Word> braid_closure(const CoxeterSystem& W, const Word& w) {
  std::set<Word> seen{w};
  std::deque<Word> todo{w};
  while (!todo.empty()) {
    const Word cur = todo.front();
    todo.pop_front();
    for (int s = 0; s < static_cast<int>(W.rank()); ++s) {
      for (int t = 0; t < static_cast<int>(W.rank()); ++t) {
        const int m = W.m(s, t);
        if (s == t || m == kCoxeterInfinity || static_cast<std::size_t>(m) > cur.size()) continue;
        for (std::size_t i = 0; i + m <= cur.size(); ++i) {
          bool match = true;
          for (int k = 0; k < m && match; ++k) match = cur[i + k] == (k % 2 == 0 ? s : t);
          if (!match) continue;
          Word next = cur;
          for (int k = 0; k < m; ++k) next[i + k] = (k % 2 == 0 ? t : s);
          if (seen.insert(next).second) todo.push_back(next);
        }
      }
    }
  }
  return seen;
}

CheckOutcome reduced_word_oracle_b2() {
  CoxeterSystem W = CoxeterSystem::from_type("B2");
  const ParameterFunction q = ParameterFunction::generic(W);
  const HeckeAlgebra H(W, q);
  CheckOutcome out;
  const auto elems = W.elements_up_to_length(6);
  for (const auto& w : elems) {
    for (const auto& v : elems) {
      const HeckeElement want = H.multiply(H.basis(w), H.basis(v));
      for (const auto& word : braid_closure(W, w)) {
        HeckeElement x = H.basis(v);
        for (auto it = word.rbegin(); it != word.rend(); ++it) x = H.left_generator_multiply(*it, x);
        ++out.cases;
        if (x != want) out.fail("T_w T_v depends on the reduced word " + word_to_string(word, W.names()));
      }
    }
  }
  return out;
}

CheckOutcome hecke_braid() {
  CheckOutcome out;
  for (const auto& H : generic_algebras()) absorb(out, check_braid_relations(H), H.coxeter().type());
  return out;
}

CheckOutcome hecke_quadratic() {
  CheckOutcome out;
  for (const auto& H : generic_algebras()) absorb(out, check_quadratic_relations(H), H.coxeter().type());
  return out;
}

CheckOutcome hecke_associativity() {
  CheckOutcome out;
  std::uint64_t seed = 0x5EED60;
  for (const auto& H : generic_algebras()) absorb(out, check_associativity(H, 500, 5, seed++), H.coxeter().type());
  return out;
}

CheckOutcome hecke_length_additivity() {
  CheckOutcome out;
  for (const auto& H : generic_algebras()) absorb(out, check_length_additivity(H, 4), H.coxeter().type());
  return out;
}

CheckOutcome parameter_conjugacy() {
  CheckOutcome out;
  const CoxeterSystem A2 = CoxeterSystem::from_type("A2");
  ++out.cases;
  try {
    ParameterFunction(A2, {"q0", "q1"});
    out.fail("unequal parameters on an odd edge were accepted");
  } catch (const std::invalid_argument&) {
  }
  const CoxeterSystem B2 = CoxeterSystem::from_type("B2");
  ++out.cases;
  try {
    ParameterFunction(B2, {"q0", "q1"});
  } catch (const std::invalid_argument&) {
    out.fail("unequal parameters on an even edge were rejected");
  }
  return out;
}

CheckOutcome twisted_cocycle() {
  CheckOutcome out;
  const TwistedGroupAlgebra good = TwistedGroupAlgebra::klein_nontrivial();
  absorb(out, good.check_associativity(), "nontrivial Klein cocycle");
  std::vector<std::vector<LaurentPoly>> bad(4, std::vector<LaurentPoly>(4, LaurentPoly::constant(0, 1)));
  bad[1][1] = LaurentPoly::constant(0, -1);
  bad[1][2] = LaurentPoly::constant(0, -1);
  const TwistedGroupAlgebra corrupted = TwistedGroupAlgebra::unchecked(good.group(), bad);
  out.cases += 2;
  if (corrupted.satisfies_cocycle_identity()) out.fail("corrupted table passes the cocycle identity");
  if (corrupted.check_associativity().pass) out.fail("corrupted table gives an associative product");
  return out;
}

CheckOutcome semidirect_associativity() {
  CheckOutcome out;
  absorb(out, affine_a1_with_flip().check_associativity(300, 4, 0x5EED70), "A1~ x| Z/2");
  return out;
}

CheckOutcome twist_necessity() {
  CheckOutcome out;
  const TwistWitness w = twist_necessity_witness(3);
  out.cases = 4;
  if (w.trivial.a != 2) out.fail("trivial linear coefficient " + std::to_string(w.trivial.a) + " != q - 1");
  if (w.sign.a != 0) out.fail("sign linear coefficient " + std::to_string(w.sign.a) + " != 0");
  if (!w.rescalings.empty()) out.fail("a rational rescaling reconciles the relations");
  if (!w.no_isomorphism) out.fail("a unit rescaling T -> +-T' is multiplicative");
  return out;
}

// ---------------------------------------------------------------------------
// sp4oracle

CheckOutcome sp4_values_at_s() {
  CheckOutcome out;
  for (std::uint64_t q : {3, 5, 7, 9}) {
    out.cases += 2;
    const std::int64_t t = convolve_s(TwistChoice::trivial, q), s = convolve_s(TwistChoice::sign, q);
    if (t != static_cast<std::int64_t>(q) - 1) out.fail(q_str(q) + ": trivial value " + std::to_string(t));
    if (s != 0) out.fail(q_str(q) + ": sign value " + std::to_string(s));
  }
  return out;
}

CheckOutcome sp4_truncation_independence() {
  CheckOutcome out;
  for (std::uint64_t q : {3, 5, 7, 9})
    for (TwistChoice tw : {TwistChoice::trivial, TwistChoice::sign}) {
      const DoubleCosetRelation base = double_coset_relation(tw, q, 2);
      for (unsigned N : {3u, 4u}) {
        ++out.cases;
        const DoubleCosetRelation r = double_coset_relation(tw, q, N);
        if (r.a != base.a || r.b != base.b) out.fail(q_str(q) + ", " + twist_name(tw) + ": N=" + std::to_string(N) + " differs from N=2");
      }
    }
  return out;
}

CheckOutcome sp4_coset_sum_structure() {
  CheckOutcome out;
  for (std::uint64_t q : {3, 5, 7, 9}) {
    const FqContextPtr f = FqContext::of_order(q);
    for (TwistChoice tw : {TwistChoice::trivial, TwistChoice::sign}) {
      const auto terms = convolution_terms(tw, f, 3, ConvolutionPoint::s);
      ++out.cases;
      if (terms.size() != q) out.fail(q_str(q) + ": " + std::to_string(terms.size()) + " coset representatives");
      for (const auto& t : terms) {
        ++out.cases;
        // The second factor s^{-1} u(-x) s is in IsI iff x is a unit.
        if (!t.left_in_big_cell || t.right_in_big_cell == t.x.is_zero()) out.fail(q_str(q) + ": membership wrong at x=" + t.x.to_string());
        if (t.x.is_zero() && t.value != 0) out.fail(q_str(q) + ": x=0 term does not vanish");
      }
    }
  }
  return out;
}

CheckOutcome sp4_coset_completeness() {
  CheckOutcome out;
  for (std::uint64_t q : {3, 5, 7, 9}) absorb(out, coset_completeness_check(q, 3, 100, 0x5EED80 + q), q_str(q));
  return out;
}

CheckOutcome sp4_bruhat_reconstruction() {
  CheckOutcome out;
  for (std::uint64_t q : {3, 5, 7, 9}) absorb(out, bruhat_reconstruction_check(q, 3, 1000, 0x5EED90 + q), q_str(q));
  return out;
}

CheckOutcome sp4_welldefinedness() {
  CheckOutcome out;
  absorb(out, welldefinedness_check(TwistChoice::sign, 3, 3, 500, 0x5EEDA0), "sign, q=3");
  absorb(out, welldefinedness_check(TwistChoice::sign, 5, 3, 200, 0x5EEDA1), "sign, q=5");
  absorb(out, welldefinedness_check(TwistChoice::trivial, 3, 3, 100, 0x5EEDA2), "trivial, q=3");
  return out;
}

std::vector<SuiteCheck> build_registry() {
  return {
      {"ffield", "sgn_character_laws", {}, sgn_character_laws},
      {"ffield", "zeta_adjunction", {}, zeta_adjunction},
      {"quadspace", "spinor_multiplicative_dim2", {7}, spinor_multiplicative_dim2},
      {"quadspace", "reflection_value_law", {7}, reflection_value_law},
      {"quadspace", "factorization_independence", {7}, factorization_independence},
      {"quadspace", "spinor_multiplicative_random", {}, spinor_multiplicative_random},
      {"quadspace", "orthogonal_sum_multiplicativity", {7}, orthogonal_sum_multiplicativity},
      {"gradedorth", "extended_sn_homomorphism", {8}, extended_sn_homomorphism},
      {"gradedorth", "extended_sn_restriction", {8}, extended_sn_restriction},
      {"gradedorth", "extended_sn_values", {8}, extended_sn_values},
      {"gradedorth", "zeta_consistency", {8}, zeta_consistency},
      {"sympweil", "weil_genuine_sl2_f3", {3}, weil_genuine_sl2_f3},
      {"sympweil", "weil_genuine_random", {3}, weil_genuine_random},
      {"sympweil", "weil_intertwining", {3}, weil_intertwining},
      {"sympweil", "projective_weil_cocycle", {}, projective_weil_cocycle},
      {"sympweil", "induction_identity", {4}, induction_identity},
      {"sympweil", "induction_heisenberg_only", {}, induction_heisenberg_only},
      {"sympweil", "heisenberg_central_character", {5}, heisenberg_central_character},
      {"sympweil", "heisenberg_irreducible", {5}, heisenberg_irreducible},
      {"sympweil", "stone_von_neumann", {}, stone_von_neumann},
      {"sympweil", "det_sign_multiplicative", {}, det_sign_multiplicative},
      {"sympweil", "graded_split", {6}, graded_split},
      {"heckealg", "braid_relations", {9}, hecke_braid},
      {"heckealg", "quadratic_relations", {9}, hecke_quadratic},
      {"heckealg", "reduced_word_oracle_b2", {9}, reduced_word_oracle_b2},
      {"heckealg", "associativity", {9}, hecke_associativity},
      {"heckealg", "length_additivity", {}, hecke_length_additivity},
      {"heckealg", "parameter_conjugacy", {}, parameter_conjugacy},
      {"heckealg", "twisted_cocycle", {}, twisted_cocycle},
      {"heckealg", "semidirect_associativity", {9}, semidirect_associativity},
      {"heckealg", "twist_necessity", {10}, twist_necessity},
      {"sp4oracle", "values_at_s", {1}, sp4_values_at_s},
      {"sp4oracle", "truncation_independence", {2}, sp4_truncation_independence},
      {"sp4oracle", "coset_sum_structure", {2}, sp4_coset_sum_structure},
      {"sp4oracle", "coset_completeness", {2}, sp4_coset_completeness},
      {"sp4oracle", "bruhat_reconstruction", {}, sp4_bruhat_reconstruction},
      {"sp4oracle", "welldefinedness", {}, sp4_welldefinedness},
  };
}

}  // namespace

const std::vector<SuiteCheck>& suite_checks() {
  static const std::vector<SuiteCheck> registry = build_registry();
  return registry;
}

std::vector<std::string> suite_modules() {
  std::vector<std::string> out;
  for (const auto& c : suite_checks())
    if (out.empty() || out.back() != c.module) out.push_back(c.module);
  return out;
}

}  // namespace hforge
