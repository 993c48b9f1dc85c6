#include "hforge/heckealg.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hforge {

namespace {

std::int64_t checked_sub_mul(std::int64_t x, std::int64_t a, std::int64_t y) {
  std::int64_t p, r;
  if (__builtin_mul_overflow(a, y, &p) || __builtin_sub_overflow(x, p, &r)) {
    throw std::overflow_error("CoxeterSystem: root coordinates overflow");
  }
  return r;
}

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

}  // namespace

std::string word_to_string(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "e";
  std::string out;
  for (int s : w) out += names.at(static_cast<std::size_t>(s));
  return out;
}

// ---------------------------------------------------------------------------

CoxeterSystem::CoxeterSystem(std::vector<std::vector<int>> m, std::vector<std::string> names, std::size_t length_cap, std::string type)
    : m_(std::move(m)), names_(std::move(names)), cap_(length_cap), type_(std::move(type)) {
  const std::size_t n = m_.size();
  if (n == 0) throw std::invalid_argument("CoxeterSystem: empty generator set");
  for (const auto& row : m_)
    if (row.size() != n) throw std::invalid_argument("CoxeterSystem: Coxeter matrix must be square");
  if (names_.empty())
    for (std::size_t i = 0; i < n; ++i) names_.push_back("s" + std::to_string(i));
  if (names_.size() != n) throw std::invalid_argument("CoxeterSystem: one name per generator required");
  cartan_.assign(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (m_[i][i] != 1) throw std::invalid_argument("CoxeterSystem: m(s,s) must be 1");
    cartan_[i][i] = 2;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (m_[i][j] != m_[j][i]) throw std::invalid_argument("CoxeterSystem: Coxeter matrix must be symmetric");
      switch (m_[i][j]) {
        case 2:
          break;
        case 3:
          cartan_[i][j] = cartan_[j][i] = -1;
          break;
        case 4:
          cartan_[i][j] = -1;
          cartan_[j][i] = -2;
          break;
        case 6:
          cartan_[i][j] = -1;
          cartan_[j][i] = -3;
          break;
        case kCoxeterInfinity:
          cartan_[i][j] = cartan_[j][i] = -2;
          break;
        default:
          throw std::invalid_argument("CoxeterSystem: unsupported entry m = " + std::to_string(m_[i][j]));
      }
    }
  }
}

CoxeterSystem CoxeterSystem::from_type(const std::string& type, std::size_t length_cap) {
  if (type == "A1") return CoxeterSystem({{1}}, {"s"}, length_cap, type);
  if (type == "A1xA1") return CoxeterSystem({{1, 2}, {2, 1}}, {"s", "t"}, length_cap, type);
  if (type == "A2") return CoxeterSystem({{1, 3}, {3, 1}}, {"s", "t"}, length_cap, type);
  if (type == "B2") return CoxeterSystem({{1, 4}, {4, 1}}, {"s", "t"}, length_cap, type);
  if (type == "G2") return CoxeterSystem({{1, 6}, {6, 1}}, {"s", "t"}, length_cap, type);
  if (type == "A1~") return CoxeterSystem({{1, kCoxeterInfinity}, {kCoxeterInfinity, 1}}, {"s0", "s1"}, length_cap, type);
  throw std::invalid_argument("CoxeterSystem: unknown type " + type);
}

void CoxeterSystem::check_letters(const Word& w) const {
  if (w.size() > cap_) throw std::length_error("CoxeterSystem: word longer than the length cap");
  for (int s : w)
    if (s < 0 || static_cast<std::size_t>(s) >= rank()) throw std::out_of_range("CoxeterSystem: letter out of range");
}

// Column j of M S_s is column j of M minus a_sj times column s.
void CoxeterSystem::right_reflect(IntMatrix& mat, int s) const {
  const std::size_t n = rank();
  std::vector<std::int64_t> col_s(n);
  for (std::size_t i = 0; i < n; ++i) col_s[i] = mat[i][static_cast<std::size_t>(s)];
  for (std::size_t j = 0; j < n; ++j) {
    const std::int64_t a = cartan_[static_cast<std::size_t>(s)][j];
    if (a == 0) continue;
    for (std::size_t i = 0; i < n; ++i) mat[i][j] = checked_sub_mul(mat[i][j], a, col_s[i]);
  }
}

// Matrix of w^{-1} = s_k ... s_1 on the root lattice.
CoxeterSystem::IntMatrix CoxeterSystem::inverse_action(const Word& w) const {
  const std::size_t n = rank();
  IntMatrix mat(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) mat[i][i] = 1;
  for (auto it = w.rbegin(); it != w.rend(); ++it) right_reflect(mat, *it);
  return mat;
}

bool CoxeterSystem::column_negative(const IntMatrix& mat, int s) const {
  // Roots are either positive or negative, so one strict sign decides.
  for (std::size_t i = 0; i < rank(); ++i) {
    const std::int64_t v = mat[i][static_cast<std::size_t>(s)];
    if (v != 0) return v < 0;
  }
  throw std::logic_error("CoxeterSystem: zero root");
}

bool CoxeterSystem::is_left_descent(int s, const Word& w) const {
  check_letters(w);
  if (s < 0 || static_cast<std::size_t>(s) >= rank()) throw std::out_of_range("CoxeterSystem: letter out of range");
  // s is a left descent of w iff w^{-1}(alpha_s) < 0.
  return column_negative(inverse_action(w), s);
}

Word CoxeterSystem::normal_form(const Word& w) const {
  check_letters(w);
  IntMatrix mat = inverse_action(w);
  Word out;
  // Greedily strip the smallest left descent: w -> s w, w^{-1} -> w^{-1} s.
  for (;;) {
    int found = -1;
    for (std::size_t s = 0; s < rank(); ++s) {
      if (column_negative(mat, static_cast<int>(s))) {
        found = static_cast<int>(s);
        break;
      }
    }
    if (found < 0) break;
    out.push_back(found);
    right_reflect(mat, found);
  }
  return out;
}

Word CoxeterSystem::multiply(const Word& a, const Word& b) const { return normal_form(concat(a, b)); }

Word CoxeterSystem::inverse(const Word& w) const { return normal_form(Word(w.rbegin(), w.rend())); }

std::vector<Word> CoxeterSystem::elements_up_to_length(std::size_t max_length) const {
  if (max_length > cap_) throw std::length_error("CoxeterSystem: enumeration beyond the length cap");
  std::vector<Word> out{Word{}};
  std::vector<Word> level{Word{}};
  for (std::size_t len = 1; len <= max_length && !level.empty(); ++len) {
    std::set<Word> next;
    for (const auto& w : level)
      for (std::size_t s = 0; s < rank(); ++s)
        if (!is_left_descent(static_cast<int>(s), w)) next.insert(normal_form(concat({static_cast<int>(s)}, w)));
    level.assign(next.begin(), next.end());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

// ---------------------------------------------------------------------------

ParameterFunction::ParameterFunction(const CoxeterSystem& W, std::vector<std::string> per_generator)
    : per_generator_(std::move(per_generator)) {
  if (per_generator_.size() != W.rank()) throw std::invalid_argument("ParameterFunction: one parameter per generator required");
  for (std::size_t s = 0; s < W.rank(); ++s)
    for (std::size_t t = s + 1; t < W.rank(); ++t)
      if (W.m(static_cast<int>(s), static_cast<int>(t)) == 3 && per_generator_[s] != per_generator_[t]) {
        throw std::invalid_argument("ParameterFunction: generators " + W.names()[s] + " and " + W.names()[t] +
                                    " are conjugate and need equal parameters");
      }
  for (const auto& name : per_generator_) {
    if (name.empty()) throw std::invalid_argument("ParameterFunction: empty parameter name");
    auto it = std::find(distinct_.begin(), distinct_.end(), name);
    index_.push_back(static_cast<std::size_t>(it - distinct_.begin()));
    if (it == distinct_.end()) distinct_.push_back(name);
  }
}

ParameterFunction ParameterFunction::generic(const CoxeterSystem& W) {
  const std::size_t n = W.rank();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = s + 1; t < n; ++t)
      if (W.m(static_cast<int>(s), static_cast<int>(t)) == 3) parent[find(t)] = find(s);
  std::vector<std::size_t> roots;
  for (std::size_t s = 0; s < n; ++s)
    if (std::find(roots.begin(), roots.end(), find(s)) == roots.end()) roots.push_back(find(s));
  std::vector<std::string> names;
  for (std::size_t s = 0; s < n; ++s) {
    const auto k = static_cast<std::size_t>(std::find(roots.begin(), roots.end(), find(s)) - roots.begin());
    names.push_back(roots.size() == 1 ? "q" : "q" + std::to_string(k));
  }
  return ParameterFunction(W, std::move(names));
}

// ---------------------------------------------------------------------------

HeckeAlgebra::HeckeAlgebra(CoxeterSystem W, const ParameterFunction& q) : W_(std::move(W)), names_(q.parameter_names()) {
  for (std::size_t s = 0; s < W_.rank(); ++s) {
    const LaurentPoly qs = LaurentPoly::variable(nvars(), q.parameter_of(static_cast<int>(s)));
    rel_.push_back({qs - scalar(1), qs});
  }
}

HeckeAlgebra::HeckeAlgebra(CoxeterSystem W, std::vector<std::string> parameter_names, std::vector<QuadraticRelation> relations)
    : W_(std::move(W)), names_(std::move(parameter_names)), rel_(std::move(relations)) {
  if (rel_.size() != W_.rank()) throw std::invalid_argument("HeckeAlgebra: one quadratic relation per generator required");
  for (const auto& r : rel_)
    if (r.a.nvars() != nvars() || r.b.nvars() != nvars()) throw std::invalid_argument("HeckeAlgebra: relation over the wrong parameters");
  for (std::size_t s = 0; s < W_.rank(); ++s)
    for (std::size_t t = s + 1; t < W_.rank(); ++t)
      if (W_.m(static_cast<int>(s), static_cast<int>(t)) == 3 && (rel_[s].a != rel_[t].a || rel_[s].b != rel_[t].b)) {
        throw std::invalid_argument("HeckeAlgebra: conjugate generators need equal relations");
      }
}

HeckeElement HeckeAlgebra::basis(const Word& w) const {
  HeckeElement x(nvars());
  x.add_term(W_.normal_form(w), scalar(1));
  return x;
}

HeckeElement HeckeAlgebra::left_generator_multiply(int s, const HeckeElement& x) const {
  if (x.nvars() != nvars()) throw std::invalid_argument("HeckeAlgebra: element from a different algebra");
  HeckeElement out(nvars());
  const QuadraticRelation& r = rel_.at(static_cast<std::size_t>(s));
  for (const auto& [v, c] : x.terms()) {
    const Word sv = W_.normal_form(concat({s}, v));
    if (W_.is_left_descent(s, v)) {
      out.add_term(v, r.a * c);
      out.add_term(sv, r.b * c);
    } else {
      out.add_term(sv, c);
    }
  }
  return out;
}

HeckeElement HeckeAlgebra::multiply(const HeckeElement& a, const HeckeElement& b) const {
  if (a.nvars() != nvars() || b.nvars() != nvars()) throw std::invalid_argument("HeckeAlgebra: element from a different algebra");
  HeckeElement out(nvars());
  for (const auto& [w, c] : a.terms()) {
    HeckeElement y = b;
    for (auto it = w.rbegin(); it != w.rend(); ++it) y = left_generator_multiply(*it, y);
    out = out + y.scaled(c);
  }
  return out;
}

std::string HeckeAlgebra::to_string(const HeckeElement& x) const {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : x.terms()) {
    if (!first) os << " + ";
    os << '(' << c.to_string(names_) << ")*T[" << word_to_string(w, W_.names()) << ']';
    first = false;
  }
  return os.str();
}

CheckOutcome check_braid_relations(const HeckeAlgebra& H) {
  const CoxeterSystem& W = H.coxeter();
  CheckOutcome out;
  for (int s = 0; s < static_cast<int>(W.rank()); ++s) {
    for (int t = s + 1; t < static_cast<int>(W.rank()); ++t) {
      const int m = W.m(s, t);
      if (m == kCoxeterInfinity) continue;
      HeckeElement lhs = H.one(), rhs = H.one();
      Word word;
      for (int k = 0; k < m; ++k) {
        lhs = H.multiply(lhs, H.generator(k % 2 == 0 ? s : t));
        rhs = H.multiply(rhs, H.generator(k % 2 == 0 ? t : s));
        word.push_back(k % 2 == 0 ? s : t);
      }
      ++out.cases;
      if (lhs != rhs || lhs != H.basis(word)) {
        out.fail("braid relation fails for " + W.names()[static_cast<std::size_t>(s)] + "," + W.names()[static_cast<std::size_t>(t)] +
                 ": " + H.to_string(lhs) + " vs " + H.to_string(rhs));
      }
    }
  }
  return out;
}

CheckOutcome check_quadratic_relations(const HeckeAlgebra& H) {
  CheckOutcome out;
  for (int s = 0; s < static_cast<int>(H.coxeter().rank()); ++s) {
    const HeckeElement sq = H.multiply(H.generator(s), H.generator(s));
    const QuadraticRelation& r = H.relation(s);
    const HeckeElement want = H.generator(s).scaled(r.a) + H.one().scaled(r.b);
    ++out.cases;
    if (sq != want) out.fail("T_s^2 mismatch for " + H.coxeter().names()[static_cast<std::size_t>(s)] + ": " + H.to_string(sq));
  }
  return out;
}

HeckeElement random_hecke_element(const HeckeAlgebra& H, std::mt19937_64& rng, std::size_t max_length, std::size_t max_terms) {
  const auto elems = H.coxeter().elements_up_to_length(max_length);
  HeckeElement x = H.zero();
  const std::size_t terms = 1 + rng() % max_terms;
  for (std::size_t k = 0; k < terms; ++k) {
    LaurentPoly::Exponents e(H.nvars());
    for (auto& v : e) v = static_cast<std::int32_t>(rng() % 4) - 1;
    std::int64_t c = static_cast<std::int64_t>(rng() % 7) - 3;
    if (c == 0) c = 1;
    x.add_term(elems[rng() % elems.size()], LaurentPoly::monomial(std::move(e), c));
  }
  return x;
}

CheckOutcome check_associativity(const HeckeAlgebra& H, std::size_t samples, std::size_t max_length, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  CheckOutcome out;
  for (std::size_t k = 0; k < samples; ++k) {
    const HeckeElement a = random_hecke_element(H, rng, max_length), b = random_hecke_element(H, rng, max_length),
                       c = random_hecke_element(H, rng, max_length);
    ++out.cases;
    if (H.multiply(H.multiply(a, b), c) != H.multiply(a, H.multiply(b, c))) {
      out.fail("associativity fails for a=" + H.to_string(a) + ", b=" + H.to_string(b) + ", c=" + H.to_string(c));
    }
  }
  return out;
}

CheckOutcome check_length_additivity(const HeckeAlgebra& H, std::size_t max_length) {
  const CoxeterSystem& W = H.coxeter();
  const auto elems = W.elements_up_to_length(max_length);
  CheckOutcome out;
  for (const auto& a : elems) {
    for (const auto& b : elems) {
      const Word ab = W.multiply(a, b);
      if (ab.size() != a.size() + b.size()) continue;
      ++out.cases;
      if (H.multiply(H.basis(a), H.basis(b)) != H.basis(ab)) {
        out.fail("T_w T_w' != T_ww' for w=" + word_to_string(a, W.names()) + ", w'=" + word_to_string(b, W.names()));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> names)
    : table_(std::move(table)), names_(std::move(names)) {
  const int n = order();
  if (n == 0) throw std::invalid_argument("FiniteGroup: empty table");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("FiniteGroup: table must be square");
    for (int v : row)
      if (v < 0 || v >= n) throw std::invalid_argument("FiniteGroup: table entry out of range");
  }
  if (names_.empty())
    for (int i = 0; i < n; ++i) names_.push_back(std::to_string(i));
  if (static_cast<int>(names_.size()) != n) throw std::invalid_argument("FiniteGroup: one name per element required");
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw std::invalid_argument("FiniteGroup: no identity element");
  inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == identity_ && mul(b, a) == identity_) inverse_[static_cast<std::size_t>(a)] = b;
  for (int a = 0; a < n; ++a)
    if (inverse_[static_cast<std::size_t>(a)] < 0) throw std::invalid_argument("FiniteGroup: element without inverse");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw std::invalid_argument("FiniteGroup: table is not associative");
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n <= 0) throw std::invalid_argument("FiniteGroup: order must be positive");
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::product(const FiniteGroup& x, const FiniteGroup& y) {
  const int n = x.order() * y.order();
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  std::vector<std::string> names;
  for (int a = 0; a < n; ++a) {
    names.push_back("(" + x.names()[static_cast<std::size_t>(a / y.order())] + "," + y.names()[static_cast<std::size_t>(a % y.order())] + ")");
    for (int b = 0; b < n; ++b)
      t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          x.mul(a / y.order(), b / y.order()) * y.order() + y.mul(a % y.order(), b % y.order());
  }
  return FiniteGroup(std::move(t), std::move(names));
}

// ---------------------------------------------------------------------------

TwistedGroupAlgebra::TwistedGroupAlgebra(FiniteGroup group, std::vector<std::vector<LaurentPoly>> cocycle, bool validate)
    : group_(std::move(group)), mu_(std::move(cocycle)) {
  const int n = group_.order();
  if (n > 64) throw std::invalid_argument("TwistedGroupAlgebra: groups of order above 64 are not supported");
  if (static_cast<int>(mu_.size()) != n) throw std::invalid_argument("TwistedGroupAlgebra: cocycle table has the wrong shape");
  for (const auto& row : mu_)
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("TwistedGroupAlgebra: cocycle table has the wrong shape");
  nvars_ = mu_[0][0].nvars();
  for (const auto& row : mu_)
    for (const auto& c : row)
      if (c.nvars() != nvars_) throw std::invalid_argument("TwistedGroupAlgebra: inconsistent parameter count");
  if (!validate) return;
  for (const auto& row : mu_)
    for (const auto& c : row)
      if (!c.is_unit()) throw std::invalid_argument("TwistedGroupAlgebra: cocycle values must be units");
  if (!is_normalized()) throw std::invalid_argument("TwistedGroupAlgebra: cocycle is not normalised");
  if (!satisfies_cocycle_identity()) throw std::invalid_argument("TwistedGroupAlgebra: cocycle identity fails");
}

TwistedGroupAlgebra::TwistedGroupAlgebra(FiniteGroup group, std::vector<std::vector<LaurentPoly>> cocycle)
    : TwistedGroupAlgebra(std::move(group), std::move(cocycle), true) {}

TwistedGroupAlgebra::TwistedGroupAlgebra(FiniteGroup group, std::size_t nvars)
    : TwistedGroupAlgebra(group, std::vector<std::vector<LaurentPoly>>(static_cast<std::size_t>(group.order()),
                                                                       std::vector<LaurentPoly>(static_cast<std::size_t>(group.order()),
                                                                                                LaurentPoly::constant(nvars, 1))),
                          true) {}

TwistedGroupAlgebra TwistedGroupAlgebra::unchecked(FiniteGroup group, std::vector<std::vector<LaurentPoly>> cocycle) {
  return TwistedGroupAlgebra(std::move(group), std::move(cocycle), false);
}

TwistedGroupAlgebra TwistedGroupAlgebra::klein_nontrivial(std::size_t nvars) {
  FiniteGroup g = FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  std::vector<std::vector<LaurentPoly>> mu(4, std::vector<LaurentPoly>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const int a1 = a / 2, b2 = b % 2;
      mu[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = LaurentPoly::constant(nvars, (a1 & b2) ? -1 : 1);
    }
  return TwistedGroupAlgebra(std::move(g), std::move(mu));
}

bool TwistedGroupAlgebra::satisfies_cocycle_identity() const {
  const int n = group_.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (cocycle(a, b) * cocycle(group_.mul(a, b), c) != cocycle(b, c) * cocycle(a, group_.mul(b, c))) return false;
  return true;
}

bool TwistedGroupAlgebra::is_normalized() const {
  const LaurentPoly one = LaurentPoly::constant(nvars_, 1);
  const int e = group_.identity();
  for (int a = 0; a < group_.order(); ++a)
    if (cocycle(e, a) != one || cocycle(a, e) != one) return false;
  return true;
}

TwistedElement TwistedGroupAlgebra::basis(int a) const {
  if (a < 0 || a >= group_.order()) throw std::out_of_range("TwistedGroupAlgebra: no such group element");
  TwistedElement x(nvars_);
  x.add_term(a, LaurentPoly::constant(nvars_, 1));
  return x;
}

TwistedElement TwistedGroupAlgebra::multiply(const TwistedElement& x, const TwistedElement& y) const {
  if (x.nvars() != nvars_ || y.nvars() != nvars_) throw std::invalid_argument("TwistedGroupAlgebra: element from a different algebra");
  TwistedElement out(nvars_);
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) out.add_term(group_.mul(a, b), ca * cb * cocycle(a, b));
  return out;
}

CheckOutcome TwistedGroupAlgebra::check_associativity() const {
  CheckOutcome out;
  const int n = group_.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        ++out.cases;
        const auto x = basis(a), y = basis(b), z = basis(c);
        if (multiply(multiply(x, y), z) != multiply(x, multiply(y, z))) {
          out.fail("(e_a e_b) e_c != e_a (e_b e_c) for a=" + group_.names()[static_cast<std::size_t>(a)] +
                   ", b=" + group_.names()[static_cast<std::size_t>(b)] + ", c=" + group_.names()[static_cast<std::size_t>(c)]);
        }
      }
  return out;
}

// ---------------------------------------------------------------------------

FiniteGroup length_zero_subgroup(const CoxeterSystem& W, const FiniteGroup& omega, const std::vector<std::vector<int>>& action) {
  const std::size_t n = W.rank();
  if (static_cast<int>(action.size()) != omega.order()) throw std::invalid_argument("length_zero_subgroup: one permutation per element required");
  for (const auto& perm : action) {
    if (perm.size() != n) throw std::invalid_argument("length_zero_subgroup: permutation of the wrong size");
    std::vector<bool> hit(n, false);
    for (int s : perm) {
      if (s < 0 || static_cast<std::size_t>(s) >= n || hit[static_cast<std::size_t>(s)]) {
        throw std::invalid_argument("length_zero_subgroup: action does not permute S");
      }
      hit[static_cast<std::size_t>(s)] = true;
    }
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t)
        if (W.m(perm[s], perm[t]) != W.m(static_cast<int>(s), static_cast<int>(t))) {
          throw std::invalid_argument("length_zero_subgroup: action does not preserve the Coxeter matrix");
        }
  }
  for (int a = 0; a < omega.order(); ++a)
    for (int b = 0; b < omega.order(); ++b)
      for (std::size_t s = 0; s < n; ++s)
        if (action[static_cast<std::size_t>(omega.mul(a, b))][s] !=
            action[static_cast<std::size_t>(a)][static_cast<std::size_t>(action[static_cast<std::size_t>(b)][s])]) {
          throw std::invalid_argument("length_zero_subgroup: action is not a homomorphism");
        }
  return omega;
}

SemidirectAlgebra::SemidirectAlgebra(HeckeAlgebra H, TwistedGroupAlgebra T, std::vector<std::vector<int>> action)
    : H_(std::move(H)), T_(std::move(T)), action_(std::move(action)) {
  length_zero_subgroup(H_.coxeter(), T_.group(), action_);
  if (T_.nvars() != H_.nvars()) throw std::invalid_argument("SemidirectAlgebra: coefficient rings differ");
  for (const auto& perm : action_)
    for (std::size_t s = 0; s < perm.size(); ++s) {
      const auto& r1 = H_.relation(static_cast<int>(s));
      const auto& r2 = H_.relation(perm[s]);
      if (r1.a != r2.a || r1.b != r2.b) throw std::invalid_argument("SemidirectAlgebra: action does not preserve the parameters");
    }
}

Word SemidirectAlgebra::act(int omega, const Word& w) const {
  Word r;
  for (int s : w) r.push_back(action_.at(static_cast<std::size_t>(omega)).at(static_cast<std::size_t>(s)));
  return H_.coxeter().normal_form(r);
}

SemidirectElement SemidirectAlgebra::basis(int omega, const Word& w) const {
  if (omega < 0 || omega >= T_.group().order()) throw std::out_of_range("SemidirectAlgebra: no such group element");
  SemidirectElement x(H_.nvars());
  x.add_term({omega, H_.coxeter().normal_form(w)}, H_.scalar(1));
  return x;
}

SemidirectElement SemidirectAlgebra::embed(const HeckeElement& x) const {
  SemidirectElement r(H_.nvars());
  for (const auto& [w, c] : x.terms()) r.add_term({T_.group().identity(), w}, c);
  return r;
}

SemidirectElement SemidirectAlgebra::embed(const TwistedElement& x) const {
  SemidirectElement r(H_.nvars());
  for (const auto& [a, c] : x.terms()) r.add_term({a, Word{}}, c);
  return r;
}

SemidirectElement SemidirectAlgebra::multiply(const SemidirectElement& x, const SemidirectElement& y) const {
  if (x.nvars() != H_.nvars() || y.nvars() != H_.nvars()) throw std::invalid_argument("SemidirectAlgebra: element from a different algebra");
  const FiniteGroup& g = T_.group();
  SemidirectElement out(H_.nvars());
  for (const auto& [ka, ca] : x.terms()) {
    for (const auto& [kb, cb] : y.terms()) {
      const auto& [a, w] = ka;
      const auto& [b, w2] = kb;
      const LaurentPoly coeff = ca * cb * T_.cocycle(a, b);
      const HeckeElement prod = H_.multiply(H_.basis(act(g.inverse(b), w)), H_.basis(w2));
      for (const auto& [v, d] : prod.terms()) out.add_term({g.mul(a, b), v}, coeff * d);
    }
  }
  return out;
}

CheckOutcome SemidirectAlgebra::check_associativity(std::size_t samples, std::size_t max_length, std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  const auto elems = H_.coxeter().elements_up_to_length(max_length);
  const int n = T_.group().order();
  auto random_basis = [&] {
    const int a = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    return basis(a, elems[rng() % elems.size()]);
  };
  CheckOutcome out;
  for (std::size_t k = 0; k < samples; ++k) {
    const auto x = random_basis(), y = random_basis(), z = random_basis();
    ++out.cases;
    if (multiply(multiply(x, y), z) != multiply(x, multiply(y, z))) {
      const auto& [a, w] = x.terms().begin()->first;
      const auto& [b, v] = y.terms().begin()->first;
      const auto& [c, u] = z.terms().begin()->first;
      const auto& names = H_.coxeter().names();
      out.fail("associativity fails on e" + std::to_string(a) + "T[" + word_to_string(w, names) + "], e" + std::to_string(b) + "T[" +
               word_to_string(v, names) + "], e" + std::to_string(c) + "T[" + word_to_string(u, names) + "]");
    }
  }
  return out;
}

SemidirectAlgebra affine_a1_with_flip() {
  CoxeterSystem W = CoxeterSystem::from_type("A1~");
  ParameterFunction q(W, {"q", "q"});
  HeckeAlgebra H(std::move(W), q);
  TwistedGroupAlgebra T(FiniteGroup::cyclic(2), H.nvars());
  return SemidirectAlgebra(std::move(H), std::move(T), {{0, 1}, {1, 0}});
}

// ---------------------------------------------------------------------------

CheckOutcome support_preserving_map_check(const HeckeAlgebra& A, const HeckeAlgebra& B,
                                          const std::function<LaurentPoly(const Word&)>& c, std::size_t max_length) {
  if (!(A.coxeter() == B.coxeter()) || A.nvars() != B.nvars()) {
    throw std::invalid_argument("support_preserving_map_check: algebras must share the index group and coefficients");
  }
  const CoxeterSystem& W = A.coxeter();
  auto phi = [&](const HeckeElement& x) {
    HeckeElement r = B.zero();
    for (const auto& [w, coeff] : x.terms()) {
      const LaurentPoly cw = c(w);
      if (!cw.is_unit()) throw std::domain_error("support_preserving_map_check: scale factors must be units");
      r.add_term(w, coeff * cw);
    }
    return r;
  };
  CheckOutcome out;
  ++out.cases;
  if (phi(A.one()) != B.one()) out.fail("the unit is not preserved");
  for (const auto& w : W.elements_up_to_length(max_length)) {
    for (int s = 0; s < static_cast<int>(W.rank()); ++s) {
      ++out.cases;
      const HeckeElement lhs = phi(A.multiply(A.generator(s), A.basis(w)));
      const HeckeElement rhs = B.multiply(phi(A.generator(s)), phi(A.basis(w)));
      if (lhs != rhs) {
        out.fail("not multiplicative on T_" + W.names()[static_cast<std::size_t>(s)] + " * T_" + word_to_string(w, W.names()) + ": " +
                 B.to_string(lhs) + " vs " + B.to_string(rhs));
      }
    }
  }
  return out;
}

}  // namespace hforge
