#include "hforge/sp4oracle.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hforge {

namespace {

FqElement random_element(const FqContext& ctx, std::mt19937_64& rng) { return ctx.from_index(rng() % ctx.order()); }

FqElement random_unit(const FqContext& ctx, std::mt19937_64& rng) { return ctx.from_index(1 + rng() % (ctx.order() - 1)); }

FqContextPtr oracle_field(std::uint64_t q, unsigned N) {
  if (N < 2) throw std::invalid_argument("sp4oracle: truncation N must be >= 2");
  return FqContext::of_order(q);
}

TruncSeries random_unit_series(const FqContextPtr& f, unsigned N, std::mt19937_64& rng) {
  TruncSeries r = TruncSeries::random(f, N, rng);
  return r + TruncSeries::constant(f, N, random_unit(*f, rng) - r.residue());
}

TruncSeries random_ideal_series(const FqContextPtr& f, unsigned N, std::mt19937_64& rng) {
  return TruncSeries::uniformizer(f, N) * TruncSeries::random(f, N, rng);
}

}  // namespace

TruncSeries::TruncSeries(FqContextPtr field, unsigned N) : field_(std::move(field)) {
  if (!field_) throw std::invalid_argument("TruncSeries: null field");
  if (N < 1) throw std::invalid_argument("TruncSeries: precision must be positive");
  c_.assign(N, field_->zero());
}

TruncSeries::TruncSeries(FqContextPtr field, unsigned N, std::vector<FqElement> coeffs) : TruncSeries(std::move(field), N) {
  if (coeffs.size() > N) throw std::invalid_argument("TruncSeries: more coefficients than the precision");
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!field_->same_field(coeffs[i].context())) throw std::invalid_argument("TruncSeries: coefficient from another field");
    c_[i] = coeffs[i];
  }
}

TruncSeries TruncSeries::constant(FqContextPtr field, unsigned N, const FqElement& c) {
  return TruncSeries(std::move(field), N, {c});
}

TruncSeries TruncSeries::uniformizer(FqContextPtr field, unsigned N) {
  const FqElement z = field->zero(), o = field->one();
  return TruncSeries(std::move(field), N, {z, o});
}

TruncSeries TruncSeries::random(FqContextPtr field, unsigned N, std::mt19937_64& rng) {
  std::vector<FqElement> c;
  for (unsigned i = 0; i < N; ++i) c.push_back(random_element(*field, rng));
  return TruncSeries(std::move(field), N, std::move(c));
}

unsigned TruncSeries::valuation() const {
  for (unsigned i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return i;
  return precision();
}

void TruncSeries::check_same(const TruncSeries& o) const {
  if (precision() != o.precision() || !field_->same_field(*o.field_)) throw std::invalid_argument("TruncSeries: ring mismatch");
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
  check_same(o);
  TruncSeries r = *this;
  for (unsigned i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const { return *this + (-o); }

TruncSeries TruncSeries::operator-() const {
  TruncSeries r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  check_same(o);
  TruncSeries r(field_, precision());
  for (unsigned i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (unsigned j = 0; i + j < c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  }
  return r;
}

TruncSeries TruncSeries::scaled(const FqElement& a) const {
  TruncSeries r = *this;
  for (auto& x : r.c_) x *= a;
  return r;
}

TruncSeries TruncSeries::inv() const {
  if (!is_unit()) throw std::domain_error("TruncSeries: inverse of a non-unit");
  // Coefficients of the inverse solved degree by degree.
  TruncSeries r(field_, precision());
  const FqElement u = c_[0].inv();
  r.c_[0] = u;
  for (unsigned n = 1; n < c_.size(); ++n) {
    FqElement acc = field_->zero();
    for (unsigned k = 1; k <= n; ++k) acc += c_[k] * r.c_[n - k];
    r.c_[n] = -(acc * u);
  }
  return r;
}

bool TruncSeries::operator==(const TruncSeries& o) const {
  check_same(o);
  return c_ == o.c_;
}

std::string TruncSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (unsigned i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    os << c_[i].to_string();
    if (i == 1) os << "*t";
    if (i > 1) os << "*t^" << i;
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

// ---------------------------------------------------------------------------

Mat2 Mat2::identity(const FqContextPtr& f, unsigned N) {
  const TruncSeries z(f, N), o = TruncSeries::constant(f, N, f->one());
  return {o, z, z, o};
}

Mat2 Mat2::weyl(const FqContextPtr& f, unsigned N) {
  const TruncSeries z(f, N), o = TruncSeries::constant(f, N, f->one());
  return {z, o, -o, z};
}

Mat2 Mat2::upper(const TruncSeries& x) {
  const TruncSeries z(x.field(), x.precision()), o = TruncSeries::constant(x.field(), x.precision(), x.field()->one());
  return {o, x, z, o};
}

Mat2 Mat2::lower(const TruncSeries& x) {
  const TruncSeries z(x.field(), x.precision()), o = TruncSeries::constant(x.field(), x.precision(), x.field()->one());
  return {o, z, x, o};
}

Mat2 Mat2::coroot(const TruncSeries& y) {
  const TruncSeries z(y.field(), y.precision());
  return {y, z, z, y.inv()};
}

Mat2 Mat2::operator*(const Mat2& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

bool Mat2::is_special() const {
  const TruncSeries dt = det();
  return dt == TruncSeries::constant(dt.field(), dt.precision(), dt.field()->one());
}

Mat2 Mat2::inverse() const {
  if (!is_special()) throw std::invalid_argument("Mat2: determinant must be 1");
  return {d, -b, -c, a};
}

std::string Mat2::to_string() const {
  return "[[" + a.to_string() + ", " + b.to_string() + "], [" + c.to_string() + ", " + d.to_string() + "]]";
}

std::string twist_name(TwistChoice t) { return t == TwistChoice::trivial ? "trivial" : "sign"; }

TwistChoice parse_twist(const std::string& s) {
  if (s == "trivial") return TwistChoice::trivial;
  if (s == "sign") return TwistChoice::sign;
  throw std::invalid_argument("unknown twist " + s);
}

bool iwahori_member(const Mat2& g) {
  if (!g.is_special()) throw std::invalid_argument("iwahori_member: determinant must be 1");
  return g.c.valuation() >= 1;
}

BruhatDecomposition bruhat_decompose(const Mat2& g) {
  if (!g.is_special()) throw std::invalid_argument("bruhat_decompose: determinant must be 1");
  const FqContextPtr& f = g.a.field();
  const unsigned N = g.a.precision();
  if (!g.c.is_unit()) return {false, g, Mat2::identity(f, N)};
  // g = [[-1/c, -a], [0, -c]] s u(d/c).
  const TruncSeries ci = g.c.inv();
  const TruncSeries z(f, N);
  return {true, Mat2{-ci, -g.a, z, -g.c}, Mat2::upper(g.d * ci)};
}

SignValue epsilon_char(const Mat2& k, TwistChoice twist) {
  if (!iwahori_member(k)) throw std::invalid_argument("epsilon_char: argument is not in I");
  if (twist == TwistChoice::trivial) return SignValue::plus();
  return sgn(k.a.residue());
}

int phi_value(const Mat2& g, TwistChoice twist) {
  const BruhatDecomposition bd = bruhat_decompose(g);
  if (!bd.big_cell) return 0;
  return (epsilon_char(bd.k1, twist) * epsilon_char(bd.k2, twist)).value();
}

std::vector<ConvolutionTerm> convolution_terms(TwistChoice twist, const FqContextPtr& f, unsigned N, ConvolutionPoint point) {
  if (N < 2) throw std::invalid_argument("convolution_terms: truncation N must be >= 2");
  const Mat2 s = Mat2::weyl(f, N), si = s.inverse();
  std::vector<ConvolutionTerm> out;
  for (const FqElement& x : f->elements()) {
    const TruncSeries xs = TruncSeries::constant(f, N, x);
    const Mat2 h = Mat2::upper(xs) * s;
    // h^{-1} times the evaluation point; h^{-1} = s^{-1} u(-x).
    Mat2 rest = si * Mat2::upper(-xs);
    if (point == ConvolutionPoint::s) rest = rest * s;
    ConvolutionTerm t;
    t.x = x;
    t.left_in_big_cell = bruhat_decompose(h).big_cell;
    t.right_in_big_cell = bruhat_decompose(rest).big_cell;
    t.value = phi_value(h, twist) * phi_value(rest, twist);
    out.push_back(t);
  }
  return out;
}

namespace {

std::int64_t sum_terms(TwistChoice twist, std::uint64_t q, unsigned N, ConvolutionPoint point) {
  const FqContextPtr f = oracle_field(q, N);
  std::int64_t total = 0;
  for (const auto& t : convolution_terms(twist, f, N, point)) total += t.value;
  return total;
}

}  // namespace

std::int64_t convolve_s(TwistChoice twist, std::uint64_t q, unsigned N) { return sum_terms(twist, q, N, ConvolutionPoint::s); }

std::int64_t convolve_e(TwistChoice twist, std::uint64_t q, unsigned N) { return sum_terms(twist, q, N, ConvolutionPoint::e); }

Mat2 random_iwahori(const FqContextPtr& f, unsigned N, std::mt19937_64& rng) {
  return Mat2::lower(random_ideal_series(f, N, rng)) * Mat2::coroot(random_unit_series(f, N, rng)) *
         Mat2::upper(TruncSeries::random(f, N, rng));
}

Mat2 random_special(const FqContextPtr& f, unsigned N, std::mt19937_64& rng) {
  Mat2 g = Mat2::identity(f, N);
  const unsigned len = 1 + static_cast<unsigned>(rng() % 4);
  for (unsigned k = 0; k < len; ++k) g = g * Mat2::upper(TruncSeries::random(f, N, rng)) * Mat2::lower(TruncSeries::random(f, N, rng));
  return g;
}

Mat2 random_big_cell(const FqContextPtr& f, unsigned N, std::mt19937_64& rng) {
  return random_iwahori(f, N, rng) * Mat2::weyl(f, N) * random_iwahori(f, N, rng);
}

CheckOutcome welldefinedness_check(TwistChoice twist, std::uint64_t q, unsigned N, std::size_t samples, std::uint64_t seed) {
  const FqContextPtr f = oracle_field(q, N);
  std::mt19937_64 rng(seed);
  const Mat2 s = Mat2::weyl(f, N), si = s.inverse();
  CheckOutcome out;
  for (std::size_t k = 0; k < samples; ++k) {
    const Mat2 g = random_big_cell(f, N, rng);
    const BruhatDecomposition bd = bruhat_decompose(g);
    // r in I cap sIs^{-1}: diagonal modulo t.
    const Mat2 r = Mat2{random_unit_series(f, N, rng), random_ideal_series(f, N, rng), random_ideal_series(f, N, rng),
                        TruncSeries(f, N)};
    Mat2 rr = r;
    rr.d = (TruncSeries::constant(f, N, f->one()) + r.b * r.c) * r.a.inv();
    const Mat2 k1 = bd.k1 * rr, k2 = si * rr.inverse() * s * bd.k2;
    ++out.cases;
    if (!iwahori_member(k1) || !iwahori_member(k2) || k1 * s * k2 != g) {
      out.fail("alternative decomposition is invalid for g = " + g.to_string());
      continue;
    }
    const SignValue v1 = epsilon_char(bd.k1, twist) * epsilon_char(bd.k2, twist);
    const SignValue v2 = epsilon_char(k1, twist) * epsilon_char(k2, twist);
    if (v1 != v2) out.fail("phi depends on the decomposition of g = " + g.to_string());
  }
  return out;
}

CheckOutcome coset_completeness_check(std::uint64_t q, unsigned N, std::size_t samples, std::uint64_t seed) {
  const FqContextPtr f = oracle_field(q, N);
  std::mt19937_64 rng(seed);
  const Mat2 s = Mat2::weyl(f, N);
  std::vector<Mat2> reps;
  for (const FqElement& x : f->elements()) reps.push_back(Mat2::upper(TruncSeries::constant(f, N, x)) * s);
  CheckOutcome out;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (!bruhat_decompose(reps[i]).big_cell) out.fail("u(x)s outside IsI: " + reps[i].to_string());
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      ++out.cases;
      if (iwahori_member(reps[i].inverse() * reps[j])) out.fail("u(x)s I = u(y)s I for " + reps[i].to_string() + ", " + reps[j].to_string());
    }
  }
  for (std::size_t k = 0; k < samples; ++k) {
    const Mat2 g = random_big_cell(f, N, rng);
    std::size_t hits = 0;
    for (const auto& r : reps) hits += iwahori_member(r.inverse() * g) ? 1 : 0;
    ++out.cases;
    if (hits != 1) out.fail(std::to_string(hits) + " representatives for the coset of " + g.to_string());
  }
  return out;
}

CheckOutcome bruhat_reconstruction_check(std::uint64_t q, unsigned N, std::size_t samples, std::uint64_t seed) {
  const FqContextPtr f = oracle_field(q, N);
  std::mt19937_64 rng(seed);
  const Mat2 s = Mat2::weyl(f, N);
  CheckOutcome out;
  for (std::size_t k = 0; k < samples; ++k) {
    const Mat2 g = (k % 2 == 0) ? random_special(f, N, rng) : random_big_cell(f, N, rng);
    const BruhatDecomposition bd = bruhat_decompose(g);
    ++out.cases;
    const bool ok = bd.big_cell ? (g.c.is_unit() && iwahori_member(bd.k1) && iwahori_member(bd.k2) && bd.k1 * s * bd.k2 == g)
                                : (iwahori_member(g) && bd.k1 == g);
    if (!ok) out.fail("bad decomposition of " + g.to_string());
  }
  return out;
}

DoubleCosetRelation double_coset_relation(TwistChoice twist, std::uint64_t q, unsigned N) {
  return {convolve_s(twist, q, N), convolve_e(twist, q, N)};
}

std::vector<std::pair<std::int64_t, std::int64_t>> rescaling_solutions(const DoubleCosetRelation& from, const DoubleCosetRelation& to) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  auto reduced = [](std::int64_t n, std::int64_t d) {
    if (d < 0) n = -n, d = -d;
    const std::int64_t g = std::gcd(n, d);
    return std::make_pair(n / g, d / g);
  };
  auto satisfies = [&](std::int64_t n, std::int64_t d) {
    // n/d * a2 = a1 and (n/d)^2 b2 = b1, cleared of denominators.
    __extension__ using i128 = __int128;
    return static_cast<i128>(n) * to.a == static_cast<i128>(d) * from.a &&
           static_cast<i128>(n) * n * to.b == static_cast<i128>(d) * d * from.b;
  };
  if (to.a != 0) {
    if (from.a == 0) return out;
    const auto c = reduced(from.a, to.a);
    if (satisfies(c.first, c.second)) out.push_back(c);
    return out;
  }
  if (from.a != 0) return out;
  // c^2 = b1 / b2: c = +-sqrt(b1 b2) / b2 when b1 b2 is a perfect square.
  if (to.b == 0 || from.b == 0) return out;
  const std::int64_t prod = from.b * to.b;
  if (prod < 0) return out;
  std::int64_t r = 0;
  while ((r + 1) * (r + 1) <= prod) ++r;
  if (r * r != prod) return out;
  for (std::int64_t sgn_c : {1, -1}) {
    const auto c = reduced(sgn_c * r, to.b);
    if (satisfies(c.first, c.second)) out.push_back(c);
  }
  return out;
}

HeckeAlgebra rank_one_algebra(const DoubleCosetRelation& rel) {
  return HeckeAlgebra(CoxeterSystem::from_type("A1"), {}, {{LaurentPoly::constant(0, rel.a), LaurentPoly::constant(0, rel.b)}});
}

TwistWitness twist_necessity_witness(std::uint64_t q, unsigned N) {
  TwistWitness w;
  w.trivial = double_coset_relation(TwistChoice::trivial, q, N);
  w.sign = double_coset_relation(TwistChoice::sign, q, N);
  w.rescalings = rescaling_solutions(w.trivial, w.sign);
  const HeckeAlgebra A = rank_one_algebra(w.trivial), B = rank_one_algebra(w.sign);
  auto unit_map = [](std::int64_t c) {
    return [c](const Word& word) { return LaurentPoly::constant(0, word.empty() ? 1 : c); };
  };
  w.plus_one = support_preserving_map_check(A, B, unit_map(1), 1);
  w.minus_one = support_preserving_map_check(A, B, unit_map(-1), 1);
  w.no_isomorphism = w.trivial.a != w.sign.a && w.rescalings.empty() && !w.plus_one.pass && !w.minus_one.pass;
  return w;
}

}  // namespace hforge
