#include "hforge/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace hforge {

namespace {

std::int64_t add_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("LaurentPoly: coefficient overflow");
  return r;
}

std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("LaurentPoly: coefficient overflow");
  return r;
}

}  // namespace

LaurentPoly LaurentPoly::constant(std::size_t nvars, std::int64_t c) {
  LaurentPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw std::out_of_range("LaurentPoly: variable index out of range");
  Exponents e(nvars, 0);
  e[i] = 1;
  return monomial(std::move(e));
}

LaurentPoly LaurentPoly::monomial(Exponents exps, std::int64_t coeff) {
  LaurentPoly p(exps.size());
  p.add_term(exps, coeff);
  return p;
}

void LaurentPoly::add_term(const Exponents& e, std::int64_t c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second = add_checked(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

void LaurentPoly::check_compatible(const LaurentPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("LaurentPoly: parameter count mismatch");
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  for (auto e : terms_.begin()->first)
    if (e != 0) return false;
  return true;
}

std::int64_t LaurentPoly::constant_value() const {
  if (!is_constant()) throw std::domain_error("LaurentPoly: not a constant");
  return terms_.empty() ? 0 : terms_.begin()->second;
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && (terms_.begin()->second == 1 || terms_.begin()->second == -1);
}

LaurentPoly LaurentPoly::unit_inverse() const {
  if (!is_unit()) throw std::domain_error("LaurentPoly: not a unit");
  Exponents e = terms_.begin()->first;
  for (auto& x : e) x = -x;
  return monomial(std::move(e), terms_.begin()->second);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  check_compatible(o);
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  check_compatible(o);
  LaurentPoly r(nvars_);
  Exponents e(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, mul_checked(ca, cb));
    }
  }
  return r;
}

FqElement LaurentPoly::specialize(const std::vector<FqElement>& values) const {
  if (values.size() != nvars_) throw std::invalid_argument("LaurentPoly: wrong number of values");
  if (nvars_ == 0 && terms_.empty()) throw std::invalid_argument("LaurentPoly: no field context for the zero constant");
  const FqContext* ctx = nullptr;
  for (const auto& v : values) {
    if (v.is_zero()) throw std::domain_error("LaurentPoly: parameters must specialise to units");
    ctx = &v.context();
  }
  if (!ctx) throw std::invalid_argument("LaurentPoly: specialise a parameter-free polynomial with evaluate()");
  FqElement acc = ctx->zero();
  for (const auto& [e, c] : terms_) {
    FqElement t = ctx->from_int(c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      const FqElement base = e[i] >= 0 ? values[i] : values[i].inv();
      t *= base.pow(static_cast<std::uint64_t>(e[i] >= 0 ? e[i] : -e[i]));
    }
    acc += t;
  }
  return acc;
}

std::int64_t LaurentPoly::evaluate(const std::vector<std::int64_t>& values) const {
  if (values.size() != nvars_) throw std::invalid_argument("LaurentPoly: wrong number of values");
  std::int64_t acc = 0;
  for (const auto& [e, c] : terms_) {
    std::int64_t t = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] < 0 && values[i] != 1 && values[i] != -1) throw std::domain_error("LaurentPoly: negative power of a non-unit integer");
      for (std::int32_t k = 0; k < (e[i] < 0 ? -e[i] : e[i]); ++k) t = mul_checked(t, values[i]);
    }
    acc = add_checked(acc, t);
  }
  return acc;
}

std::string LaurentPoly::to_string(const std::vector<std::string>& names) const {
  if (names.size() < nvars_) throw std::invalid_argument("LaurentPoly: not enough parameter names");
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::ostringstream mono;
    bool has_var = false;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (has_var) mono << '*';
      mono << names[i];
      if (e[i] != 1) mono << '^' << e[i];
      has_var = true;
    }
    const std::int64_t mag = c < 0 ? -c : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    if (!has_var)
      os << mag;
    else if (mag == 1)
      os << mono.str();
    else
      os << mag << '*' << mono.str();
    first = false;
  }
  return os.str();
}

}  // namespace hforge
