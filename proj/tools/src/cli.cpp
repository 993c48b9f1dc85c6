#include "hforge/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hforge/checks.hpp"
#include "hforge/ffield.hpp"
#include "hforge/gradedorth.hpp"
#include "hforge/heckealg.hpp"
#include "hforge/quadspace.hpp"
#include "hforge/sp4oracle.hpp"
#include "hforge/sympweil.hpp"

namespace hforge::cli {

namespace {

using nlohmann::json;

/// Bad input reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
  try {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError("malformed JSON in " + path + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// JSON <-> field data

FqContextPtr parse_field(const json& j) {
  if (j.is_number_integer()) return FqContext::of_order(j.get<std::uint64_t>());
  if (!j.is_object() || !j.contains("p")) throw UsageError("field must be an odd prime power or {p, m} / {p, modulus}");
  const auto p = j.at("p").get<std::uint64_t>();
  if (j.contains("modulus")) return FqContext::make(p, j.at("modulus").get<std::vector<std::uint64_t>>());
  return FqContext::make(p, j.value("m", 1u));
}

json field_json(const FqContext& f) { return {{"p", f.characteristic()}, {"m", f.degree()}, {"modulus", f.modulus()}}; }

FqElement parse_element(const json& j, const FqContext& f) {
  if (j.is_number_integer()) return f.from_int(j.get<std::int64_t>());
  if (j.is_array()) {
    std::vector<std::uint64_t> c;
    const auto p = static_cast<std::int64_t>(f.characteristic());
    for (const auto& x : j) c.push_back(static_cast<std::uint64_t>(((x.get<std::int64_t>() % p) + p) % p));
    if (c.size() > f.degree()) throw UsageError("element has more coefficients than the field degree");
    c.resize(f.degree(), 0);
    return f.from_coeffs(c);
  }
  throw UsageError("field elements are integers or coefficient arrays");
}

json element_json(const FqElement& a) {
  if (a.context().degree() == 1) return a.index();
  return a.coeffs();
}

template <class Entry>
FqMatrix parse_matrix(const json& j, const FqContext& f, Entry entry) {
  if (!j.is_array() || j.empty()) throw UsageError("matrices are non-empty arrays of rows");
  const std::size_t n = j.size();
  FqMatrix m(f, n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!j[r].is_array() || j[r].size() != n) throw UsageError("matrices must be square");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = entry(j[r][c]);
  }
  return m;
}

FqMatrix parse_matrix(const json& j, const FqContext& f) {
  return parse_matrix(j, f, [&](const json& e) { return parse_element(e, f); });
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

json outcome_json(const CheckOutcome& o) {
  json j = {{"pass", o.pass}, {"cases", o.cases}};
  if (!o.pass) j["witness"] = o.witness;
  return j;
}

// ---------------------------------------------------------------------------
// sgn

int run_sgn(std::uint64_t q, const std::string& a, std::ostream& out) {
  const FqContextPtr f = FqContext::of_order(q);
  const FqElement x = parse_element(json::parse(a), *f);
  if (x.is_zero()) throw UsageError("sgn is defined on nonzero elements");
  emit(out, {{"field", field_json(*f)}, {"element", element_json(x)}, {"sign", sgn(x).value()}});
  return kExitOk;
}

// ---------------------------------------------------------------------------
// spinor-norm

int run_spinor_norm(const std::string& path, std::ostream& out) {
  const json in = read_json(path);
  const FqContextPtr f = parse_field(in.at("field"));
  const QuadraticSpace V(f, parse_matrix(in.at("gram"), *f));
  const FqMatrix m = parse_matrix(in.at("matrix"), *f);
  if (m.rows() != V.dim()) throw UsageError("matrix and gram have different sizes");
  if (!V.is_orthogonal(m)) throw UsageError("matrix does not preserve the form");
  const SquareClass c = spinor_norm(OrthogonalMap(V, m));
  emit(out, {{"square_class", to_string(c)}, {"sign", sgn(c).value()}});
  return kExitOk;
}

// ---------------------------------------------------------------------------
// extended-sn

OrbitKind parse_kind(const std::string& s) {
  if (s == "asym") return OrbitKind::asym;
  if (s == "sym") return OrbitKind::sym;
  throw UsageError("orbit kind must be asym or sym");
}

int run_extended_sn(const std::string& path, std::ostream& out) {
  const json in = read_json(path);
  const FqContextPtr f = parse_field(in.at("field"));
  std::vector<BlockOrbit> orbits;
  for (const auto& b : in.at("blocks")) orbits.push_back({b.at("label").get<std::string>(), parse_kind(b.at("kind")), b.at("dim").get<std::size_t>()});
  std::optional<Mu4Value> root;
  if (in.contains("root")) root = Mu4Value::parse(in.at("root").get<std::string>());
  const GradedQuadraticSpace V(f, BlockIndex(std::move(orbits)), parse_matrix(in.at("gram"), *f), root);
  // Entries over f' = f(zeta): an element of f, or {"base": a, "zeta": b} for a + b zeta.
  const json& el = in.at("element");
  const FqMatrix base = parse_matrix(el, *f, [&](const json& e) {
    return e.is_object() ? (e.contains("base") ? parse_element(e.at("base"), *f) : f->zero()) : parse_element(e, *f);
  });
  const FqMatrix zpart = parse_matrix(el, *f, [&](const json& e) {
    return e.is_object() && e.contains("zeta") ? parse_element(e.at("zeta"), *f) : f->zero();
  });
  const FqMatrix g = V.lift(base) + V.lift(zpart) * V.zeta();
  if (g.rows() != V.dim()) throw UsageError("element and gram have different sizes");
  if (g.det().is_zero()) throw UsageError("element is singular");
  json result;
  if (otilde_membership(V, g)) {
    result = {{"member", true}, {"value", extended_sn(V, g).to_string()}};
  } else {
    result = {{"member", false}, {"value", nullptr}};
  }
  emit(out, result);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// weil

CheckOutcome weil_mult(std::uint64_t p, std::size_t n, std::size_t samples, std::uint64_t seed) {
  CheckOutcome o;
  const HeisenbergRep rho(SymplecticSpace(p, n));
  std::mt19937_64 rng(seed);
  if (n == 1) {
    const WeilSL2 w(rho);
    const FqContext& f = rho.space().field();
    if (p <= 5) {
      const auto group = enumerate_sl2(f);
      std::vector<CycloMatrix> ops;
      for (const auto& g : group) ops.push_back(w(g));
      for (std::size_t i = 0; i < group.size(); ++i)
        for (std::size_t j = 0; j < group.size(); ++j) {
          ++o.cases;
          if (ops[i] * ops[j] != w(group[i] * group[j])) o.fail("omega(g) omega(h) != omega(gh) at pair " + std::to_string(i) + "," + std::to_string(j));
        }
    } else {
      for (std::size_t k = 0; k < samples; ++k) {
        const FqMatrix g = random_sl2(f, rng), h = random_sl2(f, rng);
        ++o.cases;
        if (w(g) * w(h) != w(g * h)) o.fail("omega(g) omega(h) != omega(gh) at sample " + std::to_string(k));
      }
    }
    return o;
  }
  // Only projective for n >= 2: T(g) T(h) must be a scalar multiple of T(gh).
  for (std::size_t k = 0; k < samples; ++k) {
    const FqMatrix g = random_symplectic(rho.space(), rng), h = random_symplectic(rho.space(), rng);
    ++o.cases;
    if (!weil_cocycle(rho, g, h)) o.fail("T(g) T(h) is not proportional to T(gh) at sample " + std::to_string(k));
  }
  return o;
}

CheckOutcome weil_central(std::uint64_t p, std::size_t n) {
  CheckOutcome o;
  const HeisenbergRep rho(SymplecticSpace(p, n));
  const FqContext& f = rho.space().field();
  for (const auto& a : f.elements()) {
    ++o.cases;
    const Cyclotomic want = Cyclotomic::zeta(rho.coefficients(), 4 * static_cast<std::int64_t>(a.index()));
    if (rho.matrix({zero_vector(f, 2 * n), a}) != CycloMatrix::identity(rho.coefficients(), rho.dim()).scaled(want)) {
      o.fail("rho(0, a) is not iota^{-1}(a) for a = " + a.to_string());
    }
  }
  ++o.cases;
  if (rho.character_norm() != Cyclotomic::one(rho.coefficients())) o.fail("character norm is " + rho.character_norm().to_string());
  return o;
}

CheckOutcome weil_induction(std::uint64_t p, std::size_t n) {
  CheckOutcome o;
  const HeisenbergRep rho(SymplecticSpace(p, n));
  const FqContext& f = rho.space().field();
  if (n == 1) {
    for (const auto& u : projective_points(f, 2)) {
      const std::vector<FqVector> U{u};
      o.cases += 2;
      if (!induction_identity_check(rho, U, InductionMode::with_sl2_levi, true).equal) o.fail("identity fails with chi^U");
      if (induction_identity_check(rho, U, InductionMode::with_sl2_levi, false).equal) o.fail("identity holds without chi^U");
    }
    return o;
  }
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<FqVector> U;
    for (std::size_t i = 0; i < k; ++i) U.push_back(unit_vector(f, 2 * n, i));
    ++o.cases;
    if (!induction_identity_check(rho, U, InductionMode::heisenberg_only).equal) o.fail("identity fails for dim U = " + std::to_string(k));
  }
  return o;
}

CheckOutcome weil_split(std::uint64_t p, std::size_t dim, std::size_t samples, std::uint64_t seed) {
  CheckOutcome o;
  const FqContextPtr f = FqContext::make(p);
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < samples; ++k) {
    const WeightedForm wf = random_weighted_form(*f, dim, rng);
    ++o.cases;
    if (auto e = check_graded_split(wf.form, graded_symplectic_split(wf.form, wf.weights))) o.fail(*e + " at sample " + std::to_string(k));
  }
  return o;
}

int run_weil(std::uint64_t p, std::size_t dim, const std::string& check, std::size_t samples, std::uint64_t seed, std::ostream& out) {
  FqContext::make(p);  // validates p
  if (dim < 2 || dim % 2 != 0) throw UsageError("--dim must be even and positive");
  const std::size_t n = dim / 2;
  std::uint64_t model = 1;
  for (std::size_t i = 0; i < n; ++i) model *= p;
  if (check != "split" && model > 125) throw UsageError("Schroedinger model of dimension p^(dim/2) > 125 is out of range");
  CheckOutcome o;
  if (check == "mult")
    o = weil_mult(p, n, samples, seed);
  else if (check == "central")
    o = weil_central(p, n);
  else if (check == "induction")
    o = weil_induction(p, n);
  else
    o = weil_split(p, dim, samples, seed);
  json j = {{"check", check}, {"params", {{"p", p}, {"dim", dim}, {"samples", samples}, {"seed", seed}}}};
  j.update(outcome_json(o));
  emit(out, j);
  return o.pass ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------------------
// hecke

CoxeterSystem load_coxeter(const std::string& type, std::size_t cap) {
  for (const char* t : {"A1", "A1xA1", "A2", "B2", "G2", "A1~"})
    if (type == t) return CoxeterSystem::from_type(type, cap);
  const json in = read_json(type);
  std::vector<std::vector<int>> m;
  for (const auto& row : in.at("coxeter")) {
    std::vector<int> r;
    for (const auto& e : row) r.push_back(e.is_string() && e.get<std::string>() == "inf" ? kCoxeterInfinity : e.get<int>());
    m.push_back(std::move(r));
  }
  std::vector<std::string> names;
  if (in.contains("names")) names = in.at("names").get<std::vector<std::string>>();
  return CoxeterSystem(std::move(m), std::move(names), cap, "custom");
}

int run_hecke(const std::string& type, const std::string& params, const std::string& check, std::size_t cap, std::size_t samples,
              std::uint64_t seed, std::ostream& out) {
  CoxeterSystem W = load_coxeter(type, cap);
  std::optional<ParameterFunction> q;
  if (params.empty()) {
    q = ParameterFunction::generic(W);
  } else {
    std::vector<std::string> names;
    std::stringstream ss(params);
    for (std::string s; std::getline(ss, s, ',');) names.push_back(s);
    q = ParameterFunction(W, names);
  }
  std::vector<std::string> per_generator;
  for (std::size_t s = 0; s < W.rank(); ++s) per_generator.push_back(q->name_of(static_cast<int>(s)));
  const HeckeAlgebra H(W, *q);
  CheckOutcome o;
  if (check == "braid")
    o = check_braid_relations(H);
  else if (check == "quadratic")
    o = check_quadratic_relations(H);
  else
    o = check_associativity(H, samples, std::min<std::size_t>(5, cap / 3), seed);
  json j = {{"type", W.type()}, {"params", per_generator}, {"check", check}, {"len_cap", cap}};
  j.update(outcome_json(o));
  emit(out, j);
  return o.pass ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------------------
// sp4

int run_sp4(std::uint64_t q, const std::string& twist, unsigned N, const std::string& point, std::ostream& out) {
  const TwistChoice t = parse_twist(twist);
  const std::int64_t v = point == "s" ? convolve_s(t, q, N) : convolve_e(t, q, N);
  emit(out, {{"q", q}, {"twist", twist}, {"N", N}, {"point", point}, {"value", v}});
  return kExitOk;
}

// ---------------------------------------------------------------------------
// suite

int run_suite(const std::string& filter, std::ostream& out, std::ostream& err) {
  if (!filter.empty()) {
    const auto mods = suite_modules();
    if (std::find(mods.begin(), mods.end(), filter) == mods.end()) throw UsageError("unknown module " + filter);
  }
  json checks = json::array();
  bool all = true;
  std::ostringstream table;
  table << std::left << std::setw(12) << "module" << std::setw(34) << "check" << std::setw(6) << "pass" << std::right << std::setw(8)
        << "cases" << std::setw(10) << "ms" << '\n';
  for (const auto& c : suite_checks()) {
    if (!filter.empty() && c.module != filter) continue;
    const auto t0 = std::chrono::steady_clock::now();
    CheckOutcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    all = all && o.pass;
    json j = {{"module", c.module}, {"name", c.name}, {"criteria", c.criteria}};
    j.update(outcome_json(o));
    checks.push_back(std::move(j));
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", ms);
    table << std::left << std::setw(12) << c.module << std::setw(34) << c.name << std::setw(6) << (o.pass ? "yes" : "NO") << std::right
          << std::setw(8) << o.cases << std::setw(10) << buf << '\n';
  }
  err << table.str();
  emit(out, {{"version", HFORGE_VERSION},
             {"subcommand", "suite"},
             {"filter", filter.empty() ? json(nullptr) : json(filter)},
             {"checks", checks},
             {"pass", all}});
  return all ? kExitOk : kExitCheckFailed;
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact finite-field, Weil representation and Hecke algebra computations", "hecke-forge"};
  app.set_version_flag("--version", std::string("hecke-forge ") + HFORGE_VERSION);
  app.add_flag("--json", "JSON output (the default and only mode)");
  app.require_subcommand(1);

  std::uint64_t q = 0, p = 0, seed = 1;
  std::size_t dim = 2, samples = 0, cap = 64;
  unsigned N = 3;
  std::string a, input, check, type, params, twist, point = "s", filter;

  auto* sgn_cmd = app.add_subcommand("sgn", "quadratic character of F_q");
  sgn_cmd->add_option("--q", q, "odd prime power")->required();
  sgn_cmd->add_option("--a", a, "element: integer or JSON coefficient array")->required();

  auto* sn_cmd = app.add_subcommand("spinor-norm", "spinor norm of an orthogonal map; input {field, gram, matrix}");
  sn_cmd->add_option("input", input, "JSON file, - for stdin")->required();

  auto* ext_cmd = app.add_subcommand("extended-sn", "mu_4-valued extended spinor character; input {field, blocks, gram, element}");
  ext_cmd->add_option("input", input, "JSON file, - for stdin")->required();

  auto* weil_cmd = app.add_subcommand("weil", "Heisenberg and Weil representation checks");
  weil_cmd->add_option("--p", p, "odd prime")->required();
  weil_cmd->add_option("--dim", dim, "dimension of V (even)")->required();
  weil_cmd->add_option("--check", check)->required()->check(CLI::IsMember({"mult", "central", "induction", "split"}));
  weil_cmd->add_option("--samples", samples, "random samples (mult for p > 5 or dim > 2, split)");
  weil_cmd->add_option("--seed", seed);

  auto* hecke_cmd = app.add_subcommand("hecke", "generic Iwahori-Hecke algebra checks");
  hecke_cmd->add_option("--type", type, "A1, A1xA1, A2, B2, G2, A1~ or a JSON file {coxeter, names}")->required();
  hecke_cmd->add_option("--params", params, "parameter name per generator, comma separated (default: generic)");
  hecke_cmd->add_option("--check", check)->required()->check(CLI::IsMember({"braid", "assoc", "quadratic"}));
  hecke_cmd->add_option("--len-cap", cap, "maximal word length")->check(CLI::PositiveNumber);
  hecke_cmd->add_option("--samples", samples, "random triples for assoc");
  hecke_cmd->add_option("--seed", seed);

  auto* sp4_cmd = app.add_subcommand("sp4", "Iwahori-Hecke convolution (phi * phi) in the SL2 block");
  sp4_cmd->add_option("--q", q, "odd prime power")->required();
  sp4_cmd->add_option("--twist", twist)->required()->check(CLI::IsMember({"trivial", "sign"}));
  sp4_cmd->add_option("--N", N, "truncation level")->check(CLI::Range(2u, 16u));
  sp4_cmd->add_option("--point", point)->check(CLI::IsMember({"s", "e"}));

  auto* suite_cmd = app.add_subcommand("suite", "run the property checks");
  suite_cmd->add_option("--filter", filter, "module name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*sgn_cmd) return run_sgn(q, a, out);
    if (*sn_cmd) return run_spinor_norm(input, out);
    if (*ext_cmd) return run_extended_sn(input, out);
    if (*weil_cmd) return run_weil(p, dim, check, samples ? samples : (check == "split" ? 200 : dim == 2 ? 500 : 10), seed, out);
    if (*hecke_cmd) return run_hecke(type, params, check, cap, samples ? samples : 500, seed, out);
    if (*sp4_cmd) return run_sp4(q, twist, N, point, out);
    if (*suite_cmd) return run_suite(filter, out, err);
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << " (raise --len-cap)\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hforge::cli
