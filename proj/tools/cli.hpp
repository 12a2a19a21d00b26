#pragma once

// Command-line front end. `run` is the whole program minus process setup,
// so the test suite can drive it with in-memory streams.

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "opuc_chains.hpp"
#include "opuc_chains/verify.hpp"

namespace opuc::cli {

using json = nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- emit

/// Integral doubles are written as integers so that 0 prints as 0, not 0.0.
inline json num(double v) {
  if (std::isfinite(v) && v == std::floor(v) && std::abs(v) < 1e15) return json(static_cast<long long>(v));
  return json(v);
}

inline json cnum(Complex z) { return json{{"re", num(z.real())}, {"im", num(z.imag())}}; }

inline json poly_json(const ComplexPoly& p) {
  json c = json::array();
  for (const auto& v : p.coeffs()) c.push_back(cnum(v));
  if (c.empty()) c.push_back(cnum(0.0));
  return json{{"coeffs", c}};
}

template <RealScalar T>
json poly_json(const Poly<T>& p) {
  std::vector<Complex> c;
  for (const auto& v : p.coeffs()) c.push_back(to_complex(v));
  json out = poly_json(ComplexPoly(std::move(c)));
  if constexpr (is_exact_v<T>) {
    json ex = json::array();
    for (const auto& v : p.coeffs()) ex.push_back(v.str());
    if (ex.empty()) ex.push_back("0");
    out["exact"] = ex;
  }
  return out;
}

template <RealScalar T>
json real_seq(const std::vector<T>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(num(to_double(x)));
  return a;
}

template <RealScalar T>
json exact_seq(const std::vector<T>& v) {
  json a = json::array();
  for (const auto& x : v) {
    if constexpr (is_exact_v<T>) {
      a.push_back(x.str());
    } else {
      a.push_back(num(x));
    }
  }
  return a;
}

inline json complex_seq(const std::vector<Complex>& v) {
  json a = json::array();
  for (const auto& z : v) a.push_back(cnum(z));
  return a;
}

inline std::string shortest(double v) {
  if (std::isfinite(v) && v == std::floor(v) && std::abs(v) < 1e15) return std::to_string(static_cast<long long>(v));
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

/// Header `index,re,im`, one LF-terminated row per entry.
inline std::string emit_csv(const std::vector<Complex>& rows) {
  std::string s = "index,re,im\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    s += std::to_string(i) + "," + shortest(rows[i].real()) + "," + shortest(rows[i].imag()) + "\n";
  }
  return s;
}

/// Compact JSON with sorted keys, newline-terminated; empty report is `{}`.
inline std::string emit_json(const json& report) {
  if (report.is_null()) return "{}\n";
  return report.dump() + "\n";
}

/// A report plus the sequence that stands in for it in CSV form.
struct Output {
  json report = json::object();
  std::vector<Complex> rows;
  int exit_code = 0;
};

template <RealScalar T>
std::vector<Complex> as_rows(const std::vector<T>& v) {
  std::vector<Complex> r;
  for (const auto& x : v) r.push_back(to_complex(x));
  return r;
}

template <RealScalar T>
std::vector<Complex> as_rows(const Poly<T>& p) {
  return as_rows(p.coeffs());
}
inline std::vector<Complex> as_rows(const ComplexPoly& p) { return p.coeffs(); }

// ---------------------------------------------------------------- parsing

struct Number {
  std::optional<Rational> exact;
  double value = 0.0;
};

inline Number parse_number(const std::string& text) {
  Number n;
  try {
    n.exact = parse_rational(text);
    n.value = to_double(*n.exact);
    return n;
  } catch (const std::exception&) {
  }
  try {
    std::size_t used = 0;
    n.value = std::stod(text, &used);
    if (used != text.size()) throw UsageError("not a number: " + text);
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError("not a number: " + text);
  }
  return n;
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError("invalid JSON in " + path + ": " + e.what());
  }
}

inline Complex complex_from_json(const json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_string()) return {parse_number(v.get<std::string>()).value, 0.0};
  if (v.is_object() && v.contains("re")) return {v.at("re").get<double>(), v.value("im", 0.0)};
  throw UsageError("expected a number or {\"re\",\"im\"} object");
}

inline std::vector<Complex> complex_list(const std::string& spec) {
  std::vector<Complex> out;
  if (spec.rfind("file:", 0) == 0) {
    const json arr = read_json_file(spec.substr(5));
    if (!arr.is_array()) throw UsageError("expected a JSON array in " + spec);
    for (const auto& v : arr) out.push_back(complex_from_json(v));
    return out;
  }
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back({parse_number(item).value, 0.0});
  return out;
}

using AnyChain = std::variant<ChainSequence<Rational>, ChainSequence<double>>;

struct ChainSpec {
  AnyChain chain;
  std::optional<SppcsVerdict> analytic;
};

/// const:<v>, cj:<lambda> (augmented with jump t), carat:<sigma>, file:<path>.
inline ChainSpec parse_chain(const std::string& spec, const Number& t) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError("chain spec must look like kind:value, got " + spec);
  const std::string kind = spec.substr(0, colon);
  const std::string arg = spec.substr(colon + 1);
  if (kind == "file") {
    const json arr = read_json_file(arg);
    if (!arr.is_array() || arr.empty()) throw UsageError("chain file must hold a non-empty JSON array");
    bool exact = true;
    for (const auto& v : arr) exact = exact && (v.is_string() || v.is_number_integer());
    if (exact) {
      std::vector<Rational> d;
      for (const auto& v : arr) d.push_back(v.is_string() ? parse_rational(v.get<std::string>()) : Rational(v.get<long long>()));
      return {ChainSequence<Rational>::from_values(std::move(d)), std::nullopt};
    }
    std::vector<double> d;
    for (const auto& v : arr) d.push_back(v.is_string() ? parse_number(v.get<std::string>()).value : v.get<double>());
    return {ChainSequence<double>::from_values(std::move(d)), std::nullopt};
  }
  const Number x = parse_number(arg);
  const bool exact = x.exact.has_value() && t.exact.has_value();
  try {
    if (kind == "const") {
      if (x.exact) return {ChainSequence<Rational>::constant(*x.exact), std::nullopt};
      return {ChainSequence<double>::constant(x.value), std::nullopt};
    }
    if (kind == "carat") {
      if (exact) {
        const CaratFamily<Rational> f(*x.exact);
        return {f.chain(), f.analytic_sppcs(Branch::Primary)};
      }
      const CaratFamily<double> f(x.value);
      return {f.chain(), f.analytic_sppcs(Branch::Primary)};
    }
    if (kind == "cj") {
      if (exact) {
        const HyperFamily<Rational> f(*x.exact);
        const auto aug = f.augmented(*t.exact);
        std::optional<SppcsVerdict> v;
        if (*t.exact == 0) v = f.analytic_sppcs();
        if (*t.exact > 0) v = SppcsVerdict::Convergent;
        return {aug.chain(), v};
      }
      const HyperFamily<double> f(x.value);
      std::optional<SppcsVerdict> v;
      if (t.value == 0.0) v = f.analytic_sppcs();
      if (t.value > 0.0) v = SppcsVerdict::Convergent;
      return {f.augmented(t.value).chain(), v};
    }
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  throw UsageError("unknown chain kind: " + kind);
}

// ---------------------------------------------------------------- commands

struct Common {
  std::string format = "json";
  bool timing = false;
};

inline void echo(Output& o, const std::string& command, json inputs) {
  o.report["command"] = command;
  o.report["inputs"] = std::move(inputs);
}

template <RealScalar T>
json chain_block(const ChainSequence<T>& d, int N) {
  json j;
  j["d"] = real_seq(d.prefix(N));
  if constexpr (is_exact_v<T>) j["d_exact"] = exact_seq(d.prefix(N));
  return j;
}

inline Output cmd_chain_analyze(const std::string& spec, const std::string& t_text, int N, double tol) {
  Output o;
  echo(o, "chain analyze", {{"d", spec}, {"n", N}, {"t", t_text}, {"tol", num(tol)}});
  const auto cs = parse_chain(spec, parse_number(t_text));
  std::visit(
      [&](const auto& d) {
        json out = chain_block(d, N);
        const auto m = minimal_params(d, N);
        out["minimal"] = real_seq(m.values());
        using T = std::decay_t<decltype(m.values().front())>;
        if constexpr (is_exact_v<T>) out["minimal_exact"] = exact_seq(m.values());
        try {
          out["maximal"] = real_seq(maximal_params(d, N, tol).values());
        } catch (const Error& e) {
          out["maximal"] = nullptr;
          out["maximal_error"] = e.what();
        }
        out["half_class"] = to_string(classify_half(m));
        const auto rep = sppcs_verdict(d, d.depth() ? std::min(*d.depth(), kDefaultDepth) : kDefaultDepth);
        out["sppcs"] = {{"verdict", to_string(rep.verdict)}, {"partial_sum", num(rep.partial_sum)}, {"terms", rep.terms}};
        if (cs.analytic) out["sppcs"]["analytic"] = to_string(*cs.analytic);
        o.report["outputs"] = out;
        o.rows = as_rows(m.values());
      },
      cs.chain);
  return o;
}

inline Output cmd_chain_complement(const std::string& spec, const std::string& t_text, int N) {
  Output o;
  echo(o, "chain complement", {{"d", spec}, {"n", N}, {"t", t_text}});
  const auto cs = parse_chain(spec, parse_number(t_text));
  std::visit(
      [&](const auto& d) {
        const auto [a, k] = complement(d, N);
        json out;
        out["a"] = real_seq(a.prefix(N));
        out["k"] = real_seq(k.values());
        using T = std::decay_t<decltype(k.values().front())>;
        if constexpr (is_exact_v<T>) {
          out["a_exact"] = exact_seq(a.prefix(N));
          out["k_exact"] = exact_seq(k.values());
        }
        o.report["outputs"] = out;
        o.rows = as_rows(a.prefix(N));
      },
      cs.chain);
  return o;
}

inline Output cmd_chain_sppcs(const std::string& spec, const std::string& t_text, int N, SppcsThresholds th) {
  Output o;
  echo(o, "chain sppcs", {{"d", spec}, {"n", N}, {"t", t_text}, {"divergence", num(th.divergence)}, {"margin", num(th.margin)}});
  const auto cs = parse_chain(spec, parse_number(t_text));
  std::visit(
      [&](const auto& d) {
        const auto rep = sppcs_verdict(d, N, th);
        const auto comp = sppcs_verdict(complement(d, N).second, th);
        json out{{"verdict", to_string(rep.verdict)}, {"partial_sum", num(rep.partial_sum)}, {"terms", rep.terms},
                 {"complement_verdict", to_string(comp.verdict)}};
        if (cs.analytic) out["analytic"] = to_string(*cs.analytic);
        o.report["outputs"] = out;
        o.rows = {Complex(rep.partial_sum)};
      },
      cs.chain);
  return o;
}

inline std::vector<double> parse_c(const std::string& spec, int N) {
  std::vector<double> c(static_cast<std::size_t>(N), 0.0);
  if (spec == "zero") return c;
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  if (colon == std::string::npos) throw UsageError("c spec must be zero, const:<v>, alt:<v> or file:<path>");
  if (kind == "file") {
    const auto v = complex_list(spec);
    if (static_cast<int>(v.size()) < N) throw UsageError("c file shorter than n");
    for (int n = 0; n < N; ++n) c[static_cast<std::size_t>(n)] = v[static_cast<std::size_t>(n)].real();
    return c;
  }
  const double v = parse_number(spec.substr(colon + 1)).value;
  for (int n = 1; n <= N; ++n) {
    if (kind == "const") {
      c[static_cast<std::size_t>(n - 1)] = v;
    } else if (kind == "alt") {
      c[static_cast<std::size_t>(n - 1)] = n % 2 == 0 ? v : -v;
    } else {
      throw UsageError("unknown c spec: " + spec);
    }
  }
  return c;
}

inline Output cmd_verblunsky_from_chain(const std::string& spec, const std::string& t_text, const std::string& c_spec, int N) {
  Output o;
  echo(o, "verblunsky from-chain", {{"d", spec}, {"n", N}, {"t", t_text}, {"c", c_spec}});
  const auto cs = parse_chain(spec, parse_number(t_text));
  std::visit(
      [&](const auto& d) {
        const auto m = minimal_params(d, N);
        const auto [a, k] = complement(d, N);
        std::vector<double> dv;
        for (const auto& x : d.prefix(N)) dv.push_back(to_double(x));
        const CDData cd(parse_c(c_spec, N), dv);
        const auto alpha = alpha_from_params(cd, m);
        const auto beta = complementary_verblunsky(cd, k);
        json out{{"alpha", complex_seq(alpha.values())}, {"beta", complex_seq(beta.values())}, {"tau", complex_seq(cd.tau_values())}};
        o.report["outputs"] = out;
        o.rows = alpha.values();
      },
      cs.chain);
  return o;
}

inline Output cmd_verblunsky_from_moments(const std::string& weight, const std::string& moments, int panels, int N) {
  Output o;
  echo(o, "verblunsky from-moments", {{"weight", weight}, {"moments", moments}, {"panels", panels}, {"n", N}});
  MomentMeasure m;
  if (!moments.empty()) {
    m = MomentMeasure(complex_list(moments));
  } else if (weight.rfind("cj:", 0) == 0) {
    const double lam = parse_number(weight.substr(3)).value;
    m = measure_from_weight(HyperFamily<double>(lam).weight(), N, panels);
  } else if (weight == "lebesgue") {
    m = measure_from_weight([](double) { return 1.0; }, N, panels);
  } else {
    throw UsageError("give --moments file:<path> or --weight cj:<lambda>|lebesgue");
  }
  const auto alpha = levinson_verblunsky(m, N);
  o.report["outputs"] = {{"alpha", complex_seq(alpha.values())}, {"moments", complex_seq(m.moments())}};
  o.rows = alpha.values();
  return o;
}

inline VerblunskySequence alpha_source(const std::string& alpha_spec, const std::string& chain_spec, const std::string& t_text, int N) {
  if (!alpha_spec.empty()) {
    auto v = complex_list(alpha_spec);
    if (static_cast<int>(v.size()) > N) v.resize(static_cast<std::size_t>(N));
    return VerblunskySequence(std::move(v));
  }
  if (chain_spec.empty()) throw UsageError("give --alpha or --d");
  const auto cs = parse_chain(chain_spec, parse_number(t_text));
  return std::visit(
      [&](const auto& d) {
        std::vector<double> dv;
        for (const auto& x : d.prefix(N)) dv.push_back(to_double(x));
        return alpha_from_params(CDData(std::vector<double>(static_cast<std::size_t>(N), 0.0), dv), minimal_params(d, N));
      },
      cs.chain);
}

inline Output cmd_szego_build(const std::string& alpha_spec, const std::string& chain_spec, const std::string& t_text, int N,
                              const std::string& emit) {
  Output o;
  echo(o, "szego build", {{"alpha", alpha_spec}, {"d", chain_spec}, {"t", t_text}, {"n", N}, {"emit", emit}});
  const auto pair = szego_from_verblunsky(alpha_source(alpha_spec, chain_spec, t_text, N));
  json out;
  json phi = json::array(), phistar = json::array();
  for (int n = 0; n <= pair.last(); ++n) {
    phi.push_back(poly_json(pair.phi[static_cast<std::size_t>(n)]));
    phistar.push_back(poly_json(pair.phistar[static_cast<std::size_t>(n)]));
  }
  if (emit == "phi" || emit == "all") out["phi"] = phi;
  if (emit == "phistar" || emit == "all") out["phistar"] = phistar;
  if (emit == "norms" || emit == "all") out["norms"] = real_seq(pair.norms);
  if (out.is_null()) throw UsageError("--emit must be phi, phistar, norms or all");
  o.report["outputs"] = out;
  o.rows = emit == "norms" ? as_rows(pair.norms) : emit == "phistar" ? pair.phistar.back().coeffs() : pair.phi.back().coeffs();
  return o;
}

template <Scalar T>
Output extract_from(const std::vector<T>& num_c, const std::vector<T>& den_c, int N, json inputs) {
  Output o;
  echo(o, "ppc extract", std::move(inputs));
  const auto g = schur_extract(RationalFn<T>(Poly<T>(num_c), Poly<T>(den_c)), N);
  json out;
  if constexpr (is_complex_v<T>) {
    out["gamma"] = complex_seq(g);
    o.rows = g;
  } else {
    out["gamma"] = real_seq(g);
    if constexpr (is_exact_v<T>) out["gamma_exact"] = exact_seq(g);
    o.rows = as_rows(g);
  }
  o.report["outputs"] = out;
  return o;
}

inline Output cmd_ppc_extract(const std::string& sigma, const std::string& branch, const std::string& num_s, const std::string& den_s, int N) {
  json inputs{{"sigma", sigma}, {"branch", branch}, {"num", num_s}, {"den", den_s}, {"n", N}};
  if (!sigma.empty()) {
    const Number s = parse_number(sigma);
    const Branch br = branch == "complement" ? Branch::Complement : Branch::Primary;
    if (s.exact) {
      const auto C = CaratFamily<Rational>(*s.exact).caratheodory(br);
      return extract_from(C.num().coeffs(), C.den().coeffs(), N, inputs);
    }
    const auto C = CaratFamily<double>(s.value).caratheodory(br);
    return extract_from(C.num().coeffs(), C.den().coeffs(), N, inputs);
  }
  if (num_s.empty() || den_s.empty()) throw UsageError("give --sigma or both --num and --den");
  auto split = [](const std::string& s) {
    std::vector<Number> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(parse_number(item));
    return v;
  };
  const auto nv = split(num_s), dv = split(den_s);
  bool exact = true;
  for (const auto& x : nv) exact = exact && x.exact.has_value();
  for (const auto& x : dv) exact = exact && x.exact.has_value();
  if (exact) {
    std::vector<Rational> a, b;
    for (const auto& x : nv) a.push_back(*x.exact);
    for (const auto& x : dv) b.push_back(*x.exact);
    return extract_from(a, b, N, inputs);
  }
  std::vector<double> a, b;
  for (const auto& x : nv) a.push_back(x.value);
  for (const auto& x : dv) b.push_back(x.value);
  return extract_from(a, b, N, inputs);
}

inline Output cmd_ppc_approximants(const std::string& alpha_spec, const std::string& chain_spec, const std::string& t_text, int N,
                                   double delta0, int M) {
  Output o;
  echo(o, "ppc approximants", {{"alpha", alpha_spec}, {"d", chain_spec}, {"t", t_text}, {"n", N}, {"delta0", num(delta0)}, {"m", M}});
  const auto f = PPCFraction::from_verblunsky(alpha_source(alpha_spec, chain_spec, t_text, N), delta0);
  if (M < 0) M = 2 * f.size() + 1;
  const auto ap = ppc_approximants(f, M);
  json P = json::array(), Q = json::array();
  for (const auto& a : ap) {
    P.push_back(poly_json(a.P));
    Q.push_back(poly_json(a.Q));
  }
  o.report["outputs"] = {{"P", P}, {"Q", Q}};
  o.rows = ap.back().Q.coeffs();
  return o;
}

template <RealScalar T>
Output carat_family(const T& sigma, int N, Branch br, const std::string& emit, json inputs) {
  Output o;
  echo(o, "family carat", std::move(inputs));
  const CaratFamily<T> f(sigma);
  json out;
  const bool all = emit == "all";
  if (all || emit == "phi") {
    const auto p = f.phi_closed(N, br);
    out["phi"] = poly_json(p);
    o.rows = as_rows(p);
  }
  if (all || emit == "R") {
    const auto p = br == Branch::Primary ? f.R_closed(N) : rn_sequence_real(f.complement_chain().prefix(N), N).back();
    out["R"] = poly_json(p);
    if (!all) o.rows = as_rows(p);
  }
  if (all || emit == "gamma") {
    std::vector<T> g;
    for (int n = 1; n <= N; ++n) g.push_back(f.gamma(n));
    out["gamma"] = real_seq(g);
    if constexpr (is_exact_v<T>) out["gamma_exact"] = exact_seq(g);
    if (!all) o.rows = as_rows(g);
  }
  if (all || emit == "moments") {
    const auto mu = f.moments_exact(N, br);
    out["moments"] = real_seq(mu);
    if constexpr (is_exact_v<T>) out["moments_exact"] = exact_seq(mu);
    if (!all) o.rows = as_rows(mu);
  }
  if (all || emit == "norm") {
    out["norm"] = num(to_double(f.norm(N)));
    if (!all) o.rows = {to_complex(f.norm(N))};
  }
  if (all || emit == "chain") {
    const auto d = br == Branch::Primary ? f.chain().prefix(N) : f.complement_chain().prefix(N);
    out["chain"] = real_seq(d);
    if constexpr (is_exact_v<T>) out["chain_exact"] = exact_seq(d);
    if (!all) o.rows = as_rows(d);
  }
  if (all || emit == "verblunsky") {
    const auto a = f.verblunsky(N, br);
    out["verblunsky"] = complex_seq(a.values());
    if (!all) o.rows = a.values();
  }
  if (out.is_null()) throw UsageError("--emit must be phi, R, gamma, moments, norm, chain, verblunsky or all");
  o.report["outputs"] = out;
  return o;
}

template <RealScalar T>
Output hyper_family(const T& lam, int N, const std::optional<T>& nu, const std::string& emit, json inputs) {
  Output o;
  echo(o, "family hyper", std::move(inputs));
  const HyperFamily<T> f(lam);
  const auto obj = f.objects(N);
  json out;
  const bool all = emit == "all";
  auto put_seq = [&](const char* key, const std::vector<T>& v) {
    out[key] = real_seq(v);
    if constexpr (is_exact_v<T>) out[std::string(key) + "_exact"] = exact_seq(v);
    if (!all || o.rows.empty()) o.rows = as_rows(v);
  };
  if (all || emit == "chain") put_seq("chain", obj.chain);
  if (all || emit == "m") put_seq("m", obj.m);
  if (all || emit == "M") put_seq("M", obj.M);
  if (all || emit == "a") put_seq("a", obj.a_complement);
  if (all || emit == "alpha") {
    out["alpha"] = complex_seq(obj.alpha0.values());
    if (!all) o.rows = obj.alpha0.values();
  }
  if (all || emit == "phi") {
    out["phi"] = poly_json(obj.phi0.back());
    if (!all) o.rows = as_rows(obj.phi0.back());
  }
  if (all || emit == "R") {
    out["R"] = poly_json(f.R(N));
    if (!all) o.rows = as_rows(f.R(N));
  }
  if (all || emit == "numerator") {
    if (f.lambda() > T(1) / T(2)) {
      const auto res = f.numerator_identity_residuals(N);
      out["numerator_residuals"] = real_seq(res);
      if (!all) o.rows = as_rows(res);
    } else if (!all) {
      throw DomainError("numerator identity needs lambda > 1/2");
    }
  }
  if (nu && N >= 1) {
    out["palindromic_R"] = poly_json(palindromic_R(*nu, N));
    out["palindromic_phi"] = poly_json(palindromic_phi(f, *nu, N));
  }
  out["normalization"] = num(f.normalization());
  if (out.size() == 1 && !all) throw UsageError("--emit must be chain, m, M, a, alpha, phi, R, numerator or all");
  o.report["outputs"] = out;
  return o;
}

inline Output cmd_verify(const std::string& suite, std::uint64_t seed, std::optional<double> tol, bool timing) {
  Output o;
  json inputs{{"suite", suite}, {"seed", seed}};
  if (tol) inputs["tol"] = num(*tol);
  echo(o, "verify", inputs);
  std::vector<verify::CheckSpec> specs;
  try {
    specs = verify::checks_for(suite);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("OPUC_CHAINS_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) workers = static_cast<unsigned>(v);
  }
  const auto start = std::chrono::steady_clock::now();
  const auto results = verify::run_checks(specs, seed, tol, workers);
  const auto stop = std::chrono::steady_clock::now();
  json checks = json::array();
  int failed = 0;
  for (const auto& r : results) {
    json c{{"suite", r.suite}, {"name", r.name}, {"residual", num(r.residual)}, {"tolerance", num(r.tolerance)}, {"pass", r.pass}};
    if (!r.error.empty()) c["error"] = r.error;
    checks.push_back(c);
    if (!r.pass) ++failed;
    o.rows.push_back(Complex(r.residual));
  }
  o.report["checks"] = checks;
  o.report["summary"] = {{"total", results.size()}, {"failed", failed}, {"passed", static_cast<int>(results.size()) - failed}};
  if (timing) o.report["timing_ms"] = std::chrono::duration<double, std::milli>(stop - start).count();
  o.exit_code = failed == 0 ? 0 : 1;
  return o;
}

// ---------------------------------------------------------------- driver

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chain sequences, Verblunsky coefficients and OPUC toolkit", "opuc-chains"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  std::function<Output()> action;

  // chain
  auto* chain = app.add_subcommand("chain", "Chain sequences and their complements");
  chain->require_subcommand(1);
  std::string d_spec, t_text = "0";
  int n = 10;
  double tol = kMaximalTol;
  SppcsThresholds th;
  auto add_chain_opts = [&](CLI::App* sc) {
    sc->add_option("--d", d_spec, "Chain spec: const:<v>, cj:<lambda>, carat:<sigma>, file:<path>")->required();
    sc->add_option("--n", n, "Depth")->check(CLI::PositiveNumber);
    sc->add_option("--t", t_text, "Jump at z = 1 for cj chains");
    sc->add_option("--format", common.format)->check(CLI::IsMember({"json", "csv"}));
  };
  auto* analyze = chain->add_subcommand("analyze", "Minimal/maximal parameters and SPPCS verdict");
  add_chain_opts(analyze);
  analyze->add_option("--tol", tol, "Maximal-parameter convergence tolerance");
  analyze->callback([&] { action = [&] { return cmd_chain_analyze(d_spec, t_text, n, tol); }; });
  auto* comp = chain->add_subcommand("complement", "Complementary chain sequence");
  add_chain_opts(comp);
  comp->callback([&] { action = [&] { return cmd_chain_complement(d_spec, t_text, n); }; });
  auto* sppcs = chain->add_subcommand("sppcs", "Three-valued SPPCS verdict");
  add_chain_opts(sppcs);
  sppcs->add_option("--divergence", th.divergence, "Partial-sum divergence threshold");
  sppcs->add_option("--margin", th.margin, "Ratio/Raabe test margin");
  sppcs->callback([&] { action = [&] { return cmd_chain_sppcs(d_spec, t_text, n, th); }; });

  // verblunsky
  auto* verb = app.add_subcommand("verblunsky", "Verblunsky coefficients");
  verb->require_subcommand(1);
  std::string c_spec = "zero", weight, moments;
  int panels = 1 << 14;
  auto* from_chain = verb->add_subcommand("from-chain", "From a chain sequence and c_n");
  add_chain_opts(from_chain);
  from_chain->add_option("--c", c_spec, "c_n: zero, const:<v>, alt:<v> (c_n = (-1)^n v), file:<path>");
  from_chain->callback([&] { action = [&] { return cmd_verblunsky_from_chain(d_spec, t_text, c_spec, n); }; });
  auto* from_mom = verb->add_subcommand("from-moments", "Levinson recursion on moments");
  from_mom->add_option("--weight", weight, "cj:<lambda> or lebesgue");
  from_mom->add_option("--moments", moments, "file:<path> or comma list of mu_0..mu_K");
  from_mom->add_option("--panels", panels, "Trapezoid panels")->check(CLI::PositiveNumber);
  from_mom->add_option("--n", n, "Number of coefficients")->check(CLI::PositiveNumber);
  from_mom->add_option("--format", common.format)->check(CLI::IsMember({"json", "csv"}));
  from_mom->callback([&] { action = [&] { return cmd_verblunsky_from_moments(weight, moments, panels, n); }; });

  // szego
  auto* szego = app.add_subcommand("szego", "Szego polynomials");
  szego->require_subcommand(1);
  std::string alpha_spec, emit = "all";
  auto* build = szego->add_subcommand("build", "Phi_n, Phi*_n and norms");
  build->add_option("--alpha", alpha_spec, "file:<path> or comma list of real alpha");
  build->add_option("--d", d_spec, "Chain spec (c = 0 route)");
  build->add_option("--t", t_text, "Jump for cj chains");
  build->add_option("--n", n, "Degree")->check(CLI::PositiveNumber);
  build->add_option("--emit", emit, "phi, phistar, norms or all");
  build->add_option("--format", common.format)->check(CLI::IsMember({"json", "csv"}));
  build->callback([&] { action = [&] { return cmd_szego_build(alpha_spec, d_spec, t_text, n, emit); }; });

  // ppc
  auto* ppc = app.add_subcommand("ppc", "PPC continued fractions");
  ppc->require_subcommand(1);
  std::string sigma_text, branch = "primary", num_s, den_s;
  double delta0 = 1.0;
  int M = -1;
  auto* extract = ppc->add_subcommand("extract", "Schur-like parameter extraction from a Caratheodory function");
  extract->add_option("--sigma", sigma_text, "Use the sigma family's C(z)");
  extract->add_option("--branch", branch, "primary or complement")->check(CLI::IsMember({"primary", "complement"}));
  extract->add_option("--num", num_s, "Numerator coefficients, comma separated");
  extract->add_option("--den", den_s, "Denominator coefficients, comma separated");
  extract->add_option("--n", n, "Number of parameters")->check(CLI::NonNegativeNumber);
  extract->add_option("--format", common.format)->check(CLI::IsMember({"json", "csv"}));
  extract->callback([&] { action = [&] { return cmd_ppc_extract(sigma_text, branch, num_s, den_s, n); }; });
  auto* approx = ppc->add_subcommand("approximants", "Approximant numerators and denominators");
  approx->add_option("--alpha", alpha_spec, "file:<path> or comma list of real alpha");
  approx->add_option("--d", d_spec, "Chain spec (c = 0 route)");
  approx->add_option("--t", t_text, "Jump for cj chains");
  approx->add_option("--n", n, "Number of Schur parameters")->check(CLI::PositiveNumber);
  approx->add_option("--delta0", delta0, "delta_0 (= mu_0)");
  approx->add_option("--m", M, "Last approximant index (default 2n+1)");
  approx->add_option("--format", common.format)->check(CLI::IsMember({"json", "csv"}));
  approx->callback([&] { action = [&] { return cmd_ppc_approximants(alpha_spec, d_spec, t_text, n, delta0, M); }; });

  // family
  auto* family = app.add_subcommand("family", "Closed-form families");
  family->require_subcommand(1);
  std::string lambda_text, nu_text;
  auto* carat = family->add_subcommand("carat", "C(z) = (1-z)/(1+(1-2 sigma) z)");
  carat->add_option("--sigma", sigma_text, "sigma in (0,1)")->required();
  carat->add_option("--n", n, "Index")->check(CLI::PositiveNumber);
  carat->add_option("--branch", branch, "primary or complement")->check(CLI::IsMember({"primary", "complement"}));
  carat->add_option("--emit", emit, "phi, R, gamma, moments, norm, chain, verblunsky or all");
  carat->add_option("--format", common.format)->check(CLI::IsMember({"json", "csv"}));
  carat->callback([&] {
    action = [&] {
      const Number s = parse_number(sigma_text);
      const Branch br = branch == "complement" ? Branch::Complement : Branch::Primary;
      json inputs{{"sigma", sigma_text}, {"n", n}, {"branch", branch}, {"emit", emit}};
      try {
        if (s.exact) return carat_family(*s.exact, n, br, emit, inputs);
        return carat_family(s.value, n, br, emit, inputs);
      } catch (const DomainError& e) {
        throw UsageError(e.what());
      }
    };
  });
  auto* hyper = family->add_subcommand("hyper", "Circular Jacobi family");
  hyper->add_option("--lambda", lambda_text, "lambda > -1/2")->required();
  hyper->add_option("--n", n, "Depth")->check(CLI::PositiveNumber);
  hyper->add_option("--nu", nu_text, "Palindromic constant for the complementary R~_n");
  hyper->add_option("--emit", emit, "chain, m, M, a, alpha, phi, R, numerator or all");
  hyper->add_option("--format", common.format)->check(CLI::IsMember({"json", "csv"}));
  hyper->callback([&] {
    action = [&] {
      const Number l = parse_number(lambda_text);
      json inputs{{"lambda", lambda_text}, {"n", n}, {"emit", emit}, {"nu", nu_text}};
      std::optional<Number> nu;
      if (!nu_text.empty()) nu = parse_number(nu_text);
      try {
        if (l.exact && (!nu || nu->exact)) {
          std::optional<Rational> nv;
          if (nu) nv = *nu->exact;
          return hyper_family(*l.exact, n, nv, emit, inputs);
        }
        std::optional<double> nv;
        if (nu) nv = nu->value;
        return hyper_family(l.value, n, nv, emit, inputs);
      } catch (const DomainError& e) {
        throw UsageError(e.what());
      }
    };
  });

  // verify
  auto* ver = app.add_subcommand("verify", "Run the verification suites");
  std::string suite = "all";
  std::uint64_t seed = 0;
  std::optional<double> vtol;
  bool timing = false;
  ver->add_option("suite", suite, "all or one of numkit, chains, opuc, bridge, perturb, ppcfrac, families");
  ver->add_option("--seed", seed, "Seed for randomised checks");
  ver->add_option("--tol", vtol, "Override for checks that use the default tolerance");
  ver->add_flag("--timing", timing, "Include wall-clock timing (output no longer byte-stable)");
  ver->add_option("--format", common.format)->check(CLI::IsMember({"json", "csv"}));
  ver->callback([&] { action = [&] { return cmd_verify(suite, seed, vtol, timing); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    const Output o = action();
    out << (common.format == "csv" ? emit_csv(o.rows) : emit_json(o.report));
    return o.exit_code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const NotAChainSequence& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace opuc::cli
