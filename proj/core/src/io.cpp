#include "qflag/io.hpp"

#include <cmath>

#include "qflag/errors.hpp"

namespace qflag::io {

using poly::Family;
using poly::Monomial;
using poly::Poly;
using poly::Rational;
using poly::Var;
using weyl::Permutation;

json to_json(const Permutation& w) {
  json a = json::array();
  for (int i = 1; i <= w.size(); ++i) a.push_back(w(i));
  return a;
}

Permutation permutation_from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("permutation must be a JSON array");
  std::vector<int> images;
  for (auto& v : j) {
    if (!v.is_number_integer()) throw ValidationError("permutation entries must be integers");
    images.push_back(v.get<int>());
  }
  return Permutation(images);
}

namespace {

const char* family_name(Family f) {
  switch (f) {
    case Family::X: return "x";
    case Family::Sigma: return "sigma";
    case Family::Q: return "q";
    case Family::Lambda: return "lambda";
    case Family::E: return "E";
  }
  return "?";
}

json factor_json(const Var& v, int e) {
  switch (v.family) {
    case Family::X:
    case Family::Q: return json::array({family_name(v.family), v.a, e});
    case Family::Lambda: return json::array({"lambda", e});
    default: return json::array({family_name(v.family), v.a, v.b, e});
  }
}

std::pair<Var, int> factor_from_json(const json& f) {
  if (!f.is_array() || f.empty() || !f[0].is_string()) throw ValidationError("bad monomial factor");
  const std::string name = f[0].get<std::string>();
  auto num = [&](std::size_t i) {
    if (i >= f.size() || !f[i].is_number_integer()) throw ValidationError("bad monomial factor for " + name);
    return f[i].get<int>();
  };
  std::pair<Var, int> out;
  std::size_t expected = 0;
  if (name == "x") out = {Var::x(num(1)), num(2)}, expected = 3;
  else if (name == "q") out = {Var::q(num(1)), num(2)}, expected = 3;
  else if (name == "lambda") out = {Var::lambda(), num(1)}, expected = 2;
  else if (name == "sigma") out = {Var::sigma(num(1), num(2)), num(3)}, expected = 4;
  else if (name == "E") out = {Var::E(num(1), num(2)), num(3)}, expected = 4;
  else throw ValidationError("unknown variable family " + name);
  if (f.size() != expected || out.second <= 0) throw ValidationError("bad monomial factor for " + name);
  return out;
}

Rational rational_from_json(const json& v) {
  if (v.is_string()) return poly::parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_number()) {
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw ValidationError("non-finite number");
    return Rational(d);
  }
  throw ValidationError("expected a rational");
}

}  // namespace

json to_json(const Poly& f) {
  json out = json::array();
  for (auto& [m, c] : f.terms()) {
    json mono = json::array();
    for (auto& [v, e] : m.factors()) mono.push_back(factor_json(v, e));
    out.push_back({{"coeff", poly::rational_to_string(c)}, {"monomial", mono}});
  }
  return out;
}

Poly poly_from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("polynomial must be a JSON array");
  Poly f;
  for (auto& t : j) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("monomial")) throw ValidationError("bad polynomial term");
    std::vector<std::pair<Var, int>> factors;
    for (auto& fj : t["monomial"]) factors.push_back(factor_from_json(fj));
    f.add_term(Monomial::from_factors(std::move(factors)), rational_from_json(t["coeff"]));
  }
  return f;
}

json to_json(const qcoh::Expansion& e) {
  json out = json::array();
  for (auto& [w, c] : e) out.push_back({{"w", to_json(w)}, {"coeff", to_json(c)}});
  return out;
}

qcoh::Expansion expansion_from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("expansion must be a JSON array");
  qcoh::Expansion e;
  for (auto& t : j) {
    if (!t.is_object() || !t.contains("w") || !t.contains("coeff")) throw ValidationError("bad expansion entry");
    e = qcoh::add(e, qcoh::scale(qcoh::schubert_class(permutation_from_json(t["w"])), poly_from_json(t["coeff"])));
  }
  return e;
}

json to_json(const toeplitz::ExactPoint& x) {
  json a = json::array();
  for (auto& v : x.a) a.push_back(poly::rational_to_string(v));
  return {{"n", x.n}, {"a", a}};
}

json to_json(const toeplitz::FloatPoint& x) { return {{"n", x.n}, {"a", x.a}}; }

toeplitz::ExactPoint exact_point_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("a") || !j["a"].is_array())
    throw ValidationError("point must be {\"n\": ..., \"a\": [...]}");
  toeplitz::ExactPoint x;
  x.n = j["n"].get<int>();
  for (auto& v : j["a"]) x.a.push_back(rational_from_json(v));
  if (x.n < 1 || static_cast<int>(x.a.size()) != x.n - 1) throw ValidationError("point needs n-1 entries");
  return x;
}

json to_json(const qcoh::StructureTable& t) {
  json out = json::array();
  for (auto& [key, v] : t) {
    if (v.get_den() != 1 || v < 0) throw InternalError("structure constant is not a nonnegative integer");
    auto& [u, w1, w, d] = key;
    out.push_back({{"u", to_json(u)}, {"v", to_json(w1)}, {"w", to_json(w)}, {"d", d}, {"value", v.get_num().get_si()}});
  }
  return out;
}

json to_json(const solver::PositivePoint& pp) {
  json values = json::array();
  for (auto& [w, v] : pp.schubert_values) values.push_back({{"w", to_json(w)}, {"value", v}});
  return {{"n", pp.p.n()},
          {"ip", pp.p.ip()},
          {"q", pp.Q},
          {"eigenvalue", pp.eigenvalue},
          {"residual", pp.residual},
          {"generator_defect", pp.generator_defect},
          {"euler", pp.euler_value},
          {"schubert_values", values},
          {"point", to_json(pp.reconstructed)}};
}

json to_json(const solver::InverseResult& r) {
  json out = to_json(r.x);
  out["stratum"] = r.ip;
  out["deltas"] = r.deltas;
  out["residuals"] = r.residuals;
  out["max_residual"] = r.max_residual;
  out["tnn"] = r.tnn;
  return out;
}

json to_json(const std::vector<verify::CheckResult>& report) {
  json checks = json::array();
  bool all = true;
  for (auto& c : report) {
    all = all && c.passed;
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}, {"seconds", c.seconds}, {"detail", c.detail}});
  }
  return {{"passed", all}, {"checks", checks}};
}

std::vector<std::string> split_list(const std::string& s) {
  std::string t;
  for (char c : s)
    if (c != ' ' && c != '[' && c != ']' && c != '(' && c != ')') t.push_back(c);
  std::vector<std::string> out;
  if (t.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = t.find(',', start);
    out.push_back(t.substr(start, comma - start));
    if (out.back().empty()) throw ValidationError("empty entry in list '" + s + "'");
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  for (auto& tok : split_list(s)) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw ValidationError("not an integer: " + tok);
    out.push_back(v);
  }
  return out;
}

std::vector<double> parse_double_list(const std::string& s) {
  std::vector<double> out;
  for (auto& tok : split_list(s)) {
    if (tok.find('/') != std::string::npos) {
      out.push_back(poly::parse_rational(tok).get_d());
      continue;
    }
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || !std::isfinite(v)) throw ValidationError("not a number: " + tok);
    out.push_back(v);
  }
  return out;
}

Permutation parse_permutation(const std::string& s, int n) {
  auto images = parse_int_list(s);
  if (static_cast<int>(images.size()) != n) throw ValidationError("permutation '" + s + "' must have " + std::to_string(n) + " entries");
  return Permutation(images);
}

toeplitz::ExactPoint parse_point(const std::string& s) {
  toeplitz::ExactPoint x;
  for (auto& tok : split_list(s)) x.a.push_back(poly::parse_rational(tok));
  x.n = static_cast<int>(x.a.size()) + 1;
  return x;
}

}  // namespace qflag::io
