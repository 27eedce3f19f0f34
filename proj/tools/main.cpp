// qflag: command line front end.
//
// Output is JSON on stdout. Exit codes: 0 ok, 2 invalid input, 3 an iteration
// failed to converge, 1 anything unexpected.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qflag/errors.hpp"
#include "qflag/io.hpp"
#include "qflag/peterson.hpp"
#include "qflag/qcoh.hpp"
#include "qflag/solver.hpp"
#include "qflag/toeplitz.hpp"
#include "qflag/verify.hpp"

namespace {

using namespace qflag;
using io::json;

struct ShapeArgs {
  int n = 0;
  std::string ip;
  weyl::ParabolicShape shape() const {
    if (n < 2 || n > 8) throw ValidationError("--n must be between 2 and 8");
    return weyl::ParabolicShape(n, io::parse_int_list(ip));
  }
};

void add_shape(CLI::App* cmd, ShapeArgs& s) {
  cmd->add_option("--n", s.n, "rank of GL_n")->required();
  cmd->add_option("--ip", s.ip, "flag dimensions n_1 < ... < n_k, comma separated")->required();
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json rationals(const std::vector<poly::Rational>& v) {
  json a = json::array();
  for (auto& r : v) a.push_back(poly::rational_to_string(r));
  return a;
}

// Delta_1..Delta_{n-1}; the outer two are always 1.
std::vector<poly::Rational> inner_deltas(const toeplitz::ExactPoint& x) {
  auto d = toeplitz::deltas(x);
  return {d.begin() + 1, d.end() - 1};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum cohomology of partial flag varieties and totally nonnegative Toeplitz matrices"};
  app.require_subcommand(1);

  // qh
  auto* qh = app.add_subcommand("qh", "quantum cohomology ring");
  qh->require_subcommand(1);
  ShapeArgs mul_shape, table_shape, euler_shape, jac_shape;
  std::string u_arg, v_arg;
  auto* mul = qh->add_subcommand("mul", "product of two Schubert classes");
  add_shape(mul, mul_shape);
  mul->add_option("--u", u_arg, "one-line permutation")->required();
  mul->add_option("--v", v_arg, "one-line permutation")->required();
  mul->callback([&] {
    const auto p = mul_shape.shape();
    emit(io::to_json(qcoh::ring(p).multiply(io::parse_permutation(u_arg, p.n()), io::parse_permutation(v_arg, p.n()))));
  });
  auto* table = qh->add_subcommand("table", "all structure constants");
  add_shape(table, table_shape);
  table->callback([&] { emit(io::to_json(qcoh::structure_table(table_shape.shape()))); });
  auto* euler = qh->add_subcommand("euler", "quantum Euler class");
  add_shape(euler, euler_shape);
  euler->callback([&] { emit(io::to_json(qcoh::quantum_euler(euler_shape.shape()))); });
  auto* jac = qh->add_subcommand("jacobian-check", "compare the Jacobian class with the Euler class");
  add_shape(jac, jac_shape);
  jac->callback([&] {
    const auto p = jac_shape.shape();
    const auto j = qcoh::jacobian_class(p);
    const auto e = qcoh::quantum_euler(p);
    emit({{"equal", j == e}, {"jacobian", io::to_json(j)}, {"euler", io::to_json(e)}});
  });

  // tnn
  auto* tnn = app.add_subcommand("tnn", "unipotent Toeplitz matrices");
  tnn->require_subcommand(1);
  std::string a_arg, deltas_arg;
  double inv_tol = 1e-13;
  auto* check = tnn->add_subcommand("check", "total nonnegativity, stratum and Delta minors");
  check->add_option("--a", a_arg, "a_1,...,a_{n-1} (integers, p/q or decimals)")->required();
  check->callback([&] {
    const auto x = io::parse_point(a_arg);
    const auto rep = toeplitz::tnn_report(x);
    json out = {{"n", x.n}, {"tnn", rep.tnn}, {"stratum", toeplitz::stratum(x).ip}, {"deltas", rationals(inner_deltas(x))}};
    if (!rep.tnn) out["witness"] = {{"rows", rep.witness_rows}, {"cols", rep.witness_cols}};
    emit(out);
  });
  auto* invert = tnn->add_subcommand("invert", "totally nonnegative point with given Delta_1..Delta_{n-1}");
  invert->add_option("--deltas", deltas_arg, "nonnegative Delta values")->required();
  invert->add_option("--tol", inv_tol, "solver tolerance");
  invert->callback([&] { emit(io::to_json(solver::tnn_inverse(io::parse_double_list(deltas_arg), inv_tol))); });

  // pf
  auto* pf = app.add_subcommand("pf", "positive points from Perron-Frobenius vectors");
  pf->require_subcommand(1);
  ShapeArgs pf_shape;
  std::string q_arg;
  double pf_tol = 1e-13;
  int pf_max_iter = 200000;
  auto* solve = pf->add_subcommand("solve", "the totally positive point over given q values");
  add_shape(solve, pf_shape);
  solve->add_option("--q", q_arg, "q_1,...,q_k, all positive")->required();
  solve->add_option("--tol", pf_tol, "power iteration tolerance");
  solve->add_option("--max-iter", pf_max_iter, "power iteration limit");
  solve->callback([&] {
    emit(io::to_json(solver::positive_point(pf_shape.shape(), io::parse_double_list(q_arg), pf_tol, pf_max_iter)));
  });

  // verify
  verify::Options vopt;
  auto* ver = app.add_subcommand("verify", "run the self-check suite");
  ver->add_option("--max-n", vopt.max_n, "largest n to check")->check(CLI::Range(2, 6));
  ver->add_option("--seed", vopt.seed, "sampling seed");
  ver->callback([&] { emit(io::to_json(verify::verify_suite(vopt))); });

  // peterson
  auto* pet = app.add_subcommand("peterson", "Schubert values and q on Toeplitz strata");
  pet->require_subcommand(1);
  std::string pa_arg, pip_arg, w_arg, qa_arg, qip_arg;
  auto* eval = pet->add_subcommand("eval", "quantum Schubert polynomial at a point");
  eval->add_option("--a", pa_arg, "a_1,...,a_{n-1}")->required();
  eval->add_option("--ip", pip_arg, "stratum of the point")->required();
  eval->add_option("--w", w_arg, "one-line permutation in W^P")->required();
  eval->callback([&] {
    const auto x = io::parse_point(pa_arg);
    const weyl::ParabolicShape p(x.n, io::parse_int_list(pip_arg));
    emit({{"value", poly::rational_to_string(peterson::eval_schubert(io::parse_permutation(w_arg, x.n), x, p))}});
  });
  auto* qvals = pet->add_subcommand("qvals", "the q coordinates of a point");
  qvals->add_option("--a", qa_arg, "a_1,...,a_{n-1}")->required();
  qvals->add_option("--ip", qip_arg, "stratum of the point")->required();
  qvals->callback([&] {
    const auto x = io::parse_point(qa_arg);
    const weyl::ParabolicShape p(x.n, io::parse_int_list(qip_arg));
    emit({{"q", rationals(peterson::q_values(x, p))}});
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConvergenceError& e) {
    std::cerr << "no convergence: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
