#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>

#include "sphsep/lp.hpp"
#include "sphsep/rng.hpp"
#include "sphsep/types.hpp"

using namespace sphsep;

namespace {

LinearProgram<Rational> one_var_bounded() {
  LinearProgram<Rational> lp;
  lp.sense = Sense::Maximize;
  lp.objective = VectorXr::Ones(1);
  lp.constraints = MatrixXr::Ones(1, 1);
  lp.relations = {Relation::LessEq};
  lp.rhs = VectorXr::Ones(1);
  lp.bounds = {VariableBound<Rational>::non_negative()};
  return lp;
}

LinearProgram<Rational> contradictory_pair() {
  // x1 >= 1 and -x1 >= 0
  LinearProgram<Rational> lp;
  lp.sense = Sense::Maximize;
  lp.objective = VectorXr::Zero(1);
  lp.constraints = MatrixXr(2, 1);
  lp.constraints << Rational(1), Rational(-1);
  lp.relations = {Relation::GreaterEq, Relation::GreaterEq};
  lp.rhs = VectorXr(2);
  lp.rhs << Rational(1), Rational(0);
  lp.bounds = {VariableBound<Rational>::free()};
  return lp;
}

// Random small LP over the test lattice; mixes senses, relations, bounds.
LinearProgram<Rational> random_lp(Rng& rng) {
  const Index n = static_cast<Index>(rng.int_in(1, 5));
  const Index m = static_cast<Index>(rng.int_in(0, 6));
  LinearProgram<Rational> lp;
  lp.sense = rng.int_in(0, 1) ? Sense::Maximize : Sense::Minimize;
  lp.objective = rng.lattice_vector(n, -10, 10, 10);
  lp.constraints = MatrixXr(m, n);
  for (Index i = 0; i < m; ++i)
    lp.constraints.row(i) = rng.lattice_vector(n, -10, 10, 10).transpose();
  lp.rhs = rng.lattice_vector(m, -10, 10, 10);
  for (Index i = 0; i < m; ++i) {
    switch (rng.int_in(0, 2)) {
      case 0: lp.relations.push_back(Relation::LessEq); break;
      case 1: lp.relations.push_back(Relation::Equal); break;
      default: lp.relations.push_back(Relation::GreaterEq); break;
    }
  }
  for (Index j = 0; j < n; ++j) {
    switch (rng.int_in(0, 2)) {
      case 0: lp.bounds.push_back(VariableBound<Rational>::free()); break;
      case 1: lp.bounds.push_back(VariableBound<Rational>::non_negative()); break;
      default: {
        Rational lo = rng.lattice(-10, 10, 10), hi = rng.lattice(-10, 10, 10);
        if (hi < lo) std::swap(lo, hi);
        lp.bounds.push_back(VariableBound<Rational>::box(lo, hi));
        break;
      }
    }
  }
  return lp;
}

bool outcomes_equal(const LpOutcome<Rational>& a, const LpOutcome<Rational>& b) {
  if (a.status != b.status) return false;
  if (a.primal.size() != b.primal.size() || a.primal != b.primal) return false;
  if (a.dual.size() != b.dual.size() || (a.dual.size() && a.dual != b.dual)) return false;
  if (a.ray.size() != b.ray.size() || (a.ray.size() && a.ray != b.ray)) return false;
  return a.objective_value == b.objective_value;
}

}  // namespace

TEST_CASE("one bounded variable reaches its cap") {
  const auto lp = one_var_bounded();
  const auto out = solve(lp);
  REQUIRE(out.status == LpStatus::Optimal);
  CHECK(out.primal[0] == 1);
  CHECK(out.objective_value == 1);
  CHECK(verify_lp_certificate(lp, out));
}

TEST_CASE("contradictory rows produce a strict Farkas certificate") {
  const auto lp = contradictory_pair();
  const auto out = solve(lp);
  REQUIRE(out.status == LpStatus::Infeasible);
  CHECK(verify_lp_certificate(lp, out));

  // Independent re-check of the certificate identities by plain loops.
  const VectorXr& y = out.dual;
  REQUIRE(y.size() == 2);
  CHECK(y[0] >= 0);
  CHECK(y[1] >= 0);
  Rational combo(0), value(0);
  for (Index i = 0; i < 2; ++i) {
    combo += y[i] * lp.constraints(i, 0);
    value += y[i] * lp.rhs[i];
  }
  CHECK(combo == 0);  // free column annihilated
  CHECK(value > 0);   // strict infeasibility
}

TEST_CASE("unconstrained maximization is unbounded along e1") {
  LinearProgram<Rational> lp;
  lp.sense = Sense::Maximize;
  lp.objective = VectorXr::Ones(1);
  lp.constraints = MatrixXr(0, 1);
  lp.rhs = VectorXr(0);
  lp.bounds = {VariableBound<Rational>::non_negative()};
  const auto out = solve(lp);
  REQUIRE(out.status == LpStatus::Unbounded);
  CHECK(out.ray[0] > 0);
  CHECK(verify_lp_certificate(lp, out));
}

TEST_CASE("verifier rejects a perturbed dual") {
  const auto lp = one_var_bounded();
  auto out = solve(lp);
  REQUIRE(out.status == LpStatus::Optimal);
  out.dual[0] += Rational(1) / 7;
  CHECK_FALSE(verify_lp_certificate(lp, out));
}

TEST_CASE("verifier rejects a perturbed Farkas vector") {
  const auto lp = contradictory_pair();
  auto out = solve(lp);
  REQUIRE(out.status == LpStatus::Infeasible);
  out.dual[0] = -out.dual[0];
  CHECK_FALSE(verify_lp_certificate(lp, out));
}

TEST_CASE("deterministic pivoting: identical inputs, identical outcomes") {
  Rng rng(23);
  for (int t = 0; t < 20; ++t) {
    const auto lp = random_lp(rng);
    CHECK(outcomes_equal(solve(lp), solve(lp)));
  }
}

TEST_CASE("alternative exhaustiveness over random LPs") {
  Rng rng(29);
  int optimal = 0, infeasible = 0, unbounded = 0;
  for (int t = 0; t < 400; ++t) {
    const auto lp = random_lp(rng);
    const auto out = solve(lp);
    std::string why;
    const bool ok = verify_lp_certificate(lp, out, Rational(0), &why);
    CAPTURE(t);
    CAPTURE(why);
    CHECK(ok);
    switch (out.status) {
      case LpStatus::Optimal: ++optimal; break;
      case LpStatus::Infeasible: ++infeasible; break;
      case LpStatus::Unbounded: ++unbounded; break;
    }
    if (out.status == LpStatus::Optimal) {
      // Strong duality, checked here independently of the verifier call.
      const VectorXr d = lp.objective - lp.constraints.transpose() * out.dual;
      CHECK(out.objective_value == detail::dual_objective(lp, out.dual, d));
    }
  }
  // The generator must exercise all three outcomes.
  CHECK(optimal > 0);
  CHECK(infeasible > 0);
  CHECK(unbounded > 0);
}

TEST_CASE("float instantiation solves and verifies with tolerance") {
  LinearProgram<double> lp;
  lp.sense = Sense::Maximize;
  lp.objective = VectorXd(2);
  lp.objective << 1.0, 1.0;
  lp.constraints = Eigen::MatrixXd(2, 2);
  lp.constraints << 1.0, 2.0, 3.0, 1.0;
  lp.relations = {Relation::LessEq, Relation::LessEq};
  lp.rhs = VectorXd(2);
  lp.rhs << 4.0, 6.0;
  lp.bounds = {VariableBound<double>::non_negative(), VariableBound<double>::non_negative()};
  const auto out = solve(lp);
  REQUIRE(out.status == LpStatus::Optimal);
  CHECK(out.objective_value == doctest::Approx(2.8).epsilon(1e-9));
  CHECK(verify_lp_certificate(lp, out));
}

TEST_CASE("debug dump is emitted when requested") {
  std::ostringstream dump;
  SolverOptions<Rational> opt;
  opt.debug = &dump;
  const auto lp = one_var_bounded();
  (void)SimplexSolver<Rational>(lp, opt).solve();
  CHECK(dump.str().find("pivot") != std::string::npos);
}

TEST_CASE("audit counters track solves and verification") {
  LpAudit::reset();
  LpAudit::enabled = true;
  Rng rng(31);
  for (int t = 0; t < 25; ++t) (void)solve(random_lp(rng));
  LpAudit::enabled = false;
  CHECK(LpAudit::solves.load() == 25);
  CHECK(LpAudit::verify_passes.load() == 25);
  CHECK(LpAudit::verify_failures.load() == 0);
  CHECK(LpAudit::optimal_outcomes.load() == LpAudit::strong_duality_exact.load());
}
