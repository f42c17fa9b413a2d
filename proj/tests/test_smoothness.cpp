#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "drsub/graph.hpp"
#include "drsub/oracles.hpp"
#include "drsub/rng.hpp"
#include "drsub/smoothness.hpp"

using namespace drsub;

namespace {

Graph fig2() { return parse_graph(std::string(DRSUB_TEST_DATA_DIR) + "/fig2.edgelist", GraphFormat::Edgelist); }

SymMatrix stability_neg_hessian(const Graph& g) {
  return add(scale(2.0, g.adjacency()), scale(2.0, identity_matrix(g.n)));
}

SymMatrix random_nonneg_irreducible(int n, Rng& rng) {
  SymMatrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (rng.uniform01() < 0.6) m.set(i, j, rng.uniform(0, 1));
    }
  }
  for (int i = 0; i + 1 < n; ++i) m.set(i, i + 1, rng.uniform(0.5, 1.0));  // spanning path
  return m;
}

NegativeDependencePoly cubic_ndpoly() {
  using NDP = NegativeDependencePoly;
  std::vector<NDP::DiagTerm> diag{NDP::QuadraticTerm{5, 2}, NDP::QuadraticTerm{5, 3},
                                  NDP::QuadraticTerm{5, 4}};
  std::vector<NDP::Interaction> inter{{{0, 1, 2}, -0.4}, {{1, 2}, -0.2}, {{0, 1}, -0.3}};
  return NDP(std::move(diag), std::move(inter), 2.0, zeros(3), constant_vector(3, 1.0));
}

}  // namespace

TEST_CASE("irreducibility") {
  CHECK_FALSE(is_irreducible(SymMatrix(2, {1, 0, 0, 2})));
  CHECK(is_irreducible(SymMatrix(2, {0, 1, 1, 0})));
  CHECK(is_irreducible(stability_neg_hessian(fig2())));
  CHECK(is_irreducible(SymMatrix(1, {3.0})));
  CHECK_FALSE(is_irreducible(SymMatrix(1, {0.0})));
  CHECK_THROWS_AS(is_irreducible(SymMatrix(2, {1, -0.5, -0.5, 1})), std::invalid_argument);
}

TEST_CASE("perron-frobenius eigenvalue") {
  PFResult r = pf_eigenvalue(SymMatrix(2, {2, 1, 1, 2}), 1e-12);
  CHECK(r.lambda == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(r.eigvec[0] == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(r.eigvec[1] == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(r.residual <= 1e-12);

  Graph k3 = Graph::from_edges(3, {{1, 2}, {1, 3}, {2, 3}});
  PFResult k = pf_eigenvalue(stability_neg_hessian(k3), 1e-11);
  CHECK(k.lambda == doctest::Approx(6.0).epsilon(1e-10));

  PFResult id = pf_eigenvalue(identity_matrix(4), 1e-12);
  CHECK(id.lambda == doctest::Approx(1.0));

  // residual definition and positive unit-sum eigenvector
  SymMatrix m(3, {1, 0.5, 0.2, 0.5, 2, 0.7, 0.2, 0.7, 1.5});
  PFResult pr = pf_eigenvalue(m, 1e-11);
  double sum = 0;
  for (double v : pr.eigvec) {
    CHECK(v > 0);
    sum += v;
  }
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  Vector resid = sub(m.matvec(pr.eigvec), scale(pr.lambda, pr.eigvec));
  CHECK(norm2(resid) / norm2(pr.eigvec) == doctest::Approx(pr.residual).epsilon(1e-9));

  CHECK_THROWS_AS(pf_eigenvalue(SymMatrix(2, {0, -1, -1, 0}), 1e-10), std::invalid_argument);
  CHECK_THROWS_AS(pf_eigenvalue(SymMatrix(2, {2, 1, 1, 3}), 1e-14, 1), ConvergenceError);
}

TEST_CASE("pf agrees with jacobi on random nonnegative matrices") {
  Rng rng(404);
  for (int t = 0; t < 30; ++t) {
    int n = rng.uniform_int(2, 20);
    SymMatrix m = random_nonneg_irreducible(n, rng);
    double pf = pf_eigenvalue(m, 1e-11).lambda;
    double jc = jacobi_max_eigenvalue(m, 1e-11);
    CHECK(std::abs(pf - jc) < 1e-8);
  }
}

TEST_CASE("smoothness constant in constant mode") {
  Graph g = fig2();
  StabilityObjective stab(g.adjacency());
  SimplexSet simplex(10, 1.0);
  SmoothnessResult r = smoothness_constant(stab, simplex, SmoothnessMode::Constant);
  CHECK(r.L == doctest::Approx(jacobi_max_eigenvalue(stability_neg_hessian(g), 1e-12))
                   .epsilon(1e-8));
  CHECK(r.L >= 2.0);

  // scalar matrix: L = mu exactly
  QuadraticObjective iso(SymMatrix(2, {-3, 0, 0, -3}), {1, 1}, 0, 3.0);
  BoxSet box(zeros(2), {1, 1});
  CHECK(smoothness_constant(iso, box, SmoothnessMode::Constant).L == doctest::Approx(3.0));

  // smoothness definition holds on sampled pairs
  Rng rng(55);
  for (int t = 0; t < 500; ++t) {
    Vector x = sample_feasible(simplex, rng), y = sample_feasible(simplex, rng);
    double lhs = stab.value(y);
    double rhs = stab.value(x) + dot(stab.gradient(x), sub(y, x)) -
                 0.5 * r.L * dot(sub(y, x), sub(y, x));
    CHECK(lhs >= rhs - 1e-8);
  }
}

TEST_CASE("corner mode upper-bounds the eigenvalue over the box") {
  NegativeDependencePoly f = cubic_ndpoly();
  BoxSet box(zeros(3), constant_vector(3, 1.0));
  SmoothnessResult corner = smoothness_constant(f, box, SmoothnessMode::Corner);
  Rng rng(606);
  double worst = 0;
  for (int t = 0; t < 1000; ++t) {
    Vector x(3);
    for (int i = 0; i < 3; ++i) x[i] = rng.uniform(0, 1);
    double lam = pf_eigenvalue(scale(-1.0, f.hessian(x)), 1e-10).lambda;
    worst = std::max(worst, lam);
    CHECK(lam <= corner.L + 1e-8);
  }
  CHECK(corner.L == doctest::Approx(worst).epsilon(0.05));  // the corner attains the max
  CHECK(corner.L >= f.mu());
}

TEST_CASE("mode preconditions") {
  MeanFieldKLObjective kl(3, {0, 1, 1, 1.4, 1, 1.4, 1.4, 1.7}, 0.1);
  BoxSet box(constant_vector(3, 0.1), constant_vector(3, 0.9));
  CHECK_THROWS_AS(smoothness_constant(kl, box, SmoothnessMode::Constant), std::logic_error);
  CHECK_THROWS_AS(smoothness_constant(kl, box, SmoothnessMode::Corner), std::logic_error);
  CHECK_THROWS_AS(build_pf_gp(kl, box), std::invalid_argument);

  // a power diagonal term defeats corner mode (entries decrease in x)
  using NDP = NegativeDependencePoly;
  NDP power({NDP::PowerTerm{4, 0.5}}, {}, 1.0, {0.25}, {1.0});
  BoxSet unit({0.25}, {1.0});
  CHECK_THROWS_AS(smoothness_constant(power, unit, SmoothnessMode::Corner), std::logic_error);
}

TEST_CASE("eigenvalue GP construction and solution") {
  // 1-d a x - b x^2 / 2: single constraint b / lambda <= 1
  QuadraticObjective oned(SymMatrix(1, {-4}), {2}, 0, 4);
  BoxSet unit(zeros(1), {1});
  GPProblem gp = build_pf_gp(oned, unit);
  CHECK(gp.nvars == 3);
  GPSolution sol = solve_gp(gp, 1e-8);
  CHECK(sol.optimum == doctest::Approx(4.0).epsilon(1e-6));

  // [[2,1],[1,2]] eigen-GP
  QuadraticObjective two(SymMatrix(2, {-2, -1, -1, -2}), {3, 3}, 0, 2);
  BoxSet box2(zeros(2), {1, 1});
  GPSolution sol2 = solve_gp(build_pf_gp(two, box2), 1e-8);
  CHECK(sol2.optimum == doctest::Approx(3.0).epsilon(1e-6));

  // stability objective: GP optimum equals the PF eigenvalue
  Graph k3 = Graph::from_edges(3, {{1, 2}, {1, 3}, {2, 3}});
  StabilityObjective stab(k3.adjacency());
  SimplexSet simplex(3, 1.0);
  GPSolution sol3 = solve_gp(build_pf_gp(stab, simplex), 1e-8);
  CHECK(sol3.optimum == doctest::Approx(6.0).epsilon(1e-6));
  CHECK(smoothness_constant(stab, simplex, SmoothnessMode::Gp).L ==
        doctest::Approx(6.0).epsilon(1e-5));

  // diagonal-only instance decouples into lambda >= max b
  using NDP = NegativeDependencePoly;
  NDP diag({NDP::QuadraticTerm{1, 2}, NDP::QuadraticTerm{1, 5}, NDP::QuadraticTerm{1, 3}}, {}, 1.0,
           zeros(3), constant_vector(3, 1.0));
  BoxSet box3(zeros(3), constant_vector(3, 1.0));
  GPSolution sol4 = solve_gp(build_pf_gp(diag, box3), 1e-8);
  CHECK(sol4.optimum == doctest::Approx(5.0).epsilon(1e-6));
}

TEST_CASE("solve_gp basics") {
  // minimize lambda s.t. 3 lambda^-1 <= 1
  GPProblem p{Posynomial::monomial(1.0, {1.0}), {Posynomial::monomial(3.0, {-1.0})}, {}, 1};
  GPSolution sol = solve_gp(p, 1e-9);
  CHECK(sol.optimum == doctest::Approx(3.0).epsilon(1e-7));

  // constant infeasible constraint 2 <= 1
  GPProblem bad{Posynomial::monomial(1.0, {1.0}),
                {Posynomial::constant(2.0, 1)},
                {},
                1};
  CHECK_THROWS_AS(solve_gp(bad, 1e-8), GPInfeasibleError);
  try {
    solve_gp(bad, 1e-8);
  } catch (const GPInfeasibleError& e) {
    CHECK(e.best_violation == doctest::Approx(std::log(2.0)));
  }
}

TEST_CASE("gp mode tracks the joint minimum for varying Hessians") {
  using NDP = NegativeDependencePoly;
  // power diagonal: -h'' decreases in x, so the joint GP pushes x upward
  NDP f({NDP::PowerTerm{4, 0.5}, NDP::QuadraticTerm{3, 1.5}}, {{{0, 1}, -0.25}}, 1.0,
        constant_vector(2, 0.25), constant_vector(2, 1.0));
  BoxSet box({0.25, 0.25}, {1.0, 1.0});
  GPSolution sol = solve_gp(build_pf_gp(f, box), 1e-8);
  Rng rng(13);
  for (int t = 0; t < 50; ++t) {
    Vector x{rng.uniform(0.25, 1.0), rng.uniform(0.25, 1.0)};
    double lam = pf_eigenvalue(scale(-1.0, f.hessian(x)), 1e-10).lambda;
    CHECK(sol.optimum <= lam + 1e-6);
  }
  CHECK(sol.optimum >= f.mu() - 1e-9);
}
