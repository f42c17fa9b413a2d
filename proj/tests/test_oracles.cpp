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

// 2^n reference for the stability number
int brute_force_alpha(const Graph& g) {
  std::vector<uint32_t> adj(g.n, 0);
  for (auto [u, v] : g.edges) {
    adj[u - 1] |= 1u << (v - 1);
    adj[v - 1] |= 1u << (u - 1);
  }
  int best = 0;
  for (uint32_t s = 0; s < (1u << g.n); ++s) {
    bool independent = true;
    for (int v = 0; v < g.n && independent; ++v) {
      if ((s >> v) & 1) independent = (s & adj[v]) == 0;
    }
    if (independent) best = std::max(best, __builtin_popcount(s));
  }
  return best;
}

Graph random_graph(int n, double p, Rng& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (rng.uniform01() < p) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

}  // namespace

TEST_CASE("finite differences") {
  QuadraticObjective f(SymMatrix(1, {-2}), {2}, 0, 2);  // 2x - x^2
  Vector g = finite_diff_gradient(f, {0.5}, 1e-6);
  CHECK(g[0] == doctest::Approx(1.0).epsilon(1e-9));

  QuadraticObjective q(SymMatrix(2, {-3, -1, -1, -2}), {4, 5}, 0, 1);
  Rng rng(1);
  for (int t = 0; t < 20; ++t) {
    Vector x{rng.uniform(0.1, 1), rng.uniform(0.1, 1)};
    Vector fd = finite_diff_gradient(q, x, 1e-6);
    Vector exact = q.gradient(x);
    CHECK(norm2(sub(fd, exact)) < 1e-8);
  }

  QuadraticObjective constant(SymMatrix(2), {0, 0}, 3.0, 0);
  CHECK(norm2(finite_diff_gradient(constant, {0.5, 0.5}, 1e-6)) < 1e-9);
}

TEST_CASE("grid maximization") {
  QuadraticObjective f(SymMatrix(1, {-2}), {2}, 0, 2);
  BoxSet unit(zeros(1), {1});
  GridResult r = grid_maximize(f, unit, 0.01);
  CHECK(r.point[0] == doctest::Approx(1.0));
  CHECK(r.value == doctest::Approx(1.0));

  QuadraticObjective lin(SymMatrix(3), {3, 1, 2}, 0, 0);
  SimplexSet simplex(3, 1.0);
  GridResult lr = grid_maximize(lin, simplex, 0.25);
  CHECK(lr.point == simplex.linear_max({3, 1, 2}));

  // symmetric 2-d quadratic has a symmetric maximizer
  QuadraticObjective sym(SymMatrix(2, {-2, -1, -1, -2}), {2, 2}, 0, 2);
  BoxSet box2(zeros(2), {1, 1});
  GridResult sr = grid_maximize(sym, box2, 0.05);
  CHECK(sr.point[0] == doctest::Approx(sr.point[1]));

  QuadraticObjective five(SymMatrix(5), constant_vector(5, 1.0), 0, 0);
  BoxSet box5(zeros(5), constant_vector(5, 1.0));
  CHECK_THROWS_AS(grid_maximize(five, box5, 0.5), std::invalid_argument);
}

TEST_CASE("exact stability number") {
  CHECK(exact_stability_number(fig2()) == 4);
  CHECK(exact_stability_number(Graph::from_edges(5, {})) == 5);
  Graph k4 = Graph::from_edges(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(exact_stability_number(k4) == 1);

  Rng rng(77);
  for (int t = 0; t < 20; ++t) {
    int n = rng.uniform_int(4, 12);
    double p = rng.uniform(0.15, 0.85);
    Graph g = random_graph(n, p, rng);
    CHECK(exact_stability_number(g) == brute_force_alpha(g));
  }
}

TEST_CASE("jacobi eigenvalues") {
  CHECK(jacobi_max_eigenvalue(SymMatrix(2, {2, 1, 1, 2}), 1e-12) == doctest::Approx(3.0));
  SymMatrix diag(3);
  diag.set(0, 0, 5);
  diag.set(1, 1, -2);
  diag.set(2, 2, 3);
  CHECK(jacobi_max_eigenvalue(diag, 1e-12) == doctest::Approx(5.0));

  // 2A + 2I of the triangle graph
  Graph k3 = Graph::from_edges(3, {{1, 2}, {1, 3}, {2, 3}});
  SymMatrix m = add(scale(2.0, k3.adjacency()), scale(2.0, identity_matrix(3)));
  CHECK(jacobi_max_eigenvalue(m, 1e-12) == doctest::Approx(6.0).epsilon(1e-10));
}

TEST_CASE("lemma 2 sampled check") {
  StabilityObjective stab(fig2().adjacency());
  SimplexSet simplex(10, 1.0);
  double c = curvature_no_origin(stab, simplex);
  CheckReport r = lemma2_check(stab, simplex, c, 2.0, 400, 2023);
  CHECK(r.pass);
  CHECK(r.min_value > 0);  // stability objective stays positive on the simplex

  QuadraticObjective lin(SymMatrix(2), {1, 2}, 0, 0);
  BoxSet box(zeros(2), {1, 1});
  CheckReport lr = lemma2_check(lin, box, 0.0, 0.0, 200, 5);
  CHECK(lr.pass);

  // absurd negative curvature must be flagged
  CheckReport bad = lemma2_check(lin, box, -0.5, 0.0, 200, 5);
  CHECK_FALSE(bad.pass);
  CHECK(bad.violations > 0);
}

TEST_CASE("monotonicity sampled check") {
  QuadraticObjective lin(SymMatrix(2), {1, 2}, 0, 0);
  BoxSet box(zeros(2), {1, 1});
  CHECK(monotonicity_check(lin, box, 100, 9).pass);

  QuadraticObjective dec(SymMatrix(1), {-1}, 0, 0);  // f = -x
  BoxSet unit(zeros(1), {1});
  CheckReport r = monotonicity_check(dec, unit, 50, 9);
  CHECK_FALSE(r.pass);
}

TEST_CASE("gradient check harness") {
  QuadraticObjective q(SymMatrix(2, {-3, -1, -1, -2}), {4, 5}, 0, 1);
  BoxSet box(zeros(2), {1, 1});
  CheckReport r = gradient_check(q, box, 50, 1e-6, 1e-5, 31);
  CHECK(r.pass);
  CHECK(r.samples == 50);
}
