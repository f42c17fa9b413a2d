#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "drsub/algorithms.hpp"
#include "drsub/harness.hpp"
#include "drsub/oracles.hpp"
#include "drsub/rng.hpp"
#include "drsub/smoothness.hpp"

using namespace drsub;

namespace {

QuadraticObjective one_dim(double a, double b, double mu) {
  return QuadraticObjective(SymMatrix(1, {-b}), {a}, 0.0, mu);
}

}  // namespace

TEST_CASE("sdrfw solves the 1-d example in one step") {
  QuadraticObjective f = one_dim(2, 2, 2);  // 2x - x^2, mu = L = 2
  BoxSet unit(zeros(1), {1});
  Trace t = sdrfw(f, unit, 2.0, 2.0);
  CHECK(t.meta.K == 1);
  CHECK(t.final_point()[0] == doctest::Approx(1.0));
  CHECK(t.final_value() == doctest::Approx(1.0));  // the optimum
  CHECK(t.meta.c_f == doctest::Approx(1.0));
}

TEST_CASE("sdrfw on a linear objective reaches the linear optimum") {
  QuadraticObjective lin(SymMatrix(2), {2, 3}, 0, 0);
  BoxSet box(zeros(2), {1, 1});
  for (int K : {0, 3}) {  // auto (=ceil(L/mu)) and explicit
    Trace t = sdrfw(lin, box, 1.0, 3.0, K);
    CHECK(t.final_value() == doctest::Approx(dot(lin.h(), box.linear_max(lin.h()))));
  }
  CHECK(curvature(lin, box) == 0.0);
}

TEST_CASE("sdrfw guarantee against the grid oracle") {
  Rng rng(314);
  for (int trial = 0; trial < 10; ++trial) {
    int n = rng.uniform_int(2, 4);
    Rng gen = rng.split(trial);
    QuadraticObjective f = random_monotone_quadratic(n, gen, 5.0);
    BudgetBoxSet set(constant_vector(n, 1.0), rng.uniform(0.8, n * 0.9));
    double L = smoothness_constant(f, set, SmoothnessMode::Constant).L;
    Trace t = sdrfw(f, set, 5.0, L);
    double c = curvature(f, set);
    GridResult grid = grid_maximize(f, set, 1.0 / 30);
    CHECK(t.final_value() >= (1 - c / std::exp(1.0)) * grid.value - 1e-6);
    for (const auto& x : t.iterates) CHECK(set.contains(x, 1e-8));
  }
}

TEST_CASE("sdrfw preconditions") {
  QuadraticObjective f = one_dim(2, 2, 2);
  SimplexSet simplex(1, 1.0);
  CHECK_THROWS_AS(sdrfw(f, simplex, 2.0, 2.0), std::invalid_argument);  // no origin
  BoxSet unit(zeros(1), {1});
  CHECK_THROWS_AS(sdrfw(f, unit, 0.0, 2.0), std::invalid_argument);  // mu = 0
  CHECK_THROWS_AS(sdrfw(f, unit, 2.0, 1.0), std::invalid_argument);  // L < mu
}

TEST_CASE("fw baseline hand trace") {
  QuadraticObjective f = one_dim(2, 2, 2);
  BoxSet unit(zeros(1), {1});
  Trace t = fw_baseline(f, unit, 2);
  REQUIRE(t.iterates.size() == 3);
  CHECK(t.iterates[1][0] == doctest::Approx(0.5));
  CHECK(t.iterates[2][0] == doctest::Approx(1.0));

  // K = 1 is a single LMO step from the origin
  Trace t1 = fw_baseline(f, unit, 1);
  CHECK(t1.final_point()[0] == doctest::Approx(1.0));

  QuadraticObjective lin(SymMatrix(3), {3, 1, 2}, 0, 0);
  BudgetBoxSet budget(constant_vector(3, 1.0), 1.0);
  Trace tl = fw_baseline(lin, budget, 4);
  CHECK(tl.final_point() == budget.linear_max({3, 1, 2}));
}

TEST_CASE("pga hand examples and ascent") {
  QuadraticObjective f = one_dim(2, 2, 2);
  BoxSet unit(zeros(1), {1});
  Trace t = pga(f, unit, zeros(1), 2.0, 1);
  CHECK(t.final_point()[0] == doctest::Approx(1.0));

  // interior fixed point: gradient zero keeps the iterate in place
  Trace fixed = pga(f, unit, {1.0}, 2.0, 5);
  for (const auto& x : fixed.iterates) CHECK(x[0] == doctest::Approx(1.0));

  Rng rng(2718);
  QuadraticObjective q = random_monotone_quadratic(3, rng, 5.0);
  BudgetBoxSet set(constant_vector(3, 1.0), 1.5);
  double L = smoothness_constant(q, set, SmoothnessMode::Constant).L;
  Trace tr = pga(q, set, zeros(3), L, 25);
  tr.validate();  // nondecreasing values
  for (size_t k = 1; k < tr.values.size(); ++k) {
    double step2 = dot(sub(tr.iterates[k], tr.iterates[k - 1]), sub(tr.iterates[k], tr.iterates[k - 1]));
    CHECK(tr.values[k] - tr.values[k - 1] >= 0.5 * L * step2 - 1e-9);
    CHECK(set.contains(tr.iterates[k], 1e-8));
  }

  CHECK_THROWS_AS(pga(f, unit, {2.0}, 2.0, 3), std::invalid_argument);  // infeasible start
}

TEST_CASE("pga theorem-2 bounds against the grid oracle") {
  Rng rng(161);
  for (int trial = 0; trial < 8; ++trial) {
    int n = rng.uniform_int(2, 3);
    Rng gen = rng.split(trial);
    QuadraticObjective f = random_monotone_quadratic(n, gen, 5.0);
    BudgetBoxSet set(constant_vector(n, 1.0), rng.uniform(0.8, 1.8));
    double L = smoothness_constant(f, set, SmoothnessMode::Constant).L;
    double c = curvature(f, set);
    GridResult grid = grid_maximize(f, set, 1.0 / 40);
    int K = static_cast<int>(std::ceil(L / 5.0));

    Trace t = pga(f, set, zeros(n), L, K, grid.value);
    double bound = grid.value / (1 + c) -
                   std::exp(-5.0 * K / L) / (1 + c) * (grid.value - (1 + c) * t.values.front());
    CHECK(t.final_value() >= bound - 1e-6);
    CHECK(t.meta.guarantee_value == doctest::Approx(bound));

    // mu = 0 declared variant, sub-linear bound
    QuadraticObjective f0(f.H(), f.h(), 0.0, 0.0);
    int K0 = 40;
    Trace t0 = pga(f0, set, zeros(n), L, K0);
    double d2 = dot(grid.point, grid.point);
    CHECK(t0.final_value() >= grid.value / (1 + c) - L * d2 / (2 * K0 * (1 + c)) - 1e-6);
  }
}

TEST_CASE("oga constant stream locks onto the optimum") {
  QuadraticObjective f = one_dim(2, 2, 2);
  BoxSet unit(zeros(1), {1});
  std::vector<const Objective*> stream(5, &f);
  Trace t = oga(stream, unit, zeros(1), StepRule::strongly_convex(2.0));
  REQUIRE(t.iterates.size() == 5);
  CHECK(t.iterates[0][0] == 0.0);
  for (size_t k = 1; k < t.iterates.size(); ++k) CHECK(t.iterates[k][0] == doctest::Approx(1.0));

  std::vector<const Objective*> single(1, &f);
  Trace t1 = oga(single, unit, {0.5}, StepRule::strongly_convex(2.0));
  CHECK(t1.values[0] == doctest::Approx(f.value({0.5})));
}

TEST_CASE("oga zig-zag on alternating linear rewards stays feasible") {
  QuadraticObjective a(SymMatrix(2), {1, 0}, 0, 0);
  QuadraticObjective b(SymMatrix(2), {0, 1}, 0, 0);
  BoxSet box(zeros(2), {1, 1});
  std::vector<const Objective*> stream;
  for (int t = 0; t < 20; ++t) stream.push_back(t % 2 ? &a : &b);
  Trace tr = oga(stream, box, {0.5, 0.5}, StepRule::fixed(box.diameter(), 1.0, 20));
  for (const auto& x : tr.iterates) CHECK(box.contains(x, 1e-8));
}

TEST_CASE("step rules") {
  StepRule sc = StepRule::strongly_convex(2.0);
  CHECK(sc.eta(1) == doctest::Approx(0.5));
  CHECK(sc.eta(4) == doctest::Approx(0.125));
  StepRule fx = StepRule::fixed(2.0, 4.0, 25);
  CHECK(fx.eta(1) == doctest::Approx(0.1));
  CHECK(fx.eta(17) == doctest::Approx(0.1));
  CHECK_THROWS_AS(StepRule::strongly_convex(0.0), std::invalid_argument);
  CHECK_THROWS_AS(StepRule::fixed(1.0, 0.0, 5), std::invalid_argument);
}

TEST_CASE("alpha regret") {
  QuadraticObjective f = one_dim(2, 2, 2);
  BoxSet unit(zeros(1), {1});
  std::vector<const Objective*> stream(4, &f);
  Trace t = oga(stream, unit, {1.0}, StepRule::strongly_convex(2.0));  // plays the optimum
  CHECK(alpha_regret(t, stream, unit, 1.0, {1.0}) == doctest::Approx(0.0));
  double total = 0;
  for (double v : t.values) total += v;
  CHECK(alpha_regret(t, stream, unit, 0.0, {1.0}) == doctest::Approx(-total));

  std::vector<const Objective*> shorter(3, &f);
  CHECK_THROWS_AS(alpha_regret(t, shorter, unit, 1.0, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(alpha_regret(t, stream, unit, 1.0, {2.0}), std::invalid_argument);
}

TEST_CASE("traces are deterministic") {
  Rng rng(999);
  QuadraticObjective f = random_monotone_quadratic(3, rng, 5.0);
  BudgetBoxSet set(constant_vector(3, 1.0), 1.5);
  double L = smoothness_constant(f, set, SmoothnessMode::Constant).L;
  Trace a = sdrfw(f, set, 5.0, L);
  Trace b = sdrfw(f, set, 5.0, L);
  CHECK(a.iterates == b.iterates);
  CHECK(a.values == b.values);
}
