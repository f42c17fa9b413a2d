#pragma once

#include <cstdint>

#include "drsub/feasible_sets.hpp"
#include "drsub/graph.hpp"
#include "drsub/numeric.hpp"
#include "drsub/objectives.hpp"
#include "drsub/report.hpp"
#include "drsub/rng.hpp"

namespace drsub {

// Brute-force and numerical second opinions. These live in the shipped
// library so the CLI can print certified gaps next to algorithm output.

// Central differences per coordinate; x +- h e_i must lie in the domain.
Vector finite_diff_gradient(const Objective& obj, const Vector& x, double h);

struct GridResult {
  Vector point;
  double value;
};

// Best feasible point of the spacing-`resolution` grid over the set's
// bounding box. Exhaustive, so n <= 4. The true optimum exceeds the grid
// value by at most grid_gap_bound(L, R, resolution, n).
GridResult grid_maximize(const Objective& obj, const FeasibleSet& set, double resolution);
double grid_gap_bound(double L_smooth, double diameter, double resolution, int n);

// Exact stability (independence) number via branch and bound over bitmask
// vertex sets with greedy clique-cover bounds; n <= 30.
int exact_stability_number(const Graph& g);

// Largest eigenvalue via cyclic Jacobi rotations, run until the off-diagonal
// Frobenius mass drops below tol.
double jacobi_max_eigenvalue(const SymMatrix& m, double tol);

// Samples feasible pairs x, z and checks
//   f(z) - (1+c_f) f(x) <= <grad f(x), z-x> - (mu/2) ||z-x||^2 + 1e-9
// together with the join/meet intermediate step
//   f(u) + f(w) - 2 f(x) <= same right-hand side, u = join(x,z), w = meet(x,z).
// Pairs where f < 0 (precondition of the bound) are skipped and reported.
CheckReport lemma2_check(const Objective& obj, const FeasibleSet& set, double c_f, double mu,
                         int samples, uint64_t seed);

// gradient >= -1e-9 entrywise at sampled feasible points.
CheckReport monotonicity_check(const Objective& obj, const FeasibleSet& set, int samples,
                               uint64_t seed);

// Relative agreement between the analytic gradient and central differences at
// random interior points of the (set box intersected with domain) region.
CheckReport gradient_check(const Objective& obj, const FeasibleSet& set, int samples, double h,
                           double rel_tol, uint64_t seed);

// Uniform draw from the bounding box, projected onto the set.
Vector sample_feasible(const FeasibleSet& set, Rng& rng);

}  // namespace drsub
