#pragma once

#include <stdexcept>
#include <string>

#include "drsub/feasible_sets.hpp"
#include "drsub/numeric.hpp"
#include "drsub/objectives.hpp"
#include "drsub/posynomial.hpp"

namespace drsub {

struct PFResult {
  double lambda = 0;
  Vector eigvec;    // entrywise positive, normalized to unit sum
  double residual = 0;  // ||M v - lambda v|| / ||v||
  int iterations = 0;
};

struct ConvergenceError : std::runtime_error {
  ConvergenceError(const std::string& msg, PFResult best_so_far)
      : std::runtime_error(msg), best(std::move(best_so_far)) {}
  PFResult best;
};

struct GPInfeasibleError : std::runtime_error {
  GPInfeasibleError(const std::string& msg, double violation, Vector point)
      : std::runtime_error(msg), best_violation(violation), best_point(std::move(point)) {}
  double best_violation;
  Vector best_point;  // primal (exponentiated) variables at the best iterate
};

// Support-graph connectivity of a nonnegative symmetric matrix (edge iff
// M_ij > 0 for i != j); a 1x1 matrix is irreducible iff its entry is positive.
bool is_irreducible(const SymMatrix& m);

// Power iteration on M + tol*I (the shift suppresses 2-periodic support
// graphs and cancels out of the Rayleigh quotient), run until the residual
// ||M v - lambda v|| / ||v|| drops below tol.
PFResult pf_eigenvalue(const SymMatrix& m, double tol = 1e-10, int max_iter = 100000);

enum class SmoothnessMode { Constant, Corner, Gp };

std::string to_string(SmoothnessMode mode);
SmoothnessMode smoothness_mode_from_string(const std::string& s);

struct SmoothnessResult {
  double L = 0;
  SmoothnessMode mode = SmoothnessMode::Constant;
  double residual = 0;
  int iterations = 0;
};

// Smoothness constant of a (strongly) DR-submodular objective over the set:
//   Constant: lambda_pf of the (x-independent) -hessian.
//   Corner:   lambda_pf of -hessian at the set's upper corner; valid when all
//             -hessian entries are coordinatewise nondecreasing (posynomial
//             entries with nonnegative exponents).
//   Gp:       optimum of the eigenvalue geometric program from build_pf_gp.
// The returned L always satisfies L >= mu.
SmoothnessResult smoothness_constant(const Objective& obj, const FeasibleSet& set,
                                     SmoothnessMode mode, double tol = 1e-10);

// Eigenvalue GP over variables (x_1..x_n, v_1..v_n, lambda): minimize lambda
// subject to lambda^-1 v_i^-1 sum_j [-hessian]_ij(x) v_j <= 1 per row and
// x_i / upper_i <= 1 box caps.
GPProblem build_pf_gp(const Objective& obj, const FeasibleSet& set);

struct GPSolution {
  double optimum = 0;
  Vector variables;  // primal point attaining the reported optimum
  double residual = 0;   // final bisection bracket width (log scale)
  int iterations = 0;    // total subgradient steps
};

// Log-variable transform, then bisection on the objective value with a
// Polyak-step subgradient phase-1 deciding feasibility of each trial level.
// Reported optima are certified feasible, so they upper-bound the true
// optimum by at most ~tol (relative).
GPSolution solve_gp(const GPProblem& p, double tol, int max_phase_iterations = 50000);

}  // namespace drsub
