#include "drsub/smoothness.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace drsub {

bool is_irreducible(const SymMatrix& m) {
  int n = m.n();
  if (!m.entrywise_geq(0.0)) {
    throw std::invalid_argument("is_irreducible: matrix must be entrywise nonnegative");
  }
  if (n == 1) return m(0, 0) > 0;
  std::vector<bool> seen(static_cast<size_t>(n), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < n; ++v) {
      if (v != u && m(u, v) > 0 && !seen[v]) {
        seen[v] = true;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count == n;
}

PFResult pf_eigenvalue(const SymMatrix& m, double tol, int max_iter) {
  if (!m.entrywise_geq(0.0)) {
    throw std::invalid_argument("pf_eigenvalue: matrix must be entrywise nonnegative");
  }
  if (!(tol > 0)) throw std::invalid_argument("pf_eigenvalue: tol must be > 0");
  int n = m.n();
  Vector v = constant_vector(n, 1.0 / n);
  PFResult best;
  best.residual = std::numeric_limits<double>::infinity();
  for (int it = 1; it <= max_iter; ++it) {
    Vector w = m.matvec(v);
    axpy(w, tol, v);  // shifted iterate (M + tol*I) v
    double wsum = std::accumulate(w.begin(), w.end(), 0.0);
    if (wsum > 0) {
      for (double& e : w) e /= wsum;
      v = w;
    }
    Vector mv = m.matvec(v);
    double vv = dot(v, v);
    double lambda = dot(v, mv) / vv;
    Vector r = mv;
    axpy(r, -lambda, v);
    double residual = norm2(r) / std::sqrt(vv);
    if (residual < best.residual) {
      best.lambda = lambda;
      best.eigvec = v;
      best.residual = residual;
      best.iterations = it;
    }
    if (residual <= tol) {
      double sum = std::accumulate(v.begin(), v.end(), 0.0);
      PFResult out{lambda, scale(1.0 / sum, v), residual, it};
      return out;
    }
  }
  throw ConvergenceError("pf_eigenvalue: residual " + std::to_string(best.residual) +
                             " above tol after " + std::to_string(max_iter) + " iterations",
                         best);
}

std::string to_string(SmoothnessMode mode) {
  switch (mode) {
    case SmoothnessMode::Constant: return "constant";
    case SmoothnessMode::Corner: return "corner";
    case SmoothnessMode::Gp: return "gp";
  }
  return "?";
}

SmoothnessMode smoothness_mode_from_string(const std::string& s) {
  if (s == "constant") return SmoothnessMode::Constant;
  if (s == "corner") return SmoothnessMode::Corner;
  if (s == "gp") return SmoothnessMode::Gp;
  throw std::invalid_argument("unknown smoothness mode: " + s);
}

namespace {

SymMatrix negated_hessian_at(const Objective& obj, const Vector& x) {
  SymMatrix h = obj.hessian(x);
  SymMatrix neg = scale(-1.0, h);
  if (neg.min_entry() < -1e-12) {
    throw std::invalid_argument(
        "smoothness_constant: -hessian has a negative entry (objective is not DR-submodular "
        "at the probed point)");
  }
  return neg;
}

}  // namespace

SmoothnessResult smoothness_constant(const Objective& obj, const FeasibleSet& set,
                                     SmoothnessMode mode, double tol) {
  if (!obj.has_hessian()) {
    throw std::logic_error("smoothness_constant: objective lacks Hessian capability");
  }
  SmoothnessResult out;
  out.mode = mode;
  switch (mode) {
    case SmoothnessMode::Constant: {
      if (!obj.constant_hessian()) {
        throw std::logic_error(
            "smoothness_constant: mode 'constant' requires an x-independent Hessian");
      }
      PFResult pf = pf_eigenvalue(negated_hessian_at(obj, set.lower_corner()), tol);
      out.L = pf.lambda;
      out.residual = pf.residual;
      out.iterations = pf.iterations;
      break;
    }
    case SmoothnessMode::Corner: {
      if (!obj.has_posynomial_hessian()) {
        throw std::logic_error(
            "smoothness_constant: mode 'corner' requires posynomial -hessian entries");
      }
      for (int i = 0; i < obj.dim(); ++i) {
        for (int j = i; j < obj.dim(); ++j) {
          auto entry = obj.neg_hessian_posynomial(i, j);
          if (entry && !entry->nonnegative_exponents()) {
            throw std::logic_error("smoothness_constant: -hessian entry (" + std::to_string(i) +
                                   "," + std::to_string(j) +
                                   ") is not coordinatewise nondecreasing; mode 'corner' "
                                   "unsupported");
          }
        }
      }
      PFResult pf = pf_eigenvalue(negated_hessian_at(obj, set.upper_corner()), tol);
      out.L = pf.lambda;
      out.residual = pf.residual;
      out.iterations = pf.iterations;
      break;
    }
    case SmoothnessMode::Gp: {
      GPSolution sol = solve_gp(build_pf_gp(obj, set), std::max(tol, 1e-9));
      out.L = sol.optimum;
      out.residual = sol.residual;
      out.iterations = sol.iterations;
      break;
    }
  }
  double mu = obj.mu();
  if (out.L < mu - std::max(1e-8, 1e-6 * mu)) {
    throw std::logic_error("smoothness_constant: computed L = " + std::to_string(out.L) +
                           " below mu = " + std::to_string(mu));
  }
  out.L = std::max(out.L, mu);
  return out;
}

GPProblem build_pf_gp(const Objective& obj, const FeasibleSet& set) {
  if (!obj.has_posynomial_hessian()) {
    throw std::invalid_argument("build_pf_gp: " + obj.name() +
                                " does not expose a posynomial Hessian");
  }
  int n = obj.dim();
  int nvars = 2 * n + 1;  // x_0..x_{n-1}, v_0..v_{n-1}, lambda
  const int lambda_ix = 2 * n;

  Vector obj_exp = zeros(nvars);
  obj_exp[lambda_ix] = 1.0;
  GPProblem gp{Posynomial::monomial(1.0, std::move(obj_exp)), {}, {}, nvars};

  for (int i = 0; i < n; ++i) {
    std::vector<PosyTerm> terms;
    for (int j = 0; j < n; ++j) {
      auto entry = obj.neg_hessian_posynomial(i, j);
      if (!entry) continue;
      for (const auto& t : entry->terms()) {
        Vector e = zeros(nvars);
        for (int k = 0; k < n; ++k) e[k] = t.exponents[k];
        e[n + j] += 1.0;        // * v_j
        e[n + i] -= 1.0;        // / v_i
        e[lambda_ix] -= 1.0;    // / lambda
        terms.push_back(PosyTerm{t.coeff, std::move(e)});
      }
    }
    if (terms.empty()) continue;  // structurally zero row, constraint vacuous
    gp.inequalities.emplace_back(std::move(terms), nvars);
  }

  Vector u = set.upper_corner();
  for (int i = 0; i < n; ++i) {
    if (!std::isfinite(u[i])) continue;
    if (!(u[i] > 0)) {
      throw std::invalid_argument("build_pf_gp: upper corner coordinate " + std::to_string(i) +
                                  " must be positive");
    }
    Vector e = zeros(nvars);
    e[i] = 1.0;
    gp.inequalities.push_back(Posynomial::monomial(1.0 / u[i], std::move(e)));
  }
  gp.validate();
  return gp;
}

// ---------------------------------------------------------------------------
// GP solver: log-variable transform + bisection + Polyak subgradient phase-1.

namespace {

// A constraint in log coordinates: log-sum-exp(A y + logc) for posynomials,
// affine for monomials (equalities measure |affine|).
struct LogConstraint {
  std::vector<double> logc;
  std::vector<Vector> rows;
  bool equality = false;

  double eval(const Vector& y, Vector* grad) const {
    size_t m = logc.size();
    if (m == 1) {
      double z = logc[0] + dot(rows[0], y);
      if (!equality) {
        if (grad) *grad = rows[0];
        return z;
      }
      if (grad) *grad = z >= 0 ? rows[0] : scale(-1.0, rows[0]);
      return std::abs(z);
    }
    std::vector<double> zs(m);
    double zmax = -std::numeric_limits<double>::infinity();
    for (size_t s = 0; s < m; ++s) {
      zs[s] = logc[s] + dot(rows[s], y);
      zmax = std::max(zmax, zs[s]);
    }
    double acc = 0;
    for (double z : zs) acc += std::exp(z - zmax);
    if (grad) {
      *grad = zeros(static_cast<int>(y.size()));
      for (size_t s = 0; s < m; ++s) {
        axpy(*grad, std::exp(zs[s] - zmax) / acc, rows[s]);
      }
    }
    return zmax + std::log(acc);
  }
};

LogConstraint to_log(const Posynomial& p, bool equality) {
  LogConstraint c;
  c.equality = equality;
  for (const auto& t : p.terms()) {
    c.logc.push_back(std::log(t.coeff));
    c.rows.push_back(t.exponents);
  }
  return c;
}

struct Phase1Result {
  bool feasible = false;
  double best_violation = std::numeric_limits<double>::infinity();
  Vector best_point;
  int iterations = 0;
};

// Minimize the maximum constraint violation with over-relaxed Polyak steps
// aimed slightly below zero. The margin matters: the constraints are smooth,
// so a plain step targeting 0 lands at violation >= 0 by convexity and never
// certifies; aiming at -margin lets iterates cross the boundary. Relaxation
// below 2 keeps Fejer monotonicity toward any margin-deep feasible point.
// Exits as soon as a certified point (violation <= 0) is found; stalls and
// iteration caps report the best point seen.
Phase1Result phase1(const std::vector<LogConstraint>& cons, const Vector& obj_row,
                    double obj_logc, bool use_cap, double cap, double margin, Vector& y,
                    int max_iters) {
  Phase1Result res;
  Vector grad, candidate_grad;
  double stall_best = std::numeric_limits<double>::infinity();
  int stall_count = 0;
  for (int it = 1; it <= max_iters; ++it) {
    res.iterations = it;
    double v = -std::numeric_limits<double>::infinity();
    for (const auto& c : cons) {
      double cv = c.eval(y, &candidate_grad);
      if (cv > v) {
        v = cv;
        grad = candidate_grad;
      }
    }
    if (use_cap) {
      double cv = obj_logc + dot(obj_row, y) - cap;
      if (cv > v) {
        v = cv;
        grad = obj_row;
      }
    }
    if (v < res.best_violation) {
      res.best_violation = v;
      res.best_point = y;
    }
    if (v <= 0) {
      res.feasible = true;
      return res;
    }
    double g2 = dot(grad, grad);
    if (g2 < 1e-28) return res;  // constant positive violation: infeasible
    axpy(y, -1.5 * (v + margin) / g2, grad);
    // stall detection: no meaningful progress over a window
    if (v < stall_best - 1e-14) {
      stall_best = v;
      stall_count = 0;
    } else if (++stall_count > 5000) {
      return res;
    }
  }
  return res;
}

}  // namespace

GPSolution solve_gp(const GPProblem& p, double tol, int max_phase_iterations) {
  p.validate();
  if (!(tol > 0)) throw std::invalid_argument("solve_gp: tol must be > 0");

  std::vector<LogConstraint> cons;
  for (const auto& c : p.inequalities) cons.push_back(to_log(c, false));
  for (const auto& c : p.equalities) cons.push_back(to_log(c, true));
  const auto& obj_term = p.objective.terms()[0];
  Vector obj_row = obj_term.exponents;
  double obj_logc = std::log(obj_term.coeff);
  auto objective_of = [&](const Vector& y) { return obj_logc + dot(obj_row, y); };

  int total_iters = 0;
  Vector y = zeros(p.nvars);
  const double margin = std::max(1e-12, 0.125 * tol);

  // Initial feasibility (no objective cap).
  Phase1Result init = phase1(cons, obj_row, obj_logc, false, 0.0, margin, y,
                             max_phase_iterations);
  total_iters += init.iterations;
  if (!init.feasible) {
    Vector primal(init.best_point.size());
    for (size_t i = 0; i < primal.size(); ++i) primal[i] = std::exp(init.best_point[i]);
    throw GPInfeasibleError("solve_gp: infeasible (best max violation " +
                                std::to_string(init.best_violation) + ")",
                            init.best_violation, primal);
  }

  Vector y_best = y;
  double t_hi = objective_of(y_best);

  // Expand downward to bracket the optimum.
  double t_lo = t_hi - 1.0;
  double step = 1.0;
  bool bracketed = false;
  for (int k = 0; k < 60; ++k) {
    Vector y_try = y_best;
    Phase1Result r =
        phase1(cons, obj_row, obj_logc, true, t_lo, margin, y_try, max_phase_iterations);
    total_iters += r.iterations;
    if (!r.feasible) {
      bracketed = true;
      break;
    }
    y_best = y_try;
    t_hi = std::min(t_hi, objective_of(y_best));
    step *= 2.0;
    t_lo -= step;
  }
  if (!bracketed) {
    throw std::runtime_error("solve_gp: objective appears unbounded below");
  }

  // Bisect in log space; the bracket width is a relative tolerance on the
  // original scale.
  int guard = 0;
  while (t_hi - t_lo > tol && guard++ < 500) {
    double mid = 0.5 * (t_hi + t_lo);
    Vector y_try = y_best;
    Phase1Result r =
        phase1(cons, obj_row, obj_logc, true, mid, margin, y_try, max_phase_iterations);
    total_iters += r.iterations;
    if (r.feasible) {
      y_best = y_try;
      t_hi = std::min(mid, objective_of(y_best));
    } else {
      t_lo = mid;
    }
  }

  GPSolution sol;
  sol.optimum = std::exp(objective_of(y_best));
  sol.variables.resize(y_best.size());
  for (size_t i = 0; i < y_best.size(); ++i) sol.variables[i] = std::exp(y_best[i]);
  sol.residual = t_hi - t_lo;
  sol.iterations = total_iters;
  return sol;
}

}  // namespace drsub
