#include "drsub/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace drsub {

Vector finite_diff_gradient(const Objective& obj, const Vector& x, double h) {
  if (!(h > 0)) throw std::invalid_argument("finite_diff_gradient: h must be > 0");
  Vector g(x.size());
  Vector probe = x;
  for (size_t i = 0; i < x.size(); ++i) {
    probe[i] = x[i] + h;
    double fp = obj.value(probe);
    probe[i] = x[i] - h;
    double fm = obj.value(probe);
    probe[i] = x[i];
    g[i] = (fp - fm) / (2.0 * h);
  }
  return g;
}

GridResult grid_maximize(const Objective& obj, const FeasibleSet& set, double resolution) {
  int n = set.dim();
  if (n > 4) throw std::invalid_argument("grid_maximize: exhaustive oracle limited to n <= 4");
  if (!(resolution > 0)) throw std::invalid_argument("grid_maximize: resolution must be > 0");
  Vector lo = set.lower_corner(), hi = set.upper_corner();
  std::vector<int> steps(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    steps[i] = static_cast<int>(std::floor((hi[i] - lo[i]) / resolution + 1e-9));
  }
  std::vector<int> idx(static_cast<size_t>(n), 0);
  Vector x(static_cast<size_t>(n));
  GridResult best{Vector(), -std::numeric_limits<double>::infinity()};
  while (true) {
    for (int i = 0; i < n; ++i) x[i] = std::min(lo[i] + idx[i] * resolution, hi[i]);
    if (set.contains(x, 1e-9)) {
      double v = obj.value(x);
      if (v > best.value) best = {x, v};
    }
    int d = 0;
    while (d < n && ++idx[d] > steps[d]) idx[d++] = 0;
    if (d == n) break;
  }
  if (best.point.empty()) throw std::runtime_error("grid_maximize: no feasible grid point found");
  return best;
}

double grid_gap_bound(double L_smooth, double diameter, double resolution, int n) {
  return L_smooth * diameter * resolution * std::sqrt(static_cast<double>(n));
}

namespace {

// Greedy clique cover of the vertices in `mask`: the independence number of
// the induced subgraph is at most the number of cliques used.
int clique_cover_bound(uint32_t mask, const std::vector<uint32_t>& adj) {
  int cliques = 0;
  uint32_t rem = mask;
  while (rem) {
    int v = __builtin_ctz(rem);
    uint32_t clique = 1u << v;
    uint32_t cand = rem & adj[v];
    while (cand) {
      int u = __builtin_ctz(cand);
      clique |= 1u << u;
      cand &= adj[u];
    }
    rem &= ~clique;
    ++cliques;
  }
  return cliques;
}

void mis_branch(uint32_t mask, int size, const std::vector<uint32_t>& adj, int& best) {
  if (mask == 0) {
    best = std::max(best, size);
    return;
  }
  if (size + clique_cover_bound(mask, adj) <= best) return;
  // branch on the highest-degree remaining vertex
  int pick = -1, pick_deg = -1;
  uint32_t scan = mask;
  while (scan) {
    int v = __builtin_ctz(scan);
    scan &= scan - 1;
    int deg = __builtin_popcount(mask & adj[v]);
    if (deg > pick_deg) {
      pick_deg = deg;
      pick = v;
    }
  }
  mis_branch(mask & ~(adj[pick] | (1u << pick)), size + 1, adj, best);  // include
  mis_branch(mask & ~(1u << pick), size, adj, best);                    // exclude
}

}  // namespace

int exact_stability_number(const Graph& g) {
  if (g.n > 30) throw std::invalid_argument("exact_stability_number: limited to n <= 30");
  std::vector<uint32_t> adj(static_cast<size_t>(g.n), 0);
  for (const auto& [u, v] : g.edges) {
    adj[u - 1] |= 1u << (v - 1);
    adj[v - 1] |= 1u << (u - 1);
  }
  uint32_t all = g.n == 32 ? ~0u : (1u << g.n) - 1;
  int best = 0;
  mis_branch(all, 0, adj, best);
  return best;
}

double jacobi_max_eigenvalue(const SymMatrix& m, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("jacobi_max_eigenvalue: tol must be > 0");
  int n = m.n();
  std::vector<double> a(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * n + j] = m(i, j);
  }
  auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };
  auto off_norm = [&]() {
    double s = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j) s += at(i, j) * at(i, j);
      }
    }
    return std::sqrt(s);
  };
  const int max_sweeps = 100;
  for (int sweep = 0; sweep < max_sweeps && off_norm() > tol; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = at(p, q);
        if (apq == 0.0) continue;
        double tau = (at(q, q) - at(p, p)) / (2.0 * apq);
        double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  if (off_norm() > tol) {
    throw std::runtime_error("jacobi_max_eigenvalue: did not converge in " +
                             std::to_string(max_sweeps) + " sweeps");
  }
  double best = at(0, 0);
  for (int i = 1; i < n; ++i) best = std::max(best, at(i, i));
  return best;
}

Vector sample_feasible(const FeasibleSet& set, Rng& rng) {
  Vector lo = set.lower_corner(), hi = set.upper_corner();
  Vector y(lo.size());
  for (size_t i = 0; i < y.size(); ++i) y[i] = rng.uniform(lo[i], hi[i]);
  return set.project(y);
}

CheckReport lemma2_check(const Objective& obj, const FeasibleSet& set, double c_f, double mu,
                         int samples, uint64_t seed) {
  CheckReport report;
  report.name = "lemma2";
  Rng rng(seed);
  constexpr double tol = 1e-9;
  for (int s = 0; s < samples; ++s) {
    Vector x = sample_feasible(set, rng);
    Vector z = sample_feasible(set, rng);
    double fx = obj.value(x), fz = obj.value(z);
    double fmin = std::min(fx, fz);
    if (std::isnan(report.min_value) || fmin < report.min_value) report.min_value = fmin;
    ++report.samples;
    if (fmin < -1e-12) {
      ++report.precondition_skips;
      if (report.notes.size() < 20) {
        report.notes.push_back("sample " + std::to_string(s) +
                               ": f < 0, bound preconditions not met (skipped)");
      }
      continue;
    }
    Vector g = obj.gradient(x);
    Vector zx = sub(z, x);
    double rhs = dot(g, zx) - 0.5 * mu * dot(zx, zx);
    double lhs = fz - (1.0 + c_f) * fx;
    if (lhs > rhs + tol) {
      report.record_violation(lhs - rhs, "main inequality violated at sample " +
                                             std::to_string(s));
    }
    // intermediate step of the argument, via join/meet
    double fu = obj.value(join(x, z)), fw = obj.value(meet(x, z));
    double lhs2 = fu + fw - 2.0 * fx;
    if (lhs2 > rhs + tol) {
      report.record_violation(lhs2 - rhs, "join/meet inequality violated at sample " +
                                              std::to_string(s));
    }
  }
  return report;
}

CheckReport gradient_check(const Objective& obj, const FeasibleSet& set, int samples, double h,
                           double rel_tol, uint64_t seed) {
  CheckReport report;
  report.name = "gradient_vs_finite_differences";
  Vector lo = join(set.lower_corner(), obj.domain_lower());
  Vector hi = meet(set.upper_corner(), obj.domain_upper());
  Rng rng(seed);
  Vector x(lo.size());
  for (int s = 0; s < samples; ++s) {
    for (size_t i = 0; i < x.size(); ++i) {
      double margin = std::max(2.0 * h, 1e-4 * (hi[i] - lo[i]));
      x[i] = lo[i] + margin <= hi[i] - margin ? rng.uniform(lo[i] + margin, hi[i] - margin)
                                              : 0.5 * (lo[i] + hi[i]);
    }
    Vector g = obj.gradient(x);
    Vector fd = finite_diff_gradient(obj, x, h);
    ++report.samples;
    double err = norm2(sub(fd, g)) / std::max(norm2(g), 1e-12);
    if (err > rel_tol) {
      report.record_violation(err - rel_tol,
                              "relative gradient error " + std::to_string(err) + " at sample " +
                                  std::to_string(s));
    }
  }
  return report;
}

CheckReport monotonicity_check(const Objective& obj, const FeasibleSet& set, int samples,
                               uint64_t seed) {
  CheckReport report;
  report.name = "monotonicity";
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    Vector x = sample_feasible(set, rng);
    Vector g = obj.gradient(x);
    ++report.samples;
    double fx = obj.value(x);
    if (std::isnan(report.min_value) || fx < report.min_value) report.min_value = fx;
    for (size_t i = 0; i < g.size(); ++i) {
      if (g[i] < -1e-9) {
        report.record_violation(-g[i], "gradient coordinate " + std::to_string(i) +
                                           " negative at sample " + std::to_string(s));
      }
    }
  }
  return report;
}

}  // namespace drsub
