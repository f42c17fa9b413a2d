#include "drsub/feasible_sets.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace drsub {

Vector FeasibleSet::reg_linear_max(const Vector& w, double alpha) const {
  if (!(alpha > 0)) {
    throw std::invalid_argument("reg_linear_max: alpha must be > 0 (use linear_max for alpha = 0)");
  }
  return project(scale(1.0 / alpha, w));
}

// ---------------------------------------------------------------------------
// BoxSet

BoxSet::BoxSet(Vector lower, Vector upper) : lower_(std::move(lower)), upper_(std::move(upper)) {
  require_same_dim(lower_, upper_, "BoxSet");
  if (lower_.empty()) throw std::invalid_argument("BoxSet: dimension must be positive");
  require_finite(lower_, "BoxSet lower");
  require_finite(upper_, "BoxSet upper");
  for (size_t i = 0; i < lower_.size(); ++i) {
    if (lower_[i] < 0) throw std::invalid_argument("BoxSet: lower bound must be nonnegative");
    if (lower_[i] > upper_[i]) throw std::invalid_argument("BoxSet: empty box (lower > upper)");
  }
}

Vector BoxSet::project(const Vector& y) const {
  require_same_dim(y, lower_, "BoxSet::project");
  require_finite(y, "project input");
  Vector x(y.size());
  for (size_t i = 0; i < y.size(); ++i) x[i] = std::clamp(y[i], lower_[i], upper_[i]);
  return x;
}

Vector BoxSet::linear_max(const Vector& w) const {
  require_same_dim(w, lower_, "BoxSet::linear_max");
  require_finite(w, "linear_max input");
  Vector x(w.size());
  for (size_t i = 0; i < w.size(); ++i) x[i] = w[i] > 0 ? upper_[i] : lower_[i];
  return x;
}

double BoxSet::diameter() const { return norm2(sub(upper_, lower_)); }

bool BoxSet::contains_origin() const {
  return std::all_of(lower_.begin(), lower_.end(), [](double v) { return v == 0.0; });
}

bool BoxSet::contains(const Vector& x, double tol) const {
  if (x.size() != lower_.size()) return false;
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] < lower_[i] - tol || x[i] > upper_[i] + tol) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// SimplexSet

SimplexSet::SimplexSet(int n, double radius) : n_(n), s_(radius) {
  if (n_ < 1) throw std::invalid_argument("SimplexSet: dimension must be >= 1");
  if (!(s_ > 0) || !std::isfinite(s_)) throw std::invalid_argument("SimplexSet: radius must be > 0");
}

// Sort-and-threshold projection: find tau with sum_i max(y_i - tau, 0) = s.
Vector SimplexSet::project(const Vector& y) const {
  if (static_cast<int>(y.size()) != n_) throw std::invalid_argument("SimplexSet::project: dimension mismatch");
  require_finite(y, "project input");
  Vector u = y;
  std::sort(u.begin(), u.end(), std::greater<double>());
  double cumsum = 0, tau = 0;
  for (int j = 0; j < n_; ++j) {
    cumsum += u[j];
    double t = (cumsum - s_) / (j + 1);
    if (u[j] - t > 0) tau = t;
  }
  Vector x(y.size());
  for (size_t i = 0; i < y.size(); ++i) x[i] = std::max(y[i] - tau, 0.0);
  return x;
}

Vector SimplexSet::linear_max(const Vector& w) const {
  if (static_cast<int>(w.size()) != n_) throw std::invalid_argument("SimplexSet::linear_max: dimension mismatch");
  require_finite(w, "linear_max input");
  int best = 0;
  for (int i = 1; i < n_; ++i) {
    if (w[i] > w[best]) best = i;
  }
  Vector x = zeros(n_);
  x[best] = s_;
  return x;
}

Vector SimplexSet::lower_corner() const {
  // For n = 1 the set is the single point {s}.
  return n_ == 1 ? constant_vector(1, s_) : zeros(n_);
}

double SimplexSet::diameter() const { return n_ == 1 ? 0.0 : s_ * std::sqrt(2.0); }

bool SimplexSet::contains(const Vector& x, double tol) const {
  if (static_cast<int>(x.size()) != n_) return false;
  double sum = 0;
  for (double v : x) {
    if (v < -tol) return false;
    sum += v;
  }
  return std::abs(sum - s_) <= tol;
}

// ---------------------------------------------------------------------------
// BudgetBoxSet

BudgetBoxSet::BudgetBoxSet(Vector upper, double budget) : upper_(std::move(upper)), s_(budget) {
  if (upper_.empty()) throw std::invalid_argument("BudgetBoxSet: dimension must be positive");
  require_finite(upper_, "BudgetBoxSet upper");
  if (!(s_ > 0)) throw std::invalid_argument("BudgetBoxSet: budget must be > 0");
  for (double u : upper_) {
    if (!(u > 0)) throw std::invalid_argument("BudgetBoxSet: upper bounds must be > 0");
  }
}

// Clamp to the box; if the budget is still violated, the KKT system gives
// x_i = clamp(y_i - tau, 0, u_i) with tau > 0 chosen so the budget is tight.
// sum_i x_i(tau) is continuous and nonincreasing, so bisection applies.
Vector BudgetBoxSet::project(const Vector& y) const {
  require_same_dim(y, upper_, "BudgetBoxSet::project");
  require_finite(y, "project input");
  auto x_of = [&](double tau) {
    Vector x(y.size());
    for (size_t i = 0; i < y.size(); ++i) x[i] = std::clamp(y[i] - tau, 0.0, upper_[i]);
    return x;
  };
  auto sum_of = [&](const Vector& x) { return std::accumulate(x.begin(), x.end(), 0.0); };

  Vector clamped = x_of(0.0);
  if (sum_of(clamped) <= s_) return clamped;

  // Invariant: sum(x(lo)) > s >= sum(x(hi)). The interval collapses to the
  // double-precision floor well inside 200 iterations (residual far below the
  // 1e-10 budget tolerance), and ending on the hi side keeps the result
  // feasible, so re-projecting returns it bit-identically.
  double lo = 0.0, hi = *std::max_element(y.begin(), y.end());
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (sum_of(x_of(mid)) > s_) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return x_of(hi);
}

// Greedy fill by descending weight; only positive weights receive mass.
Vector BudgetBoxSet::linear_max(const Vector& w) const {
  require_same_dim(w, upper_, "BudgetBoxSet::linear_max");
  require_finite(w, "linear_max input");
  std::vector<int> order(w.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return w[a] > w[b]; });
  Vector x = zeros(dim());
  double remaining = s_;
  for (int i : order) {
    if (w[i] <= 0 || remaining <= 0) break;
    double take = std::min(upper_[i], remaining);
    x[i] = take;
    remaining -= take;
  }
  return x;
}

Vector BudgetBoxSet::upper_corner() const {
  Vector u(upper_.size());
  for (size_t i = 0; i < upper_.size(); ++i) u[i] = std::min(upper_[i], s_);
  return u;
}

double BudgetBoxSet::diameter() const {
  // max ||x||^2 is attained by greedily filling the largest box bounds.
  std::vector<double> caps = upper_;
  std::sort(caps.begin(), caps.end(), std::greater<double>());
  double remaining = s_, nrm2 = 0;
  for (double cap : caps) {
    if (remaining <= 0) break;
    double take = std::min(cap, remaining);
    nrm2 += take * take;
    remaining -= take;
  }
  return 2.0 * std::sqrt(nrm2);
}

bool BudgetBoxSet::contains(const Vector& x, double tol) const {
  if (x.size() != upper_.size()) return false;
  double sum = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] < -tol || x[i] > upper_[i] + tol) return false;
    sum += x[i];
  }
  return sum <= s_ + tol;
}

}  // namespace drsub
