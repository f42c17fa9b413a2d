#include "drsub/objectives.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "drsub/rng.hpp"

namespace drsub {

namespace {
constexpr double kDomainSlack = 1e-12;
}

std::optional<Posynomial> Objective::neg_hessian_posynomial(int, int) const {
  throw std::logic_error(name() + ": no posynomial Hessian representation");
}

void Objective::check_domain(const Vector& x) const {
  if (static_cast<int>(x.size()) != dim()) {
    throw std::invalid_argument(name() + ": dimension mismatch");
  }
  require_finite(x, name() + " argument");
  Vector lo = domain_lower(), hi = domain_upper();
  for (int i = 0; i < dim(); ++i) {
    if (x[i] < lo[i] - kDomainSlack || x[i] > hi[i] + kDomainSlack) {
      throw std::domain_error(name() + ": coordinate " + std::to_string(i) +
                              " outside admissible domain [" + std::to_string(lo[i]) + ", " +
                              std::to_string(hi[i]) + "]");
    }
  }
}

// ---------------------------------------------------------------------------
// QuadraticObjective

QuadraticObjective::QuadraticObjective(SymMatrix H, Vector h, double c0, double mu)
    : H_(std::move(H)), h_(std::move(h)), c0_(c0), mu_(mu) {
  if (static_cast<int>(h_.size()) != H_.n()) {
    throw std::invalid_argument("QuadraticObjective: h dimension mismatch");
  }
  require_finite(h_, "QuadraticObjective h");
  if (!std::isfinite(c0_)) throw std::invalid_argument("QuadraticObjective: non-finite c0");
  if (!(mu_ >= 0)) throw std::invalid_argument("QuadraticObjective: mu must be >= 0");
  if (!H_.entrywise_leq(0.0)) {
    throw std::invalid_argument("QuadraticObjective: H must be entrywise nonpositive");
  }
  for (int i = 0; i < H_.n(); ++i) {
    if (H_(i, i) > -mu_) {
      throw std::invalid_argument("QuadraticObjective: diagonal entry " + std::to_string(i) +
                                  " exceeds -mu");
    }
  }
}

QuadraticObjective QuadraticObjective::from_product_form(int n,
                                                         const std::vector<double>& a_rowmajor,
                                                         double mu) {
  SymMatrix H(n, a_rowmajor);
  Vector h(static_cast<size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    double s = 0;
    for (int j = 0; j < n; ++j) s += a_rowmajor[static_cast<size_t>(j) * n + i];
    h[i] = -s;
  }
  return QuadraticObjective(std::move(H), std::move(h), 0.0, mu);
}

double QuadraticObjective::value(const Vector& x) const {
  check_domain(x);
  return 0.5 * H_.quad_form(x) + dot(h_, x) + c0_;
}

Vector QuadraticObjective::gradient(const Vector& x) const {
  check_domain(x);
  return add(H_.matvec(x), h_);
}

SymMatrix QuadraticObjective::hessian(const Vector& x) const {
  check_domain(x);
  return H_;
}

std::optional<Posynomial> QuadraticObjective::neg_hessian_posynomial(int i, int j) const {
  double v = -H_(i, j);
  if (v == 0.0) return std::nullopt;
  return Posynomial::constant(v, dim());
}

// ---------------------------------------------------------------------------
// StabilityObjective

StabilityObjective::StabilityObjective(SymMatrix adjacency) : A_(std::move(adjacency)) {
  for (int i = 0; i < A_.n(); ++i) {
    if (A_(i, i) != 0.0) throw std::invalid_argument("StabilityObjective: nonzero diagonal");
    for (int j = i + 1; j < A_.n(); ++j) {
      if (A_(i, j) != 0.0 && A_(i, j) != 1.0) {
        throw std::invalid_argument("StabilityObjective: adjacency entries must be 0 or 1");
      }
    }
  }
}

double StabilityObjective::value(const Vector& x) const {
  check_domain(x);
  double sum = 0;
  for (double v : x) sum += v;
  return -(A_.quad_form(x) + dot(x, x)) + 2.0 * sum;
}

Vector StabilityObjective::gradient(const Vector& x) const {
  check_domain(x);
  Vector g = A_.matvec(x);
  for (size_t i = 0; i < g.size(); ++i) g[i] = -2.0 * (g[i] + x[i]) + 2.0;
  return g;
}

SymMatrix StabilityObjective::hessian(const Vector& x) const {
  check_domain(x);
  SymMatrix H = scale(-2.0, A_);
  for (int i = 0; i < H.n(); ++i) H.set(i, i, -2.0);
  return H;
}

std::optional<Posynomial> StabilityObjective::neg_hessian_posynomial(int i, int j) const {
  if (i == j) return Posynomial::constant(2.0, dim());
  if (A_(i, j) == 0.0) return std::nullopt;
  return Posynomial::constant(2.0, dim());
}

// ---------------------------------------------------------------------------
// NegativeDependencePoly

NegativeDependencePoly::NegativeDependencePoly(std::vector<DiagTerm> diag,
                                               std::vector<Interaction> interactions, double mu,
                                               Vector domain_lower, Vector domain_upper)
    : diag_(std::move(diag)),
      interactions_(std::move(interactions)),
      mu_(mu),
      lo_(std::move(domain_lower)),
      hi_(std::move(domain_upper)) {
  int n = static_cast<int>(diag_.size());
  if (n == 0) throw std::invalid_argument("ndpoly: empty diagonal term list");
  if (!(mu_ >= 0)) throw std::invalid_argument("ndpoly: mu must be >= 0");
  require_same_dim(lo_, hi_, "ndpoly domain");
  if (static_cast<int>(lo_.size()) != n) throw std::invalid_argument("ndpoly: domain dimension mismatch");
  for (int i = 0; i < n; ++i) {
    if (lo_[i] < 0 || lo_[i] > hi_[i]) throw std::invalid_argument("ndpoly: invalid domain box");
  }
  for (int i = 0; i < n; ++i) {
    if (const auto* q = std::get_if<QuadraticTerm>(&diag_[i])) {
      if (q->b < mu_) {
        throw std::invalid_argument("ndpoly: quadratic coefficient b < mu at coordinate " +
                                    std::to_string(i));
      }
    } else {
      const auto& p = std::get<PowerTerm>(diag_[i]);
      if (!(p.a > 0) || !(p.p > 0) || !(p.p < 1)) {
        throw std::invalid_argument("ndpoly: power term needs a > 0 and 0 < p < 1");
      }
      if (!(lo_[i] > 0)) {
        throw std::invalid_argument("ndpoly: power term at coordinate " + std::to_string(i) +
                                    " requires a strictly positive domain lower bound");
      }
      // -h'' = a p (1-p) x^(p-2) is decreasing, so check it at the upper end.
      double second = p.a * p.p * (1.0 - p.p) * std::pow(hi_[i], p.p - 2.0);
      if (second < mu_ - 1e-12) {
        throw std::invalid_argument("ndpoly: power term at coordinate " + std::to_string(i) +
                                    " is not mu-strong on the declared domain");
      }
    }
  }
  for (const auto& t : interactions_) {
    if (t.indices.size() < 2) throw std::invalid_argument("ndpoly: interaction degree must be >= 2");
    if (!(t.theta <= 0) || !std::isfinite(t.theta)) {
      throw std::invalid_argument("ndpoly: interaction coefficients must be <= 0");
    }
    std::vector<int> idx = t.indices;
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) {
      throw std::invalid_argument("ndpoly: interaction indices must be distinct");
    }
    if (idx.front() < 0 || idx.back() >= n) {
      throw std::invalid_argument("ndpoly: interaction index out of range");
    }
  }
  constant_hessian_ = true;
  for (const auto& d : diag_) {
    if (!std::holds_alternative<QuadraticTerm>(d)) constant_hessian_ = false;
  }
  for (const auto& t : interactions_) {
    if (t.indices.size() > 2) constant_hessian_ = false;
  }
}

double NegativeDependencePoly::value(const Vector& x) const {
  check_domain(x);
  double s = 0;
  for (int i = 0; i < dim(); ++i) {
    if (const auto* q = std::get_if<QuadraticTerm>(&diag_[i])) {
      s += q->a * x[i] - 0.5 * q->b * x[i] * x[i];
    } else {
      const auto& p = std::get<PowerTerm>(diag_[i]);
      s += p.a * std::pow(x[i], p.p);
    }
  }
  for (const auto& t : interactions_) {
    double prod = t.theta;
    for (int k : t.indices) prod *= x[k];
    s += prod;
  }
  return s;
}

Vector NegativeDependencePoly::gradient(const Vector& x) const {
  check_domain(x);
  Vector g(x.size(), 0.0);
  for (int i = 0; i < dim(); ++i) {
    if (const auto* q = std::get_if<QuadraticTerm>(&diag_[i])) {
      g[i] = q->a - q->b * x[i];
    } else {
      const auto& p = std::get<PowerTerm>(diag_[i]);
      g[i] = p.a * p.p * std::pow(x[i], p.p - 1.0);
    }
  }
  for (const auto& t : interactions_) {
    for (size_t pos = 0; pos < t.indices.size(); ++pos) {
      double prod = t.theta;
      for (size_t q = 0; q < t.indices.size(); ++q) {
        if (q != pos) prod *= x[t.indices[q]];
      }
      g[t.indices[pos]] += prod;
    }
  }
  return g;
}

SymMatrix NegativeDependencePoly::hessian(const Vector& x) const {
  check_domain(x);
  SymMatrix H(dim());
  for (int i = 0; i < dim(); ++i) {
    if (const auto* q = std::get_if<QuadraticTerm>(&diag_[i])) {
      H.set(i, i, -q->b);
    } else {
      const auto& p = std::get<PowerTerm>(diag_[i]);
      H.set(i, i, p.a * p.p * (p.p - 1.0) * std::pow(x[i], p.p - 2.0));
    }
  }
  for (const auto& t : interactions_) {
    for (size_t a = 0; a < t.indices.size(); ++a) {
      for (size_t b = a + 1; b < t.indices.size(); ++b) {
        double prod = t.theta;
        for (size_t q = 0; q < t.indices.size(); ++q) {
          if (q != a && q != b) prod *= x[t.indices[q]];
        }
        int i = t.indices[a], j = t.indices[b];
        H.set(i, j, H(i, j) + prod);
      }
    }
  }
  return H;
}

std::optional<Posynomial> NegativeDependencePoly::neg_hessian_posynomial(int i, int j) const {
  int n = dim();
  if (i == j) {
    if (const auto* q = std::get_if<QuadraticTerm>(&diag_[i])) {
      if (q->b == 0.0) return std::nullopt;
      return Posynomial::constant(q->b, n);
    }
    const auto& p = std::get<PowerTerm>(diag_[i]);
    Vector e = zeros(n);
    e[i] = p.p - 2.0;
    return Posynomial::monomial(p.a * p.p * (1.0 - p.p), std::move(e));
  }
  std::vector<PosyTerm> terms;
  for (const auto& t : interactions_) {
    bool has_i = std::find(t.indices.begin(), t.indices.end(), i) != t.indices.end();
    bool has_j = std::find(t.indices.begin(), t.indices.end(), j) != t.indices.end();
    if (!has_i || !has_j || t.theta == 0.0) continue;
    Vector e = zeros(n);
    for (int k : t.indices) {
      if (k != i && k != j) e[k] += 1.0;
    }
    terms.push_back(PosyTerm{-t.theta, std::move(e)});
  }
  if (terms.empty()) return std::nullopt;
  return Posynomial(std::move(terms), n);
}

// ---------------------------------------------------------------------------
// MeanFieldKLObjective

MeanFieldKLObjective::MeanFieldKLObjective(int n, std::vector<double> set_function_values,
                                           double delta)
    : n_(n), f_(std::move(set_function_values)), delta_(delta) {
  if (n_ < 1 || n_ > 20) throw std::invalid_argument("meanfield_kl: n must be in [1, 20]");
  if (f_.size() != (size_t{1} << n_)) {
    throw std::invalid_argument("meanfield_kl: expected 2^n set-function values");
  }
  require_finite(f_, "meanfield_kl set function");
  if (!(delta_ > 0) || !(delta_ < 0.5)) {
    throw std::invalid_argument("meanfield_kl: delta must lie in (0, 1/2)");
  }
  double fmax = *std::max_element(f_.begin(), f_.end());
  double acc = 0;
  for (double v : f_) acc += std::exp(v - fmax);
  log_z_ = fmax + std::log(acc);
}

double MeanFieldKLObjective::multilinear(const Vector& x) const {
  double m = 0;
  size_t full = size_t{1} << n_;
  for (size_t mask = 0; mask < full; ++mask) {
    double w = 1.0;
    for (int i = 0; i < n_; ++i) w *= (mask >> i) & 1 ? x[i] : 1.0 - x[i];
    m += f_[mask] * w;
  }
  return m;
}

double MeanFieldKLObjective::value(const Vector& x) const {
  check_domain(x);
  double entropy_penalty = 0;
  for (int i = 0; i < n_; ++i) {
    entropy_penalty += x[i] * std::log(x[i]) + (1.0 - x[i]) * std::log(1.0 - x[i]);
  }
  return multilinear(x) - entropy_penalty - log_z_;
}

Vector MeanFieldKLObjective::gradient(const Vector& x) const {
  check_domain(x);
  Vector g(x.size(), 0.0);
  size_t full = size_t{1} << n_;
  for (size_t mask = 0; mask < full; ++mask) {
    double w = 1.0;
    for (int i = 0; i < n_; ++i) w *= (mask >> i) & 1 ? x[i] : 1.0 - x[i];
    double fw = f_[mask] * w;
    if (fw == 0.0) continue;
    for (int i = 0; i < n_; ++i) {
      g[i] += fw * ((mask >> i) & 1 ? 1.0 / x[i] : -1.0 / (1.0 - x[i]));
    }
  }
  for (int i = 0; i < n_; ++i) g[i] += std::log((1.0 - x[i]) / x[i]);
  return g;
}

SymMatrix MeanFieldKLObjective::hessian(const Vector& x) const {
  check_domain(x);
  SymMatrix H(n_);
  std::vector<double> sens(static_cast<size_t>(n_));
  size_t full = size_t{1} << n_;
  for (size_t mask = 0; mask < full; ++mask) {
    double w = 1.0;
    for (int i = 0; i < n_; ++i) w *= (mask >> i) & 1 ? x[i] : 1.0 - x[i];
    double fw = f_[mask] * w;
    if (fw == 0.0) continue;
    for (int i = 0; i < n_; ++i) {
      sens[i] = (mask >> i) & 1 ? 1.0 / x[i] : -1.0 / (1.0 - x[i]);
    }
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        H.set(i, j, H(i, j) + fw * sens[i] * sens[j]);
      }
    }
  }
  for (int i = 0; i < n_; ++i) H.set(i, i, -1.0 / x[i] - 1.0 / (1.0 - x[i]));
  return H;
}

// ---------------------------------------------------------------------------
// Derived quantities

Vector ell_vector(const Objective& obj, const FeasibleSet& set) {
  Vector u = set.upper_corner();
  if (!all_finite(u)) throw std::invalid_argument("ell_vector: set is unbounded");
  return obj.gradient(u);
}

double curvature(const Objective& obj, const FeasibleSet& set) {
  if (!set.contains_origin()) {
    throw std::invalid_argument(
        "curvature: origin not feasible; use curvature_no_origin for a box estimate");
  }
  Vector g0 = obj.gradient(zeros(obj.dim()));
  for (int i = 0; i < obj.dim(); ++i) {
    if (!(g0[i] > 0)) {
      throw std::domain_error("curvature undefined: gradient coordinate " + std::to_string(i) +
                              " at the origin is not strictly positive");
    }
  }
  Vector ell = ell_vector(obj, set);
  double ratio = std::numeric_limits<double>::infinity();
  for (int i = 0; i < obj.dim(); ++i) ratio = std::min(ratio, ell[i] / g0[i]);
  return std::clamp(1.0 - ratio, 0.0, 1.0);
}

double curvature_no_origin(const Objective& obj, const FeasibleSet& set) {
  Vector lo = set.lower_corner(), hi = set.upper_corner();
  if (!all_finite(hi)) throw std::invalid_argument("curvature_no_origin: set is unbounded");
  Vector gl = obj.gradient(lo), gu = obj.gradient(hi);
  double ratio = std::numeric_limits<double>::infinity();
  for (int i = 0; i < obj.dim(); ++i) {
    if (!(gl[i] > 0)) {
      throw std::domain_error("curvature_no_origin: gradient coordinate " + std::to_string(i) +
                              " at the lower corner is not strictly positive");
    }
    ratio = std::min(ratio, gu[i] / gl[i]);
  }
  return std::max(1.0 - ratio, 0.0);
}

CheckReport verify_strong_dr(const Objective& obj, const Vector& box_lower,
                             const Vector& box_upper, double mu, int samples, uint64_t seed) {
  CheckReport report;
  report.name = "strong_dr";
  if (!obj.has_hessian()) {
    throw std::logic_error("verify_strong_dr: objective lacks Hessian capability");
  }
  require_same_dim(box_lower, box_upper, "verify_strong_dr box");
  Rng rng(seed);
  Vector x(box_lower.size());
  for (int s = 0; s < samples; ++s) {
    for (size_t i = 0; i < x.size(); ++i) x[i] = rng.uniform(box_lower[i], box_upper[i]);
    SymMatrix H = obj.hessian(x);
    ++report.samples;
    for (int i = 0; i < H.n(); ++i) {
      if (H(i, i) > -mu + 1e-9) {
        report.record_violation(H(i, i) + mu, "diagonal (" + std::to_string(i) + "," +
                                                  std::to_string(i) + ") > -mu at sample " +
                                                  std::to_string(s));
      }
      for (int j = i + 1; j < H.n(); ++j) {
        if (H(i, j) > 1e-9) {
          report.record_violation(H(i, j), "offdiagonal (" + std::to_string(i) + "," +
                                               std::to_string(j) + ") > 0 at sample " +
                                               std::to_string(s));
        }
      }
    }
  }
  return report;
}

}  // namespace drsub
