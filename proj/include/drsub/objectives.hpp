#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "drsub/feasible_sets.hpp"
#include "drsub/numeric.hpp"
#include "drsub/posynomial.hpp"
#include "drsub/report.hpp"

namespace drsub {

// Differentiable objective oracle: value / gradient / Hessian plus the
// declared strong parameter mu and an admissible domain box. Objectives are
// immutable after construction and all evaluations are pure.
class Objective {
 public:
  virtual ~Objective() = default;

  virtual std::string name() const = 0;
  virtual int dim() const = 0;
  // Declared strong parameter: diag(hessian) <= -mu on the admissible domain.
  virtual double mu() const = 0;

  virtual double value(const Vector& x) const = 0;
  virtual Vector gradient(const Vector& x) const = 0;
  virtual bool has_hessian() const { return true; }
  virtual SymMatrix hessian(const Vector& x) const = 0;
  virtual bool constant_hessian() const = 0;

  // Admissible evaluation box; evaluations outside it throw std::domain_error.
  virtual Vector domain_lower() const { return zeros(dim()); }
  virtual Vector domain_upper() const {
    return constant_vector(dim(), std::numeric_limits<double>::infinity());
  }

  // Entries of -hessian as posynomials in x, when the family supports it.
  // nullopt marks a structurally zero entry.
  virtual bool has_posynomial_hessian() const { return false; }
  virtual std::optional<Posynomial> neg_hessian_posynomial(int i, int j) const;

 protected:
  void check_domain(const Vector& x) const;
};

// f(x) = x^T H x / 2 + h^T x + c0 with H entrywise <= 0 and diag(H) <= -mu.
class QuadraticObjective final : public Objective {
 public:
  QuadraticObjective(SymMatrix H, Vector h, double c0, double mu);

  // Canonicalizes f(x) = (x/2 - 1)^T A x for a (generally nonsymmetric)
  // row-major matrix A: H = (A + A^T)/2, h = -A^T 1, c0 = 0.
  static QuadraticObjective from_product_form(int n, const std::vector<double>& a_rowmajor,
                                              double mu);

  std::string name() const override { return "quadratic"; }
  int dim() const override { return H_.n(); }
  double mu() const override { return mu_; }
  double value(const Vector& x) const override;
  Vector gradient(const Vector& x) const override;
  SymMatrix hessian(const Vector& x) const override;
  bool constant_hessian() const override { return true; }
  bool has_posynomial_hessian() const override { return true; }
  std::optional<Posynomial> neg_hessian_posynomial(int i, int j) const override;

  const SymMatrix& H() const { return H_; }
  const Vector& h() const { return h_; }

 private:
  SymMatrix H_;
  Vector h_;
  double c0_;
  double mu_;
};

// f(x) = x^T (-A - I) x + 2 * 1^T x for a 0/1 adjacency matrix A. The value
// 2 - f(x), minimized over the standard simplex, is the reciprocal of the
// graph's stability number; mu = 2 exactly.
class StabilityObjective final : public Objective {
 public:
  explicit StabilityObjective(SymMatrix adjacency);

  std::string name() const override { return "stability"; }
  int dim() const override { return A_.n(); }
  double mu() const override { return 2.0; }
  double value(const Vector& x) const override;
  Vector gradient(const Vector& x) const override;
  SymMatrix hessian(const Vector& x) const override;
  bool constant_hessian() const override { return true; }
  bool has_posynomial_hessian() const override { return true; }
  std::optional<Posynomial> neg_hessian_posynomial(int i, int j) const override;

  const SymMatrix& adjacency() const { return A_; }

 private:
  SymMatrix A_;
};

// Separable concave terms with nonpositive multilinear interactions:
//   f(x) = sum_i h_i(x_i) + sum theta * prod_{k in tuple} x_k,  theta <= 0,
// where each h_i is either a*x - b*x^2/2 (b >= mu) or a*x^p (0 < p < 1).
class NegativeDependencePoly final : public Objective {
 public:
  struct QuadraticTerm {
    double a = 0, b = 0;  // a*x - b*x^2/2
  };
  struct PowerTerm {
    double a = 0, p = 0;  // a*x^p
  };
  using DiagTerm = std::variant<QuadraticTerm, PowerTerm>;
  struct Interaction {
    std::vector<int> indices;  // distinct 0-based coordinates, size >= 2
    double theta = 0;          // <= 0
  };

  NegativeDependencePoly(std::vector<DiagTerm> diag, std::vector<Interaction> interactions,
                         double mu, Vector domain_lower, Vector domain_upper);

  std::string name() const override { return "ndpoly"; }
  int dim() const override { return static_cast<int>(diag_.size()); }
  double mu() const override { return mu_; }
  double value(const Vector& x) const override;
  Vector gradient(const Vector& x) const override;
  SymMatrix hessian(const Vector& x) const override;
  bool constant_hessian() const override { return constant_hessian_; }
  Vector domain_lower() const override { return lo_; }
  Vector domain_upper() const override { return hi_; }
  bool has_posynomial_hessian() const override { return true; }
  std::optional<Posynomial> neg_hessian_posynomial(int i, int j) const override;

 private:
  std::vector<DiagTerm> diag_;
  std::vector<Interaction> interactions_;
  double mu_;
  Vector lo_, hi_;
  bool constant_hessian_;
};

// Negated KL divergence between the fully factorized distribution with
// marginals x and the Gibbs distribution exp(F(S))/Z of a set function F,
// computed by exact enumeration (including ln Z). 4-strongly DR-submodular
// on (0,1)^n when F is submodular; evaluations are clipped to
// [delta, 1-delta]^n.
class MeanFieldKLObjective final : public Objective {
 public:
  // values[mask] = F(S) for the subset encoded by mask; requires n <= 20.
  MeanFieldKLObjective(int n, std::vector<double> set_function_values, double delta);

  std::string name() const override { return "meanfield_kl"; }
  int dim() const override { return n_; }
  double mu() const override { return 4.0; }
  double value(const Vector& x) const override;
  Vector gradient(const Vector& x) const override;
  SymMatrix hessian(const Vector& x) const override;
  bool constant_hessian() const override { return false; }
  Vector domain_lower() const override { return constant_vector(n_, delta_); }
  Vector domain_upper() const override { return constant_vector(n_, 1.0 - delta_); }

  double log_partition() const { return log_z_; }

 private:
  // Multilinear extension of F and its first two derivatives at x.
  double multilinear(const Vector& x) const;

  int n_;
  std::vector<double> f_;
  double delta_;
  double log_z_;
};

// Coordinatewise lower bound on the gradient over the set's bounding box,
// i.e. the gradient at the box's upper corner (order-reversing gradients are
// minimized there).
Vector ell_vector(const Objective& obj, const FeasibleSet& set);

// Curvature 1 - min_i ell_i / grad_i f(0), clamped to [0,1]. Requires the
// origin to be feasible and grad f(0) > 0.
double curvature(const Objective& obj, const FeasibleSet& set);

// Bounding-box curvature estimate 1 - min_i grad_i f(upper) / grad_i f(lower);
// an upper bound on the curvature over the box (may exceed 1 when the
// gradient changes sign inside the box).
double curvature_no_origin(const Objective& obj, const FeasibleSet& set);

// Samples uniform points in [lo, hi] and checks diag(hessian) <= -mu + 1e-9
// and offdiag <= 1e-9.
CheckReport verify_strong_dr(const Objective& obj, const Vector& box_lower,
                             const Vector& box_upper, double mu, int samples, uint64_t seed);

}  // namespace drsub
