#pragma once

#include <memory>
#include <string>

#include "drsub/numeric.hpp"

namespace drsub {

// A bounded convex subset of R^n_+ exposing exact Euclidean projection and the
// linear / regularized-linear maximization oracles the algorithms need.
// Instances are immutable; all operations are pure.
class FeasibleSet {
 public:
  virtual ~FeasibleSet() = default;

  virtual std::string name() const = 0;
  virtual int dim() const = 0;

  // argmin_{z in set} ||z - y||
  virtual Vector project(const Vector& y) const = 0;
  // argmax_{x in set} <w, x>, ties broken toward the lowest index.
  virtual Vector linear_max(const Vector& w) const = 0;
  // argmax_{x in set} <w, x> - (alpha/2) ||x||^2  ==  project(w / alpha).
  Vector reg_linear_max(const Vector& w, double alpha) const;

  // Coordinatewise max / min over the set (bounding-box corners).
  virtual Vector upper_corner() const = 0;
  virtual Vector lower_corner() const = 0;
  // Upper bound on max ||y - x|| over the set; exact for boxes and simplices.
  virtual double diameter() const = 0;
  virtual bool contains_origin() const = 0;
  virtual bool contains(const Vector& x, double tol) const = 0;
};

// {x : lower <= x <= upper}, with 0 <= lower.
class BoxSet final : public FeasibleSet {
 public:
  BoxSet(Vector lower, Vector upper);

  std::string name() const override { return "box"; }
  int dim() const override { return static_cast<int>(lower_.size()); }
  Vector project(const Vector& y) const override;
  Vector linear_max(const Vector& w) const override;
  Vector upper_corner() const override { return upper_; }
  Vector lower_corner() const override { return lower_; }
  double diameter() const override;
  bool contains_origin() const override;
  bool contains(const Vector& x, double tol) const override;

 private:
  Vector lower_, upper_;
};

// {x : 1^T x = s, x >= 0}, s > 0.
class SimplexSet final : public FeasibleSet {
 public:
  SimplexSet(int n, double radius);

  std::string name() const override { return "simplex"; }
  int dim() const override { return n_; }
  double radius() const { return s_; }
  Vector project(const Vector& y) const override;
  Vector linear_max(const Vector& w) const override;
  Vector upper_corner() const override { return constant_vector(n_, s_); }
  Vector lower_corner() const override;
  double diameter() const override;
  bool contains_origin() const override { return false; }
  bool contains(const Vector& x, double tol) const override;

 private:
  int n_;
  double s_;
};

// {x : 1^T x <= s, 0 <= x <= upper}, s > 0, upper > 0.
class BudgetBoxSet final : public FeasibleSet {
 public:
  BudgetBoxSet(Vector upper, double budget);

  std::string name() const override { return "budget_box"; }
  int dim() const override { return static_cast<int>(upper_.size()); }
  double budget() const { return s_; }
  Vector project(const Vector& y) const override;
  Vector linear_max(const Vector& w) const override;
  Vector upper_corner() const override;
  Vector lower_corner() const override { return zeros(dim()); }
  // 2 * max ||x|| over the set; an upper bound on the true diameter.
  double diameter() const override;
  bool contains_origin() const override { return true; }
  bool contains(const Vector& x, double tol) const override;

 private:
  Vector upper_;
  double s_;
};

}  // namespace drsub
