#pragma once

#include <vector>

#include "drsub/numeric.hpp"

namespace drsub {

// One monomial term c * x_1^{a_1} ... x_n^{a_n}, c > 0, a_i real.
struct PosyTerm {
  double coeff = 1.0;
  Vector exponents;
};

// Sum of monomial terms with strictly positive coefficients, defined on x > 0.
class Posynomial {
 public:
  Posynomial(std::vector<PosyTerm> terms, int nvars);

  static Posynomial monomial(double coeff, Vector exponents);
  static Posynomial constant(double coeff, int nvars);

  double eval(const Vector& x) const;
  const std::vector<PosyTerm>& terms() const { return terms_; }
  int nvars() const { return nvars_; }
  bool is_monomial() const { return terms_.size() == 1; }
  bool nonnegative_exponents() const;

 private:
  std::vector<PosyTerm> terms_;
  int nvars_ = 0;
};

// minimize objective (a monomial) subject to inequalities(x) <= 1 and
// equalities(x) == 1 (monomials), over x > 0.
struct GPProblem {
  Posynomial objective;
  std::vector<Posynomial> inequalities;
  std::vector<Posynomial> equalities;
  int nvars = 0;

  void validate() const;
};

}  // namespace drsub
