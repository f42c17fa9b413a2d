#include "drsub/posynomial.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace drsub {

Posynomial::Posynomial(std::vector<PosyTerm> terms, int nvars)
    : terms_(std::move(terms)), nvars_(nvars) {
  if (nvars_ <= 0) throw std::invalid_argument("Posynomial: nvars must be positive");
  if (terms_.empty()) throw std::invalid_argument("Posynomial: empty term list");
  for (const auto& t : terms_) {
    if (!(t.coeff > 0) || !std::isfinite(t.coeff)) {
      throw std::invalid_argument("Posynomial: coefficients must be strictly positive");
    }
    if (static_cast<int>(t.exponents.size()) != nvars_) {
      throw std::invalid_argument("Posynomial: exponent dimension mismatch");
    }
    require_finite(t.exponents, "Posynomial exponents");
  }
}

Posynomial Posynomial::monomial(double coeff, Vector exponents) {
  int n = static_cast<int>(exponents.size());
  return Posynomial({PosyTerm{coeff, std::move(exponents)}}, n);
}

Posynomial Posynomial::constant(double coeff, int nvars) {
  return Posynomial({PosyTerm{coeff, zeros(nvars)}}, nvars);
}

double Posynomial::eval(const Vector& x) const {
  if (static_cast<int>(x.size()) != nvars_) {
    throw std::invalid_argument("Posynomial::eval: dimension mismatch");
  }
  for (double v : x) {
    if (!(v > 0)) throw std::domain_error("Posynomial::eval: requires x > 0");
  }
  double s = 0;
  for (const auto& t : terms_) {
    double p = t.coeff;
    for (int i = 0; i < nvars_; ++i) {
      if (t.exponents[i] != 0.0) p *= std::pow(x[i], t.exponents[i]);
    }
    s += p;
  }
  return s;
}

bool Posynomial::nonnegative_exponents() const {
  for (const auto& t : terms_) {
    for (double e : t.exponents) {
      if (e < 0) return false;
    }
  }
  return true;
}

void GPProblem::validate() const {
  if (nvars <= 0) throw std::invalid_argument("GPProblem: nvars must be positive");
  if (!objective.is_monomial()) {
    throw std::invalid_argument("GPProblem: objective must be a monomial");
  }
  if (objective.nvars() != nvars) throw std::invalid_argument("GPProblem: objective nvars mismatch");
  for (const auto& c : inequalities) {
    if (c.nvars() != nvars) throw std::invalid_argument("GPProblem: constraint nvars mismatch");
  }
  for (const auto& c : equalities) {
    if (c.nvars() != nvars) throw std::invalid_argument("GPProblem: constraint nvars mismatch");
    if (!c.is_monomial()) {
      throw std::invalid_argument("GPProblem: equality constraints must be monomials");
    }
  }
}

}  // namespace drsub
