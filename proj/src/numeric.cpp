#include "drsub/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace drsub {

void require_same_dim(const Vector& a, const Vector& b, const std::string& op) {
  if (a.size() != b.size()) {
    throw std::invalid_argument(op + ": dimension mismatch (" + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()) + ")");
  }
}

bool all_finite(const Vector& a) {
  for (double v : a) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

void require_finite(const Vector& a, const std::string& what) {
  if (!all_finite(a)) throw std::invalid_argument(what + ": non-finite entry");
}

Vector join(const Vector& a, const Vector& b) {
  require_same_dim(a, b, "join");
  Vector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Vector meet(const Vector& a, const Vector& b) {
  require_same_dim(a, b, "meet");
  Vector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

bool dominates(const Vector& a, const Vector& b) {
  require_same_dim(a, b, "dominates");
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

double dot(const Vector& a, const Vector& b) {
  require_same_dim(a, b, "dot");
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(const Vector& a) { return std::sqrt(dot(a, a)); }

Vector add(const Vector& a, const Vector& b) {
  require_same_dim(a, b, "add");
  Vector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector sub(const Vector& a, const Vector& b) {
  require_same_dim(a, b, "sub");
  Vector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector scale(double s, const Vector& a) {
  Vector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

void axpy(Vector& y, double s, const Vector& x) {
  require_same_dim(y, x, "axpy");
  for (size_t i = 0; i < y.size(); ++i) y[i] += s * x[i];
}

Vector constant_vector(int n, double v) { return Vector(static_cast<size_t>(n), v); }

Vector zeros(int n) { return Vector(static_cast<size_t>(n), 0.0); }

SymMatrix::SymMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0.0) {
  if (n <= 0) throw std::invalid_argument("SymMatrix: n must be positive");
}

SymMatrix::SymMatrix(int n, const std::vector<double>& entries) : SymMatrix(n) {
  if (entries.size() != static_cast<size_t>(n) * n) {
    throw std::invalid_argument("SymMatrix: expected n*n entries");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double v = 0.5 * (entries[static_cast<size_t>(i) * n + j] +
                        entries[static_cast<size_t>(j) * n + i]);
      if (!std::isfinite(v)) throw std::invalid_argument("SymMatrix: non-finite entry");
      set(i, j, v);
    }
  }
}

void SymMatrix::set(int i, int j, double v) {
  a_[static_cast<size_t>(i) * n_ + j] = v;
  a_[static_cast<size_t>(j) * n_ + i] = v;
}

Vector SymMatrix::matvec(const Vector& x) const {
  if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("matvec: dimension mismatch");
  Vector r(x.size(), 0.0);
  for (int i = 0; i < n_; ++i) {
    double s = 0;
    const double* row = &a_[static_cast<size_t>(i) * n_];
    for (int j = 0; j < n_; ++j) s += row[j] * x[j];
    r[i] = s;
  }
  return r;
}

double SymMatrix::quad_form(const Vector& x) const { return dot(x, matvec(x)); }

bool SymMatrix::entrywise_leq(double bound) const {
  return std::all_of(a_.begin(), a_.end(), [&](double v) { return v <= bound; });
}

bool SymMatrix::entrywise_geq(double bound) const {
  return std::all_of(a_.begin(), a_.end(), [&](double v) { return v >= bound; });
}

double SymMatrix::min_entry() const { return *std::min_element(a_.begin(), a_.end()); }

double SymMatrix::max_entry() const { return *std::max_element(a_.begin(), a_.end()); }

SymMatrix identity_matrix(int n) {
  SymMatrix m(n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1.0);
  return m;
}

SymMatrix add(const SymMatrix& a, const SymMatrix& b) {
  if (a.n() != b.n()) throw std::invalid_argument("SymMatrix add: dimension mismatch");
  SymMatrix r(a.n());
  for (int i = 0; i < a.n(); ++i) {
    for (int j = i; j < a.n(); ++j) r.set(i, j, a(i, j) + b(i, j));
  }
  return r;
}

SymMatrix scale(double s, const SymMatrix& a) {
  SymMatrix r(a.n());
  for (int i = 0; i < a.n(); ++i) {
    for (int j = i; j < a.n(); ++j) r.set(i, j, s * a(i, j));
  }
  return r;
}

}  // namespace drsub
