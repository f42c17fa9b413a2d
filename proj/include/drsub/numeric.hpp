#pragma once

#include <string>
#include <vector>

namespace drsub {

// Dense real vector. All entries are 64-bit doubles; values are treated as
// immutable once handed to the library, so sharing across threads is safe.
using Vector = std::vector<double>;

// Lattice operations (component-wise max / min).
Vector join(const Vector& a, const Vector& b);
Vector meet(const Vector& a, const Vector& b);

// true iff a[i] <= b[i] for all i, i.e. the check "a precedes b".
bool dominates(const Vector& a, const Vector& b);

double dot(const Vector& a, const Vector& b);
double norm2(const Vector& a);

// Elementary arithmetic helpers.
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(double s, const Vector& a);
// y += s * x
void axpy(Vector& y, double s, const Vector& x);
Vector constant_vector(int n, double v);
Vector zeros(int n);

bool all_finite(const Vector& a);
void require_finite(const Vector& a, const std::string& what);
void require_same_dim(const Vector& a, const Vector& b, const std::string& op);

// Dense symmetric matrix. The constructor symmetrizes its input so that
// (i,j) and (j,i) are bit-identical afterwards.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int n);
  // Row-major n*n entries; stored as (a[i][j] + a[j][i]) / 2.
  SymMatrix(int n, const std::vector<double>& entries);

  int n() const { return n_; }
  double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
  // Sets both (i,j) and (j,i).
  void set(int i, int j, double v);

  Vector matvec(const Vector& x) const;
  // x^T M x
  double quad_form(const Vector& x) const;

  bool entrywise_leq(double bound) const;
  bool entrywise_geq(double bound) const;
  double min_entry() const;
  double max_entry() const;

 private:
  int n_ = 0;
  std::vector<double> a_;
};

SymMatrix identity_matrix(int n);
SymMatrix add(const SymMatrix& a, const SymMatrix& b);
SymMatrix scale(double s, const SymMatrix& a);

}  // namespace drsub
