#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "drsub/numeric.hpp"
#include "drsub/rng.hpp"

using namespace drsub;

TEST_CASE("join and meet definitions") {
  CHECK(join({1, 0}, {0, 1}) == Vector{1, 1});
  CHECK(meet({1, 0}, {0, 1}) == Vector{0, 0});
  CHECK(join({0.2, 0.7, 0.1}, {0.3, 0.1, 0.1}) == Vector{0.3, 0.7, 0.1});
  CHECK(meet({0.2, 0.7}, {0.3, 0.1}) == Vector{0.2, 0.1});
  Vector x{0.4, 0.9, 0.0};
  CHECK(join(x, x) == x);
  CHECK(meet(x, x) == x);
  CHECK_THROWS_AS(join({1.0}, {1.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(meet({1.0}, {1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("dominates") {
  CHECK(dominates({0, 0}, {1, 2}));
  CHECK_FALSE(dominates({1, 0}, {0, 1}));
  Vector x{0.5, 0.5};
  CHECK(dominates(x, x));
  CHECK_THROWS_AS(dominates({1.0}, {1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("dot and norm2") {
  CHECK(dot({1, 2}, {3, 4}) == 11);
  CHECK(norm2({3, 4}) == doctest::Approx(5.0).epsilon(1e-14));
  CHECK(dot({0.3, -1.2, 4}, {0, 0, 0}) == 0);
  CHECK_THROWS_AS(dot({1.0}, {1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("lattice identities on random vectors") {
  Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    int n = rng.uniform_int(1, 8);
    Vector a(n), b(n);
    for (int i = 0; i < n; ++i) {
      a[i] = rng.uniform(-5, 5);
      b[i] = rng.uniform(-5, 5);
    }
    Vector u = join(a, b), w = meet(a, b);
    // u + w == a + b entrywise
    for (int i = 0; i < n; ++i) CHECK(u[i] + w[i] == a[i] + b[i]);
    CHECK(dominates(w, a));
    CHECK(dominates(w, b));
    CHECK(dominates(a, u));
    CHECK(dominates(b, u));
    double nn = norm2(a);
    CHECK(nn * nn == doctest::Approx(dot(a, a)).epsilon(1e-12));
  }
}

TEST_CASE("SymMatrix symmetrizes exactly") {
  SymMatrix m(2, {1.0, 2.0, 5.0, 3.0});
  CHECK(m(0, 1) == m(1, 0));
  CHECK(m(0, 1) == 3.5);
  CHECK(m(0, 0) == 1.0);
  SymMatrix z(3);
  CHECK(z.matvec({1, 2, 3}) == Vector{0, 0, 0});
  CHECK_THROWS_AS(SymMatrix(2, {1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("SymMatrix matvec and quad form") {
  SymMatrix m(2, {2, 1, 1, 2});
  CHECK(m.matvec({1, 1}) == Vector{3, 3});
  CHECK(m.quad_form({1, -1}) == 2);
  CHECK(identity_matrix(3).quad_form({1, 2, 3}) == 14);
  SymMatrix s = add(m, scale(-1.0, m));
  CHECK(s.max_entry() == 0);
  CHECK(s.min_entry() == 0);
}

TEST_CASE("rng determinism and split independence") {
  Rng a(42), b(42);
  for (int i = 0; i < 10; ++i) CHECK(a.next_u64() == b.next_u64());
  Rng c = Rng(42).split(1), d = Rng(42).split(2);
  CHECK(c.next_u64() != d.next_u64());
  Rng e(7);
  for (int i = 0; i < 1000; ++i) {
    double u = e.uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}
