#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "otbook/linalg.hpp"

using namespace otbook;

namespace {

oracle::Grid grid(const IntMatrix& m) {
  oracle::Grid g(m.size(), std::vector<std::int64_t>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) g[i][j] = m(i, j);
  return g;
}

IntMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, int lo, int hi, double density) {
  std::uniform_int_distribution<int> val(lo, hi);
  std::bernoulli_distribution keep(density);
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Integer v = (i == j || keep(rng)) ? val(rng) : 0;
      m(i, j) = m(j, i) = v;
    }
  return m;
}

}  // namespace

TEST_CASE("determinant: small literal cases") {
  CHECK(determinant(IntMatrix{}) == 1);
  CHECK(determinant(IntMatrix{{-3, -4}, {-2, -4}}) == 4);
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(IntMatrix{{-1, -2, -2}, {-2, -1, -2}, {-2, -2, -4}}) == 4);
  CHECK(determinant(IntMatrix{{1, 2}, {2, 4}}) == 0);
}

TEST_CASE("determinant: Bareiss, sparse elimination and Leibniz expansion agree") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 600; ++it) {
    const std::size_t n = 1 + it % 7;
    const IntMatrix m = random_symmetric(rng, n, -5, 5, it % 2 ? 0.3 : 0.9);
    const auto want = oracle::det(grid(m));
    CHECK(static_cast<oracle::i128>(determinant(m)) == want);
    CHECK(static_cast<oracle::i128>(determinant_bareiss(m)) == want);
    const Rational e = determinant_elimination(to_rational(m));
    CHECK(e.is_integer());
    CHECK(static_cast<oracle::i128>(e.num()) == want);
  }
}

TEST_CASE("determinant of long tridiagonal chains matches cofactor expansion") {
  for (std::size_t n : {10u, 40u, 120u}) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = i % 17 == 0 ? -3 : -2;
      if (i + 1 < n) m(i, i + 1) = m(i + 1, i) = 1;
    }
    // Tridiagonal recurrence: D_i = a_i D_{i-1} - D_{i-2}.
    oracle::i128 prev = 1, cur = m(0, 0);
    for (std::size_t i = 1; i < n; ++i) {
      const oracle::i128 next = m(i, i) * cur - prev;
      prev = cur;
      cur = next;
    }
    CHECK(static_cast<oracle::i128>(determinant(m)) == cur);
    if (n == 10) CHECK(oracle::det_cofactor(grid(m)) == cur);
  }
}

TEST_CASE("inertia matches Jacobi eigenvalues, including singular matrices") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 600; ++it) {
    const std::size_t n = 1 + it % 7;
    IntMatrix m = random_symmetric(rng, n, -4, 4, 0.6);
    if (it % 5 == 0 && n >= 2) {
      // Force a zero pivot with nonzero off-diagonal (the e_k + e_j case).
      m(0, 0) = 0;
      m(1, 1) = 0;
    }
    const Inertia got = inertia(to_rational(m));
    const auto want = oracle::inertia(grid(m));
    CHECK(got.positive == want.positive);
    CHECK(got.negative == want.negative);
    CHECK(got.zero == want.zero);
    CHECK(got.positive + got.negative + got.zero == static_cast<int>(n));
  }
  CHECK(signature(IntMatrix{{0, -1}, {-1, -2}}) == 0);
  CHECK(signature(IntMatrix{{-2, 1, 0}, {1, -2, 1}, {0, 1, -2}}) == -3);
}

TEST_CASE("solve returns the exact rational solution") {
  const IntMatrix q{{-1, -2, -2}, {-2, -1, -2}, {-2, -2, -4}};
  const std::vector<Integer> rho{-1, -1, -2};
  const auto x = solve(q, rho);
  REQUIRE(x.size() == 3);
  CHECK(x[0] == Rational(0));
  CHECK(x[1] == Rational(0));
  CHECK(x[2] == Rational(1, 2));
  CHECK(dot(x, rho) == Rational(-1));
  CHECK_THROWS_AS(solve(IntMatrix{{1, 2}, {2, 4}}, std::vector<Integer>{1, 1}), SingularMatrix);

  std::mt19937_64 rng(5);
  for (int it = 0; it < 300; ++it) {
    const std::size_t n = 1 + it % 6;
    const IntMatrix a = random_symmetric(rng, n, -5, 5, 0.7);
    if (determinant(a) == 0) continue;
    std::vector<Integer> b(n);
    for (auto& v : b) v = static_cast<Integer>(rng() % 11) - 5;
    const auto sol = solve(a, b);
    for (std::size_t i = 0; i < n; ++i) {
      Rational row(0);
      for (std::size_t j = 0; j < n; ++j) row += Rational(a(i, j)) * sol[j];
      CHECK(row == Rational(b[i]));
    }
  }
}
