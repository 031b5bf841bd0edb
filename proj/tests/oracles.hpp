#pragma once

// Reference computations for the tests. Deliberately naive and independent of
// the library's algorithms: permutation-expansion determinants, Jacobi
// eigenvalues for inertia, and continued fractions over plain 128-bit pairs.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using i128 = __int128;
using Grid = std::vector<std::vector<std::int64_t>>;

// Leibniz expansion; fine up to 8x8.
inline i128 det(const Grid& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  i128 total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    i128 term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Cofactor expansion along the first row, for larger sparse matrices.
inline i128 det_cofactor(const Grid& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  i128 total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    Grid minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t cc = 0; cc < n; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      minor.push_back(row);
    }
    total += (c % 2 ? -1 : 1) * static_cast<i128>(m[0][c]) * det_cofactor(minor);
  }
  return total;
}

struct Inertia {
  int positive = 0, negative = 0, zero = 0;
};

// Cyclic Jacobi rotation; entries are small integers so eigenvalues of a
// singular matrix land well inside the tolerance.
inline Inertia inertia(const Grid& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<double>(g[i][j]);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-22) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  Inertia out;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i][i] > 1e-7)
      ++out.positive;
    else if (a[i][i] < -1e-7)
      ++out.negative;
    else
      ++out.zero;
  }
  return out;
}

// Fraction as (num, den) with den > 0, reduced.
struct Frac {
  i128 num = 0, den = 1;
};

inline i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline Frac reduce(i128 n, i128 d) {
  if (d < 0) n = -n, d = -d;
  const i128 g = gcd128(n, d);
  return g ? Frac{n / g, d / g} : Frac{0, 1};
}

// a1 - 1/(a2 - 1/(...)) via the convergent recurrence, which never divides:
// P_i = a_i P_{i-1} - P_{i-2}. A zero final denominator is the pole.
inline std::optional<Frac> cf(const std::vector<std::int64_t>& a) {
  if (a.empty()) return std::nullopt;
  i128 p_prev = 1, p = a[0], q_prev = 0, q = 1;
  for (std::size_t i = 1; i < a.size(); ++i) {
    const i128 pn = a[i] * p - p_prev, qn = a[i] * q - q_prev;
    p_prev = p, p = pn, q_prev = q, q = qn;
  }
  if (q == 0) return std::nullopt;
  return reduce(p, q);
}

// Plain Gaussian elimination over 128-bit fractions, for the property suites
// where Leibniz expansion is too slow.
inline i128 det_gauss(const Grid& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<Frac>> a(n, std::vector<Frac>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = {g[i][j], 1};
  Frac result{1, 1};
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c].num == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      result.num = -result.num;
    }
    result = reduce(result.num * a[c][c].num, result.den * a[c][c].den);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c].num == 0) continue;
      const Frac f = reduce(a[r][c].num * a[c][c].den, a[r][c].den * a[c][c].num);
      for (std::size_t k = c; k < n; ++k) {
        const Frac t = reduce(f.num * a[c][k].num, f.den * a[c][k].den);
        a[r][k] = reduce(a[r][k].num * t.den - t.num * a[r][k].den, a[r][k].den * t.den);
      }
    }
  }
  return result.num / result.den;
}

inline std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

}  // namespace oracle
