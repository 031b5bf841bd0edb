#include "otbook/linalg.hpp"

#include <utility>

namespace otbook {

namespace {

bool is_dense(const IntMatrix& m) {
  std::size_t n = m.size(), nnz = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j) != 0) ++nnz;
  return nnz * 4 > n * n;
}

template <class T>
void swap_rows(Matrix<T>& m, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < m.size(); ++j) std::swap(m(a, j), m(b, j));
}

template <class T>
void swap_symmetric(Matrix<T>& m, std::size_t a, std::size_t b) {
  swap_rows(m, a, b);
  for (std::size_t i = 0; i < m.size(); ++i) std::swap(m(i, a), m(i, b));
}

// Forward Bareiss elimination on [A | b]; afterwards A is upper triangular and
// the system is equivalent to the original. Returns false if A is singular.
bool bareiss_forward(IntMatrix& a, std::vector<Integer>* rhs, int* sign) {
  const std::size_t n = a.size();
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a(piv, k) == 0) ++piv;
      if (piv == n) return false;
      swap_rows(a, k, piv);
      if (rhs) std::swap((*rhs)[k], (*rhs)[piv]);
      *sign = -*sign;
    }
    const __int128 p = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const __int128 lead = a(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        if (lead == 0 && a(i, j) == 0) continue;
        __int128 v = static_cast<__int128>(a(i, j)) * p - lead * a(k, j);
        a(i, j) = checked::narrow(v / prev);
      }
      if (rhs) {
        __int128 v = static_cast<__int128>((*rhs)[i]) * p - lead * (*rhs)[k];
        (*rhs)[i] = checked::narrow(v / prev);
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return true;
}

// Gaussian elimination over Q, skipping rows whose pivot-column entry is zero.
bool rational_forward(RatMatrix& a, std::vector<Rational>* rhs, int* sign) {
  const std::size_t n = a.size();
  std::vector<std::size_t> cols;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && a(piv, k).is_zero()) ++piv;
      if (piv == n) return false;
      swap_rows(a, k, piv);
      if (rhs) std::swap((*rhs)[k], (*rhs)[piv]);
      *sign = -*sign;
    }
    cols.clear();
    for (std::size_t j = k + 1; j < n; ++j)
      if (!a(k, j).is_zero()) cols.push_back(j);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      Rational f = a(i, k) / a(k, k);
      for (std::size_t j : cols) a(i, j) -= f * a(k, j);
      if (rhs && !(*rhs)[k].is_zero()) (*rhs)[i] -= f * (*rhs)[k];
      a(i, k) = Rational(0);
    }
  }
  return true;
}

template <class T>
std::vector<Rational> back_substitute(const Matrix<T>& u, const std::vector<T>& rhs) {
  const std::size_t n = u.size();
  std::vector<Rational> x(n);
  for (std::size_t r = n; r-- > 0;) {
    Rational acc(rhs[r]);
    for (std::size_t j = r + 1; j < n; ++j)
      if (!(u(r, j) == T{}) && !x[j].is_zero()) acc -= Rational(u(r, j)) * x[j];
    x[r] = acc / Rational(u(r, r));
  }
  return x;
}

}  // namespace

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

Integer determinant_bareiss(IntMatrix m) {
  if (m.empty()) return 1;
  int sign = 1;
  if (!bareiss_forward(m, nullptr, &sign)) return 0;
  return sign * m(m.size() - 1, m.size() - 1);
}

Rational determinant_elimination(RatMatrix m) {
  int sign = 1;
  if (!rational_forward(m, nullptr, &sign)) return Rational(0);
  Rational det(sign);
  for (std::size_t k = 0; k < m.size(); ++k) det *= m(k, k);
  return det;
}

Integer determinant(const IntMatrix& m) {
  if (is_dense(m)) return determinant_bareiss(m);
  Rational d = determinant_elimination(to_rational(m));
  if (!d.is_integer()) throw InvariantViolation("non-integral determinant of an integer matrix");
  return d.num();
}

Inertia inertia(RatMatrix a) {
  if (!a.is_symmetric()) throw DomainError("inertia requires a symmetric matrix");
  const std::size_t n = a.size();
  Inertia result;
  std::vector<std::size_t> cols;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t j = k + 1;
      while (j < n && a(j, j).is_zero()) ++j;
      if (j < n) {
        swap_symmetric(a, k, j);
      } else {
        j = k + 1;
        while (j < n && a(k, j).is_zero()) ++j;
        if (j == n) {
          ++result.zero;
          continue;
        }
        // Congruence e_k -> e_k + e_j makes the diagonal entry 2 a(k, j) != 0.
        for (std::size_t t = k; t < n; ++t) a(k, t) += a(j, t);
        for (std::size_t t = k; t < n; ++t) a(t, k) += a(t, j);
      }
    }
    const Rational p = a(k, k);
    (p.sign() > 0 ? result.positive : result.negative) += 1;
    cols.clear();
    for (std::size_t j = k + 1; j < n; ++j)
      if (!a(k, j).is_zero()) cols.push_back(j);
    for (std::size_t i : cols) {
      Rational f = a(i, k) / p;
      for (std::size_t j : cols) a(i, j) -= f * a(k, j);
    }
    for (std::size_t j : cols) {
      a(k, j) = Rational(0);
      a(j, k) = Rational(0);
    }
  }
  return result;
}

int signature(const IntMatrix& m) { return inertia(to_rational(m)).signature(); }

std::vector<Rational> solve(const IntMatrix& a, std::span<const Integer> b) {
  if (b.size() != a.size()) throw DomainError("solve: dimension mismatch");
  if (!is_dense(a)) {
    std::vector<Rational> rb(b.begin(), b.end());
    return solve(to_rational(a), std::move(rb));
  }
  IntMatrix u = a;
  std::vector<Integer> rhs(b.begin(), b.end());
  int sign = 1;
  if (!bareiss_forward(u, &rhs, &sign)) throw SingularMatrix("solve: singular matrix");
  return back_substitute(u, rhs);
}

std::vector<Rational> solve(RatMatrix a, std::vector<Rational> b) {
  if (b.size() != a.size()) throw DomainError("solve: dimension mismatch");
  int sign = 1;
  if (!rational_forward(a, &b, &sign)) throw SingularMatrix("solve: singular matrix");
  return back_substitute(a, b);
}

Rational dot(std::span<const Rational> x, std::span<const Integer> y) {
  if (x.size() != y.size()) throw DomainError("dot: dimension mismatch");
  Rational acc;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (y[i] != 0) acc += x[i] * Rational(y[i]);
  return acc;
}

}  // namespace otbook
