#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "otbook/rational.hpp"

namespace otbook {

// Dense row-major square matrix. Sizes here are small (a few hundred at most).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n, const T& fill = T{}) : n_(n), data_(n * n, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) : n_(rows.size()), data_() {
    data_.reserve(n_ * n_);
    for (const auto& row : rows) {
      if (row.size() != n_) throw DomainError("matrix literal is not square");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  std::size_t size() const { return n_; }
  bool empty() const { return n_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m);

// Determinant of an integer matrix. Dense inputs go through fraction-free
// Bareiss elimination; sparse ones through elimination over the rationals that
// skips zero entries. Both routes are exact.
Integer determinant(const IntMatrix& m);
Integer determinant_bareiss(IntMatrix m);
Rational determinant_elimination(RatMatrix m);

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  int signature() const { return positive - negative; }
};

// Inertia of a symmetric matrix by exact congruence diagonalization.
Inertia inertia(RatMatrix m);
int signature(const IntMatrix& m);

// Unique solution of A x = b; throws SingularMatrix when det A = 0.
std::vector<Rational> solve(const IntMatrix& a, std::span<const Integer> b);
std::vector<Rational> solve(RatMatrix a, std::vector<Rational> b);

Rational dot(std::span<const Rational> x, std::span<const Integer> y);

}  // namespace otbook
