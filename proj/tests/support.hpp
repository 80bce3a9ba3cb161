#pragma once

#include <initializer_list>
#include <random>

#include "leibniz/algebra.hpp"

namespace testing_support {

using namespace leibniz;

inline Matrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  Matrix m(static_cast<Index>(rows.size()), rows.size() ? static_cast<Index>(rows.begin()->size()) : 0);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (long v : row) m(i, j++) = Scalar(v);
    ++i;
  }
  return m;
}

inline Vector vec(std::initializer_list<long> entries) {
  Vector v(static_cast<Index>(entries.size()));
  Index i = 0;
  for (long x : entries) v(i++) = Scalar(x);
  return v;
}

inline Scalar random_rational(std::mt19937& rng, long range = 5) {
  std::uniform_int_distribution<long> num(-range, range), den(1, range);
  return Scalar(num(rng), den(rng));
}

inline Vector random_vector(std::mt19937& rng, Index n, long range = 5) {
  Vector v(n);
  for (Index i = 0; i < n; ++i) v(i) = random_rational(rng, range);
  return v;
}

inline Matrix random_matrix(std::mt19937& rng, Index rows, Index cols, long range = 3) {
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = random_rational(rng, range);
  return m;
}

// Sparse 0/±1/±2 entries so row reduction sees plenty of rank deficiency.
inline Matrix random_sparse_matrix(std::mt19937& rng, Index rows, Index cols) {
  std::uniform_int_distribution<long> d(-2, 2);
  std::bernoulli_distribution keep(0.4);
  Matrix m = Matrix::Zero(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j)
      if (keep(rng)) m(i, j) = Scalar(d(rng));
  return m;
}

// Independent of check_leibniz: evaluates the identity on arbitrary vectors.
inline bool leibniz_on(const Algebra& a, const Vector& x, const Vector& y, const Vector& z) {
  return is_zero(Vector(a(x, a(y, z)) - a(a(x, y), z) + a(a(x, z), y)));
}

}  // namespace testing_support
