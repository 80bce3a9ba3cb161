#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "leibniz/rational.hpp"

namespace leibniz {

using Index = Eigen::Index;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!(m(i, j) == Scalar(0))) return false;
  return true;
}

template <typename A, typename B>
bool same(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a == b;
}

template <typename Scalar>
struct RowEchelon {
  MatrixX<Scalar> form;
  std::vector<Index> pivots;
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

// Gauss-Jordan with the leftmost pivot column and the first nonzero row in it.
template <typename Derived>
RowEchelon<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  RowEchelon<Scalar> out{m, {}};
  MatrixX<Scalar>& a = out.form;
  Index row = 0;
  for (Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Index r = row;
    while (r < a.rows() && a(r, col) == Scalar(0)) ++r;
    if (r == a.rows()) continue;
    if (r != row) a.row(r).swap(a.row(row));
    Scalar inv = Scalar(1) / a(row, col);
    if (!(inv == Scalar(1))) a.row(row) *= inv;
    for (Index i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == Scalar(0)) continue;
      Scalar factor = a(i, col);
      a.row(i) -= factor * a.row(row);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

template <typename Derived>
std::optional<MatrixX<typename Derived::Scalar>> inverse(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Index n = m.rows();
  if (m.cols() != n) return std::nullopt;
  MatrixX<Scalar> aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = MatrixX<Scalar>::Identity(n, n);
  auto e = rref(aug);
  if (e.rank() < n || e.pivots[static_cast<std::size_t>(n - 1)] >= n) return std::nullopt;
  return MatrixX<Scalar>(e.form.rightCols(n));
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return rref(m).rank();
}

// a ⊗ b with (i, j) block a(i, j) * b.
template <typename A, typename B>
MatrixX<typename A::Scalar> kron(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  MatrixX<typename A::Scalar> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

template <typename A, typename B>
MatrixX<typename A::Scalar> direct_sum(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  MatrixX<typename A::Scalar> out = MatrixX<typename A::Scalar>::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

// Subspace of Scalar^n kept as the nonzero rows of a reduced row-echelon form.
template <typename Scalar>
class BasicSubspace {
 public:
  using Vector = VectorX<Scalar>;
  using Matrix = MatrixX<Scalar>;

  BasicSubspace() = default;
  explicit BasicSubspace(Index ambient) : ambient_(ambient), basis_(0, ambient) {}

  static BasicSubspace zero(Index ambient) { return BasicSubspace(ambient); }
  static BasicSubspace full(Index ambient) { return span_rows(Matrix::Identity(ambient, ambient)); }

  template <typename Derived>
  static BasicSubspace span_rows(const Eigen::MatrixBase<Derived>& rows) {
    BasicSubspace s(rows.cols());
    auto e = rref(rows);
    s.basis_ = e.form.topRows(e.rank());
    s.pivots_ = std::move(e.pivots);
    return s;
  }
  template <typename Derived>
  static BasicSubspace span_columns(const Eigen::MatrixBase<Derived>& cols) {
    return span_rows(cols.transpose());
  }
  static BasicSubspace span(Index ambient, const std::vector<Vector>& vectors) {
    Matrix rows(static_cast<Index>(vectors.size()), ambient);
    for (std::size_t i = 0; i < vectors.size(); ++i) rows.row(static_cast<Index>(i)) = vectors[i].transpose();
    return span_rows(rows);
  }

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }
  Vector vector(Index i) const { return basis_.row(i).transpose(); }
  // Columns are the basis vectors; maps subspace coordinates into the ambient space.
  Matrix embedding() const { return basis_.transpose(); }

  // v minus its expansion along the pivots; zero exactly when v is a member.
  Vector reduce(Vector v) const {
    for (Index i = 0; i < dim(); ++i) {
      const Scalar c = v(pivots_[i]);
      if (!(c == Scalar(0))) v -= c * basis_.row(i).transpose();
    }
    return v;
  }
  bool contains(const Vector& v) const { return is_zero(reduce(v)); }
  bool contains(const BasicSubspace& o) const {
    for (Index i = 0; i < o.dim(); ++i)
      if (!contains(o.vector(i))) return false;
    return true;
  }
  // Coordinates of a member with respect to basis(); meaningless for non-members.
  Vector coordinates(const Vector& v) const {
    Vector c(dim());
    for (Index i = 0; i < dim(); ++i) c(i) = v(pivots_[i]);
    return c;
  }
  // Coordinate matrix of the columns of m, which must all be members.
  template <typename Derived>
  Matrix coordinates_of_columns(const Eigen::MatrixBase<Derived>& m) const {
    Matrix c(dim(), m.cols());
    for (Index i = 0; i < dim(); ++i) c.row(i) = m.row(pivots_[i]);
    return c;
  }

  BasicSubspace join(const BasicSubspace& o) const {
    Matrix rows(dim() + o.dim(), ambient_);
    rows.topRows(dim()) = basis_;
    rows.bottomRows(o.dim()) = o.basis_;
    return span_rows(rows);
  }
  BasicSubspace join(const Vector& v) const {
    Matrix rows(dim() + 1, ambient_);
    rows.topRows(dim()) = basis_;
    rows.row(dim()) = v.transpose();
    return span_rows(rows);
  }

  friend bool operator==(const BasicSubspace& a, const BasicSubspace& b) {
    return a.ambient_ == b.ambient_ && same(a.basis_, b.basis_);
  }

 private:
  Index ambient_ = 0;
  Matrix basis_;
  std::vector<Index> pivots_;
};

// Right null space.
template <typename Derived>
BasicSubspace<typename Derived::Scalar> kernel(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  auto e = rref(m);
  const Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  MatrixX<Scalar> rows = MatrixX<Scalar>::Zero(n - e.rank(), n);
  Index r = 0;
  for (Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    rows(r, free) = Scalar(1);
    for (Index i = 0; i < e.rank(); ++i) rows(r, e.pivots[static_cast<std::size_t>(i)]) = -e.form(i, free);
    ++r;
  }
  return BasicSubspace<Scalar>::span_rows(rows);
}

template <typename Derived>
BasicSubspace<typename Derived::Scalar> image(const Eigen::MatrixBase<Derived>& m) {
  return BasicSubspace<typename Derived::Scalar>::span_columns(m);
}

template <typename Scalar>
struct BasicQuotientPresentation {
  Index ambient_dim = 0;
  BasicSubspace<Scalar> relations;
  MatrixX<Scalar> proj;     // dim x ambient_dim
  MatrixX<Scalar> section;  // ambient_dim x dim
  Index dim() const { return proj.rows(); }
};

// Representatives are the non-pivot coordinates of the relation basis.
template <typename Scalar>
BasicQuotientPresentation<Scalar> quotient(Index ambient_dim, const BasicSubspace<Scalar>& rel) {
  BasicQuotientPresentation<Scalar> q{ambient_dim, rel, {}, {}};
  std::vector<Index> free;
  std::size_t next = 0;
  for (Index c = 0; c < ambient_dim; ++c) {
    if (next < rel.pivots().size() && rel.pivots()[next] == c) {
      ++next;
      continue;
    }
    free.push_back(c);
  }
  const Index d = static_cast<Index>(free.size());
  q.proj = MatrixX<Scalar>::Zero(d, ambient_dim);
  q.section = MatrixX<Scalar>::Zero(ambient_dim, d);
  for (Index a = 0; a < d; ++a) q.section(free[static_cast<std::size_t>(a)], a) = Scalar(1);
  for (Index c = 0; c < ambient_dim; ++c) {
    VectorX<Scalar> e = VectorX<Scalar>::Zero(ambient_dim);
    e(c) = Scalar(1);
    VectorX<Scalar> r = rel.reduce(e);
    for (Index a = 0; a < d; ++a) q.proj(a, c) = r(free[static_cast<std::size_t>(a)]);
  }
  return q;
}

// {(x, y) : f x = g y} inside the direct sum of the two domains.
template <typename F, typename G>
BasicSubspace<typename F::Scalar> pullback_subspace(const Eigen::MatrixBase<F>& f, const Eigen::MatrixBase<G>& g) {
  MatrixX<typename F::Scalar> joined(f.rows(), f.cols() + g.cols());
  joined.leftCols(f.cols()) = f;
  joined.rightCols(g.cols()) = -g;
  return kernel(joined);
}

using Scalar = Rational;
using Matrix = MatrixX<Scalar>;
using Vector = VectorX<Scalar>;
using Subspace = BasicSubspace<Scalar>;
using QuotientPresentation = BasicQuotientPresentation<Scalar>;

inline Vector unit(Index n, Index i) {
  Vector v = Vector::Zero(n);
  v(i) = Scalar(1);
  return v;
}

}  // namespace leibniz
