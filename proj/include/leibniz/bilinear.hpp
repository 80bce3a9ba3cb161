#pragma once

#include "leibniz/exactla.hpp"

namespace leibniz {

// B : U x V -> W as a W x (U*V) coefficient matrix; column i*dim(V)+j holds B(u_i, v_j).
template <typename Scalar>
class BasicBilinearMap {
 public:
  using Matrix = MatrixX<Scalar>;
  using Vector = VectorX<Scalar>;

  BasicBilinearMap() = default;
  BasicBilinearMap(Index left, Index right, Index out)
      : left_(left), right_(right), coeff_(Matrix::Zero(out, left * right)) {}
  BasicBilinearMap(Index left, Index right, Matrix coeff) : left_(left), right_(right), coeff_(std::move(coeff)) {}

  static BasicBilinearMap zero(Index left, Index right, Index out) { return {left, right, out}; }

  Index left_dim() const { return left_; }
  Index right_dim() const { return right_; }
  Index out_dim() const { return coeff_.rows(); }
  const Matrix& coeff() const { return coeff_; }

  auto at(Index i, Index j) const { return coeff_.col(i * right_ + j); }
  auto at(Index i, Index j) { return coeff_.col(i * right_ + j); }

  template <typename U, typename V>
  Vector operator()(const Eigen::MatrixBase<U>& u, const Eigen::MatrixBase<V>& v) const {
    Vector out = Vector::Zero(out_dim());
    for (Index i = 0; i < left_; ++i) {
      if (u(i) == Scalar(0)) continue;
      for (Index j = 0; j < right_; ++j) {
        if (v(j) == Scalar(0)) continue;
        out += (u(i) * v(j)) * at(i, j);
      }
    }
    return out;
  }

  // (u, v) -> B(v, u)
  BasicBilinearMap flipped() const {
    BasicBilinearMap f(right_, left_, out_dim());
    for (Index i = 0; i < left_; ++i)
      for (Index j = 0; j < right_; ++j) f.at(j, i) = at(i, j);
    return f;
  }

  // (u, v) -> B(a u, b v)
  template <typename A, typename B>
  BasicBilinearMap precompose(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) const {
    // Column pairs through operator(), which skips zero coordinates; a dense product with
    // kron(a, b) spends nearly all its time on zeros.
    BasicBilinearMap out(a.cols(), b.cols(), out_dim());
    for (Index p = 0; p < a.cols(); ++p)
      for (Index q = 0; q < b.cols(); ++q) out.at(p, q) = (*this)(a.col(p), b.col(q));
    return out;
  }

  friend BasicBilinearMap operator+(const BasicBilinearMap& x, const BasicBilinearMap& y) {
    return {x.left_, x.right_, Matrix(x.coeff_ + y.coeff_)};
  }
  friend BasicBilinearMap operator-(const BasicBilinearMap& x, const BasicBilinearMap& y) {
    return {x.left_, x.right_, Matrix(x.coeff_ - y.coeff_)};
  }
  friend BasicBilinearMap operator-(const BasicBilinearMap& x) { return {x.left_, x.right_, Matrix(-x.coeff_)}; }
  friend BasicBilinearMap operator*(const Scalar& c, const BasicBilinearMap& x) {
    return {x.left_, x.right_, Matrix(c * x.coeff_)};
  }
  // L o B
  template <typename L>
  friend BasicBilinearMap operator*(const Eigen::MatrixBase<L>& l, const BasicBilinearMap& x) {
    return {x.left_, x.right_, Matrix(l * x.coeff_)};
  }

  friend bool operator==(const BasicBilinearMap& x, const BasicBilinearMap& y) {
    return x.left_ == y.left_ && x.right_ == y.right_ && same(x.coeff_, y.coeff_);
  }

 private:
  Index left_ = 0;
  Index right_ = 0;
  Matrix coeff_;
};

using BilinearMap = BasicBilinearMap<Scalar>;

}  // namespace leibniz
