#pragma once

#include <optional>

#include "leibniz/algebra.hpp"

namespace leibniz {

// Internal category (C1, C0, s, t, e); composition is derived, never stored.
class CatAlgebra {
 public:
  CatAlgebra() = default;
  // Throws Error(InvalidCatAlgebra) unless s e = id = t e and s, t, e are homomorphisms.
  CatAlgebra(Algebra arrows, Algebra objects, Matrix source, Matrix target, Matrix identity);

  const Algebra& arrows() const { return arrows_; }
  const Algebra& objects() const { return objects_; }
  const Matrix& source() const { return source_; }
  const Matrix& target() const { return target_; }
  const Matrix& identity() const { return identity_; }

  // x followed by y, for t x = s y.
  Vector compose(const Vector& x, const Vector& y) const { return x - identity_ * (target_ * x) + y; }

 private:
  Algebra arrows_;
  Algebra objects_;
  Matrix source_;
  Matrix target_;
  Matrix identity_;
};

CatAlgebra discrete_category(const Algebra& a);

struct CatBraiding {
  BilinearMap tau;  // C0 x C0 -> C1
  BilinearMap psi;
};

struct Composition {
  Subspace pullback;  // {(x, y) : t x = s y} in C1 ⊕ C1
  Matrix k;           // C1 x 2 dim C1: (x, y) -> x - e t x + y on the whole sum
  Report report;
};
Composition derive_k(const CatAlgebra& c);

// [ker s, ker t] = 0 inside C1.
Report check_kernel_commutator(const CatAlgebra& c);

Report check_cat_braiding_leibniz(const CatAlgebra& c, const CatBraiding& b);
Report check_cat_braiding_lie(const CatAlgebra& c, const BilinearMap& tau);
// (tau, psi(a, b) = -tau(b, a)); throws Error(NotLieCatBraiding).
CatBraiding cat_braiding_embed_lie(const CatAlgebra& c, const BilinearMap& tau);
// tau(a, [b, c]) = [e a, tau(b, c)] and tau([b, c], a) = [tau(b, c), e a].
Report check_tau_bracket_identity(const CatAlgebra& c, const BilinearMap& tau);

Report check_cat_functor(const Matrix& f1, const Matrix& f0, const CatAlgebra& src, const CatAlgebra& dst);
Report check_cat_functor(const Matrix& f1, const Matrix& f0, const CatAlgebra& src, const CatAlgebra& dst,
                         const CatBraiding& src_braiding, const CatBraiding& dst_braiding);

// Ideal of C1 generated by squares and tau(a, b) + psi(b, a).
Subspace cat_lie_ideal(const CatAlgebra& c, const CatBraiding& b);

struct CatLieization {
  CatAlgebra lie;          // C1 / [tau], Lie(C0)
  BilinearMap tau;         // induced on the quotients
  QuotientAlgebra arrows;  // C1 / [tau]
  QuotientAlgebra objects; // Lie(C0)
  Report report;
};
// Throws Error(InvalidCatAlgebra) when the structure maps do not descend.
CatLieization cat_lieization(const CatAlgebra& c, const CatBraiding& b);

}  // namespace leibniz
