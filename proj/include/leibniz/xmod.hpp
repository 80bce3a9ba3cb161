#pragma once

#include "leibniz/algebra.hpp"

namespace leibniz {

// Action of `acting` (N) on `acted` (M): left is n ·₁ m, right is m ·₂ n.
struct LeibnizAction {
  Algebra acting;
  Algebra acted;
  BilinearMap left;   // N x M -> M
  BilinearMap right;  // M x N -> M
};

struct CrossedModule {
  LeibnizAction action;
  Matrix boundary;  // M -> N

  const Algebra& acted() const { return action.acted; }
  const Algebra& acting() const { return action.acting; }
};

// Lie crossed module: a single left action n · m.
struct LieCrossedModule {
  Algebra acting;
  Algebra acted;
  BilinearMap action;  // N x M -> M
  Matrix boundary;
};

Report check_action(const LeibnizAction& a);
Report check_xmod(const CrossedModule& x);

LeibnizAction adjoint_action(const Algebra& a);
LeibnizAction zero_action(const Algebra& acting, const Algebra& acted);
CrossedModule identity_xmod(const Algebra& a);

struct SemidirectProduct {
  Algebra algebra;      // M basis first, then N
  Matrix include_acted;   // M -> M ⋊ N
  Matrix include_acting;  // N -> M ⋊ N
};
// Throws Error(ActionInvalid).
SemidirectProduct semidirect(const LeibnizAction& a);

Report check_lie_action(const Algebra& acting, const Algebra& acted, const BilinearMap& dot);
Report check_lie_xmod(const LieCrossedModule& x);
// (dot, m ·₂ n = -n · m); throws Error(NotLieAction).
LeibnizAction lie_action_embed(const Algebra& acting, const Algebra& acted, const BilinearMap& dot);
// Throws Error(NotLieXMod).
CrossedModule lie_xmod_embed(const LieCrossedModule& x);

Report check_xmod_hom(const Matrix& f_acted, const Matrix& f_acting, const CrossedModule& src,
                      const CrossedModule& dst);

// [M, N]_x: ideal of M generated by squares and n ·₁ m + m ·₂ n, closed under the bracket of M
// and both actions of N.
Subspace xmod_lie_ideal(const CrossedModule& x);

struct XModLieization {
  LieCrossedModule lie;
  QuotientAlgebra acted;   // M / [M, N]_x
  QuotientAlgebra acting;  // Lie(N)
  Report report;
};
XModLieization lieize_xmod(const CrossedModule& x);

}  // namespace leibniz
