#pragma once

#include <optional>

#include "leibniz/xmod.hpp"

namespace leibniz {

// curly is {n, n'}, angle is ⟨n, n'⟩; both N x N -> M.
struct LeibnizBraiding {
  BilinearMap curly;
  BilinearMap angle;
};

struct BraidedXMod {
  CrossedModule xmod;
  LeibnizBraiding braiding;

  const Algebra& acted() const { return xmod.acted(); }
  const Algebra& acting() const { return xmod.acting(); }
};

struct LieBraidedXMod {
  LieCrossedModule xmod;
  BilinearMap curly;
};

// Runs the algebra, action and crossed-module checks too, under prefixed tags.
Report check_braiding_leibniz(const BraidedXMod& b);
Report check_braiding_lie(const LieCrossedModule& x, const BilinearMap& curly);
inline Report check_braiding_lie(const LieBraidedXMod& b) { return check_braiding_lie(b.xmod, b.curly); }

// (curly, ⟨n, n'⟩ = -{n', n}); throws Error(NotLieBraiding).
LeibnizBraiding braiding_embed_lie(const LieCrossedModule& x, const BilinearMap& curly);
BraidedXMod embed_lie_bxmod(const LieBraidedXMod& b);

struct LieCollapse {
  bool collapsed = false;
  Report witnesses;     // pairs with {e_i, e_j} != -⟨e_j, e_i⟩
  Report consequences;  // what a collapse forces; empty unless collapsed
  std::optional<LieBraidedXMod> lie;
};
LieCollapse detect_lie_collapse(const BraidedXMod& b);

// Throws Error(NotLeibniz).
BraidedXMod identity_bxmod(const Algebra& a);
BraidedXMod trivial_bxmod(const Algebra& a);

Report check_bxmod_hom(const Matrix& f_acted, const Matrix& f_acting, const BraidedXMod& src, const BraidedXMod& dst);

// {M, N}_x: [M, N]_x enlarged by {n, n'} + ⟨n', n⟩.
Subspace braided_lie_ideal(const BraidedXMod& b);

struct BraidedLieization {
  LieBraidedXMod lie;
  QuotientAlgebra acted;   // M / {M, N}_x
  QuotientAlgebra acting;  // Lie(N)
  Report report;
};
BraidedLieization lieize_bxmod(const BraidedXMod& b);

}  // namespace leibniz
