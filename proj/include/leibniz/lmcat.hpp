#pragma once

#include <string>

#include "leibniz/braid.hpp"
#include "leibniz/equiv.hpp"
#include "leibniz/intcat.hpp"

namespace leibniz {

// A linear map top -> bottom, seen as an object of the category of linear maps.
struct LMObject {
  Index top = 0;
  Index bottom = 0;
  Matrix map;  // bottom x top
};

struct LMMorphism {
  Matrix top;
  Matrix bottom;
};

// Square: dst.map * f.top == f.bottom * src.map.
Report check_lm_morphism(const LMMorphism& f, const LMObject& src, const LMObject& dst);

struct LMTensorProduct {
  LMObject object;  // (M ⊗ H) ⊕ (N ⊗ L) -> N ⊗ H
  LMMorphism flip;  // a ⊗ b -> b ⊗ a
};
// Top coordinates: the M ⊗ H block first, then N ⊗ L, each left index major.
LMTensorProduct lm_tensor(const LMObject& a, const LMObject& b);

// f : M -> N over a Lie algebra N, with M a right N-module through star and f equivariant.
struct LieObjectLM {
  std::string name;
  Algebra bottom;
  Matrix map;        // N x M
  BilinearMap star;  // M x N -> M

  Index top_dim() const { return map.cols(); }
  LMObject object() const { return {map.cols(), map.rows(), map}; }
};

Report check_lie_object(const LieObjectLM& o);
// M -> Lie(M) with m * n̄ = [m, n]; throws Error(NotLeibniz).
LieObjectLM phi(const Algebra& a);
// [m, m'] = m * f(m'); throws Error(InvalidLieObject).
Algebra psi(const LieObjectLM& o);

// Lie action of (g : L -> H) on (f : M -> N) with a boundary (d1, d2).
struct XLieLM {
  LieObjectLM acted;       // f : M -> N
  LieObjectLM acting;      // g : L -> H
  BilinearMap act_top;     // H x M -> M
  BilinearMap act_bottom;  // H x N -> N
  BilinearMap xi;          // L x N -> M
  Matrix boundary_top;     // M -> L
  Matrix boundary_bottom;  // N -> H
};

Report check_xlielm(const XLieLM& x);
// (M -> M / [M, N]_x, N -> Lie(N)); throws Error(InvalidXMod).
XLieLM xphi(const CrossedModule& z);
// Throws Error(InvalidXLieLM).
CrossedModule xpsi(const XLieLM& x);

struct LMBraidingTriple {
  BilinearMap lh;      // L x H -> M
  BilinearMap hl;      // H x L -> M
  BilinearMap bottom;  // H x H -> N
};

struct BraidedXLieLM {
  XLieLM xmod;
  LMBraidingTriple braiding;
};

Report check_lm_braiding(const XLieLM& x, const LMBraidingTriple& t);
// Over M / {M, N}_x with lh(n, n̄') = {n, n'}, hl(n̄, n') = -⟨n', n⟩; throws Error(InvalidBraidedXMod).
BraidedXLieLM bxphi(const BraidedXMod& z);
// {l, l'} = lh(l, g l'), ⟨l, l'⟩ = -hl(g l', l); throws Error(InvalidTriple).
BraidedXMod bxpsi(const XLieLM& x, const LMBraidingTriple& t);

// Internal category in Lie objects: both components carry (s, t, e), the composition is derived.
struct CatLieObjectLM {
  LieObjectLM arrows;   // f1 : C1 -> D1
  LieObjectLM objects;  // f0 : C0 -> D0
  LMMorphism source;
  LMMorphism target;
  LMMorphism identity;

  CatAlgebra bottom() const;  // (D1, D0, s2, t2, e2); throws Error(InvalidCatAlgebra)
};

Report check_cat_lie_object(const CatLieObjectLM& c);
// Lieization in the bottom component; throws Error(InvalidCatAlgebra).
CatLieObjectLM iphi(const CatAlgebra& c);
// Throws Error(InvalidCatLieObjectLM).
CatAlgebra ipsi(const CatLieObjectLM& c);

struct CatLMBraiding {
  BilinearMap cd;      // C0 x D0 -> C1
  BilinearMap dc;      // D0 x C0 -> C1
  BilinearMap bottom;  // D0 x D0 -> D1
};

struct BraidedCatLieObjectLM {
  CatLieObjectLM cat;
  CatLMBraiding braiding;
};

Report check_cat_lm_braiding(const CatLieObjectLM& c, const CatLMBraiding& b);
// Over C1 / [tau] and Lie(C0) with cd(a, b̄) = tau(a, b), dc(ā, b) = -psi(b, a);
// throws Error(InvalidBraidedCat).
BraidedCatLieObjectLM biphi(const BraidedCatAlgebra& d);
// tau(a, b) = cd(a, f0 b), psi(a, b) = -dc(f0 b, a); throws Error(InvalidCatLMBraiding).
BraidedCatAlgebra bipsi(const CatLieObjectLM& c, const CatLMBraiding& b);

}  // namespace leibniz
