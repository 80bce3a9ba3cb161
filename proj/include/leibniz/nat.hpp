#pragma once

#include "leibniz/braid.hpp"

namespace leibniz {

// M ⋆ N as a quotient of the ambient space (M ⊗ N) ⊕ (N ⊗ M).
// Coordinates: m_i ⊗ n_j at i * dim N + j, n_j ⊛ m_i at dim M * dim N + j * dim M + i.
struct TensorProduct {
  Algebra left;   // M
  Algebra right;  // N
  QuotientPresentation pres;
  Algebra algebra;
  BilinearMap ambient_bracket;  // generator brackets on the ambient space
  BilinearMap ot;               // M x N -> M ⋆ N
  BilinearMap oast;             // N x M -> M ⋆ N
  Report report;                // well-definedness certificate and the Leibniz check

  Index ambient_dim() const { return pres.ambient_dim; }
  Index dim() const { return pres.dim(); }
};

// n_on_m holds (*₁, *₂), m_on_n holds (·₁, ·₂). With lie_collapse the relations
// n ⊛ m + m ⊗ n are added. Throws Error(BracketNotWellDefined) or Error(DimensionMismatch).
TensorProduct nonabelian_tensor(const LeibnizAction& n_on_m, const LeibnizAction& m_on_n, bool lie_collapse = false);
TensorProduct tensor_square(const Algebra& m, bool lie_collapse = false);

struct TensorCrossedModule {
  TensorProduct tensor;
  CrossedModule xmod;  // (M ⋆ M, M)
  Report report;
};
// Throws Error(NotLeibniz) or Error(ActionNotDescending).
TensorCrossedModule tensor_crossed_module(const Algebra& m, bool lie_collapse = false);
CrossedModule tensor_self_xmod(const Algebra& m, bool lie_collapse = false);
// {m, m'} = m ⊗ m', ⟨m, m'⟩ = m ⊛ m'.
BraidedXMod tensor_braiding(const Algebra& m, bool lie_collapse = false);

// [m1, m3] ⊗ m2 = [m1, m3] ⊛ m2 and m1 ⊗ [m2, m3] = m1 ⊛ [m2, m3] in the quotient.
Report check_collapse_identities(const TensorProduct& t);

}  // namespace leibniz
