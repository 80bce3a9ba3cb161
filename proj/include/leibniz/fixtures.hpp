#pragma once

#include "leibniz/braid.hpp"
#include "leibniz/equiv.hpp"

namespace leibniz::fixtures {

Algebra a1();  // 1-dim abelian
Algebra l2();  // [e1, e1] = e0; Leibniz, not Lie
Algebra r2();  // [e0, e1] = e0 = -[e1, e0]; non-abelian Lie

BraidedXMod trivial_a1();   // zero action, boundary and braiding
BraidedXMod identity_l2();  // (L2, L2, adjoint, Id) with {-,-} = ⟨-,-⟩ = bracket
LieBraidedXMod identity_lie_r2();
BraidedXMod embedded_r2();  // identity_lie_r2 seen as a Leibniz braided crossed module
BraidedXMod tensor_l2();    // canonical braiding of L2 ⋆ L2 over L2
BraidedXMod corrupted_l2(); // identity_l2 with {e1, e1} = 2 e0; fails BLeib1 at (1, 1)

// trivial-A1, identity-L2, embedded-R2, tensor-L2
std::vector<NamedSeed> seeds();

}  // namespace leibniz::fixtures
