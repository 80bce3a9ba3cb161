#pragma once

#include <string>
#include <variant>
#include <vector>

#include "leibniz/braid.hpp"
#include "leibniz/intcat.hpp"

namespace leibniz {

struct BraidedCatAlgebra {
  CatAlgebra cat;
  CatBraiding braiding;
};

// (M ⋊ N, N, s(m, n) = n, t(m, n) = ∂m + n, e(n) = (0, n)) with tau(n, n') = (-2{n, n'}, [n, n'])
// and psi(n, n') = (-2⟨n, n'⟩, [n, n']). Throws Error(InvalidBraidedXMod).
BraidedCatAlgebra functor_C(const BraidedXMod& z);

// (ker s, C0) with a ·₁ x = [e a, x], x ·₂ a = [x, e a], ∂ = t restricted, {a, b} = (e[a, b] - tau(a, b)) / 2
// and ⟨a, b⟩ = (e[a, b] - psi(a, b)) / 2, written in the basis of kernel(s).
// Throws Error(InvalidBraidedCat).
BraidedXMod functor_X(const BraidedCatAlgebra& d);

struct AlphaIso {
  Matrix acted;   // M -> ker s̄
  Matrix acting;  // identity of N
  BraidedXMod target;
  Report report;
};
AlphaIso alpha_iso(const BraidedXMod& z);

struct BetaIso {
  Matrix arrows;   // x -> (x - e s x, s x)
  Matrix objects;  // identity of C0
  BraidedCatAlgebra target;
  Report report;
};
BetaIso beta_iso(const BraidedCatAlgebra& d);

struct NamedSeed {
  std::string name;
  std::variant<BraidedXMod, BraidedCatAlgebra> object;
};
// Both isomorphisms for every seed, after the seed passes its own axioms; a seed failing that
// gate is reported and skipped.
Report roundtrip_check(const std::vector<NamedSeed>& seeds);

}  // namespace leibniz
