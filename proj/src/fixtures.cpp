#include "leibniz/fixtures.hpp"

#include "leibniz/nat.hpp"

namespace leibniz::fixtures {

Algebra a1() { return Algebra::abelian("A1", 1); }

Algebra l2() { return Algebra::from_products("L2", 2, {{{1, 1}, unit(2, 0)}}); }

Algebra r2() { return Algebra::from_products("R2", 2, {{{0, 1}, unit(2, 0)}, {{1, 0}, Vector(-unit(2, 0))}}); }

BraidedXMod trivial_a1() { return trivial_bxmod(a1()); }

BraidedXMod identity_l2() { return identity_bxmod(l2()); }

LieBraidedXMod identity_lie_r2() {
  const Algebra r = r2();
  return {{r, r, r.bracket(), Matrix::Identity(2, 2)}, r.bracket()};
}

BraidedXMod embedded_r2() { return embed_lie_bxmod(identity_lie_r2()); }

BraidedXMod tensor_l2() { return tensor_braiding(l2()); }

BraidedXMod corrupted_l2() {
  BraidedXMod b = identity_l2();
  Matrix c = b.braiding.curly.coeff();
  c(0, 1 * 2 + 1) = Scalar(2);
  b.braiding.curly = BilinearMap(2, 2, c);
  return b;
}

std::vector<NamedSeed> seeds() {
  return {{"trivial-A1", trivial_a1()},
          {"identity-L2", identity_l2()},
          {"embedded-R2", embedded_r2()},
          {"tensor-L2", tensor_l2()}};
}

}  // namespace leibniz::fixtures
