#include <doctest.h>

#include <random>

#include "leibniz/equiv.hpp"
#include "leibniz/error.hpp"
#include "leibniz/fixtures.hpp"
#include "leibniz/random.hpp"
#include "support.hpp"

using namespace leibniz;

namespace {

std::vector<BraidedXMod> seeds() {
  return {fixtures::trivial_a1(), fixtures::identity_l2(), fixtures::embedded_r2(),
          fixtures::tensor_l2(), identity_bxmod(Algebra::abelian("A2", 2))};
}

// Identity braided crossed modules of random Leibniz algebras.
std::vector<BraidedXMod> random_seeds(unsigned seed, int count) {
  std::mt19937 rng(seed);
  std::vector<BraidedXMod> out;
  for (int i = 0; i < count; ++i) out.push_back(identity_bxmod(random_leibniz(rng, 3)));
  return out;
}

}  // namespace

TEST_CASE("functor_C evaluates the semidirect formulas") {
  BraidedXMod z = fixtures::identity_l2();
  BraidedCatAlgebra d = functor_C(z);
  CHECK(d.cat.arrows().dim() == 4);
  CHECK(d.cat.objects().dim() == 2);
  // tau(e1, e1) = (-2 e0, e0) in (M, N) coordinates.
  Vector expect(4);
  expect << -2, 0, 1, 0;
  CHECK(same(Vector(d.braiding.tau.at(1, 1)), expect));
  CHECK(check_cat_braiding_leibniz(d.cat, d.braiding).passed());

  BraidedCatAlgebra t = functor_C(fixtures::trivial_a1());
  CHECK(t.cat.arrows().dim() == 2);
  CHECK(is_zero(t.braiding.tau.coeff().topRows(1)));
  CHECK(is_zero(t.braiding.psi.coeff().topRows(1)));
}

TEST_CASE("functor_C on every seed, coordinatewise") {
  for (const BraidedXMod& z : seeds()) {
    BraidedCatAlgebra d = functor_C(z);
    const Index dm = z.acted().dim(), dn = z.acting().dim();
    const Subspace K = kernel(d.cat.source());
    CHECK(K.dim() == dm);
    for (Index i = 0; i < dm; ++i) CHECK(K.contains(unit(dm + dn, i)));
    for (Index i = 0; i < dn; ++i)
      for (Index j = 0; j < dn; ++j) {
        // Oracle: assemble the pair (-2{n, n'}, [n, n']) by hand.
        Vector pair(dm + dn);
        pair.head(dm) = Scalar(-2) * z.braiding.curly.at(i, j);
        pair.tail(dn) = z.acting().product(i, j);
        CHECK(same(Vector(d.braiding.tau.at(i, j)), pair));
        CHECK(same(Vector(d.cat.source() * d.braiding.tau.at(i, j)), Vector(z.acting().product(i, j))));
        CHECK(same(Vector(d.cat.target() * d.braiding.tau.at(i, j)), Vector(-z.acting().product(i, j))));
      }
  }
}

TEST_CASE("functor_C rejects invalid input") {
  BraidedXMod z = fixtures::identity_l2();
  z.braiding.curly = BilinearMap(2, 2, 2);
  CHECK_THROWS_AS(functor_C(z), Error);
  try {
    functor_C(z);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidBraidedXMod);
  }
}

TEST_CASE("functor_X") {
  CatAlgebra discrete = discrete_category(fixtures::a1());
  BraidedXMod x = functor_X({discrete, {BilinearMap(1, 1, 1), BilinearMap(1, 1, 1)}});
  CHECK(x.acted().dim() == 0);
  CHECK(check_braiding_leibniz(x).passed());

  BraidedXMod back = functor_X(functor_C(fixtures::identity_l2()));
  CHECK(back.acted().dim() == 2);
  CHECK(check_braiding_leibniz(back).passed());
  CHECK(same(back.braiding.curly.coeff(), fixtures::identity_l2().braiding.curly.coeff()));

  BraidedXMod lie = functor_X(functor_C(fixtures::embedded_r2()));
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j) CHECK(same(Vector(lie.braiding.angle.at(i, j)), Vector(-lie.braiding.curly.at(j, i))));

  CatAlgebra l2 = discrete_category(fixtures::l2());
  BilinearMap eb = l2.identity() * l2.objects().bracket();
  CHECK_THROWS_AS(functor_X({l2, {eb, eb}}), Error);
}

TEST_CASE("round trip recovers the structure constants exactly") {
  std::vector<BraidedXMod> all = seeds();
  for (const BraidedXMod& z : random_seeds(3, 6)) all.push_back(z);
  for (const BraidedXMod& z : all) {
    AlphaIso a = alpha_iso(z);
    CHECK(a.report.passed());
    const BraidedXMod& y = a.target;
    // alpha is the identity in the kernel basis, so conjugation by it must be the identity too.
    auto inv = inverse(a.acted);
    REQUIRE(inv.has_value());
    CHECK(same(Matrix(*inv * y.acted().bracket().precompose(a.acted, a.acted).coeff()), z.acted().bracket().coeff()));
    CHECK(same(Matrix(*inv * y.braiding.curly.coeff()), z.braiding.curly.coeff()));
    CHECK(same(Matrix(*inv * y.braiding.angle.coeff()), z.braiding.angle.coeff()));
    CHECK(same(Matrix(y.xmod.boundary * a.acted), z.xmod.boundary));

    BetaIso b = beta_iso(functor_C(z));
    CHECK(b.report.passed());
  }
}

TEST_CASE("alpha on named seeds") {
  AlphaIso a = alpha_iso(fixtures::identity_l2());
  CHECK(same(a.acted, Matrix(Matrix::Identity(2, 2))));
  CHECK(a.report.passed());
  AlphaIso r = alpha_iso(fixtures::embedded_r2());
  CHECK(r.report.passed());
  CHECK(detect_lie_collapse(fixtures::embedded_r2()).collapsed == detect_lie_collapse(r.target).collapsed);
}

TEST_CASE("beta sends e to the identity of the image") {
  BraidedCatAlgebra d = functor_C(fixtures::identity_l2());
  BetaIso b = beta_iso(d);
  CHECK(b.report.passed());
  CHECK(same(Matrix(b.arrows * d.cat.identity()), b.target.cat.identity()));
}

TEST_CASE("roundtrip_check gates invalid seeds") {
  CHECK(roundtrip_check({}).passed());
  std::vector<NamedSeed> good{{"trivial", fixtures::trivial_a1()},
                              {"identity-L2", fixtures::identity_l2()},
                              {"embedded-R2", fixtures::embedded_r2()},
                              {"category-L2", functor_C(fixtures::identity_l2())}};
  CHECK(roundtrip_check(good).passed());

  BraidedXMod corrupted = fixtures::identity_l2();
  corrupted.braiding = {BilinearMap(2, 2, 2), BilinearMap(2, 2, 2)};
  Report r = roundtrip_check({{"corrupted", corrupted}});
  REQUIRE(r.failures().size() == 1);
  CHECK(r.failures()[0].axiom == "Precheck");
}

TEST_CASE("named fixture seeds") {
  std::vector<NamedSeed> all = fixtures::seeds();
  CHECK(all.size() == 4);
  Report r = roundtrip_check(all);
  CHECK_MESSAGE(r.passed(), r.summary());
  Report bad = check_braiding_leibniz(fixtures::corrupted_l2());
  CHECK(bad.has_failure("BLeib1"));
  Report gated = roundtrip_check({{"corrupted", fixtures::corrupted_l2()}});
  CHECK(gated.has_failure("Precheck"));
}
