#include <doctest.h>

#include <random>

#include "leibniz/error.hpp"
#include "leibniz/fixtures.hpp"
#include "leibniz/lmcat.hpp"
#include "leibniz/random.hpp"
#include "support.hpp"

using namespace leibniz;
using testing_support::mat;

namespace {

LMObject object(const Matrix& f) { return {f.cols(), f.rows(), f}; }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::UnknownCommand;
}

std::vector<Algebra> leibniz_pool(unsigned seed, int count) {
  std::mt19937 rng(seed);
  std::vector<Algebra> out{fixtures::a1(), fixtures::l2(), fixtures::r2()};
  for (int i = 0; i < count; ++i) out.push_back(random_leibniz(rng, 3));
  return out;
}

}  // namespace

TEST_CASE("tensor of linear maps") {
  LMTensorProduct zero = lm_tensor(object(Matrix(0, 0)), object(Matrix(0, 0)));
  CHECK(zero.object.top == 0);
  CHECK(zero.object.bottom == 0);

  LMTensorProduct k0 = lm_tensor(object(Matrix(0, 1)), object(Matrix(1, 0)));
  CHECK(k0.object.top == 1);
  CHECK(k0.object.bottom == 0);

  std::mt19937 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<int> d(0, 3);
    LMObject a = object(testing_support::random_sparse_matrix(rng, d(rng), d(rng)));
    LMObject b = object(testing_support::random_sparse_matrix(rng, d(rng), d(rng)));
    LMTensorProduct ab = lm_tensor(a, b), ba = lm_tensor(b, a);
    CHECK(ab.object.top == a.top * b.bottom + a.bottom * b.top);
    CHECK(ab.object.bottom == a.bottom * b.bottom);
    CHECK(check_lm_morphism(ab.flip, ab.object, ba.object).passed());
    CHECK(same(Matrix(ba.flip.top * ab.flip.top), Matrix(Matrix::Identity(ab.object.top, ab.object.top))));
    CHECK(same(Matrix(ba.flip.bottom * ab.flip.bottom),
               Matrix(Matrix::Identity(ab.object.bottom, ab.object.bottom))));
    // The structure map is f ⊗ id on the first block: check one coordinate by hand.
    if (a.top > 0 && b.bottom > 0 && a.bottom > 0) {
      Vector x = Vector::Zero(ab.object.top);
      x(0) = 1;  // m_0 ⊗ h_0
      Vector expect = Vector::Zero(ab.object.bottom);
      for (Index n = 0; n < a.bottom; ++n) expect(n * b.bottom) = a.map(n, 0);
      CHECK(same(Vector(ab.object.map * x), expect));
    }
  }
}

TEST_CASE("Leibniz algebras as Lie objects") {
  LieObjectLM l2 = phi(fixtures::l2());
  CHECK(check_lie_object(l2).passed());
  CHECK(l2.bottom.dim() == 1);
  CHECK(l2.map.rows() == 1);
  // e1 * ē1 = [e1, e1] = e0
  CHECK(same(Vector(l2.star(unit(2, 1), Vector(l2.map.col(1)))), unit(2, 0)));

  LieObjectLM r2 = phi(fixtures::r2());
  CHECK(r2.bottom.dim() == 2);
  CHECK(same(r2.map, Matrix(Matrix::Identity(2, 2))));

  LieObjectLM a1 = phi(fixtures::a1());
  CHECK(same(a1.map, Matrix(Matrix::Identity(1, 1))));

  for (const Algebra& a : leibniz_pool(4, 15)) {
    LieObjectLM o = phi(a);
    CHECK(check_lie_object(o).passed());
    CHECK(psi(o) == a);
  }

  LieObjectLM flat{"flat", fixtures::r2(), Matrix::Identity(2, 2), BilinearMap(2, 2, 2)};
  Report r = check_lie_object(flat);
  CHECK(r.has_failure("Equivariant"));
  LieObjectLM abelian{"abelian", Algebra::abelian("A2", 2), Matrix::Identity(2, 2), BilinearMap(2, 2, 2)};
  CHECK(psi(abelian) == Algebra::abelian("A2", 2));
  CHECK(code_of([&] { psi(flat); }) == ErrorCode::InvalidLieObject);
  CHECK(code_of([&] { phi(Algebra::from_products("bad", 2, {{{0, 0}, unit(2, 1)}, {{1, 0}, unit(2, 0)}})); }) ==
        ErrorCode::NotLeibniz);
}

TEST_CASE("crossed modules of Lie objects") {
  std::vector<CrossedModule> seeds{identity_xmod(fixtures::l2()), fixtures::trivial_a1().xmod,
                                   fixtures::embedded_r2().xmod};
  for (const Algebra& a : leibniz_pool(9, 8)) seeds.push_back(identity_xmod(a));
  for (const CrossedModule& z : seeds) {
    XLieLM x = xphi(z);
    CHECK(check_xlielm(x).passed());
    CrossedModule back = xpsi(x);
    CHECK(back.acted() == z.acted());
    CHECK(back.acting() == z.acting());
    CHECK(back.action.left == z.action.left);
    CHECK(back.action.right == z.action.right);
    CHECK(same(back.boundary, z.boundary));
  }
  // Lie input: no generator beyond the squares, and those vanish.
  XLieLM r2 = xphi(fixtures::embedded_r2().xmod);
  CHECK(r2.acted.bottom.dim() == 2);
  CHECK(xmod_lie_ideal(fixtures::embedded_r2().xmod).dim() == 0);

  XLieLM t = xphi(fixtures::trivial_a1().xmod);
  CHECK(is_zero(t.act_top.coeff()));
  CHECK(is_zero(t.xi.coeff()));
  CHECK(is_zero(t.boundary_top));

  // All actions zero over abelian objects.
  const Algebra a1 = fixtures::a1();
  LieObjectLM o{"A1", a1, Matrix::Identity(1, 1), BilinearMap(1, 1, 1)};
  XLieLM zero{o, o, BilinearMap(1, 1, 1), BilinearMap(1, 1, 1), BilinearMap(1, 1, 1), Matrix::Zero(1, 1),
              Matrix::Zero(1, 1)};
  CrossedModule zx = xpsi(zero);
  CHECK(check_xmod(zx).passed());
  CHECK(is_zero(zx.action.left.coeff()));

  XLieLM broken = xphi(identity_xmod(fixtures::l2()));
  broken.xi = BilinearMap(broken.xi.left_dim(), broken.xi.right_dim(), broken.xi.out_dim());
  Report br = check_xlielm(broken);
  CHECK(br.has_failure("XiPeiffer"));
  CHECK(code_of([&] { xpsi(broken); }) == ErrorCode::InvalidXLieLM);

  CrossedModule doubled = identity_xmod(fixtures::l2());
  doubled.boundary *= Scalar(2);
  CHECK(code_of([&] { xphi(doubled); }) == ErrorCode::InvalidXMod);
}

TEST_CASE("braided crossed modules of Lie objects") {
  std::vector<BraidedXMod> seeds{fixtures::identity_l2(), fixtures::trivial_a1(), fixtures::embedded_r2()};
  for (const Algebra& a : leibniz_pool(12, 6)) seeds.push_back(identity_bxmod(a));
  for (const BraidedXMod& z : seeds) {
    BraidedXLieLM x = bxphi(z);
    Report r = check_lm_braiding(x.xmod, x.braiding);
    CHECK_MESSAGE(r.passed(), r.summary());
    BraidedXMod back = bxpsi(x.xmod, x.braiding);
    CHECK(back.braiding.curly == z.braiding.curly);
    CHECK(back.braiding.angle == z.braiding.angle);
    CHECK(back.xmod.action.left == z.xmod.action.left);
    CHECK(back.xmod.action.right == z.xmod.action.right);
    CHECK(back.acted() == z.acted());
  }
  const BraidedXMod r2 = fixtures::embedded_r2();
  CHECK(braided_lie_ideal(r2) == xmod_lie_ideal(r2.xmod));

  BraidedXLieLM t = bxphi(fixtures::trivial_a1());
  CHECK(is_zero(t.braiding.lh.coeff()));
  CHECK(is_zero(t.braiding.hl.coeff()));
  CHECK(is_zero(t.braiding.bottom.coeff()));

  BraidedXLieLM l2 = bxphi(fixtures::identity_l2());
  LMBraidingTriple wrong = l2.braiding;
  wrong.lh = -wrong.lh;
  Report r = check_lm_braiding(l2.xmod, wrong);
  CHECK(r.has_failure("LMBraid2"));
  CHECK(code_of([&] { bxpsi(l2.xmod, wrong); }) == ErrorCode::InvalidTriple);

  BraidedXMod corrupted = fixtures::identity_l2();
  corrupted.braiding.angle = BilinearMap(2, 2, 2);
  CHECK(code_of([&] { bxphi(corrupted); }) == ErrorCode::InvalidBraidedXMod);
}

TEST_CASE("categorical Lie objects") {
  CatLieObjectLM l2 = iphi(discrete_category(fixtures::l2()));
  CHECK(check_cat_lie_object(l2).passed());
  CatAlgebra bottom = l2.bottom();
  CHECK(bottom.arrows().dim() == 1);
  CHECK(bottom.objects().dim() == 1);
  CHECK(same(bottom.source(), Matrix(Matrix::Identity(1, 1))));
  CHECK(same(bottom.target(), Matrix(Matrix::Identity(1, 1))));

  CatLieObjectLM r2 = iphi(discrete_category(fixtures::r2()));
  CHECK(r2.bottom().arrows() == fixtures::r2());

  std::vector<CatAlgebra> cats{discrete_category(fixtures::l2()), discrete_category(fixtures::a1()),
                               functor_C(fixtures::identity_l2()).cat, functor_C(fixtures::embedded_r2()).cat};
  for (const Algebra& a : leibniz_pool(21, 5)) cats.push_back(functor_C(identity_bxmod(a)).cat);
  for (const CatAlgebra& c : cats) {
    CatLieObjectLM o = iphi(c);
    Report r = check_cat_lie_object(o);
    CHECK_MESSAGE(r.passed(), r.summary());
    CatAlgebra back = ipsi(o);
    CHECK(back.arrows() == c.arrows());
    CHECK(back.objects() == c.objects());
    CHECK(same(back.source(), c.source()));
    CHECK(same(back.target(), c.target()));
    CHECK(same(back.identity(), c.identity()));
  }

  // Zero star on the top component: the recovered algebras are abelian.
  const Algebra a2 = Algebra::abelian("A2", 2);
  LieObjectLM flat{"A2", a2, Matrix::Identity(2, 2), BilinearMap(2, 2, 2)};
  CatLieObjectLM zero{flat, flat, {Matrix::Identity(2, 2), Matrix::Identity(2, 2)},
                      {Matrix::Identity(2, 2), Matrix::Identity(2, 2)},
                      {Matrix::Identity(2, 2), Matrix::Identity(2, 2)}};
  CatAlgebra z = ipsi(zero);
  CHECK(z.arrows() == a2);

  CatLieObjectLM broken = iphi(functor_C(fixtures::identity_l2()).cat);
  broken.target.top = broken.source.top;
  CHECK(code_of([&] { ipsi(broken); }) == ErrorCode::InvalidCatLieObjectLM);
}

TEST_CASE("braided categorical Lie objects") {
  std::vector<BraidedCatAlgebra> seeds{functor_C(fixtures::identity_l2()), functor_C(fixtures::embedded_r2()),
                                       functor_C(fixtures::trivial_a1()),
                                       {discrete_category(fixtures::a1()), {BilinearMap(1, 1, 1), BilinearMap(1, 1, 1)}}};
  for (const Algebra& a : leibniz_pool(30, 5)) seeds.push_back(functor_C(identity_bxmod(a)));
  for (const BraidedCatAlgebra& d : seeds) {
    BraidedCatLieObjectLM o = biphi(d);
    Report r = check_cat_lm_braiding(o.cat, o.braiding);
    CHECK_MESSAGE(r.passed(), r.summary());
    BraidedCatAlgebra back = bipsi(o.cat, o.braiding);
    CHECK(back.braiding.tau == d.braiding.tau);
    CHECK(back.braiding.psi == d.braiding.psi);
    CHECK(back.cat.arrows() == d.cat.arrows());
  }
  BraidedCatAlgebra r2 = functor_C(fixtures::embedded_r2());
  CHECK(cat_lie_ideal(r2.cat, r2.braiding) == ideal_closure(r2.cat.arrows(), square_span(r2.cat.arrows())));
  CHECK(cat_lie_ideal(r2.cat, r2.braiding).dim() == 0);

  BraidedCatLieObjectLM t = biphi({discrete_category(fixtures::a1()), {BilinearMap(1, 1, 1), BilinearMap(1, 1, 1)}});
  CHECK(is_zero(t.braiding.cd.coeff()));
  CHECK(is_zero(t.braiding.dc.coeff()));
  CHECK(is_zero(t.braiding.bottom.coeff()));

  BraidedCatLieObjectLM l2 = biphi(functor_C(fixtures::identity_l2()));
  CatLMBraiding wrong = l2.braiding;
  wrong.dc = -wrong.dc;
  CHECK(check_cat_lm_braiding(l2.cat, wrong).has_failure("CatLMBraid2"));
  CHECK(code_of([&] { bipsi(l2.cat, wrong); }) == ErrorCode::InvalidCatLMBraiding);
}
