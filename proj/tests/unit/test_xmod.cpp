#include <doctest.h>

#include <set>

#include "leibniz/error.hpp"
#include "leibniz/fixtures.hpp"
#include "leibniz/random.hpp"
#include "leibniz/xmod.hpp"
#include "support.hpp"

using namespace leibniz;

namespace {

std::set<std::string> failing_axioms(const Report& r) {
  std::set<std::string> out;
  for (const auto& v : r.failures()) out.insert(v.axiom);
  return out;
}

}  // namespace

TEST_CASE("check_action") {
  CHECK(check_action(adjoint_action(fixtures::l2())).passed());
  CHECK(check_action(zero_action(fixtures::a1(), fixtures::a1())).passed());
  // The bracket used on both sides is the adjoint action and passes; flipping the sign of the
  // right action breaks the axioms that mix the two sides. Expected set from a brute-force
  // enumeration over all basis tuples.
  CHECK(check_action(adjoint_action(fixtures::r2())).passed());
  LeibnizAction bad = adjoint_action(fixtures::r2());
  bad.right = -bad.right;
  CHECK(failing_axioms(check_action(bad)) == std::set<std::string>{"ALeib2", "ALeib4", "ALeib5", "ALeib6"});
}

TEST_CASE("check_xmod") {
  CHECK(check_xmod(identity_xmod(fixtures::l2())).passed());
  CrossedModule trivial{zero_action(fixtures::a1(), fixtures::a1()), Matrix::Zero(1, 1)};
  CHECK(check_xmod(trivial).passed());
  CrossedModule doubled = identity_xmod(fixtures::l2());
  doubled.boundary *= Scalar(2);
  Report r = check_xmod(doubled);
  CHECK(!r.passed());
  CHECK(r.has_failure("PeifferLeft"));
  CHECK(r.has_failure("PeifferRight"));
  CHECK(r.has_failure("BoundaryHom/Hom"));
  CHECK(!r.has_failure("EquivariantLeft"));  // both sides scale by 2
}

TEST_CASE("semidirect") {
  auto z = semidirect(zero_action(fixtures::a1(), fixtures::a1()));
  CHECK(z.algebra == Algebra::abelian("A2", 2));

  auto l = semidirect(adjoint_action(fixtures::l2()));
  CHECK(l.algebra.dim() == 4);
  CHECK(check_leibniz(l.algebra).passed());
  CHECK(check_hom(fixtures::l2(), l.algebra, l.include_acting).passed());
  CHECK(is_ideal(l.algebra, image(l.include_acted)));

  const Algebra r2 = fixtures::r2();
  auto r = semidirect(lie_action_embed(r2, r2, r2.bracket()));
  CHECK(check_leibniz(r.algebra).passed());
  CHECK(check_antisymmetry(r.algebra).passed());

  LeibnizAction bad = adjoint_action(r2);
  bad.right = -bad.right;
  CHECK_THROWS_AS(semidirect(bad), Error);
}

TEST_CASE("lie_action_embed and lie_xmod_embed") {
  const Algebra a1 = fixtures::a1(), r2 = fixtures::r2();
  LeibnizAction z = lie_action_embed(a1, a1, BilinearMap(1, 1, 1));
  CHECK(is_zero(z.left.coeff()));
  CHECK(is_zero(z.right.coeff()));

  LeibnizAction ad = lie_action_embed(r2, r2, r2.bracket());
  CHECK(check_action(ad).passed());
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j) CHECK(Vector(ad.right.at(i, j)) == Vector(-r2.product(j, i)));

  CrossedModule x = lie_xmod_embed({r2, r2, r2.bracket(), Matrix::Identity(2, 2)});
  CHECK(check_xmod(x).passed());
  CrossedModule t = lie_xmod_embed({a1, a1, a1.bracket(), Matrix::Identity(1, 1)});
  CHECK(check_xmod(t).passed());
  CHECK(is_zero(t.action.left.coeff()));

  const Algebra l2 = fixtures::l2();
  try {
    lie_action_embed(l2, l2, l2.bracket());
    FAIL("L2 is not Lie");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotLieAction);
  }
  try {
    lie_xmod_embed({r2, r2, r2.bracket(), Matrix(Scalar(2) * Matrix::Identity(2, 2))});
    FAIL("doubled boundary");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotLieXMod);
  }
}

TEST_CASE("check_xmod_hom") {
  CrossedModule x = identity_xmod(fixtures::l2());
  CHECK(check_xmod_hom(Matrix::Identity(2, 2), Matrix::Identity(2, 2), x, x).passed());
  CHECK(check_xmod_hom(Matrix::Zero(2, 2), Matrix::Zero(2, 2), x, x).passed());
  // (π, π) from the identity crossed module of L2 onto that of Lie(L2).
  auto lie = lieization(fixtures::l2());
  CrossedModule y = identity_xmod(lie.algebra);
  CHECK(check_xmod_hom(lie.proj(), lie.proj(), x, y).passed());
  CHECK(!check_xmod_hom(Matrix::Identity(2, 2), Matrix::Zero(2, 2), x, x).passed());
}

TEST_CASE("property: semidirect slices, embeddings and Peiffer on random data") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    Algebra a = random_leibniz(rng, 3);
    CrossedModule x = identity_xmod(a);
    CHECK(check_xmod(x).passed());
    auto sd = semidirect(x.action);
    CHECK(check_leibniz(sd.algebra).passed());
    // Both slices reproduce the original structure constants.
    const Index n = a.dim();
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        CHECK(Vector(sd.algebra.product(i, j)) == Vector(sd.include_acted * a.product(i, j)));
        CHECK(Vector(sd.algebra.product(n + i, n + j)) == Vector(sd.include_acting * a.product(i, j)));
      }
    Vector m = testing_support::random_vector(rng, n), mp = testing_support::random_vector(rng, n);
    CHECK(Vector(x.action.left(x.boundary * m, mp)) == a(m, mp));
    CHECK(Vector(x.action.right(m, x.boundary * mp)) == a(m, mp));
  }
}

TEST_CASE("property: lie_action_embed is the negated flip for random Lie algebras") {
  std::mt19937 rng(32);
  int seen = 0;
  for (int trial = 0; trial < 200 && seen < 15; ++trial) {
    Algebra a = random_leibniz(rng, 3);
    if (!is_lie(a)) continue;
    ++seen;
    LeibnizAction e = lie_action_embed(a, a, a.bracket());
    CHECK(check_action(e).passed());
    CHECK(e.right == -e.left.flipped());
  }
  CHECK(seen >= 5);
}

TEST_CASE("crossed-module Lie ideal of an embedded Lie crossed module is trivial") {
  const Algebra r2 = fixtures::r2();
  CrossedModule x = lie_xmod_embed({r2, r2, r2.bracket(), Matrix::Identity(2, 2)});
  CHECK(xmod_lie_ideal(x).dim() == 0);
  CHECK(xmod_lie_ideal(identity_xmod(fixtures::l2())).dim() == 1);
}

TEST_CASE("crossed module Lieization") {
  XModLieization l2 = lieize_xmod(identity_xmod(fixtures::l2()));
  CHECK_MESSAGE(l2.report.passed(), l2.report.summary());
  CHECK(l2.acted.algebra.dim() == 1);
  CHECK(l2.acting.algebra.dim() == 1);
  CHECK(is_lie(l2.lie.acted));

  XModLieization r2 = lieize_xmod(identity_xmod(fixtures::r2()));
  CHECK(r2.report.passed());
  CHECK(r2.acted.ideal().dim() == 0);
  CHECK(r2.lie.acted == fixtures::r2());

  std::mt19937 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    XModLieization q = lieize_xmod(identity_xmod(random_leibniz(rng, 3)));
    CHECK(q.report.passed());
    CHECK(check_lie_xmod(q.lie).passed());
  }
}
