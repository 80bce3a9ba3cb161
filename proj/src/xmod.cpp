#include "leibniz/xmod.hpp"

#include "leibniz/error.hpp"

namespace leibniz {

namespace {

bool shapes_ok(const LeibnizAction& a) {
  const Index n = a.acting.dim(), m = a.acted.dim();
  return a.left.left_dim() == n && a.left.right_dim() == m && a.left.out_dim() == m && a.right.left_dim() == m &&
         a.right.right_dim() == n && a.right.out_dim() == m;
}

}  // namespace

Report check_action(const LeibnizAction& a) {
  Report r("action of " + a.acting.name() + " on " + a.acted.name());
  if (!shapes_ok(a)) {
    r.fail("Shape", "action tensors do not match the algebras");
    return r;
  }
  const Algebra &N = a.acting, &M = a.acted;
  const Index dn = N.dim(), dm = M.dim();
  auto l = [&](const Vector& n, const Vector& m) { return a.left(n, m); };
  auto rt = [&](const Vector& m, const Vector& n) { return a.right(m, n); };
  for (Index i = 0; i < dn; ++i)
    for (Index j = 0; j < dm; ++j)
      for (Index k = 0; k < dm; ++k) {
        Vector n = unit(dn, i), m = unit(dm, j), mp = unit(dm, k);
        r.expect_zero("ALeib1", {i, j, k}, l(n, M(m, mp)) - M(l(n, m), mp) + M(l(n, mp), m));
        // m, n, m' order in indices for the next two: (m, n, m').
        Vector m1 = unit(dm, j), m2 = unit(dm, k);
        r.expect_zero("ALeib2", {j, i, k}, M(m1, l(n, m2)) - M(rt(m1, n), m2) + rt(M(m1, m2), n));
        r.expect_zero("ALeib3", {j, k, i}, M(m1, rt(m2, n)) - rt(M(m1, m2), n) + M(rt(m1, n), m2));
      }
  for (Index i = 0; i < dm; ++i)
    for (Index j = 0; j < dn; ++j)
      for (Index k = 0; k < dn; ++k) {
        Vector m = unit(dm, i), n = unit(dn, j), np = unit(dn, k);
        r.expect_zero("ALeib4", {i, j, k}, rt(m, N(n, np)) - rt(rt(m, n), np) + rt(rt(m, np), n));
        r.expect_zero("ALeib5", {j, i, k}, l(n, rt(m, np)) - rt(l(n, m), np) + l(N(n, np), m));
        r.expect_zero("ALeib6", {j, k, i}, l(n, l(np, m)) - l(N(n, np), m) + rt(l(n, m), np));
      }
  return r;
}

Report check_xmod(const CrossedModule& x) {
  Report r("crossed module " + x.acted().name() + " -> " + x.acting().name());
  const Algebra &N = x.acting(), &M = x.acted();
  const LeibnizAction& a = x.action;
  if (!shapes_ok(a) || x.boundary.rows() != N.dim() || x.boundary.cols() != M.dim()) {
    r.fail("Shape", "crossed module data do not match the algebras");
    return r;
  }
  const Matrix& d = x.boundary;
  r.merge(check_hom(M, N, d), "BoundaryHom");
  for (Index i = 0; i < N.dim(); ++i)
    for (Index j = 0; j < M.dim(); ++j) {
      Vector n = unit(N.dim(), i), m = unit(M.dim(), j);
      r.expect_zero("EquivariantLeft", {i, j}, d * a.left(n, m) - N(n, d * m));
      r.expect_zero("EquivariantRight", {j, i}, d * a.right(m, n) - N(d * m, n));
    }
  for (Index i = 0; i < M.dim(); ++i)
    for (Index j = 0; j < M.dim(); ++j) {
      Vector m = unit(M.dim(), i), mp = unit(M.dim(), j);
      r.expect_zero("PeifferLeft", {i, j}, a.left(d * m, mp) - M(m, mp));
      r.expect_zero("PeifferRight", {i, j}, a.right(m, d * mp) - M(m, mp));
    }
  return r;
}

LeibnizAction adjoint_action(const Algebra& a) { return {a, a, a.bracket(), a.bracket()}; }

LeibnizAction zero_action(const Algebra& acting, const Algebra& acted) {
  return {acting, acted, BilinearMap(acting.dim(), acted.dim(), acted.dim()),
          BilinearMap(acted.dim(), acting.dim(), acted.dim())};
}

CrossedModule identity_xmod(const Algebra& a) { return {adjoint_action(a), Matrix::Identity(a.dim(), a.dim())}; }

SemidirectProduct semidirect(const LeibnizAction& a) {
  if (!check_action(a).passed())
    throw Error(ErrorCode::ActionInvalid, "action of " + a.acting.name() + " on " + a.acted.name());
  const Index dm = a.acted.dim(), dn = a.acting.dim(), d = dm + dn;
  BilinearMap br(d, d, d);
  // [(m, n), (m', n')] = ([m, m'] + n ·₁ m' + m ·₂ n', [n, n'])
  for (Index i = 0; i < dm; ++i)
    for (Index j = 0; j < dm; ++j) br.at(i, j).head(dm) = a.acted.product(i, j);
  for (Index i = 0; i < dn; ++i)
    for (Index j = 0; j < dm; ++j) br.at(dm + i, j).head(dm) = a.left.at(i, j);
  for (Index i = 0; i < dm; ++i)
    for (Index j = 0; j < dn; ++j) br.at(i, dm + j).head(dm) = a.right.at(i, j);
  for (Index i = 0; i < dn; ++i)
    for (Index j = 0; j < dn; ++j) br.at(dm + i, dm + j).tail(dn) = a.acting.product(i, j);
  SemidirectProduct out{Algebra(a.acted.name() + "x" + a.acting.name(), std::move(br)), Matrix::Zero(d, dm),
                        Matrix::Zero(d, dn)};
  out.include_acted.topRows(dm) = Matrix::Identity(dm, dm);
  out.include_acting.bottomRows(dn) = Matrix::Identity(dn, dn);
  return out;
}

Report check_lie_action(const Algebra& acting, const Algebra& acted, const BilinearMap& dot) {
  Report r("Lie action of " + acting.name() + " on " + acted.name());
  const Index dn = acting.dim(), dm = acted.dim();
  if (dot.left_dim() != dn || dot.right_dim() != dm || dot.out_dim() != dm) {
    r.fail("Shape", "action tensor does not match the algebras");
    return r;
  }
  r.merge(check_leibniz(acting), "ActingLie").merge(check_antisymmetry(acting), "ActingLie");
  r.merge(check_leibniz(acted), "ActedLie").merge(check_antisymmetry(acted), "ActedLie");
  for (Index i = 0; i < dn; ++i)
    for (Index j = 0; j < dn; ++j)
      for (Index k = 0; k < dm; ++k) {
        Vector n = unit(dn, i), np = unit(dn, j), m = unit(dm, k);
        r.expect_zero("LieAction1", {i, j, k}, dot(acting(n, np), m) - dot(n, dot(np, m)) + dot(np, dot(n, m)));
      }
  for (Index i = 0; i < dn; ++i)
    for (Index j = 0; j < dm; ++j)
      for (Index k = 0; k < dm; ++k) {
        Vector n = unit(dn, i), m = unit(dm, j), mp = unit(dm, k);
        r.expect_zero("LieAction2", {i, j, k}, dot(n, acted(m, mp)) - acted(dot(n, m), mp) - acted(m, dot(n, mp)));
      }
  return r;
}

Report check_lie_xmod(const LieCrossedModule& x) {
  Report r("Lie crossed module " + x.acted.name() + " -> " + x.acting.name());
  r.merge(check_lie_action(x.acting, x.acted, x.action));
  if (!r.passed()) return r;
  if (x.boundary.rows() != x.acting.dim() || x.boundary.cols() != x.acted.dim()) {
    r.fail("Shape", "boundary does not match the algebras");
    return r;
  }
  const Matrix& d = x.boundary;
  r.merge(check_hom(x.acted, x.acting, d), "BoundaryHom");
  for (Index i = 0; i < x.acting.dim(); ++i)
    for (Index j = 0; j < x.acted.dim(); ++j) {
      Vector n = unit(x.acting.dim(), i), m = unit(x.acted.dim(), j);
      r.expect_zero("Equivariant", {i, j}, d * x.action(n, m) - x.acting(n, d * m));
    }
  for (Index i = 0; i < x.acted.dim(); ++i)
    for (Index j = 0; j < x.acted.dim(); ++j) {
      Vector m = unit(x.acted.dim(), i), mp = unit(x.acted.dim(), j);
      r.expect_zero("Peiffer", {i, j}, x.action(d * m, mp) - x.acted(m, mp));
    }
  return r;
}

LeibnizAction lie_action_embed(const Algebra& acting, const Algebra& acted, const BilinearMap& dot) {
  Report r = check_lie_action(acting, acted, dot);
  if (!r.passed()) throw Error(ErrorCode::NotLieAction, r.summary());
  return {acting, acted, dot, -dot.flipped()};
}

CrossedModule lie_xmod_embed(const LieCrossedModule& x) {
  Report r = check_lie_xmod(x);
  if (!r.passed()) throw Error(ErrorCode::NotLieXMod, r.summary());
  return {{x.acting, x.acted, x.action, -x.action.flipped()}, x.boundary};
}

Report check_xmod_hom(const Matrix& f_acted, const Matrix& f_acting, const CrossedModule& src,
                      const CrossedModule& dst) {
  Report r("crossed module morphism");
  if (f_acted.rows() != dst.acted().dim() || f_acted.cols() != src.acted().dim() ||
      f_acting.rows() != dst.acting().dim() || f_acting.cols() != src.acting().dim()) {
    r.fail("Shape", "morphism components do not match");
    return r;
  }
  r.merge(check_hom(src.acted(), dst.acted(), f_acted), "ActedHom");
  r.merge(check_hom(src.acting(), dst.acting(), f_acting), "ActingHom");
  const LeibnizAction &a = src.action, &b = dst.action;
  for (Index i = 0; i < src.acting().dim(); ++i)
    for (Index j = 0; j < src.acted().dim(); ++j) {
      Vector n = unit(src.acting().dim(), i), m = unit(src.acted().dim(), j);
      r.expect_zero("MorphLeft", {i, j}, f_acted * a.left(n, m) - b.left(f_acting * n, f_acted * m));
      r.expect_zero("MorphRight", {j, i}, f_acted * a.right(m, n) - b.right(f_acted * m, f_acting * n));
    }
  r.expect_equal("MorphBoundary", {}, dst.boundary * f_acted, f_acting * src.boundary);
  return r;
}

Subspace xmod_lie_ideal(const CrossedModule& x) {
  const Algebra &M = x.acted(), &N = x.acting();
  std::vector<Vector> gens;
  Subspace squares = square_span(M);
  for (Index i = 0; i < squares.dim(); ++i) gens.push_back(squares.vector(i));
  for (Index i = 0; i < N.dim(); ++i)
    for (Index j = 0; j < M.dim(); ++j) gens.push_back(x.action.left.at(i, j) + x.action.right.at(j, i));
  return stable_closure(Subspace::span(M.dim(), gens), {&M.bracket(), &x.action.left},
                        {&M.bracket(), &x.action.right});
}

XModLieization lieize_xmod(const CrossedModule& x) {
  const Algebra &M = x.acted(), &N = x.acting();
  QuotientAlgebra qm = quotient_algebra(M, xmod_lie_ideal(x), M.name() + "/[M,N]");
  QuotientAlgebra qn = lieization(N);
  Report r("Lieization of " + M.name() + " -> " + N.name());
  r.merge(check_descends("Action", x.action.left, qn.ideal(), qm.ideal(), qm.ideal()));
  r.merge(check_descends("Boundary", x.boundary, qm.ideal(), qn.ideal()));

  BilinearMap action = induced(x.action.left, qn.section(), qm.section(), qm.proj());
  Matrix boundary = qn.proj() * x.boundary * qm.section();
  LieCrossedModule lie{qn.algebra, qm.algebra, std::move(action), std::move(boundary)};
  Report lie_check = check_lie_xmod(lie);
  r.merge(lie_check, "Lie");
  if (lie_check.passed()) r.merge(check_xmod_hom(qm.proj(), qn.proj(), x, lie_xmod_embed(lie)), "Projection");
  return {std::move(lie), std::move(qm), std::move(qn), std::move(r)};
}

}  // namespace leibniz
