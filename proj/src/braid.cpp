#include "leibniz/braid.hpp"

#include "leibniz/error.hpp"

namespace leibniz {

namespace {

bool braiding_shapes_ok(const CrossedModule& x, const BilinearMap& b) {
  return b.left_dim() == x.acting().dim() && b.right_dim() == x.acting().dim() && b.out_dim() == x.acted().dim();
}

}  // namespace

Report check_braiding_leibniz(const BraidedXMod& b) {
  const CrossedModule& x = b.xmod;
  const Algebra &M = x.acted(), &N = x.acting();
  Report r("braided crossed module " + M.name() + " -> " + N.name());
  r.merge(check_leibniz(M), "Acted").merge(check_leibniz(N), "Acting");
  r.merge(check_action(x.action), "Action").merge(check_xmod(x), "XMod");
  const BilinearMap &cu = b.braiding.curly, &an = b.braiding.angle;
  if (!braiding_shapes_ok(x, cu) || !braiding_shapes_ok(x, an) || x.boundary.rows() != N.dim() ||
      x.boundary.cols() != M.dim()) {
    r.fail("Shape", "braiding maps must be N x N -> M");
    return r;
  }
  const Matrix& d = x.boundary;
  const Index dn = N.dim(), dm = M.dim();
  for (Index i = 0; i < dn; ++i)
    for (Index j = 0; j < dn; ++j) {
      r.expect_zero("BLeib1", {i, j}, d * cu.at(i, j) - N.product(i, j), "first");
      r.expect_zero("BLeib1", {i, j}, d * an.at(i, j) - N.product(i, j), "second");
    }
  for (Index i = 0; i < dm; ++i)
    for (Index j = 0; j < dm; ++j) {
      r.expect_zero("BLeib2", {i, j}, cu(d.col(i), d.col(j)) - M.product(i, j), "first");
      r.expect_zero("BLeib2", {i, j}, an(d.col(i), d.col(j)) - M.product(i, j), "second");
    }
  for (Index i = 0; i < dm; ++i)
    for (Index j = 0; j < dn; ++j) {
      const Vector n = unit(dn, j);
      r.expect_zero("BLeib3", {i, j}, cu(d.col(i), n) - x.action.right.at(i, j), "first");
      r.expect_zero("BLeib3", {i, j}, an(d.col(i), n) - x.action.right.at(i, j), "second");
      r.expect_zero("BLeib4", {j, i}, cu(n, d.col(i)) - x.action.left.at(j, i), "first");
      r.expect_zero("BLeib4", {j, i}, an(n, d.col(i)) - x.action.left.at(j, i), "second");
    }
  for (Index i = 0; i < dn; ++i)
    for (Index j = 0; j < dn; ++j)
      for (Index k = 0; k < dn; ++k) {
        const Vector n = unit(dn, i), np = unit(dn, j), npp = unit(dn, k);
        const Vector n_npnpp = N(np, npp), nnp = N(n, np), nnpp = N(n, npp);
        r.expect_zero("BLeib5", {i, j, k}, cu(n, n_npnpp) - cu(nnp, npp) + cu(nnpp, np));
        r.expect_zero("BLeib6", {i, j, k}, an(n, n_npnpp) - cu(nnp, npp) + an(nnpp, np));
        r.expect_zero("BLeib7", {i, j, k}, cu(n, n_npnpp) - cu(nnp, npp) + an(nnpp, np));
        r.expect_zero("BLeib8", {i, j, k}, an(n, n_npnpp) - an(nnp, npp) + an(nnpp, np));
      }
  return r;
}

Report check_braiding_lie(const LieCrossedModule& x, const BilinearMap& curly) {
  const Algebra &M = x.acted, &N = x.acting;
  Report r("braided Lie crossed module " + M.name() + " -> " + N.name());
  r.merge(check_lie_xmod(x), "LieXMod");
  if (curly.left_dim() != N.dim() || curly.right_dim() != N.dim() || curly.out_dim() != M.dim() ||
      x.boundary.rows() != N.dim() || x.boundary.cols() != M.dim()) {
    r.fail("Shape", "braiding must be N x N -> M");
    return r;
  }
  const Matrix& d = x.boundary;
  const Index dn = N.dim(), dm = M.dim();
  for (Index i = 0; i < dn; ++i)
    for (Index j = 0; j < dn; ++j) r.expect_zero("BLie1", {i, j}, d * curly.at(i, j) - N.product(i, j));
  for (Index i = 0; i < dm; ++i)
    for (Index j = 0; j < dm; ++j) r.expect_zero("BLie2", {i, j}, curly(d.col(i), d.col(j)) - M.product(i, j));
  for (Index i = 0; i < dm; ++i)
    for (Index j = 0; j < dn; ++j) {
      const Vector n = unit(dn, j);
      r.expect_zero("BLie3", {i, j}, curly(d.col(i), n) + x.action.at(j, i));
      r.expect_zero("BLie4", {j, i}, curly(n, d.col(i)) - x.action.at(j, i));
    }
  for (Index i = 0; i < dn; ++i)
    for (Index j = 0; j < dn; ++j)
      for (Index k = 0; k < dn; ++k) {
        const Vector n = unit(dn, i), np = unit(dn, j), npp = unit(dn, k);
        r.expect_zero("BLie5", {i, j, k}, curly(n, N(np, npp)) - curly(N(n, np), npp) + curly(N(n, npp), np));
        r.expect_zero("BLie6", {i, j, k}, curly(N(n, np), npp) - curly(n, N(np, npp)) + curly(np, N(n, npp)));
      }
  return r;
}

LeibnizBraiding braiding_embed_lie(const LieCrossedModule& x, const BilinearMap& curly) {
  Report r = check_braiding_lie(x, curly);
  if (!r.passed()) throw Error(ErrorCode::NotLieBraiding, r.summary());
  return {curly, -curly.flipped()};
}

BraidedXMod embed_lie_bxmod(const LieBraidedXMod& b) {
  LeibnizBraiding br = braiding_embed_lie(b.xmod, b.curly);
  return {lie_xmod_embed(b.xmod), std::move(br)};
}

LieCollapse detect_lie_collapse(const BraidedXMod& b) {
  const CrossedModule& x = b.xmod;
  const Algebra &M = x.acted(), &N = x.acting();
  const BilinearMap& cu = b.braiding.curly;
  LieCollapse out;
  out.witnesses = Report("collapse witnesses");
  const Index dn = N.dim(), dm = M.dim();
  for (Index i = 0; i < dn; ++i)
    for (Index j = 0; j < dn; ++j)
      out.witnesses.expect_zero("Collapse", {i, j}, cu.at(i, j) + b.braiding.angle.at(j, i));
  out.collapsed = out.witnesses.passed();
  if (!out.collapsed) return out;

  Report& c = out.consequences;
  c = Report("collapse consequences");
  c.merge(check_antisymmetry(N), "Acting").merge(check_antisymmetry(M), "Acted");
  for (Index i = 0; i < dm; ++i)
    for (Index j = 0; j < dn; ++j)
      c.expect_zero("RightIsNegatedLeft", {i, j}, x.action.right.at(i, j) + x.action.left.at(j, i));
  for (Index i = 0; i < dn; ++i)
    for (Index j = 0; j < dn; ++j)
      for (Index k = 0; k < dn; ++k)
        c.expect_zero("BracketSlotSwap", {i, j, k},
                      cu(N.product(i, j), unit(dn, k)) + cu(unit(dn, k), N.product(i, j)));
  LieBraidedXMod lie{{N, M, x.action.left, x.boundary}, cu};
  c.merge(check_braiding_lie(lie), "Lie");
  if (c.passed()) out.lie = std::move(lie);
  return out;
}

BraidedXMod identity_bxmod(const Algebra& a) {
  if (!is_leibniz(a)) throw Error(ErrorCode::NotLeibniz, a.name() + " fails the Leibniz identity");
  return {identity_xmod(a), {a.bracket(), a.bracket()}};
}

BraidedXMod trivial_bxmod(const Algebra& a) {
  const Index n = a.dim();
  return {{zero_action(a, a), Matrix::Zero(n, n)}, {BilinearMap(n, n, n), BilinearMap(n, n, n)}};
}

Report check_bxmod_hom(const Matrix& f_acted, const Matrix& f_acting, const BraidedXMod& src, const BraidedXMod& dst) {
  Report r("braided crossed module morphism");
  r.merge(check_xmod_hom(f_acted, f_acting, src.xmod, dst.xmod), "XModHom");
  if (!r.passed()) return r;
  const Index dn = src.acting().dim();
  for (Index i = 0; i < dn; ++i)
    for (Index j = 0; j < dn; ++j) {
      r.expect_zero("LeibHB1", {i, j},
                    f_acted * src.braiding.curly.at(i, j) - dst.braiding.curly(f_acting.col(i), f_acting.col(j)));
      r.expect_zero("LeibHB2", {i, j},
                    f_acted * src.braiding.angle.at(i, j) - dst.braiding.angle(f_acting.col(i), f_acting.col(j)));
    }
  return r;
}

Subspace braided_lie_ideal(const BraidedXMod& b) {
  const CrossedModule& x = b.xmod;
  const Algebra &M = x.acted(), &N = x.acting();
  Subspace base = xmod_lie_ideal(x);
  std::vector<Vector> gens;
  for (Index i = 0; i < base.dim(); ++i) gens.push_back(base.vector(i));
  for (Index i = 0; i < N.dim(); ++i)
    for (Index j = 0; j < N.dim(); ++j) gens.push_back(b.braiding.curly.at(i, j) + b.braiding.angle.at(j, i));
  return stable_closure(Subspace::span(M.dim(), gens), {&M.bracket(), &x.action.left},
                        {&M.bracket(), &x.action.right});
}

BraidedLieization lieize_bxmod(const BraidedXMod& b) {
  const CrossedModule& x = b.xmod;
  const Algebra &M = x.acted(), &N = x.acting();
  QuotientAlgebra qm = quotient_algebra(M, braided_lie_ideal(b), M.name() + "/{M,N}");
  QuotientAlgebra qn = lieization(N);
  Report r("braided Lieization of " + M.name() + " -> " + N.name());
  r.merge(check_descends("Action", x.action.left, qn.ideal(), qm.ideal(), qm.ideal()));
  r.merge(check_descends("Boundary", x.boundary, qm.ideal(), qn.ideal()));
  r.merge(check_descends("Braiding", b.braiding.curly, qn.ideal(), qn.ideal(), qm.ideal()));

  BilinearMap action = induced(x.action.left, qn.section(), qm.section(), qm.proj());
  Matrix boundary = qn.proj() * x.boundary * qm.section();
  BilinearMap curly = induced(b.braiding.curly, qn.section(), qn.section(), qm.proj());
  LieBraidedXMod lie{{qn.algebra, qm.algebra, std::move(action), std::move(boundary)}, std::move(curly)};

  Report lie_check = check_braiding_lie(lie);
  r.merge(lie_check, "Lie");
  if (lie_check.passed()) r.merge(check_bxmod_hom(qm.proj(), qn.proj(), b, embed_lie_bxmod(lie)), "Projection");
  return {std::move(lie), std::move(qm), std::move(qn), std::move(r)};
}

}  // namespace leibniz
