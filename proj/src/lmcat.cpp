#include "leibniz/lmcat.hpp"

#include "leibniz/error.hpp"

namespace leibniz {

namespace {

Matrix identity(Index n) { return Matrix::Identity(n, n); }

// Top M over the quotient q of the algebra a, with m * n̄ = [m, n].
LieObjectLM over_quotient(const Algebra& a, const QuotientAlgebra& q) {
  return {a.name(), q.algebra, q.proj(), a.bracket().precompose(identity(a.dim()), q.section())};
}

void require(const Report& r, ErrorCode code) {
  if (!r.passed()) throw Error(code, r.summary());
}

Report xmod_report(const CrossedModule& z) {
  Report r("crossed module " + z.acted().name() + " -> " + z.acting().name());
  r.merge(check_leibniz(z.acted()), "Acted");
  r.merge(check_leibniz(z.acting()), "Acting");
  r.merge(check_action(z.action), "Action");
  if (r.passed()) r.merge(check_xmod(z), "XMod");
  return r;
}

bool shapes_ok(const LieObjectLM& o) {
  const Index m = o.top_dim(), n = o.bottom.dim();
  return o.map.rows() == n && o.star.left_dim() == m && o.star.right_dim() == n && o.star.out_dim() == m;
}

bool shape(const BilinearMap& b, Index left, Index right, Index out) {
  return b.left_dim() == left && b.right_dim() == right && b.out_dim() == out;
}

bool shape(const Matrix& f, Index rows, Index cols) { return f.rows() == rows && f.cols() == cols; }

// Quotients and maps shared by the plain and the braided crossed-module constructions.
struct XLieParts {
  XLieLM x;
  QuotientAlgebra acted;
  QuotientAlgebra acting;
};

XLieParts build_xlielm(const CrossedModule& z, const Subspace& ideal, const std::string& label, ErrorCode code) {
  const Algebra &M = z.acted(), &N = z.acting();
  const LeibnizAction& a = z.action;
  QuotientAlgebra qm = quotient_algebra(M, ideal, M.name() + label);
  QuotientAlgebra qn = lieization(N);
  const Subspace zero_m = Subspace::zero(M.dim());
  Report r("descent");
  r.merge(check_descends("Star", M.bracket(), zero_m, qm.ideal(), zero_m));
  r.merge(check_descends("ActTop", a.right, zero_m, qn.ideal(), zero_m));
  r.merge(check_descends("Xi", a.left, Subspace::zero(N.dim()), qm.ideal(), zero_m));
  r.merge(check_descends("ActBottom", a.left, qn.ideal(), qm.ideal(), qm.ideal()));
  r.merge(check_descends("Boundary", z.boundary, qm.ideal(), qn.ideal()));
  require(r, code);

  XLieLM x{over_quotient(M, qm),
           over_quotient(N, qn),
           -a.right.flipped().precompose(qn.section(), identity(M.dim())),
           induced(a.left, qn.section(), qm.section(), qm.proj()),
           a.left.precompose(identity(N.dim()), qm.section()),
           z.boundary,
           qn.proj() * z.boundary * qm.section()};
  return {std::move(x), std::move(qm), std::move(qn)};
}

Vector compose(const Matrix& e, const Matrix& t, const Vector& x, const Vector& y) { return x - e * (t * x) + y; }

}  // namespace

Report check_lm_morphism(const LMMorphism& f, const LMObject& src, const LMObject& dst) {
  Report r("linear-map morphism");
  if (!shape(f.top, dst.top, src.top) || !shape(f.bottom, dst.bottom, src.bottom)) {
    r.fail("Shape", "morphism components do not match the objects");
    return r;
  }
  r.expect_equal("Square", {}, dst.map * f.top, f.bottom * src.map);
  return r;
}

LMTensorProduct lm_tensor(const LMObject& a, const LMObject& b) {
  const Index M = a.top, N = a.bottom, L = b.top, H = b.bottom;
  LMTensorProduct out;
  out.object.top = M * H + N * L;
  out.object.bottom = N * H;
  out.object.map = Matrix(N * H, M * H + N * L);
  out.object.map.leftCols(M * H) = kron(a.map, identity(H));
  out.object.map.rightCols(N * L) = kron(identity(N), b.map);
  // b ⊗ a has top (L ⊗ N) ⊕ (H ⊗ M).
  out.flip.top = Matrix::Zero(L * N + H * M, M * H + N * L);
  for (Index m = 0; m < M; ++m)
    for (Index h = 0; h < H; ++h) out.flip.top(L * N + h * M + m, m * H + h) = 1;
  for (Index n = 0; n < N; ++n)
    for (Index l = 0; l < L; ++l) out.flip.top(l * N + n, M * H + n * L + l) = 1;
  out.flip.bottom = Matrix::Zero(H * N, N * H);
  for (Index n = 0; n < N; ++n)
    for (Index h = 0; h < H; ++h) out.flip.bottom(h * N + n, n * H + h) = 1;
  return out;
}

Report check_lie_object(const LieObjectLM& o) {
  Report r("Lie object " + o.name);
  if (!shapes_ok(o)) {
    r.fail("Shape", "map or star does not match the dimensions");
    return r;
  }
  const Algebra& N = o.bottom;
  const Index dm = o.top_dim(), dn = N.dim();
  r.merge(check_leibniz(N), "Bottom");
  r.merge(check_antisymmetry(N), "Bottom");
  for (Index i = 0; i < dm; ++i)
    for (Index j = 0; j < dn; ++j) {
      const Vector mj = o.star.at(i, j);
      r.expect_zero("Equivariant", {i, j}, o.map * mj - N.bracket()(o.map.col(i), unit(dn, j)));
      for (Index k = 0; k < dn; ++k)
        r.expect_zero("Module", {i, j, k},
                      o.star(mj, unit(dn, k)) - o.star(Vector(o.star.at(i, k)), unit(dn, j)) -
                          o.star(unit(dm, i), N.product(j, k)));
    }
  return r;
}

LieObjectLM phi(const Algebra& a) {
  if (!is_leibniz(a)) throw Error(ErrorCode::NotLeibniz, a.name() + " fails the Leibniz identity");
  return over_quotient(a, lieization(a));
}

Algebra psi(const LieObjectLM& o) {
  require(check_lie_object(o), ErrorCode::InvalidLieObject);
  return Algebra(o.name, o.star.precompose(identity(o.top_dim()), o.map));
}

Report check_xlielm(const XLieLM& x) {
  Report r("crossed module of Lie objects");
  const LieObjectLM &A = x.acted, &B = x.acting;
  if (!shapes_ok(A) || !shapes_ok(B)) {
    r.fail("Shape", "Lie object data do not match");
    return r;
  }
  const Index dm = A.top_dim(), dn = A.bottom.dim(), dl = B.top_dim(), dh = B.bottom.dim();
  if (!shape(x.act_top, dh, dm, dm) || !shape(x.act_bottom, dh, dn, dn) || !shape(x.xi, dl, dn, dm) ||
      !shape(x.boundary_top, dl, dm) || !shape(x.boundary_bottom, dh, dn)) {
    r.fail("Shape", "action or boundary does not match the objects");
    return r;
  }
  r.merge(check_lie_object(A), "Acted");
  r.merge(check_lie_object(B), "Acting");
  if (!r.passed()) return r;
  const Algebra &N = A.bottom, &H = B.bottom;
  const Matrix &f = A.map, &g = B.map, &d1 = x.boundary_top, &d2 = x.boundary_bottom;
  const BilinearMap &sm = A.star, &sl = B.star, &a1 = x.act_top, &a2 = x.act_bottom, &xi = x.xi;

  r.merge(check_lie_action(H, N, a2), "BottomAction");
  r.merge(check_lie_xmod({H, N, a2, d2}), "BottomXMod");
  r.merge(check_hom(N, H, d2), "BoundaryHom");
  r.expect_equal("BoundarySquare", {}, g * d1, d2 * f);

  for (Index h = 0; h < dh; ++h)
    for (Index m = 0; m < dm; ++m) {
      const Vector hm = a1.at(h, m);
      r.expect_zero("LMAction4", {h, m}, f * hm - a2(unit(dh, h), f.col(m)));
      r.expect_zero("BoundaryActs", {h, m}, d1 * hm + sl(d1.col(m), unit(dh, h)));
      for (Index k = 0; k < dh; ++k)
        r.expect_zero("LMAction1", {h, k, m},
                      a1(unit(dh, h), Vector(a1.at(k, m))) - a1(unit(dh, k), hm) - a1(H.product(h, k), unit(dm, m)));
      for (Index n = 0; n < dn; ++n)
        r.expect_zero("LMAction3", {h, m, n},
                      a1(unit(dh, h), Vector(sm.at(m, n))) - sm(hm, unit(dn, n)) -
                          sm(unit(dm, m), Vector(a2.at(h, n))));
    }
  for (Index l = 0; l < dl; ++l)
    for (Index n = 0; n < dn; ++n) {
      const Vector ln = xi.at(l, n);
      r.expect_zero("LMXi1", {l, n}, f * ln - a2(g.col(l), unit(dn, n)));
      // Printed as l * d2(h) with the codomain written N; read as l *_H d2(n).
      r.expect_zero("XiBoundary", {l, n}, d1 * ln - sl(unit(dl, l), d2.col(n)));
      for (Index h = 0; h < dh; ++h)
        r.expect_zero("LMXi2", {l, h, n},
                      xi(Vector(sl.at(l, h)), unit(dn, n)) - xi(unit(dl, l), Vector(a2.at(h, n))) +
                          a1(unit(dh, h), ln));
      for (Index k = 0; k < dn; ++k)
        r.expect_zero("LMXi3", {l, n, k},
                      xi(unit(dl, l), N.product(n, k)) - sm(ln, unit(dn, k)) + sm(Vector(xi.at(l, k)), unit(dn, n)));
    }
  for (Index m = 0; m < dm; ++m)
    for (Index n = 0; n < dn; ++n) {
      const Vector mn = sm.at(m, n);
      r.expect_zero("BoundaryEquivariant", {m, n}, d1 * mn - sl(d1.col(m), d2.col(n)));
      r.expect_zero("XiPeiffer", {m, n}, xi(d1.col(m), unit(dn, n)) - mn);
      r.expect_zero("ActionPeiffer", {m, n}, mn + a1(d2.col(n), unit(dm, m)));
    }
  return r;
}

XLieLM xphi(const CrossedModule& z) {
  require(xmod_report(z), ErrorCode::InvalidXMod);
  return build_xlielm(z, xmod_lie_ideal(z), "/[M,N]", ErrorCode::InvalidXMod).x;
}

CrossedModule xpsi(const XLieLM& x) {
  require(check_xlielm(x), ErrorCode::InvalidXLieLM);
  Algebra M = psi(x.acted), L = psi(x.acting);
  const Index dm = M.dim(), dl = L.dim();
  BilinearMap left = x.xi.precompose(identity(dl), x.acted.map);
  BilinearMap right = -x.act_top.precompose(x.acting.map, identity(dm)).flipped();
  return {{std::move(L), std::move(M), std::move(left), std::move(right)}, x.boundary_top};
}

Report check_lm_braiding(const XLieLM& x, const LMBraidingTriple& t) {
  Report r("braided crossed module of Lie objects");
  r.merge(check_xlielm(x));
  if (!r.passed()) return r;
  const LieObjectLM &A = x.acted, &B = x.acting;
  const Index dm = A.top_dim(), dn = A.bottom.dim(), dl = B.top_dim(), dh = B.bottom.dim();
  if (!shape(t.lh, dl, dh, dm) || !shape(t.hl, dh, dl, dm) || !shape(t.bottom, dh, dh, dn)) {
    r.fail("Shape", "braiding triple does not match the objects");
    return r;
  }
  const Algebra& H = B.bottom;
  const Matrix &f = A.map, &g = B.map, &d1 = x.boundary_top, &d2 = x.boundary_bottom;
  const BilinearMap &sm = A.star, &sl = B.star, &a1 = x.act_top, &xi = x.xi;
  const BilinearMap &lh = t.lh, &hl = t.hl;

  r.merge(check_braiding_lie({H, A.bottom, x.act_bottom, d2}, t.bottom), "BottomBraiding");
  for (Index l = 0; l < dl; ++l)
    for (Index h = 0; h < dh; ++h) {
      const Vector lh_ = lh.at(l, h), hl_ = hl.at(h, l), l_h = sl.at(l, h);
      r.expect_zero("LMBraid1", {l, h}, f * lh_ - t.bottom(g.col(l), unit(dh, h)), "lh");
      r.expect_zero("LMBraid1", {l, h}, f * hl_ - t.bottom(unit(dh, h), g.col(l)), "hl");
      r.expect_zero("LMBraid2", {l, h}, d1 * lh_ - l_h, "lh");
      r.expect_zero("LMBraid2", {l, h}, d1 * hl_ + l_h, "hl");
      for (Index k = 0; k < dh; ++k) {
        const Vector l_k = sl.at(l, k), hk = H.product(h, k);
        const Vector lhk = lh(unit(dl, l), hk), hkl = hl(hk, unit(dl, l));
        r.expect_zero("LMBraid6", {l, h, k}, lhk - lh(l_h, unit(dh, k)) + lh(l_k, unit(dh, h)));
        r.expect_zero("LMBraid7", {l, h, k}, hkl + hl(unit(dh, h), l_k) + lh(l_h, unit(dh, k)));
        r.expect_zero("LMBraid8", {l, h, k}, lhk - lh(l_h, unit(dh, k)) - hl(unit(dh, h), l_k));
        r.expect_zero("LMBraid9", {l, h, k}, hkl + hl(unit(dh, h), l_k) - hl(unit(dh, k), l_h));
      }
    }
  for (Index m = 0; m < dm; ++m) {
    for (Index n = 0; n < dn; ++n) {
      r.expect_zero("LMBraid3", {m, n}, lh(d1.col(m), d2.col(n)) - sm.at(m, n), "lh");
      r.expect_zero("LMBraid3", {m, n}, hl(d2.col(n), d1.col(m)) + sm.at(m, n), "hl");
    }
    for (Index h = 0; h < dh; ++h) {
      r.expect_zero("LMBraid4", {m, h}, lh(d1.col(m), unit(dh, h)) + a1.at(h, m), "lh");
      r.expect_zero("LMBraid5", {h, m}, hl(unit(dh, h), d1.col(m)) - a1.at(h, m), "hl");
    }
  }
  for (Index n = 0; n < dn; ++n)
    for (Index l = 0; l < dl; ++l) {
      r.expect_zero("LMBraid4", {n, l}, hl(d2.col(n), unit(dl, l)) + xi.at(l, n), "hl");
      r.expect_zero("LMBraid5", {l, n}, lh(unit(dl, l), d2.col(n)) - xi.at(l, n), "lh");
    }
  return r;
}

BraidedXLieLM bxphi(const BraidedXMod& z) {
  require(check_braiding_leibniz(z), ErrorCode::InvalidBraidedXMod);
  XLieParts p = build_xlielm(z.xmod, braided_lie_ideal(z), "/{M,N}", ErrorCode::InvalidBraidedXMod);
  const Index dn = z.acting().dim();
  const BilinearMap &curly = z.braiding.curly, &angle = z.braiding.angle;
  Report r("braiding descent");
  r.merge(check_descends("LH", curly, Subspace::zero(dn), p.acting.ideal(), Subspace::zero(z.acted().dim())));
  r.merge(check_descends("HL", angle, Subspace::zero(dn), p.acting.ideal(), Subspace::zero(z.acted().dim())));
  r.merge(check_descends("Bottom", curly, p.acting.ideal(), p.acting.ideal(), p.acted.ideal()));
  require(r, ErrorCode::InvalidBraidedXMod);
  LMBraidingTriple t{curly.precompose(identity(dn), p.acting.section()),
                     -angle.flipped().precompose(p.acting.section(), identity(dn)),
                     induced(curly, p.acting.section(), p.acting.section(), p.acted.proj())};
  return {std::move(p.x), std::move(t)};
}

BraidedXMod bxpsi(const XLieLM& x, const LMBraidingTriple& t) {
  require(check_lm_braiding(x, t), ErrorCode::InvalidTriple);
  CrossedModule z = xpsi(x);
  const Matrix& g = x.acting.map;
  const Index dl = g.cols();
  BilinearMap curly = t.lh.precompose(identity(dl), g);
  BilinearMap angle = -t.hl.precompose(g, identity(dl)).flipped();
  return {std::move(z), {std::move(curly), std::move(angle)}};
}

CatAlgebra CatLieObjectLM::bottom() const {
  return CatAlgebra(arrows.bottom, objects.bottom, source.bottom, target.bottom, identity.bottom);
}

Report check_cat_lie_object(const CatLieObjectLM& c) {
  Report r("categorical Lie object");
  r.merge(check_lie_object(c.arrows), "Arrows");
  r.merge(check_lie_object(c.objects), "Objects");
  if (!r.passed()) return r;
  const LieObjectLM &A = c.arrows, &O = c.objects;
  const Index c1 = A.top_dim(), d1 = A.bottom.dim(), c0 = O.top_dim();

  struct Leg {
    const char* tag;
    const LMMorphism* f;
    const LieObjectLM* src;
    const LieObjectLM* dst;
  };
  for (const Leg& leg : {Leg{"Source", &c.source, &A, &O}, Leg{"Target", &c.target, &A, &O},
                         Leg{"Identity", &c.identity, &O, &A}}) {
    Report lr = check_lm_morphism(*leg.f, leg.src->object(), leg.dst->object());
    if (lr.passed()) {
      lr.merge(check_hom(leg.src->bottom, leg.dst->bottom, leg.f->bottom), "Hom");
      const Index top = leg.src->top_dim(), bot = leg.src->bottom.dim();
      for (Index i = 0; i < top; ++i)
        for (Index j = 0; j < bot; ++j)
          lr.expect_zero("Equivariant", {i, j},
                         leg.f->top * leg.src->star.at(i, j) - leg.dst->star(leg.f->top.col(i), leg.f->bottom.col(j)));
    }
    r.merge(lr, leg.tag);
  }
  if (!r.passed()) return r;
  const Matrix &s1 = c.source.top, &t1 = c.target.top, &e1 = c.identity.top;
  r.expect_equal("TopUnit", {0}, s1 * e1, identity(c0));
  r.expect_equal("TopUnit", {1}, t1 * e1, identity(c0));

  CatAlgebra bottom;
  try {
    bottom = c.bottom();
  } catch (const Error& e) {
    r.fail("Bottom", e.what());
    return r;
  }
  Composition bk = derive_k(bottom);
  r.merge(bk.report, "Bottom");

  // The composition of the top component must be a morphism of Lie objects out of the pullback.
  const Subspace top_pullback = pullback_subspace(t1, s1);
  const Matrix& f1 = A.map;
  for (Index p = 0; p < top_pullback.dim(); ++p) {
    const Vector x = top_pullback.vector(p).head(c1), y = top_pullback.vector(p).tail(c1);
    const Vector k = compose(e1, t1, x, y);
    r.expect_zero("CompositionSquare", {p}, f1 * k - bottom.compose(f1 * x, f1 * y));
    for (Index q = 0; q < bk.pullback.dim(); ++q) {
      const Vector u = bk.pullback.vector(q).head(d1), v = bk.pullback.vector(q).tail(d1);
      r.expect_zero("CompositionEquivariant", {p, q},
                    compose(e1, t1, A.star(x, u), A.star(y, v)) - A.star(k, bottom.compose(u, v)));
    }
  }
  return r;
}

CatLieObjectLM iphi(const CatAlgebra& c) {
  require(derive_k(c).report, ErrorCode::InvalidCatAlgebra);
  QuotientAlgebra q1 = lieization(c.arrows()), q0 = lieization(c.objects());
  return {over_quotient(c.arrows(), q1),
          over_quotient(c.objects(), q0),
          {c.source(), q0.proj() * c.source() * q1.section()},
          {c.target(), q0.proj() * c.target() * q1.section()},
          {c.identity(), q1.proj() * c.identity() * q0.section()}};
}

CatAlgebra ipsi(const CatLieObjectLM& c) {
  require(check_cat_lie_object(c), ErrorCode::InvalidCatLieObjectLM);
  return CatAlgebra(psi(c.arrows), psi(c.objects), c.source.top, c.target.top, c.identity.top);
}

Report check_cat_lm_braiding(const CatLieObjectLM& c, const CatLMBraiding& b) {
  Report r("braided categorical Lie object");
  r.merge(check_cat_lie_object(c));
  if (!r.passed()) return r;
  const LieObjectLM &A = c.arrows, &O = c.objects;
  const Index c1 = A.top_dim(), d1 = A.bottom.dim(), c0 = O.top_dim(), d0 = O.bottom.dim();
  if (!shape(b.cd, c0, d0, c1) || !shape(b.dc, d0, c0, c1) || !shape(b.bottom, d0, d0, d1)) {
    r.fail("Shape", "braiding triple does not match the objects");
    return r;
  }
  const CatAlgebra bottom = c.bottom();
  r.merge(check_cat_braiding_lie(bottom, b.bottom), "BottomBraiding");
  const Matrix &f1 = A.map, &f0 = O.map, &s1 = c.source.top, &t1 = c.target.top, &e1 = c.identity.top;
  const Matrix &s2 = c.source.bottom, &t2 = c.target.bottom;
  const BilinearMap &cd = b.cd, &dc = b.dc, &so = O.star;
  const Algebra& D0 = O.bottom;

  for (Index i = 0; i < c0; ++i)
    for (Index j = 0; j < d0; ++j) {
      const Vector cdij = cd.at(i, j), dcji = dc.at(j, i), cj = so.at(i, j);
      r.expect_zero("CatLMBraid1", {i, j}, f1 * cdij - b.bottom(f0.col(i), unit(d0, j)), "cd");
      r.expect_zero("CatLMBraid1", {i, j}, f1 * dcji - b.bottom(unit(d0, j), f0.col(i)), "dc");
      r.expect_zero("CatLMBraid2", {i, j}, s1 * cdij - cj, "cd source");
      r.expect_zero("CatLMBraid2", {i, j}, t1 * cdij + cj, "cd target");
      r.expect_zero("CatLMBraid2", {i, j}, s1 * dcji + cj, "dc source");
      r.expect_zero("CatLMBraid2", {i, j}, t1 * dcji - cj, "dc target");
      for (Index k = 0; k < d0; ++k) {
        const Vector ck = so.at(i, k), jk = D0.product(j, k);
        const Vector cd_c_jk = cd(unit(c0, i), jk), dc_jk_c = dc(jk, unit(c0, i));
        r.expect_zero("CatLMBraid3", {i, j, k}, cd_c_jk - cd(cj, unit(d0, k)) + cd(ck, unit(d0, j)));
        r.expect_zero("CatLMBraid4", {i, j, k}, dc_jk_c + dc(unit(d0, j), ck) + cd(cj, unit(d0, k)));
        r.expect_zero("CatLMBraid5", {i, j, k}, cd_c_jk - cd(cj, unit(d0, k)) - dc(unit(d0, j), ck));
        r.expect_zero("CatLMBraid6", {i, j, k}, dc_jk_c + dc(unit(d0, j), ck) - dc(unit(d0, k), cj));
      }
    }
  // Equal composites around the squares over x * y, for x in C1 and y in D1.
  for (Index x = 0; x < c1; ++x)
    for (Index y = 0; y < d1; ++y) {
      const Vector xy = A.star.at(x, y);
      const Vector sx = s1.col(x), tx = t1.col(x), sy = s2.col(y), ty = t2.col(y);
      r.expect_zero("CatLMBraidSquare", {x, y},
                    compose(e1, t1, xy, cd(tx, ty)) - compose(e1, t1, cd(sx, sy), Vector(-xy)), "cd");
      r.expect_zero("CatLMBraidSquare", {x, y},
                    compose(e1, t1, Vector(-xy), dc(ty, tx)) - compose(e1, t1, dc(sy, sx), xy), "dc");
    }
  return r;
}

BraidedCatLieObjectLM biphi(const BraidedCatAlgebra& d) {
  require(check_cat_braiding_leibniz(d.cat, d.braiding), ErrorCode::InvalidBraidedCat);
  const CatAlgebra& c = d.cat;
  CatLieization lie = cat_lieization(c, d.braiding);
  const QuotientAlgebra &q1 = lie.arrows, &q0 = lie.objects;
  const Index c1 = c.arrows().dim(), c0 = c.objects().dim();
  Report r("braiding descent");
  r.merge(check_descends("Star", c.arrows().bracket(), Subspace::zero(c1), q1.ideal(), Subspace::zero(c1)));
  r.merge(check_descends("CD", d.braiding.tau, Subspace::zero(c0), q0.ideal(), Subspace::zero(c1)));
  r.merge(check_descends("DC", d.braiding.psi, Subspace::zero(c0), q0.ideal(), Subspace::zero(c1)));
  require(r, ErrorCode::InvalidBraidedCat);

  CatLieObjectLM cat{over_quotient(c.arrows(), q1),
                     over_quotient(c.objects(), q0),
                     {c.source(), lie.lie.source()},
                     {c.target(), lie.lie.target()},
                     {c.identity(), lie.lie.identity()}};
  CatLMBraiding b{d.braiding.tau.precompose(identity(c0), q0.section()),
                  -d.braiding.psi.flipped().precompose(q0.section(), identity(c0)), lie.tau};
  return {std::move(cat), std::move(b)};
}

BraidedCatAlgebra bipsi(const CatLieObjectLM& c, const CatLMBraiding& b) {
  require(check_cat_lm_braiding(c, b), ErrorCode::InvalidCatLMBraiding);
  CatAlgebra cat = ipsi(c);
  const Matrix& f0 = c.objects.map;
  const Index c0 = f0.cols();
  BilinearMap tau = b.cd.precompose(identity(c0), f0);
  BilinearMap psi_ = -b.dc.precompose(f0, identity(c0)).flipped();
  return {std::move(cat), {std::move(tau), std::move(psi_)}};
}

}  // namespace leibniz
