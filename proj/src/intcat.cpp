#include "leibniz/intcat.hpp"

#include "leibniz/error.hpp"

namespace leibniz {

CatAlgebra::CatAlgebra(Algebra arrows, Algebra objects, Matrix source, Matrix target, Matrix identity)
    : arrows_(std::move(arrows)),
      objects_(std::move(objects)),
      source_(std::move(source)),
      target_(std::move(target)),
      identity_(std::move(identity)) {
  const Index d1 = arrows_.dim(), d0 = objects_.dim();
  if (source_.rows() != d0 || source_.cols() != d1 || target_.rows() != d0 || target_.cols() != d1 ||
      identity_.rows() != d1 || identity_.cols() != d0)
    throw Error(ErrorCode::InvalidCatAlgebra, "structure maps have the wrong shape");
  const Matrix id = Matrix::Identity(d0, d0);
  if (!same(Matrix(source_ * identity_), id)) throw Error(ErrorCode::InvalidCatAlgebra, "s e is not the identity");
  if (!same(Matrix(target_ * identity_), id)) throw Error(ErrorCode::InvalidCatAlgebra, "t e is not the identity");
  Report r;
  r.merge(check_hom(arrows_, objects_, source_), "s");
  r.merge(check_hom(arrows_, objects_, target_), "t");
  r.merge(check_hom(objects_, arrows_, identity_), "e");
  if (!r.passed()) throw Error(ErrorCode::InvalidCatAlgebra, r.summary());
}

CatAlgebra discrete_category(const Algebra& a) {
  const Matrix id = Matrix::Identity(a.dim(), a.dim());
  return {a, a, id, id, id};
}

Composition derive_k(const CatAlgebra& c) {
  const Algebra& C1 = c.arrows();
  const Index d1 = C1.dim();
  const Matrix &s = c.source(), &t = c.target(), &e = c.identity();
  Composition out;
  out.pullback = pullback_subspace(t, s);
  out.k = Matrix(d1, 2 * d1);
  out.k.leftCols(d1) = Matrix::Identity(d1, d1) - e * t;
  out.k.rightCols(d1) = Matrix::Identity(d1, d1);
  Report& r = out.report;
  r = Report("composition of " + C1.name());

  const Algebra pair = direct_sum(C1, C1);
  const Subspace& P = out.pullback;
  for (Index i = 0; i < P.dim(); ++i) {
    const Vector p = P.vector(i);
    const Vector x = p.head(d1), y = p.tail(d1);
    r.expect_zero("FormulasAgree", {i}, (x - e * (t * x) + y) - (x - e * (s * y) + y));
    r.expect_zero("SourceOfComposite", {i}, s * (out.k * p) - s * x);
    r.expect_zero("TargetOfComposite", {i}, t * (out.k * p) - t * y);
  }
  for (Index i = 0; i < P.dim(); ++i)
    for (Index j = 0; j < P.dim(); ++j) {
      const Vector p = P.vector(i), q = P.vector(j), pq = pair(p, q);
      r.expect("PullbackSubalgebra", P.contains(pq), "pair " + std::to_string(i) + "," + std::to_string(j));
      r.expect_zero("CompositionHom", {i, j}, out.k * pq - C1(out.k * p, out.k * q));
    }
  for (Index i = 0; i < d1; ++i) {
    const Vector x = unit(d1, i);
    r.expect_zero("LeftUnit", {i}, c.compose(e * (s * x), x) - x);
    r.expect_zero("RightUnit", {i}, c.compose(x, e * (t * x)) - x);
  }
  return out;
}

Report check_kernel_commutator(const CatAlgebra& c) {
  Report r("kernel commutator of " + c.arrows().name());
  const Subspace ks = kernel(c.source()), kt = kernel(c.target());
  for (Index i = 0; i < ks.dim(); ++i)
    for (Index j = 0; j < kt.dim(); ++j) {
      r.expect_zero("KernelCommutator", {i, j}, c.arrows()(ks.vector(i), kt.vector(j)));
      r.expect_zero("KernelCommutator", {i, j}, c.arrows()(kt.vector(j), ks.vector(i)), "reversed");
    }
  return r;
}

namespace {

bool braiding_shape_ok(const CatAlgebra& c, const BilinearMap& b) {
  return b.left_dim() == c.objects().dim() && b.right_dim() == c.objects().dim() && b.out_dim() == c.arrows().dim();
}

// The square with [x, y] on top, the braiding on the sides and `bottom` below commutes.
void check_square(Report& r, const std::string& tag, const std::string& which, const CatAlgebra& c,
                  const BilinearMap& br, Index i, Index j, const Vector& bottom) {
  const Algebra& C1 = c.arrows();
  const Matrix &s = c.source(), &t = c.target();
  const Vector x = unit(C1.dim(), i), y = unit(C1.dim(), j);
  const Vector top = C1(x, y);
  const Vector right = br(t * x, t * y), left = br(s * x, s * y);
  r.expect_zero(tag, {i, j}, t * top - s * right, which + " upper path composable");
  r.expect_zero(tag, {i, j}, t * left - s * bottom, which + " lower path composable");
  r.expect_zero(tag, {i, j}, c.compose(top, right) - c.compose(left, bottom), which);
}

}  // namespace

Report check_cat_braiding_leibniz(const CatAlgebra& c, const CatBraiding& b) {
  const Algebra &C1 = c.arrows(), &C0 = c.objects();
  Report r("braided categorical " + C1.name() + " over " + C0.name());
  r.merge(check_leibniz(C1), "Arrows").merge(check_leibniz(C0), "Objects");
  r.merge(derive_k(c).report, "Category");
  if (!braiding_shape_ok(c, b.tau) || !braiding_shape_ok(c, b.psi)) {
    r.fail("Shape", "braiding maps must be C0 x C0 -> C1");
    return r;
  }
  const Matrix &s = c.source(), &t = c.target();
  const Index d0 = C0.dim(), d1 = C1.dim();
  for (Index i = 0; i < d0; ++i)
    for (Index j = 0; j < d0; ++j) {
      r.expect_zero("LeibT1", {i, j}, s * b.tau.at(i, j) - C0.product(i, j), "tau source");
      r.expect_zero("LeibT1", {i, j}, t * b.tau.at(i, j) + C0.product(i, j), "tau target");
      r.expect_zero("LeibT1", {i, j}, s * b.psi.at(i, j) - C0.product(i, j), "psi source");
      r.expect_zero("LeibT1", {i, j}, t * b.psi.at(i, j) + C0.product(i, j), "psi target");
    }
  for (Index i = 0; i < d1; ++i)
    for (Index j = 0; j < d1; ++j) {
      const Vector bottom = -C1.product(i, j);
      check_square(r, "LeibT2", "tau", c, b.tau, i, j, bottom);
      check_square(r, "LeibT2", "psi", c, b.psi, i, j, bottom);
    }
  const BilinearMap &tau = b.tau, &psi = b.psi;
  for (Index i = 0; i < d0; ++i)
    for (Index j = 0; j < d0; ++j)
      for (Index k = 0; k < d0; ++k) {
        const Vector a = unit(d0, i), bb = unit(d0, j), cc = unit(d0, k);
        const Vector a_bc = C0(bb, cc), ab = C0(a, bb), ac = C0(a, cc);
        r.expect_zero("LeibT3", {i, j, k}, tau(a, a_bc) - tau(ab, cc) + tau(ac, bb));
        r.expect_zero("LeibT4", {i, j, k}, psi(a, a_bc) - tau(ab, cc) + psi(ac, bb));
        r.expect_zero("LeibT5", {i, j, k}, tau(a, a_bc) - tau(ab, cc) + psi(ac, bb));
        r.expect_zero("LeibT6", {i, j, k}, psi(a, a_bc) - psi(ab, cc) + psi(ac, bb));
      }
  return r;
}

Report check_cat_braiding_lie(const CatAlgebra& c, const BilinearMap& tau) {
  const Algebra &C1 = c.arrows(), &C0 = c.objects();
  Report r("braided categorical Lie " + C1.name() + " over " + C0.name());
  r.merge(check_leibniz(C1), "Arrows").merge(check_antisymmetry(C1), "Arrows");
  r.merge(check_leibniz(C0), "Objects").merge(check_antisymmetry(C0), "Objects");
  r.merge(derive_k(c).report, "Category");
  if (!braiding_shape_ok(c, tau)) {
    r.fail("Shape", "braiding must be C0 x C0 -> C1");
    return r;
  }
  const Matrix &s = c.source(), &t = c.target();
  const Index d0 = C0.dim(), d1 = C1.dim();
  for (Index i = 0; i < d0; ++i)
    for (Index j = 0; j < d0; ++j) {
      r.expect_zero("LieT1", {i, j}, s * tau.at(i, j) - C0.product(i, j), "source");
      r.expect_zero("LieT1", {i, j}, t * tau.at(i, j) - C0.product(j, i), "target");
    }
  for (Index i = 0; i < d1; ++i)
    for (Index j = 0; j < d1; ++j) check_square(r, "LieT2", "tau", c, tau, i, j, C1.product(j, i));
  for (Index i = 0; i < d0; ++i)
    for (Index j = 0; j < d0; ++j)
      for (Index k = 0; k < d0; ++k) {
        const Vector a = unit(d0, i), b = unit(d0, j), cc = unit(d0, k);
        r.expect_zero("LieT3", {i, j, k}, tau(C0(a, b), cc) - tau(a, C0(b, cc)) + tau(b, C0(a, cc)));
        r.expect_zero("LieT4", {i, j, k}, tau(a, C0(b, cc)) - tau(C0(a, b), cc) + tau(C0(a, cc), b));
      }
  return r;
}

CatBraiding cat_braiding_embed_lie(const CatAlgebra& c, const BilinearMap& tau) {
  Report r = check_cat_braiding_lie(c, tau);
  if (!r.passed()) throw Error(ErrorCode::NotLieCatBraiding, r.summary());
  return {tau, -tau.flipped()};
}

Report check_tau_bracket_identity(const CatAlgebra& c, const BilinearMap& tau) {
  const Algebra &C1 = c.arrows(), &C0 = c.objects();
  Report r("tau bracket identity over " + C0.name());
  const Matrix& e = c.identity();
  const Index d0 = C0.dim();
  for (Index i = 0; i < d0; ++i)
    for (Index j = 0; j < d0; ++j)
      for (Index k = 0; k < d0; ++k) {
        const Vector a = unit(d0, i), bc_tau = tau.at(j, k), bc = C0.product(j, k);
        r.expect_zero("TauBracketLeft", {i, j, k}, tau(a, bc) - C1(e * a, bc_tau));
        r.expect_zero("TauBracketRight", {j, k, i}, tau(bc, a) - C1(bc_tau, e * a));
      }
  return r;
}

Report check_cat_functor(const Matrix& f1, const Matrix& f0, const CatAlgebra& src, const CatAlgebra& dst) {
  Report r("internal functor");
  if (f1.rows() != dst.arrows().dim() || f1.cols() != src.arrows().dim() || f0.rows() != dst.objects().dim() ||
      f0.cols() != src.objects().dim()) {
    r.fail("Shape", "functor components do not match");
    return r;
  }
  r.merge(check_hom(src.arrows(), dst.arrows(), f1), "ArrowHom");
  r.merge(check_hom(src.objects(), dst.objects(), f0), "ObjectHom");
  r.expect_equal("Source", {}, dst.source() * f1, f0 * src.source());
  r.expect_equal("Target", {}, dst.target() * f1, f0 * src.target());
  r.expect_equal("Identity", {}, dst.identity() * f0, f1 * src.identity());
  const Subspace p = derive_k(src).pullback;
  const Index d1 = src.arrows().dim();
  for (Index i = 0; i < p.dim(); ++i) {
    const Vector v = p.vector(i), x = v.head(d1), y = v.tail(d1);
    r.expect_zero("Composition", {i}, f1 * src.compose(x, y) - dst.compose(f1 * x, f1 * y));
  }
  return r;
}

Report check_cat_functor(const Matrix& f1, const Matrix& f0, const CatAlgebra& src, const CatAlgebra& dst,
                         const CatBraiding& src_braiding, const CatBraiding& dst_braiding) {
  Report r = check_cat_functor(f1, f0, src, dst);
  if (!r.passed()) return r;
  for (Index i = 0; i < src.objects().dim(); ++i)
    for (Index j = 0; j < src.objects().dim(); ++j) {
      r.expect_zero("LeibHT1", {i, j}, f1 * src_braiding.tau.at(i, j) - dst_braiding.tau(f0.col(i), f0.col(j)));
      r.expect_zero("LeibHT2", {i, j}, f1 * src_braiding.psi.at(i, j) - dst_braiding.psi(f0.col(i), f0.col(j)));
    }
  return r;
}

Subspace cat_lie_ideal(const CatAlgebra& c, const CatBraiding& b) {
  const Algebra& C1 = c.arrows();
  std::vector<Vector> gens;
  Subspace squares = square_span(C1);
  for (Index i = 0; i < squares.dim(); ++i) gens.push_back(squares.vector(i));
  for (Index i = 0; i < c.objects().dim(); ++i)
    for (Index j = 0; j < c.objects().dim(); ++j) gens.push_back(b.tau.at(i, j) + b.psi.at(j, i));
  return ideal_closure(C1, Subspace::span(C1.dim(), gens));
}

CatLieization cat_lieization(const CatAlgebra& c, const CatBraiding& b) {
  QuotientAlgebra q1 = quotient_algebra(c.arrows(), cat_lie_ideal(c, b), c.arrows().name() + "/[tau]");
  QuotientAlgebra q0 = lieization(c.objects());
  Report r("categorical Lieization of " + c.arrows().name());
  r.merge(check_descends("Source", c.source(), q1.ideal(), q0.ideal()));
  r.merge(check_descends("Target", c.target(), q1.ideal(), q0.ideal()));
  r.merge(check_descends("Identity", c.identity(), q0.ideal(), q1.ideal()));
  r.merge(check_descends("Braiding", b.tau, q0.ideal(), q0.ideal(), q1.ideal()));
  if (!r.passed()) throw Error(ErrorCode::InvalidCatAlgebra, r.summary());

  CatAlgebra lie(q1.algebra, q0.algebra, q0.proj() * c.source() * q1.section(),
                 q0.proj() * c.target() * q1.section(), q1.proj() * c.identity() * q0.section());
  BilinearMap tau = induced(b.tau, q0.section(), q0.section(), q1.proj());
  r.merge(check_cat_braiding_lie(lie, tau), "Lie");

  // Both extensions x + y - e s y and x + y - e t x of the composition agree after projecting,
  // on lifts of the quotient pullback and on the original pullback.
  const Index d1 = c.arrows().dim(), q = lie.arrows().dim();
  const Matrix &e = c.identity(), &s = c.source(), &t = c.target(), &pi = q1.proj();
  const Subspace lp = derive_k(lie).pullback;
  for (Index i = 0; i < lp.dim(); ++i) {
    const Vector x = q1.section() * lp.vector(i).head(q), y = q1.section() * lp.vector(i).tail(q);
    r.expect_zero("CompositionExtensions", {i}, pi * (x + y - e * (s * y)) - pi * (x + y - e * (t * x)));
    r.expect_zero("CompositionDescends", {i}, pi * (x + y - e * (s * y)) - lie.compose(pi * x, pi * y));
  }
  const Subspace op = derive_k(c).pullback;
  for (Index i = 0; i < op.dim(); ++i) {
    const Vector x = op.vector(i).head(d1), y = op.vector(i).tail(d1);
    r.expect_zero("CompositionProjects", {i}, pi * c.compose(x, y) - lie.compose(pi * x, pi * y));
  }
  return {std::move(lie), std::move(tau), std::move(q1), std::move(q0), std::move(r)};
}

}  // namespace leibniz
