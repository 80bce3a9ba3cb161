#include "leibniz/equiv.hpp"

#include "leibniz/error.hpp"

namespace leibniz {

BraidedCatAlgebra functor_C(const BraidedXMod& z) {
  Report pre = check_braiding_leibniz(z);
  if (!pre.passed()) throw Error(ErrorCode::InvalidBraidedXMod, pre.summary());
  const Algebra &M = z.acted(), &N = z.acting();
  const Index dm = M.dim(), dn = N.dim();
  SemidirectProduct sd = semidirect(z.xmod.action);
  Matrix s(dn, dm + dn), t(dn, dm + dn);
  s << Matrix::Zero(dn, dm), Matrix::Identity(dn, dn);
  t << z.xmod.boundary, Matrix::Identity(dn, dn);
  Matrix e = sd.include_acting;
  const Scalar minus_two(-2);
  BilinearMap tau(dn, dn, dm + dn), psi(dn, dn, dm + dn);
  for (Index i = 0; i < dn; ++i)
    for (Index j = 0; j < dn; ++j) {
      tau.at(i, j) << minus_two * z.braiding.curly.at(i, j), N.product(i, j);
      psi.at(i, j) << minus_two * z.braiding.angle.at(i, j), N.product(i, j);
    }
  return {CatAlgebra(sd.algebra, N, std::move(s), std::move(t), std::move(e)), {std::move(tau), std::move(psi)}};
}

BraidedXMod functor_X(const BraidedCatAlgebra& d) {
  Report pre = check_cat_braiding_leibniz(d.cat, d.braiding);
  if (!pre.passed()) throw Error(ErrorCode::InvalidBraidedCat, pre.summary());
  const CatAlgebra& c = d.cat;
  const Algebra &C1 = c.arrows(), &C0 = c.objects();
  const Subspace K = kernel(c.source());
  const Matrix E = K.embedding();
  const Matrix& e = c.identity();

  auto to_kernel = [&](const BilinearMap& b, const std::string& what) {
    for (Index col = 0; col < b.coeff().cols(); ++col)
      if (!K.contains(b.coeff().col(col)))
        throw Error(ErrorCode::InvalidBraidedCat, what + " leaves ker(s)");
    return BilinearMap(b.left_dim(), b.right_dim(), K.coordinates_of_columns(b.coeff()));
  };

  Algebra M("ker(s)", to_kernel(C1.bracket().precompose(E, E), "bracket"));
  BilinearMap left = to_kernel(C1.bracket().precompose(e, E), "left action");
  BilinearMap right = to_kernel(C1.bracket().precompose(E, e), "right action");
  Matrix boundary = c.target() * E;
  const Scalar half(1, 2);
  const BilinearMap e_bracket = e * C0.bracket();
  BilinearMap curly = to_kernel(half * (e_bracket - d.braiding.tau), "curly braiding");
  BilinearMap angle = to_kernel(half * (e_bracket - d.braiding.psi), "angle braiding");
  return {{{C0, std::move(M), std::move(left), std::move(right)}, std::move(boundary)},
          {std::move(curly), std::move(angle)}};
}

AlphaIso alpha_iso(const BraidedXMod& z) {
  BraidedCatAlgebra c = functor_C(z);
  BraidedXMod xc = functor_X(c);
  const Index dm = z.acted().dim(), dn = z.acting().dim();
  const Subspace K = kernel(c.cat.source());
  Matrix include_acted = Matrix::Zero(dm + dn, dm);
  include_acted.topRows(dm) = Matrix::Identity(dm, dm);
  AlphaIso out{K.coordinates_of_columns(include_acted), Matrix::Identity(dn, dn), std::move(xc), Report("alpha")};
  out.report.expect("AlphaInKernel", is_zero(Matrix(c.cat.source() * include_acted)), "(m, 0) must lie in ker s");
  out.report.merge(check_bxmod_hom(out.acted, out.acting, z, out.target), "Hom");
  out.report.expect("AlphaBijective", out.acted.rows() == dm && rank(out.acted) == dm, "rank deficient");
  out.report.expect("AlphaBijective", rank(out.acting) == dn, "identity rank deficient");
  return out;
}

BetaIso beta_iso(const BraidedCatAlgebra& d) {
  BraidedXMod x = functor_X(d);
  BraidedCatAlgebra cx = functor_C(x);
  const CatAlgebra& c = d.cat;
  const Index d1 = c.arrows().dim(), d0 = c.objects().dim();
  const Subspace K = kernel(c.source());
  Matrix beta(K.dim() + d0, d1);
  beta.topRows(K.dim()) = K.coordinates_of_columns(Matrix(Matrix::Identity(d1, d1) - c.identity() * c.source()));
  beta.bottomRows(d0) = c.source();
  BetaIso out{std::move(beta), Matrix::Identity(d0, d0), std::move(cx), Report("beta")};
  out.report.merge(check_cat_functor(out.arrows, out.objects, c, out.target.cat, d.braiding, out.target.braiding),
                   "Functor");
  out.report.expect("BetaBijective", out.arrows.rows() == d1 && rank(out.arrows) == d1, "rank deficient");
  out.report.expect("BetaIdentity", same(Matrix(out.arrows * c.identity()), out.target.cat.identity()),
                    "beta e must equal the identity map of the image");
  return out;
}

Report roundtrip_check(const std::vector<NamedSeed>& seeds) {
  Report r("round trip");
  for (const NamedSeed& seed : seeds) {
    if (const auto* z = std::get_if<BraidedXMod>(&seed.object)) {
      Report pre = check_braiding_leibniz(*z);
      if (!pre.passed()) {
        r.fail("Precheck", seed.name + " is not a braided crossed module; skipped");
        continue;
      }
      r.merge(alpha_iso(*z).report, seed.name + "/alpha");
      r.merge(beta_iso(functor_C(*z)).report, seed.name + "/beta");
    } else {
      const auto& d = std::get<BraidedCatAlgebra>(seed.object);
      Report pre = check_cat_braiding_leibniz(d.cat, d.braiding);
      if (!pre.passed()) {
        r.fail("Precheck", seed.name + " is not a braided categorical algebra; skipped");
        continue;
      }
      r.merge(beta_iso(d).report, seed.name + "/beta");
      r.merge(alpha_iso(functor_X(d)).report, seed.name + "/alpha");
    }
  }
  return r;
}

}  // namespace leibniz
