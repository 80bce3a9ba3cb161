#include "leibniz/nat.hpp"

#include "leibniz/error.hpp"

namespace leibniz {

namespace {

// Placement of the two generator families inside the ambient space.
struct Ambient {
  Index dm, dn;
  Index dim() const { return 2 * dm * dn; }
  Vector ot(const Vector& m, const Vector& n) const {
    Vector v = Vector::Zero(dim());
    v.head(dm * dn) = kron(m, n);
    return v;
  }
  Vector oast(const Vector& n, const Vector& m) const {
    Vector v = Vector::Zero(dim());
    v.tail(dm * dn) = kron(n, m);
    return v;
  }
  // Ambient -> M ⊗ N or N ⊗ M coordinate blocks.
  Matrix ot_block() const {
    Matrix p = Matrix::Zero(dim(), dm * dn);
    p.topRows(dm * dn) = Matrix::Identity(dm * dn, dm * dn);
    return p;
  }
  Matrix oast_block() const {
    Matrix p = Matrix::Zero(dim(), dm * dn);
    p.bottomRows(dm * dn) = Matrix::Identity(dm * dn, dm * dn);
    return p;
  }
};

// Linear map on the ambient space given generator-wise by f(m_i ⊗ n_j) and g(n_j ⊛ m_i).
template <typename F, typename G>
Matrix on_generators(const Ambient& a, Index rows, F f, G g) {
  Matrix out(rows, a.dim());
  for (Index i = 0; i < a.dm; ++i)
    for (Index j = 0; j < a.dn; ++j) {
      out.col(i * a.dn + j) = f(i, j);
      out.col(a.dm * a.dn + j * a.dm + i) = g(i, j);
    }
  return out;
}

}  // namespace

TensorProduct nonabelian_tensor(const LeibnizAction& n_on_m, const LeibnizAction& m_on_n, bool lie_collapse) {
  const Algebra &M = n_on_m.acted, &N = n_on_m.acting;
  if (!(m_on_n.acting == M) || !(m_on_n.acted == N))
    throw Error(ErrorCode::DimensionMismatch, "the two actions do not pair the same algebras");
  const Index dm = M.dim(), dn = N.dim();
  const Ambient amb{dm, dn};
  const BilinearMap &s1 = n_on_m.left, &s2 = n_on_m.right;   // N x M -> M, M x N -> M
  const BilinearMap &d1 = m_on_n.left, &d2 = m_on_n.right;   // M x N -> N, N x M -> N
  auto eM = [&](Index i) { return unit(dm, i); };
  auto eN = [&](Index i) { return unit(dn, i); };

  std::vector<Vector> rel;
  for (Index a = 0; a < dm; ++a)
    for (Index b = 0; b < dn; ++b) {
      for (Index c = 0; c < dn; ++c) {
        rel.push_back(amb.ot(eM(a), N.product(b, c)) - amb.ot(s2.at(a, b), eN(c)) + amb.ot(s2.at(a, c), eN(b)));
        rel.push_back(amb.oast(N.product(b, c), eM(a)) - amb.ot(s1.at(b, a), eN(c)) +
                      amb.oast(eN(b), s2.at(a, c)));
        rel.push_back(amb.oast(eN(b), s1.at(c, a)) + amb.oast(eN(b), s2.at(a, c)));
      }
      for (Index c = 0; c < dm; ++c) {
        rel.push_back(amb.oast(eN(b), M.product(a, c)) - amb.oast(d2.at(b, a), eM(c)) +
                      amb.oast(d2.at(b, c), eM(a)));
        rel.push_back(amb.ot(M.product(a, c), eN(b)) - amb.oast(d1.at(a, b), eM(c)) + amb.ot(eM(a), d2.at(b, c)));
        rel.push_back(amb.ot(eM(a), d1.at(c, b)) + amb.ot(eM(a), d2.at(b, c)));
      }
    }

  // Generator brackets: [g, g'] = λ(g) ⊗ ρ(g') with λ(m ⊗ n) = m *₂ n, λ(n ⊛ m) = n *₁ m,
  // ρ(m ⊗ n) = m ·₁ n, ρ(n ⊛ m) = n ·₂ m.
  const Matrix lambda = on_generators(
      amb, dm, [&](Index i, Index j) { return Vector(s2.at(i, j)); }, [&](Index i, Index j) { return Vector(s1.at(j, i)); });
  const Matrix rho = on_generators(
      amb, dn, [&](Index i, Index j) { return Vector(d1.at(i, j)); }, [&](Index i, Index j) { return Vector(d2.at(j, i)); });
  BilinearMap ot_map(dm, dn, amb.ot_block());
  BilinearMap bracket = ot_map.precompose(lambda, rho);

  // The two outer expressions of every generator bracket must agree: λ(g) ⊗ ρ(g') = λ'(g) ⊛ λ''(g')
  // with λ'(m ⊗ n) = m ·₁ n, λ'(n ⊛ m) = n ·₂ m and λ''(m ⊗ n) = m *₂ n, λ''(n ⊛ m) = n *₁ m.
  BilinearMap oast_map(dn, dm, amb.oast_block());
  BilinearMap other = oast_map.precompose(rho, lambda);
  const Index da = amb.dim();
  for (Index g = 0; g < da; ++g)
    for (Index h = 0; h < da; ++h) rel.push_back(bracket.at(g, h) - other.at(g, h));
  if (lie_collapse)
    for (Index i = 0; i < dm; ++i)
      for (Index j = 0; j < dn; ++j) rel.push_back(amb.oast(eN(j), eM(i)) + amb.ot(eM(i), eN(j)));

  TensorProduct t;
  t.left = M;
  t.right = N;
  t.pres = quotient(da, Subspace::span(da, rel));
  t.report = Report("tensor product " + M.name() + " * " + N.name());
  const Subspace& R = t.pres.relations;
  for (Index r = 0; r < R.dim(); ++r)
    for (Index g = 0; g < da; ++g) {
      t.report.expect_zero("WellDefinedLeft", {r, g}, R.reduce(bracket(R.vector(r), unit(da, g))));
      t.report.expect_zero("WellDefinedRight", {r, g}, R.reduce(bracket(unit(da, g), R.vector(r))));
    }
  if (!t.report.passed()) throw Error(ErrorCode::BracketNotWellDefined, t.report.summary());

  const Matrix& proj = t.pres.proj;
  t.algebra = Algebra(M.name() + "*" + N.name(), induced(bracket, t.pres.section, t.pres.section, proj));
  t.ambient_bracket = std::move(bracket);
  t.ot = proj * ot_map;
  t.oast = proj * oast_map;
  t.report.merge(check_leibniz(t.algebra), "Quotient");
  return t;
}

TensorProduct tensor_square(const Algebra& m, bool lie_collapse) {
  const LeibnizAction ad = adjoint_action(m);
  return nonabelian_tensor(ad, ad, lie_collapse);
}

TensorCrossedModule tensor_crossed_module(const Algebra& M, bool lie_collapse) {
  if (!is_leibniz(M)) throw Error(ErrorCode::NotLeibniz, M.name() + " fails the Leibniz identity");
  TensorProduct t = tensor_square(M, lie_collapse);
  const Index d = M.dim();
  const Ambient amb{d, d};
  const Index da = amb.dim();
  auto e = [&](Index i) { return unit(d, i); };

  BilinearMap left(d, da, da), right(da, d, da);
  for (Index m = 0; m < d; ++m)
    for (Index i = 0; i < d; ++i)
      for (Index j = 0; j < d; ++j) {
        const Index g_ot = i * d + j, g_oa = d * d + i * d + j;
        left.at(m, g_ot) = amb.ot(M.product(m, i), e(j)) - amb.oast(M.product(m, j), e(i));
        left.at(m, g_oa) = amb.oast(M.product(m, i), e(j)) - amb.ot(M.product(m, j), e(i));
        right.at(g_ot, m) = amb.ot(M.product(i, m), e(j)) + amb.ot(e(i), M.product(j, m));
        right.at(g_oa, m) = amb.oast(M.product(i, m), e(j)) + amb.oast(e(i), M.product(j, m));
      }
  Matrix boundary(d, da);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      boundary.col(i * d + j) = M.product(i, j);
      boundary.col(d * d + i * d + j) = M.product(i, j);
    }

  const Subspace& R = t.pres.relations;
  const Subspace zero_m = Subspace::zero(d);
  Report r("tensor crossed module of " + M.name());
  r.merge(check_descends("LeftAction", left, zero_m, R, R));
  r.merge(check_descends("RightAction", right, R, zero_m, R));
  r.merge(check_descends("Boundary", boundary, R, zero_m));
  if (!r.passed()) throw Error(ErrorCode::ActionNotDescending, r.summary());

  const Matrix id = Matrix::Identity(d, d);
  const Matrix &sec = t.pres.section, &proj = t.pres.proj;
  CrossedModule x{{M, t.algebra, proj * left.precompose(id, sec), proj * right.precompose(sec, id)},
                  Matrix(boundary * sec)};
  r.merge(check_action(x.action), "Action");
  r.merge(check_xmod(x), "XMod");
  return {std::move(t), std::move(x), std::move(r)};
}

CrossedModule tensor_self_xmod(const Algebra& m, bool lie_collapse) {
  return tensor_crossed_module(m, lie_collapse).xmod;
}

BraidedXMod tensor_braiding(const Algebra& m, bool lie_collapse) {
  TensorCrossedModule tc = tensor_crossed_module(m, lie_collapse);
  return {std::move(tc.xmod), {tc.tensor.ot, tc.tensor.oast}};
}

Report check_collapse_identities(const TensorProduct& t) {
  const Algebra& M = t.left;
  const Index d = M.dim();
  const Ambient amb{d, d};
  const Subspace& R = t.pres.relations;
  Report r("exchange identities of " + t.algebra.name());
  for (Index a = 0; a < d; ++a)
    for (Index b = 0; b < d; ++b)
      for (Index c = 0; c < d; ++c) {
        const Vector ac = M.product(a, c), bc = M.product(b, c);
        r.expect_zero("BracketLeftExchange", {a, b, c}, R.reduce(amb.ot(ac, unit(d, b)) - amb.oast(ac, unit(d, b))));
        r.expect_zero("BracketRightExchange", {a, b, c},
                      R.reduce(amb.ot(unit(d, a), bc) - amb.oast(unit(d, a), bc)));
      }
  return r;
}

}  // namespace leibniz
