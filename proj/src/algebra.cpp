#include "leibniz/algebra.hpp"

#include "leibniz/error.hpp"

namespace leibniz {

Algebra::Algebra(std::string name, BilinearMap bracket) : name_(std::move(name)), bracket_(std::move(bracket)) {
  if (bracket_.left_dim() != bracket_.out_dim() || bracket_.right_dim() != bracket_.out_dim())
    throw Error(ErrorCode::DimensionMismatch, "bracket of " + name_ + " is not square");
}

Algebra Algebra::abelian(std::string name, Index dim) { return {std::move(name), BilinearMap(dim, dim, dim)}; }

Algebra Algebra::from_products(std::string name, Index dim, const std::map<std::pair<Index, Index>, Vector>& entries) {
  BilinearMap b(dim, dim, dim);
  for (const auto& [ij, v] : entries) b.at(ij.first, ij.second) = v;
  return {std::move(name), std::move(b)};
}

Algebra change_basis(const Algebra& a, const Matrix& p, std::string name) {
  auto inv = inverse(p);
  if (!inv || p.rows() != a.dim()) throw Error(ErrorCode::DimensionMismatch, "change of basis is not invertible");
  return {name.empty() ? a.name() : std::move(name), *inv * a.bracket().precompose(p, p)};
}

Algebra direct_sum(const Algebra& a, const Algebra& b, std::string name) {
  const Index n = a.dim() + b.dim();
  BilinearMap br(n, n, n);
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.dim(); ++j) br.at(i, j).head(a.dim()) = a.product(i, j);
  for (Index i = 0; i < b.dim(); ++i)
    for (Index j = 0; j < b.dim(); ++j) br.at(a.dim() + i, a.dim() + j).tail(b.dim()) = b.product(i, j);
  return {name.empty() ? a.name() + "+" + b.name() : std::move(name), std::move(br)};
}

Algebra scaled(const Algebra& a, const Scalar& c) { return {a.name(), c * a.bracket()}; }

Report check_leibniz(const Algebra& a) {
  Report r("leibniz " + a.name());
  const Index n = a.dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        Vector x = unit(n, i), y = unit(n, j), z = unit(n, k);
        r.expect_zero("Leibniz", {i, j, k}, a(x, a(y, z)) - a(a(x, y), z) + a(a(x, z), y));
      }
  return r;
}

Report check_antisymmetry(const Algebra& a) {
  Report r("antisymmetry " + a.name());
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = i; j < a.dim(); ++j) r.expect_zero("Antisymmetry", {i, j}, a.product(i, j) + a.product(j, i));
  return r;
}

Report check_hom(const Algebra& src, const Algebra& dst, const Matrix& f) {
  Report r("hom " + src.name() + " -> " + dst.name());
  if (f.rows() != dst.dim() || f.cols() != src.dim()) {
    r.fail("Shape", "map is not dst.dim x src.dim");
    return r;
  }
  for (Index i = 0; i < src.dim(); ++i)
    for (Index j = 0; j < src.dim(); ++j)
      r.expect_zero("Hom", {i, j}, f * src.product(i, j) - dst(f.col(i), f.col(j)));
  return r;
}

Subspace stable_closure(const Subspace& seed, const std::vector<const BilinearMap*>& left_ops,
                        const std::vector<const BilinearMap*>& right_ops) {
  const Index n = seed.ambient_dim();
  Subspace current = seed;
  while (true) {
    std::vector<Vector> gens;
    for (Index b = 0; b < current.dim(); ++b) {
      const Vector v = current.vector(b);
      gens.push_back(v);
      for (const BilinearMap* op : left_ops)
        for (Index x = 0; x < op->left_dim(); ++x) gens.push_back((*op)(unit(op->left_dim(), x), v));
      for (const BilinearMap* op : right_ops)
        for (Index x = 0; x < op->right_dim(); ++x) gens.push_back((*op)(v, unit(op->right_dim(), x)));
    }
    Subspace next = Subspace::span(n, gens);
    if (next.dim() == current.dim()) return current;
    current = std::move(next);
  }
}

Subspace ideal_closure(const Algebra& a, const Subspace& seed) {
  return stable_closure(seed, {&a.bracket()}, {&a.bracket()});
}

bool is_ideal(const Algebra& a, const Subspace& s) { return ideal_closure(a, s).dim() == s.dim(); }

Subspace square_span(const Algebra& a) {
  std::vector<Vector> gens;
  for (Index i = 0; i < a.dim(); ++i) {
    gens.push_back(a.product(i, i));
    for (Index j = i + 1; j < a.dim(); ++j) gens.push_back(a.product(i, j) + a.product(j, i));
  }
  return Subspace::span(a.dim(), gens);
}

BilinearMap induced(const BilinearMap& b, const Matrix& section_left, const Matrix& section_right,
                    const Matrix& proj_out) {
  return proj_out * b.precompose(section_left, section_right);
}

QuotientAlgebra quotient_algebra(const Algebra& a, const Subspace& ideal, std::string name) {
  if (ideal.ambient_dim() != a.dim()) throw Error(ErrorCode::DimensionMismatch, "ideal lives in the wrong space");
  if (!is_ideal(a, ideal)) throw Error(ErrorCode::NotAnIdeal, "subspace of " + a.name() + " is not bracket-closed");
  QuotientPresentation pres = quotient(a.dim(), ideal);
  if (name.empty()) name = a.name() + "/I";
  Algebra q(std::move(name), induced(a.bracket(), pres.section, pres.section, pres.proj));
  return {std::move(q), std::move(pres)};
}

QuotientAlgebra lieization(const Algebra& a) {
  if (!is_leibniz(a)) throw Error(ErrorCode::NotLeibniz, a.name() + " fails the Leibniz identity");
  return quotient_algebra(a, ideal_closure(a, square_span(a)), "Lie(" + a.name() + ")");
}

Report check_descends(const std::string& tag, const BilinearMap& b, const Subspace& left_rel, const Subspace& right_rel,
                      const Subspace& out_rel) {
  Report r(tag + " descends");
  for (Index k = 0; k < left_rel.dim(); ++k)
    for (Index j = 0; j < b.right_dim(); ++j) {
      r.expect(tag, out_rel.contains(b(left_rel.vector(k), unit(b.right_dim(), j))),
               "left relation " + std::to_string(k) + " against basis " + std::to_string(j));
    }
  for (Index i = 0; i < b.left_dim(); ++i)
    for (Index k = 0; k < right_rel.dim(); ++k)
      r.expect(tag, out_rel.contains(b(unit(b.left_dim(), i), right_rel.vector(k))),
               "basis " + std::to_string(i) + " against right relation " + std::to_string(k));
  return r;
}

Report check_descends(const std::string& tag, const Matrix& f, const Subspace& rel, const Subspace& out_rel) {
  Report r(tag + " descends");
  for (Index k = 0; k < rel.dim(); ++k)
    r.expect(tag, out_rel.contains(f * rel.vector(k)), "relation " + std::to_string(k));
  return r;
}

}  // namespace leibniz
