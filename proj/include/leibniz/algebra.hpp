#pragma once

#include <map>
#include <string>
#include <vector>

#include "leibniz/bilinear.hpp"
#include "leibniz/report.hpp"

namespace leibniz {

// Finite-dimensional algebra given by structure constants: bracket().at(i, j) = [e_i, e_j].
class Algebra {
 public:
  Algebra() = default;
  Algebra(std::string name, BilinearMap bracket);

  static Algebra abelian(std::string name, Index dim);
  // entries[{i, j}] = [e_i, e_j]; unlisted products are zero.
  static Algebra from_products(std::string name, Index dim, const std::map<std::pair<Index, Index>, Vector>& entries);

  const std::string& name() const { return name_; }
  Index dim() const { return bracket_.out_dim(); }
  const BilinearMap& bracket() const { return bracket_; }
  Vector operator()(const Vector& x, const Vector& y) const { return bracket_(x, y); }
  Vector product(Index i, Index j) const { return bracket_.at(i, j); }
  Algebra renamed(std::string name) const { return {std::move(name), bracket_}; }

  // Structure constants only; the name is a label.
  friend bool operator==(const Algebra& a, const Algebra& b) { return a.bracket_ == b.bracket_; }

 private:
  std::string name_;
  BilinearMap bracket_;
};

// [x, y]' = p^-1 [p x, p y] for invertible p; throws Error(DimensionMismatch) otherwise.
Algebra change_basis(const Algebra& a, const Matrix& p, std::string name = {});
// Basis of a first, then b; the two summands bracket to zero.
Algebra direct_sum(const Algebra& a, const Algebra& b, std::string name = {});
Algebra scaled(const Algebra& a, const Scalar& c);

Report check_leibniz(const Algebra& a);
Report check_antisymmetry(const Algebra& a);
inline bool is_leibniz(const Algebra& a) { return check_leibniz(a).passed(); }
inline bool is_lie(const Algebra& a) { return is_leibniz(a) && check_antisymmetry(a).passed(); }

// f : src -> dst as a dst.dim() x src.dim() matrix.
Report check_hom(const Algebra& src, const Algebra& dst, const Matrix& f);

// Smallest subspace containing seed and stable under v -> op(x, v) for every left operator and
// v -> op(v, x) for every right operator, x running over the basis of the operator's other slot.
Subspace stable_closure(const Subspace& seed, const std::vector<const BilinearMap*>& left_ops,
                        const std::vector<const BilinearMap*>& right_ops);
Subspace ideal_closure(const Algebra& a, const Subspace& seed);
bool is_ideal(const Algebra& a, const Subspace& s);

// span{[e_i, e_i], [e_i, e_j] + [e_j, e_i]} = span{[x, x]}
Subspace square_span(const Algebra& a);

struct QuotientAlgebra {
  Algebra algebra;
  QuotientPresentation pres;
  const Matrix& proj() const { return pres.proj; }
  const Matrix& section() const { return pres.section; }
  const Subspace& ideal() const { return pres.relations; }
};

// Throws Error(NotAnIdeal).
QuotientAlgebra quotient_algebra(const Algebra& a, const Subspace& ideal, std::string name = {});
// Throws Error(NotLeibniz).
QuotientAlgebra lieization(const Algebra& a);

// Bilinear map induced on quotients: (x̄, ȳ) -> proj_out B(section_l x̄, section_r ȳ).
BilinearMap induced(const BilinearMap& b, const Matrix& section_left, const Matrix& section_right,
                    const Matrix& proj_out);

// B(left_rel, ·) and B(·, right_rel) land in out_rel, so B induces a map on the quotients.
Report check_descends(const std::string& tag, const BilinearMap& b, const Subspace& left_rel, const Subspace& right_rel,
                      const Subspace& out_rel);
Report check_descends(const std::string& tag, const Matrix& f, const Subspace& rel, const Subspace& out_rel);

}  // namespace leibniz
