#include "leibniz/workspace.hpp"

#include <json.hpp>

#include "leibniz/error.hpp"
#include "leibniz/fixtures.hpp"

namespace leibniz {

namespace {

using nlohmann::json;

bool same_shape_equal(const Matrix& a, const Matrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a == b;
}

template <typename Map>
const typename Map::mapped_type& lookup(const Map& m, const std::string& name, const char* kind) {
  auto it = m.find(name);
  if (it == m.end()) throw Error(ErrorCode::UnresolvedReference, std::string(kind) + " '" + name + "'");
  return it->second;
}

// ---- reading ----

struct Reader {
  [[noreturn]] static void fail(const std::string& where, const std::string& what) {
    throw Error(ErrorCode::ParseError, where + ": " + what);
  }

  static Scalar scalar(const json& v, const std::string& where) {
    if (v.is_number_integer()) return Scalar(v.get<long>());
    if (v.is_string()) {
      try {
        return Rational::parse(v.get<std::string>());
      } catch (const Error& e) {
        std::string what = e.what();
        fail(where, what.substr(what.find(": ") + 2));
      }
    }
    fail(where, "expected a rational as \"p/q\" or an integer");
  }

  static Index index(const json& v, Index bound, const std::string& where) {
    if (!v.is_number_integer()) fail(where, "expected a basis index");
    long i = v.get<long>();
    if (i < 0 || i >= bound)
      throw Error(ErrorCode::DimensionMismatch, where + ": index " + std::to_string(i) + " outside dimension " +
                                                    std::to_string(bound));
    return i;
  }

  static Index key_index(const std::string& key, Index bound, const std::string& where) {
    Index i = 0;
    try {
      std::size_t used = 0;
      i = std::stol(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::logic_error&) {
      fail(where, "coefficient key '" + key + "' is not a basis index");
    }
    if (i < 0 || i >= bound)
      throw Error(ErrorCode::DimensionMismatch, where + ": index " + key + " outside dimension " + std::to_string(bound));
    return i;
  }

  static const json& field(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object()) fail(where, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(where, std::string("missing field '") + key + "'");
    return *it;
  }

  static std::string name(const json& obj, const char* key, const std::string& where) {
    const json& v = field(obj, key, where);
    if (!v.is_string()) fail(where + "/" + key, "expected a name");
    return v.get<std::string>();
  }

  // [{"i": .., "j": .., "coeffs": {"k": "p/q"}}]; repeated (i, j) entries add up.
  static BilinearMap bilinear(const json& v, Index left, Index right, Index out, const std::string& where) {
    if (!v.is_array()) fail(where, "expected a list of sparse entries");
    Matrix c = Matrix::Zero(out, left * right);
    for (std::size_t n = 0; n < v.size(); ++n) {
      const std::string at = where + "/" + std::to_string(n);
      Index i = index(field(v[n], "i", at), left, at + "/i");
      Index j = index(field(v[n], "j", at), right, at + "/j");
      const json& coeffs = field(v[n], "coeffs", at);
      if (!coeffs.is_object()) fail(at + "/coeffs", "expected an object");
      for (const auto& [k, value] : coeffs.items())
        c(key_index(k, out, at + "/coeffs"), i * right + j) += scalar(value, at + "/coeffs/" + k);
    }
    return BilinearMap(left, right, c);
  }

  // Dense list of rows.
  static Matrix matrix(const json& v, Index rows, Index cols, const std::string& where) {
    if (!v.is_array() || static_cast<Index>(v.size()) != rows)
      throw Error(ErrorCode::DimensionMismatch, where + ": expected " + std::to_string(rows) + " rows");
    Matrix m(rows, cols);
    for (Index r = 0; r < rows; ++r) {
      const json& row = v[static_cast<std::size_t>(r)];
      if (!row.is_array() || static_cast<Index>(row.size()) != cols)
        throw Error(ErrorCode::DimensionMismatch,
                    where + "/" + std::to_string(r) + ": expected " + std::to_string(cols) + " entries");
      for (Index c = 0; c < cols; ++c)
        m(r, c) = scalar(row[static_cast<std::size_t>(c)], where + "/" + std::to_string(r) + "/" + std::to_string(c));
    }
    return m;
  }

  static const json& section(const json& root, const char* key) {
    static const json empty = json::object();
    auto it = root.find(key);
    if (it == root.end()) return empty;
    if (!it->is_object()) fail(std::string("/") + key, "expected an object keyed by name");
    return *it;
  }
};

// ---- writing ----

json scalar_json(const Scalar& s) {
  if (s.denominator() == "1" && s.numerator().size() < 18) return json(std::stol(s.numerator()));
  return json(s.to_string());
}

json bilinear_json(const BilinearMap& b) {
  json out = json::array();
  for (Index i = 0; i < b.left_dim(); ++i)
    for (Index j = 0; j < b.right_dim(); ++j) {
      Vector v = b.at(i, j);
      if (is_zero(v)) continue;
      json coeffs = json::object();
      for (Index k = 0; k < v.size(); ++k)
        if (!v(k).is_zero()) coeffs[std::to_string(k)] = scalar_json(v(k));
      out.push_back({{"i", i}, {"j", j}, {"coeffs", coeffs}});
    }
  return out;
}

json matrix_json(const Matrix& m) {
  json out = json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(scalar_json(m(r, c)));
    out.push_back(row);
  }
  return out;
}

}  // namespace

static bool operator==(const ActionEntry& a, const ActionEntry& b) {
  return a.acting == b.acting && a.acted == b.acted && a.left == b.left && a.right == b.right;
}
static bool operator==(const XModEntry& a, const XModEntry& b) {
  return a.action == b.action && same_shape_equal(a.boundary, b.boundary);
}
static bool operator==(const BraidingEntry& a, const BraidingEntry& b) {
  return a.xmod == b.xmod && a.curly == b.curly && a.angle == b.angle;
}
static bool operator==(const CategoryEntry& a, const CategoryEntry& b) {
  if (a.arrows != b.arrows || a.objects != b.objects || !same_shape_equal(a.source, b.source) ||
      !same_shape_equal(a.target, b.target) || !same_shape_equal(a.identity, b.identity) ||
      a.braiding.has_value() != b.braiding.has_value())
    return false;
  return !a.braiding || (a.braiding->tau == b.braiding->tau && a.braiding->psi == b.braiding->psi);
}

const Algebra& Workspace::algebra(const std::string& name) const { return lookup(algebras, name, "algebra"); }

LeibnizAction Workspace::action(const std::string& name) const {
  const ActionEntry& e = lookup(actions, name, "action");
  return {algebra(e.acting), algebra(e.acted), e.left, e.right};
}

CrossedModule Workspace::xmod(const std::string& name) const {
  const XModEntry& e = lookup(xmods, name, "crossed module");
  return {action(e.action), e.boundary};
}

BraidedXMod Workspace::braiding(const std::string& name) const {
  const BraidingEntry& e = lookup(braidings, name, "braiding");
  return {xmod(e.xmod), {e.curly, e.angle}};
}

CatAlgebra Workspace::category(const std::string& name) const {
  const CategoryEntry& e = lookup(categories, name, "category");
  return CatAlgebra(algebra(e.arrows), algebra(e.objects), e.source, e.target, e.identity);
}

std::string Workspace::add_algebra(const Algebra& a) {
  std::string name = a.name().empty() ? "algebra" : a.name();
  for (int n = 2;; ++n) {
    auto it = algebras.find(name);
    if (it == algebras.end()) {
      algebras.emplace(name, a.renamed(name));
      return name;
    }
    if (it->second == a) return name;
    name = (a.name().empty() ? "algebra" : a.name()) + "#" + std::to_string(n);
  }
}

void Workspace::add_action(const std::string& name, const LeibnizAction& a) {
  std::string acting = add_algebra(a.acting), acted = add_algebra(a.acted);
  actions[name] = {acting, acted, a.left, a.right};
}

void Workspace::add_xmod(const std::string& name, const CrossedModule& x) {
  add_action(name + ".action", x.action);
  xmods[name] = {name + ".action", x.boundary};
}

void Workspace::add_braiding(const std::string& name, const BraidedXMod& b) {
  add_xmod(name + ".xmod", b.xmod);
  braidings[name] = {name + ".xmod", b.braiding.curly, b.braiding.angle};
}

void Workspace::add_category(const std::string& name, const CatAlgebra& c, const std::optional<CatBraiding>& b) {
  std::string arrows = add_algebra(c.arrows()), objects = add_algebra(c.objects());
  categories[name] = {arrows, objects, c.source(), c.target(), c.identity(), b};
}

bool operator==(const Workspace& a, const Workspace& b) {
  if (a.algebras.size() != b.algebras.size()) return false;
  for (const auto& [name, alg] : a.algebras) {
    auto it = b.algebras.find(name);
    if (it == b.algebras.end() || !(it->second == alg)) return false;
  }
  return a.actions == b.actions && a.xmods == b.xmods && a.braidings == b.braidings && a.categories == b.categories;
}

Workspace parse_workspace(std::string_view document) {
  json root;
  try {
    root = json::parse(document);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, "byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!root.is_object()) Reader::fail("/", "expected an object");

  Workspace ws;
  using R = Reader;
  for (const auto& [name, v] : R::section(root, "algebras").items()) {
    const std::string at = "/algebras/" + name;
    const json& dim = R::field(v, "dim", at);
    if (!dim.is_number_integer() || dim.get<long>() < 0) R::fail(at + "/dim", "expected a nonnegative dimension");
    Index d = dim.get<long>();
    auto it = v.find("bracket");
    BilinearMap br = it == v.end() ? BilinearMap(d, d, d) : R::bilinear(*it, d, d, d, at + "/bracket");
    ws.algebras.emplace(name, Algebra(name, br));
  }
  for (const auto& [name, v] : R::section(root, "actions").items()) {
    const std::string at = "/actions/" + name;
    ActionEntry e{R::name(v, "acting", at), R::name(v, "acted", at), {}, {}};
    Index n = ws.algebra(e.acting).dim(), m = ws.algebra(e.acted).dim();
    e.left = R::bilinear(R::field(v, "left", at), n, m, m, at + "/left");
    e.right = R::bilinear(R::field(v, "right", at), m, n, m, at + "/right");
    ws.actions.emplace(name, std::move(e));
  }
  for (const auto& [name, v] : R::section(root, "xmods").items()) {
    const std::string at = "/xmods/" + name;
    std::string action = R::name(v, "action", at);
    const ActionEntry& a = lookup(ws.actions, action, "action");
    Matrix d = R::matrix(R::field(v, "boundary", at), ws.algebra(a.acting).dim(), ws.algebra(a.acted).dim(),
                         at + "/boundary");
    ws.xmods.emplace(name, XModEntry{action, std::move(d)});
  }
  for (const auto& [name, v] : R::section(root, "braidings").items()) {
    const std::string at = "/braidings/" + name;
    std::string xmod = R::name(v, "xmod", at);
    const ActionEntry& a = lookup(ws.actions, lookup(ws.xmods, xmod, "crossed module").action, "action");
    Index n = ws.algebra(a.acting).dim(), m = ws.algebra(a.acted).dim();
    BraidingEntry e{xmod, R::bilinear(R::field(v, "curly", at), n, n, m, at + "/curly"),
                    R::bilinear(R::field(v, "angle", at), n, n, m, at + "/angle")};
    ws.braidings.emplace(name, std::move(e));
  }
  for (const auto& [name, v] : R::section(root, "categories").items()) {
    const std::string at = "/categories/" + name;
    CategoryEntry e;
    e.arrows = R::name(v, "arrows", at);
    e.objects = R::name(v, "objects", at);
    Index c1 = ws.algebra(e.arrows).dim(), c0 = ws.algebra(e.objects).dim();
    e.source = R::matrix(R::field(v, "source", at), c0, c1, at + "/source");
    e.target = R::matrix(R::field(v, "target", at), c0, c1, at + "/target");
    e.identity = R::matrix(R::field(v, "identity", at), c1, c0, at + "/identity");
    bool has_tau = v.contains("tau"), has_psi = v.contains("psi");
    if (has_tau != has_psi) R::fail(at, "tau and psi come together");
    if (has_tau)
      e.braiding = CatBraiding{R::bilinear(v["tau"], c0, c0, c1, at + "/tau"),
                               R::bilinear(v["psi"], c0, c0, c1, at + "/psi")};
    ws.categories.emplace(name, std::move(e));
  }
  return ws;
}

std::string serialize_workspace(const Workspace& ws) {
  json root = json::object();
  root["algebras"] = json::object();
  for (const auto& [name, a] : ws.algebras)
    root["algebras"][name] = {{"dim", a.dim()}, {"bracket", bilinear_json(a.bracket())}};
  root["actions"] = json::object();
  for (const auto& [name, e] : ws.actions)
    root["actions"][name] = {
        {"acting", e.acting}, {"acted", e.acted}, {"left", bilinear_json(e.left)}, {"right", bilinear_json(e.right)}};
  root["xmods"] = json::object();
  for (const auto& [name, e] : ws.xmods)
    root["xmods"][name] = {{"action", e.action}, {"boundary", matrix_json(e.boundary)}};
  root["braidings"] = json::object();
  for (const auto& [name, e] : ws.braidings)
    root["braidings"][name] = {
        {"xmod", e.xmod}, {"curly", bilinear_json(e.curly)}, {"angle", bilinear_json(e.angle)}};
  root["categories"] = json::object();
  for (const auto& [name, e] : ws.categories) {
    json c = {{"arrows", e.arrows},
              {"objects", e.objects},
              {"source", matrix_json(e.source)},
              {"target", matrix_json(e.target)},
              {"identity", matrix_json(e.identity)}};
    if (e.braiding) {
      c["tau"] = bilinear_json(e.braiding->tau);
      c["psi"] = bilinear_json(e.braiding->psi);
    }
    root["categories"][name] = c;
  }
  return root.dump(2) + "\n";
}

Workspace fixture_workspace() {
  Workspace ws;
  for (const Algebra& a : {fixtures::a1(), fixtures::l2(), fixtures::r2()}) ws.add_algebra(a);
  for (const NamedSeed& s : fixtures::seeds()) ws.add_braiding(s.name, std::get<BraidedXMod>(s.object));
  ws.add_braiding("corrupted-fixture", fixtures::corrupted_l2());
  BraidedCatAlgebra l2 = functor_C(fixtures::identity_l2());
  ws.add_category("category-L2", l2.cat, l2.braiding);
  BraidedCatAlgebra r2 = functor_C(fixtures::embedded_r2());
  ws.add_category("category-R2", r2.cat, r2.braiding);
  return ws;
}

}  // namespace leibniz
