#include "leibniz/cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <random>
#include <sstream>

#include "leibniz/equiv.hpp"
#include "leibniz/error.hpp"
#include "leibniz/fixtures.hpp"
#include "leibniz/lmcat.hpp"
#include "leibniz/nat.hpp"
#include "leibniz/random.hpp"
#include "leibniz/workspace.hpp"

namespace leibniz {

namespace {

using nlohmann::json;

bool is_input_error(ErrorCode c) {
  return c == ErrorCode::ParseError || c == ErrorCode::UnresolvedReference || c == ErrorCode::DimensionMismatch ||
         c == ErrorCode::UnknownCommand;
}

json error_json(const Error& e) { return {{"code", std::string(error_name(e.code()))}, {"message", e.what()}}; }

json scalar_text(const Scalar& s) { return s.to_string(); }

json report_json(const Report& r) {
  json failures = json::array();
  for (const Violation& v : r.failures()) {
    json residual = json::array();
    for (Index k = 0; k < v.residual.size(); ++k) residual.push_back(scalar_text(v.residual(k)));
    failures.push_back({{"axiom", v.axiom}, {"indices", v.indices}, {"residual", residual}, {"note", v.note}});
  }
  return {{"passed", r.passed()}, {"checked", r.checked()}, {"failures", failures}};
}

json bracket_json(const BilinearMap& b) {
  json out = json::array();
  for (Index i = 0; i < b.left_dim(); ++i)
    for (Index j = 0; j < b.right_dim(); ++j) {
      Vector v = b.at(i, j);
      if (is_zero(v)) continue;
      json coeffs = json::object();
      for (Index k = 0; k < v.size(); ++k)
        if (!v(k).is_zero()) coeffs[std::to_string(k)] = scalar_text(v(k));
      out.push_back({{"i", i}, {"j", j}, {"coeffs", coeffs}});
    }
  return out;
}

bool same_action(const LeibnizAction& a, const LeibnizAction& b) {
  return a.acting == b.acting && a.acted == b.acted && a.left == b.left && a.right == b.right;
}
bool same_xmod(const CrossedModule& a, const CrossedModule& b) {
  return same_action(a.action, b.action) && same(a.boundary, b.boundary);
}
bool same_bxmod(const BraidedXMod& a, const BraidedXMod& b) {
  return same_xmod(a.xmod, b.xmod) && a.braiding.curly == b.braiding.curly && a.braiding.angle == b.braiding.angle;
}
bool same_cat(const CatAlgebra& a, const CatAlgebra& b) {
  return a.arrows() == b.arrows() && a.objects() == b.objects() && same(a.source(), b.source()) &&
         same(a.target(), b.target()) && same(a.identity(), b.identity());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
  out << text;
}

template <typename Map>
std::vector<std::string> keys(const Map& m) {
  std::vector<std::string> out;
  for (const auto& [k, v] : m) out.push_back(k);
  return out;
}

class Session {
 public:
  explicit Session(const CliRequest& req) : req_(req) {
    ws_ = req.input ? parse_workspace(read_file(*req.input)) : fixture_workspace();
  }

  int run() {
    const std::string& c = req_.command;
    if (c == "check") check();
    else if (c == "construct") construct();
    else if (c == "roundtrip") roundtrip();
    else if (c == "tensor") tensor();
    else if (c == "lieize") lieize();
    else throw Error(ErrorCode::UnknownCommand, "'" + c + "'");
    return passed_ ? 0 : 1;
  }

  json document() const {
    json doc = {{"command", req_.command}, {"args", req_.args}, {"passed", passed_}, {"results", results_}};
    if (!added_.empty()) doc["added"] = added_;
    return doc;
  }

  std::optional<std::string> output_text() const { return output_; }

 private:
  const CliRequest& req_;
  Workspace ws_;
  json results_ = json::array();
  json added_ = json::array();
  bool passed_ = true;
  std::optional<std::string> output_;

  const std::string& arg(std::size_t i, const char* what) const {
    if (req_.args.size() <= i) throw Error(ErrorCode::UnknownCommand, req_.command + " needs " + what);
    return req_.args[i];
  }

  // Runs body for one target; errors other than input errors become a failed result.
  void record(const std::string& kind, const std::string& target, const std::function<Report(json&)>& body) {
    json entry = {{"kind", kind}, {"target", target}};
    try {
      json extra = json::object();
      Report r = body(extra);
      entry.update(report_json(r));
      entry.update(extra);
    } catch (const Error& e) {
      if (is_input_error(e.code())) throw;
      entry.update({{"passed", false}, {"checked", 0}, {"failures", json::array()}, {"error", error_json(e)}});
    }
    passed_ = passed_ && entry["passed"].get<bool>();
    results_.push_back(std::move(entry));
  }

  std::vector<std::string> names_or(const std::vector<std::string>& all, std::size_t from) const {
    if (req_.args.size() <= from) return all;
    return {req_.args.begin() + static_cast<std::ptrdiff_t>(from), req_.args.end()};
  }

  CatBraiding cat_braiding(const std::string& name) const {
    auto it = ws_.categories.find(name);
    if (it == ws_.categories.end()) throw Error(ErrorCode::UnresolvedReference, "category '" + name + "'");
    if (!it->second.braiding) throw Error(ErrorCode::UnresolvedReference, "category '" + name + "' has no braiding");
    return *it->second.braiding;
  }

  // ---- check ----

  void check_one(const std::string& kind, const std::string& name) {
    if (kind == "leibniz") {
      record(kind, name, [&](json&) { return check_leibniz(ws_.algebra(name)); });
    } else if (kind == "lie") {
      record(kind, name, [&](json&) {
        const Algebra& a = ws_.algebra(name);
        Report r = check_leibniz(a);
        return r.merge(check_antisymmetry(a));
      });
    } else if (kind == "action") {
      record(kind, name, [&](json&) { return check_action(ws_.action(name)); });
    } else if (kind == "xmod") {
      record(kind, name, [&](json&) { return check_xmod(ws_.xmod(name)); });
    } else if (kind == "bleib") {
      record(kind, name, [&](json& extra) {
        BraidedXMod b = ws_.braiding(name);
        Report r = check_braiding_leibniz(b);
        if (r.passed()) extra["lie_collapse"] = detect_lie_collapse(b).collapsed;
        return r;
      });
    } else if (kind == "cat") {
      record(kind, name, [&](json&) {
        CatAlgebra c = ws_.category(name);
        Report r;
        r.merge(check_kernel_commutator(c), "KernelCommutator");
        if (const auto& b = ws_.categories.at(name).braiding) r.merge(check_cat_braiding_leibniz(c, *b), "Braiding");
        return r;
      });
    } else if (kind == "tau") {
      CatBraiding b = cat_braiding(name);
      record(kind, name, [&](json&) { return check_tau_bracket_identity(ws_.category(name), b.tau); });
    } else {
      throw Error(ErrorCode::UnknownCommand, "check kind '" + kind + "'");
    }
  }

  void check() {
    const std::string& kind = arg(0, "a kind: leibniz, lie, action, xmod, bleib, cat, tau or all");
    if (kind == "all") {
      for (const auto& n : keys(ws_.algebras)) check_one("leibniz", n);
      for (const auto& n : keys(ws_.actions)) check_one("action", n);
      for (const auto& n : keys(ws_.xmods)) check_one("xmod", n);
      for (const auto& n : keys(ws_.braidings)) check_one("bleib", n);
      for (const auto& n : keys(ws_.categories)) check_one("cat", n);
      return;
    }
    std::vector<std::string> all;
    if (kind == "leibniz" || kind == "lie") all = keys(ws_.algebras);
    else if (kind == "action") all = keys(ws_.actions);
    else if (kind == "xmod") all = keys(ws_.xmods);
    else if (kind == "bleib") all = keys(ws_.braidings);
    else if (kind == "cat") all = keys(ws_.categories);
    else if (kind == "tau")
      for (const auto& [n, e] : ws_.categories)
        if (e.braiding) all.push_back(n);
    for (const auto& n : names_or(all, 1)) check_one(kind, n);
  }

  // ---- construct ----

  void added(const std::string& name) { added_.push_back(name); }

  void construct() {
    if (!req_.args.empty()) {
      const std::string& functor = req_.args[0];
      const std::string& name = arg(1, "a target name");
      const std::string out = functor + "(" + name + ")";
      if (functor == "C") {
        BraidedXMod z = ws_.braiding(name);
        record(functor, name, [&](json&) {
          BraidedCatAlgebra d = functor_C(z);
          ws_.add_category(out, d.cat, d.braiding);
          added(out);
          return check_cat_braiding_leibniz(d.cat, d.braiding);
        });
      } else if (functor == "X") {
        BraidedCatAlgebra d{ws_.category(name), cat_braiding(name)};
        record(functor, name, [&](json&) {
          BraidedXMod z = functor_X(d);
          ws_.add_braiding(out, z);
          added(out);
          return check_braiding_leibniz(z);
        });
      } else if (functor == "semidirect") {
        LeibnizAction a = ws_.action(name);
        record(functor, name, [&](json&) {
          SemidirectProduct s = semidirect(a);
          added(ws_.add_algebra(s.algebra.renamed(out)));
          return check_leibniz(s.algebra);
        });
      } else if (functor == "tensor") {
        const Algebra& a = ws_.algebra(name);
        record(functor, name, [&](json&) {
          TensorCrossedModule t = tensor_crossed_module(a);
          BraidedXMod z = tensor_braiding(a);
          ws_.add_braiding(out, z);
          added(out);
          Report r = t.report;
          return r.merge(check_braiding_leibniz(z), "Braiding");
        });
      } else {
        construct_lm(functor, name, out);
      }
    }
    output_ = serialize_workspace(ws_);
  }

  // Each LM functor is materialized through its inverse, which lands back in the workspace.
  void construct_lm(const std::string& functor, const std::string& name, const std::string& out) {
    if (functor == "phi") {
      const Algebra& a = ws_.algebra(name);
      record(functor, name, [&](json& extra) {
        LieObjectLM o = phi(a);
        Report r = check_lie_object(o);
        Algebra back = psi(o);
        extra["top_dim"] = o.top_dim();
        r.expect("RoundTrip", back == a, "psi(phi(a)) = a");
        added(ws_.add_algebra(back.renamed(out)));
        return r;
      });
    } else if (functor == "xphi") {
      CrossedModule x = ws_.xmod(name);
      record(functor, name, [&](json&) {
        XLieLM o = xphi(x);
        Report r = check_xlielm(o);
        CrossedModule back = xpsi(o);
        r.expect("RoundTrip", same_xmod(back, x), "xpsi(xphi(x)) = x");
        ws_.add_xmod(out, back);
        added(out);
        return r;
      });
    } else if (functor == "bxphi") {
      BraidedXMod z = ws_.braiding(name);
      record(functor, name, [&](json&) {
        BraidedXLieLM o = bxphi(z);
        Report r = check_lm_braiding(o.xmod, o.braiding);
        BraidedXMod back = bxpsi(o.xmod, o.braiding);
        r.expect("RoundTrip", same_bxmod(back, z), "bxpsi(bxphi(z)) = z");
        ws_.add_braiding(out, back);
        added(out);
        return r;
      });
    } else if (functor == "iphi") {
      CatAlgebra c = ws_.category(name);
      record(functor, name, [&](json&) {
        CatLieObjectLM o = iphi(c);
        Report r = check_cat_lie_object(o);
        CatAlgebra back = ipsi(o);
        r.expect("RoundTrip", same_cat(back, c), "ipsi(iphi(c)) = c");
        ws_.add_category(out, back);
        added(out);
        return r;
      });
    } else if (functor == "biphi") {
      BraidedCatAlgebra d{ws_.category(name), cat_braiding(name)};
      record(functor, name, [&](json&) {
        BraidedCatLieObjectLM o = biphi(d);
        Report r = check_cat_lm_braiding(o.cat, o.braiding);
        BraidedCatAlgebra back = bipsi(o.cat, o.braiding);
        r.expect("RoundTrip",
                 same_cat(back.cat, d.cat) && back.braiding.tau == d.braiding.tau && back.braiding.psi == d.braiding.psi,
                 "bipsi(biphi(d)) = d");
        ws_.add_category(out, back.cat, back.braiding);
        added(out);
        return r;
      });
    } else {
      throw Error(ErrorCode::UnknownCommand,
                  "functor '" + functor + "'; expected C, X, semidirect, tensor, phi, xphi, bxphi, iphi or biphi");
    }
  }

  // ---- roundtrip ----

  void roundtrip() {
    std::vector<NamedSeed> seeds;
    if (req_.args.empty() || (req_.args.size() == 1 && req_.args[0] == "all-fixtures")) {
      seeds = fixtures::seeds();
      if (req_.seed) {
        std::mt19937 rng(*req_.seed);
        for (int k = 0; k < 5; ++k)
          seeds.push_back({"random-" + std::to_string(k), identity_bxmod(random_leibniz(rng, 3))});
      }
    } else {
      for (const auto& name : req_.args) {
        if (ws_.braidings.count(name)) seeds.push_back({name, ws_.braiding(name)});
        else if (ws_.categories.count(name)) seeds.push_back({name, BraidedCatAlgebra{ws_.category(name), cat_braiding(name)}});
        else throw Error(ErrorCode::UnresolvedReference, "braiding or category '" + name + "'");
      }
    }
    for (const NamedSeed& s : seeds) record("roundtrip", s.name, [&](json&) { return roundtrip_check({s}); });
  }

  // ---- tensor ----

  void tensor() {
    json golden_out = json::object();
    for (const auto& name : names_or(keys(ws_.algebras), 0)) {
      const Algebra& a = ws_.algebra(name);
      record("tensor", name, [&](json& extra) {
        TensorCrossedModule tc = tensor_crossed_module(a);
        const TensorProduct& t = tc.tensor;
        TensorProduct lie = tensor_square(a, true);
        Report r = tc.report;
        r.merge(check_braiding_leibniz(tensor_braiding(a)), "Braiding");
        r.merge(check_collapse_identities(t), "Collapse");
        json dims = {{"algebra", name},
                     {"ambient_dim", t.ambient_dim()},
                     {"relation_rank", t.pres.relations.dim()},
                     {"quotient_dim", t.dim()},
                     {"lie_collapse_quotient_dim", lie.dim()}};
        extra.update(dims);
        extra["bracket"] = bracket_json(t.algebra.bracket());
        if (req_.golden) compare_golden(name, dims, r, extra);
        json g = dims;
        g["bracket"] = extra["bracket"];
        golden_out[name] = g;
        return r;
      });
    }
    output_ = golden_out.dump(2) + "\n";
  }

  void compare_golden(const std::string& name, const json& dims, Report& r, json& extra) const {
    std::filesystem::path file = std::filesystem::path(*req_.golden) / ("tensor-" + name + ".json");
    if (!std::filesystem::exists(file)) {
      extra["golden"] = "absent";
      return;
    }
    json g;
    try {
      g = json::parse(read_file(file.string()));
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::ParseError, file.string() + ": " + e.what());
    }
    extra["golden"] = "compared";
    for (const char* key : {"ambient_dim", "relation_rank", "quotient_dim", "lie_collapse_quotient_dim"})
      if (g.contains(key))
        r.expect(std::string("Golden/") + key, g[key] == dims[key],
                 "expected " + g[key].dump() + ", got " + dims[key].dump());
  }

  // ---- lieize ----

  void lieize() {
    const std::string& kind = arg(0, "a kind: algebra, xmod, braiding or category");
    const std::string& name = arg(1, "a target name");
    const std::string out = "Lie(" + name + ")";
    if (kind == "algebra") {
      const Algebra& a = ws_.algebra(name);
      record(kind, name, [&](json& extra) {
        QuotientAlgebra q = lieization(a);
        extra["ideal_dim"] = q.ideal().dim();
        extra["dim"] = q.algebra.dim();
        Report r = check_leibniz(q.algebra);
        r.merge(check_antisymmetry(q.algebra));
        added(ws_.add_algebra(q.algebra.renamed(out)));
        return r;
      });
    } else if (kind == "xmod") {
      CrossedModule x = ws_.xmod(name);
      record(kind, name, [&](json& extra) {
        XModLieization q = lieize_xmod(x);
        extra["ideal_dim"] = q.acted.ideal().dim();
        ws_.add_xmod(out, lie_xmod_embed(q.lie));
        added(out);
        return q.report;
      });
    } else if (kind == "braiding") {
      BraidedXMod b = ws_.braiding(name);
      record(kind, name, [&](json& extra) {
        BraidedLieization q = lieize_bxmod(b);
        extra["ideal_dim"] = q.acted.ideal().dim();
        ws_.add_braiding(out, embed_lie_bxmod(q.lie));
        added(out);
        return q.report;
      });
    } else if (kind == "category") {
      CatAlgebra c = ws_.category(name);
      CatBraiding b = cat_braiding(name);
      record(kind, name, [&](json& extra) {
        CatLieization q = cat_lieization(c, b);
        extra["ideal_dim"] = q.arrows.ideal().dim();
        Report r = q.report;
        Report lie = check_cat_braiding_lie(q.lie, q.tau);
        r.merge(lie, "Lie");
        if (lie.passed()) {
          ws_.add_category(out, q.lie, cat_braiding_embed_lie(q.lie, q.tau));
          added(out);
        }
        return r;
      });
    } else {
      throw Error(ErrorCode::UnknownCommand, "lieize kind '" + kind + "'");
    }
    output_ = serialize_workspace(ws_);
  }
};

}  // namespace

CliResult run_cli(const CliRequest& request) {
  CliResult result;
  try {
    Session session(request);
    result.exit_code = session.run();
    json doc = session.document();
    result.report = doc.dump(2) + "\n";
    if (request.output) {
      // check and roundtrip write their report; construct and lieize the workspace; tensor the golden document.
      std::string text = session.output_text().value_or(result.report);
      write_file(*request.output, text);
    }
  } catch (const Error& e) {
    json doc = {{"command", request.command}, {"args", request.args}, {"passed", false}, {"error", error_json(e)}};
    result.report = doc.dump(2) + "\n";
    result.exit_code = is_input_error(e.code()) ? 2 : 1;
  }
  return result;
}

}  // namespace leibniz
