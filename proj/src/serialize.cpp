#include "wclie/serialize.hpp"

#include "wclie/catalog.hpp"
#include "wclie/error.hpp"

#include <fstream>
#include <sstream>

namespace wclie {

json encode(const Rational& r) { return r.str(); }

json encode(std::span<const Rational> v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

json encode(const Matrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(encode(m.row(i)));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", a}};
}

json encode(const Subspace& s) {
  json b = json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) b.push_back(encode(s.basis().row(i)));
  return json{{"ambient", s.ambient_dim()}, {"dim", s.dim()}, {"basis", b}};
}

json encode(const LieAlgebra& g) {
  json br = json::array();
  for (const auto& e : g.brackets()) {
    json terms = json::array();
    for (const auto& t : e.terms) terms.push_back({{"k", t.k}, {"c", t.c.str()}});
    br.push_back({{"i", e.i}, {"j", e.j}, {"terms", terms}});
  }
  return json{{"name", g.name()}, {"dim", g.dim()}, {"basis", g.labels()}, {"brackets", br}};
}

json encode(const BracketExpr& e) {
  return std::visit(
      [](const auto& n) -> json {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, BracketExpr::Gen>) {
          return {{"gen", n.index}};
        } else if constexpr (std::is_same_v<T, BracketExpr::Scale>) {
          return {{"scale", n.factor.str()}, {"of", encode(n.of)}};
        } else if constexpr (std::is_same_v<T, BracketExpr::Sum>) {
          json a = json::array();
          for (const auto& t : n.terms) a.push_back(encode(t));
          return {{"sum", a}};
        } else {
          return {{"br", json::array({encode(n.left), encode(n.right)})}};
        }
      },
      e.node());
}

json encode(const Presentation& p) {
  json r = json::array();
  for (const auto& e : p.relators) r.push_back(encode(e));
  return json{{"gens", p.generators}, {"gen_labels", p.gen_labels}, {"relators", r}};
}

json encode(const ChiAlgebra& c) {
  json imgs = json::array();
  for (const auto& v : c.gen_images) imgs.push_back(encode(v));
  return json{{"base", encode(c.base)},
              {"chi", encode(c.chi)},
              {"gen_images", imgs},
              {"alpha", encode(c.alpha.matrix())},
              {"beta", encode(c.beta.matrix())},
              {"rho", encode(c.rho.matrix())},
              {"L", encode(c.L)},
              {"D", encode(c.D)},
              {"W", encode(c.W)},
              {"R", encode(c.R)},
              {"method", to_string(c.method)},
              {"class_used", c.class_used},
              {"max_class", c.max_class},
              {"stabilized", c.stabilized}};
}

json encode(const HomologyReport& h) {
  auto opt = [](const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); };
  return json{{"h1", h.h1}, {"h2_ce", h.h2_ce}, {"h2_hopf", opt(h.h2_hopf)}, {"h2_exterior", opt(h.h2_exterior)},
              {"agree", h.agree}};
}

json encode(const VerificationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"id", c.id}, {"desc", c.desc}, {"status", to_string(c.status)}, {"witness", c.witness}});
  return json{{"algebra", r.algebra}, {"checks", checks}, {"all_passed", r.all_passed}};
}

json catalog_listing() {
  json entries = json::array();
  for (const auto& e : catalog_entries()) {
    json expected = json::array();
    for (const auto& inst : standard_instances()) {
      if (inst.name != e.name) continue;
      auto ev = expected_values(inst.name, inst.params);
      if (ev.empty()) continue;
      json values = json::object();
      for (const auto& [k, v] : ev) values[k] = {{"value", v.value}, {"provenance", v.provenance}};
      expected.push_back({{"params", inst.params}, {"values", values}});
    }
    entries.push_back({{"name", e.name},
                       {"params", e.params},
                       {"arity", e.params.size()},
                       {"description", e.description},
                       {"expected", expected}});
  }
  return json{{"entries", entries}};
}

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t index(const json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    bad(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

}  // namespace

Rational decode_rational(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  bad("rational must be a string \"p/q\" or an integer");
}

LieAlgebra decode_lie_algebra(const json& j, bool checked) {
  const std::size_t n = index(field(j, "dim"), "dim");
  std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "g";
  std::vector<std::string> labels;
  if (j.contains("basis")) {
    const auto& b = j["basis"];
    if (!b.is_array() || b.size() != n) bad("basis must list dim labels");
    for (const auto& l : b) {
      if (!l.is_string()) bad("basis labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
  }
  std::vector<BracketEntry> entries;
  const auto& br = j.contains("brackets") ? j["brackets"] : json::array();
  if (!br.is_array()) bad("brackets must be an array");
  for (const auto& e : br) {
    BracketEntry be{index(field(e, "i"), "i"), index(field(e, "j"), "j"), {}};
    if (be.i >= be.j || be.j >= n) bad("bracket entries need 0 <= i < j < dim");
    const auto& terms = field(e, "terms");
    if (!terms.is_array()) bad("terms must be an array");
    Vector v(n);
    for (const auto& t : terms) {
      std::size_t k = index(field(t, "k"), "k");
      if (k >= n) bad("term index out of range");
      v[k] += decode_rational(field(t, "c"));
    }
    be.terms = to_sparse(v);
    entries.push_back(std::move(be));
  }
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return std::pair(a.i, a.j) < std::pair(b.i, b.j); });
  for (std::size_t a = 1; a < entries.size(); ++a)
    if (entries[a].i == entries[a - 1].i && entries[a].j == entries[a - 1].j) bad("duplicate bracket entry");
  if (checked) return LieAlgebra(std::move(name), std::move(labels), std::move(entries));
  return LieAlgebra::unchecked(std::move(name), std::move(labels), std::move(entries));
}

BracketExpr decode_bracket_expr(const json& j) {
  if (!j.is_object() || j.size() == 0) bad("bracket expression must be an object");
  if (j.contains("gen")) return BracketExpr::gen(index(j["gen"], "gen"));
  if (j.contains("scale")) return BracketExpr::scale(decode_rational(j["scale"]), decode_bracket_expr(field(j, "of")));
  if (j.contains("sum")) {
    if (!j["sum"].is_array()) bad("sum must be an array");
    std::vector<BracketExpr> terms;
    for (const auto& t : j["sum"]) terms.push_back(decode_bracket_expr(t));
    return BracketExpr::sum(std::move(terms));
  }
  if (j.contains("br")) {
    if (!j["br"].is_array() || j["br"].size() != 2) bad("br takes exactly two operands");
    return BracketExpr::br(decode_bracket_expr(j["br"][0]), decode_bracket_expr(j["br"][1]));
  }
  bad("unknown bracket expression node");
}

Presentation decode_presentation(const json& j) {
  Presentation p;
  p.generators = index(field(j, "gens"), "gens");
  if (j.contains("gen_labels"))
    for (const auto& l : j["gen_labels"]) p.gen_labels.push_back(l.get<std::string>());
  for (const auto& r : field(j, "relators")) p.relators.push_back(decode_bracket_expr(r));
  p.check();
  return p;
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::exception& e) {
    bad(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) bad("cannot write " + path);
  out << text;
  if (!out) bad("write failed for " + path);
}

}  // namespace wclie
