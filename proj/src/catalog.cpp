#include "wclie/catalog.hpp"

#include "wclie/error.hpp"
#include "wclie/free_lie.hpp"

#include <algorithm>

namespace wclie {

namespace {

void need(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::BadParams, what);
}

void arity(const std::string& name, const std::vector<long long>& p, std::size_t n) {
  need(p.size() == n, name + " takes " + std::to_string(n) + " parameter(s), got " + std::to_string(p.size()));
}

LieAlgebra heisenberg(long long dim) {
  need(dim >= 3 && dim % 2 == 1, "heisenberg needs an odd dimension >= 3");
  const std::size_t k = static_cast<std::size_t>(dim / 2);
  std::vector<std::string> labels;
  if (k == 1) {
    labels = {"x", "y", "z"};
  } else {
    for (std::size_t i = 1; i <= k; ++i) labels.push_back("x" + std::to_string(i));
    for (std::size_t i = 1; i <= k; ++i) labels.push_back("y" + std::to_string(i));
    labels.push_back("z");
  }
  std::vector<BracketEntry> b;
  for (std::size_t i = 0; i < k; ++i) b.push_back({i, k + i, {{2 * k, 1}}});
  return LieAlgebra(instance_name("heisenberg", {dim}), std::move(labels), std::move(b));
}

LieAlgebra upper_triangular_nil(long long n) {
  need(n >= 2 && n <= 12, "upper_triangular_nil needs 2 <= n <= 12");
  const auto m = static_cast<std::size_t>(n);
  // E_ij (i<j) ordered by j-i, then i
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  for (std::size_t d = 1; d < m; ++d)
    for (std::size_t i = 0; i + d < m; ++i) idx.emplace_back(i, i + d);
  auto find = [&](std::size_t i, std::size_t j) {
    return static_cast<std::size_t>(std::find(idx.begin(), idx.end(), std::pair(i, j)) - idx.begin());
  };
  std::vector<std::string> labels;
  for (auto [i, j] : idx) labels.push_back("E" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
  std::vector<BracketEntry> b;
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t c = a + 1; c < idx.size(); ++c) {
      auto [i, j] = idx[a];
      auto [k, l] = idx[c];
      // [E_ij, E_kl] = d_jk E_il - d_li E_kj
      if (j == k) b.push_back({a, c, {{find(i, l), 1}}});
      else if (l == i) b.push_back({a, c, {{find(k, j), -1}}});
    }
  return LieAlgebra(instance_name("upper_triangular_nil", {n}), std::move(labels), std::move(b));
}

std::size_t choose2(std::size_t n) { return n * (n - (n > 0)) / 2; }

}  // namespace

std::string instance_name(const std::string& name, const std::vector<long long>& params) {
  if (params.empty()) return name;
  std::string s = name + "(";
  for (std::size_t i = 0; i < params.size(); ++i) s += (i ? "," : "") + std::to_string(params[i]);
  return s + ")";
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"abelian", {"n"}, "n-dimensional abelian Lie algebra"},
      {"free_nilpotent", {"r", "c"}, "free nilpotent Lie algebra of rank r and class c (Lyndon basis)"},
      {"heisenberg", {"dim"}, "Heisenberg algebra of odd dimension 2k+1, [x_i,y_i] = z"},
      {"paper_example_1", {}, "4-dimensional algebra [a,b] = [b,c] = [a,c] = z, z central"},
      {"sl2", {}, "sl(2) in the basis e, h, f: [h,e] = 2e, [h,f] = -2f, [e,f] = h"},
      {"upper_triangular_nil", {"n"}, "strictly upper triangular n x n matrices"},
  };
  return entries;
}

LieAlgebra build(const std::string& name, const std::vector<long long>& p) {
  if (name == "abelian") {
    arity(name, p, 1);
    need(p[0] >= 1 && p[0] <= 64, "abelian needs 1 <= n <= 64");
    return LieAlgebra::abelian(static_cast<std::size_t>(p[0]), instance_name(name, p));
  }
  if (name == "heisenberg") {
    arity(name, p, 1);
    return heisenberg(p[0]);
  }
  if (name == "free_nilpotent") {
    arity(name, p, 2);
    need(p[0] >= 1 && p[1] >= 1 && p[0] <= 255, "free_nilpotent needs r, c >= 1");
    auto f = build_free_nilpotent(static_cast<std::size_t>(p[0]), static_cast<std::size_t>(p[1]));
    return LieAlgebra(instance_name(name, p), f.table().labels(), f.table().brackets());
  }
  if (name == "paper_example_1") {
    arity(name, p, 0);
    return LieAlgebra(name, {"a", "b", "c", "z"}, {{0, 1, {{3, 1}}}, {0, 2, {{3, 1}}}, {1, 2, {{3, 1}}}});
  }
  if (name == "sl2") {
    arity(name, p, 0);
    return LieAlgebra(name, {"e", "h", "f"}, {{0, 1, {{0, -2}}}, {0, 2, {{1, 1}}}, {1, 2, {{2, -2}}}});
  }
  if (name == "upper_triangular_nil") {
    arity(name, p, 1);
    return upper_triangular_nil(p[0]);
  }
  throw Error(ErrorKind::UnknownName, "unknown catalog entry '" + name + "'");
}

ExpectedValues expected_values(const std::string& name, const std::vector<long long>& p) {
  auto all = [](std::size_t chi, std::size_t w, std::size_t r, std::size_t h2, const std::string& prov) {
    return ExpectedValues{{"dim_chi", {chi, prov}}, {"dim_W", {w, prov}}, {"dim_R", {r, prov}}, {"dim_H2", {h2, prov}}};
  };
  if (name == "abelian" && p.size() == 1 && p[0] >= 1) {
    auto n = static_cast<std::size_t>(p[0]);
    return all(2 * n + choose2(n), choose2(n), 0, choose2(n), "closed-form");
  }
  if (name == "paper_example_1" && p.empty()) {
    auto e = all(14, 5, 1, 4, "published");
    e["dim_W"].provenance = "derived";
    return e;
  }
  if (name == "free_nilpotent" && p == std::vector<long long>{3, 2}) return all(27, 12, 4, 8, "published");
  if (name == "heisenberg" && p == std::vector<long long>{3}) return all(9, 2, 0, 2, "derived");
  if (name == "sl2" && p.empty()) return all(9, 0, 0, 0, "derived");
  return {};
}

std::vector<CatalogInstance> standard_instances() {
  std::vector<CatalogInstance> out;
  for (long long n = 1; n <= 5; ++n) out.push_back({"abelian", {n}});
  out.push_back({"heisenberg", {3}});
  out.push_back({"heisenberg", {5}});
  out.push_back({"free_nilpotent", {2, 2}});
  out.push_back({"free_nilpotent", {2, 3}});
  out.push_back({"free_nilpotent", {3, 2}});
  out.push_back({"paper_example_1", {}});
  out.push_back({"sl2", {}});
  out.push_back({"upper_triangular_nil", {3}});
  out.push_back({"upper_triangular_nil", {4}});
  return out;
}

}  // namespace wclie
