#include "wclie/verify.hpp"

#include "wclie/error.hpp"

#include <algorithm>

namespace wclie {

using nlohmann::json;

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
  }
  return "unknown";
}

const CheckResult& VerificationReport::check(const std::string& id) const {
  for (const auto& c : checks)
    if (c.id == id) return c;
  throw Error(ErrorKind::IndexOutOfRange, "no check " + id);
}

namespace {

json vec_json(std::span<const Rational> v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

CheckResult pass(std::string id, std::string desc) { return {std::move(id), std::move(desc), CheckStatus::Pass, nullptr}; }
CheckResult fail(std::string id, std::string desc, json w) {
  return {std::move(id), std::move(desc), CheckStatus::Fail, std::move(w)};
}
CheckResult skip(std::string id, std::string desc, std::string why) {
  return {std::move(id), std::move(desc), CheckStatus::Skip, json{{"reason", std::move(why)}}};
}

// First pair of basis vectors with a nonzero bracket, if any.
std::optional<json> nonzero_bracket(const LieAlgebra& g, const Subspace& a, const Subspace& b, bool triangle) {
  auto av = a.basis_vectors(), bv = b.basis_vectors();
  for (std::size_t i = 0; i < av.size(); ++i)
    for (std::size_t j = triangle ? i + 1 : 0; j < bv.size(); ++j) {
      auto br = g.bracket(av[i], bv[j]);
      if (!is_zero(br)) return json{{"left", vec_json(av[i])}, {"right", vec_json(bv[j])}, {"bracket", vec_json(br)}};
    }
  return std::nullopt;
}

json dims(std::initializer_list<std::pair<const char*, std::size_t>> kv) {
  json o = json::object();
  for (auto& [k, v] : kv) o[k] = v;
  return o;
}

std::optional<std::pair<Vector, Vector>> generating_pair(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  if (n <= 2) {
    Vector u(n), v(n);
    if (n >= 1) u[0] = 1;
    if (n == 2) v[1] = 1;
    return std::pair(u, v);
  }
  std::vector<Vector> cand;
  for (std::size_t i = 0; i < n; ++i) cand.push_back(unit_vector(n, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector v = unit_vector(n, i);
      v[j] = 1;
      cand.push_back(std::move(v));
    }
  for (std::size_t a = 0; a < cand.size(); ++a)
    for (std::size_t b = a + 1; b < cand.size(); ++b)
      if (subalgebra_closure(g, {cand[a], cand[b]}).dim() == n) return std::pair(cand[a], cand[b]);
  return std::nullopt;
}

}  // namespace

VerificationReport run_checks(const ChiAlgebra& c, const HomologyReport& h) {
  const LieAlgebra& g = c.base;
  const LieAlgebra& chi = c.chi;
  if (!h.algebra.empty() && h.algebra != g.name())
    throw Error(ErrorKind::InputMismatch, "homology report is for " + h.algebra + ", chi algebra for " + g.name());
  if (h.h1 != h1(g)) throw Error(ErrorKind::InputMismatch, "homology report does not match the base algebra");

  const std::size_t n = g.dim();
  const std::size_t dg = derived_algebra(g).dim();
  VerificationReport rep;
  rep.algebra = g.name();
  auto& out = rep.checks;

  {
    const char* d = "W is abelian";
    auto w = nonzero_bracket(chi, c.W, c.W, true);
    out.push_back(w ? fail("C1", d, *w) : pass("C1", d));
  }
  {
    const char* d = "[D, L] = 0";
    auto w = nonzero_bracket(chi, c.D, c.L, false);
    out.push_back(w ? fail("C2", d, *w) : pass("C2", d));
  }
  {
    const char* d = "W = L cap D = ker rho";
    auto ld = intersect(c.L, c.D);
    auto kr = kernel(c.rho.matrix());
    if (c.W == ld && c.W == kr)
      out.push_back(pass("C3", d));
    else
      out.push_back(fail("C3", d, dims({{"dim_W", c.W.dim()}, {"dim_L_cap_D", ld.dim()}, {"dim_ker_rho", kr.dim()}})));
  }
  {
    const char* d = "Im rho = {(x,y,z) : x - y + z in g'}, of dim 2n + dim g'";
    auto im = image(c.rho.matrix());
    auto ex = expected_image_rho(g);
    if (im == ex && im.dim() == 2 * n + dg) {
      out.push_back(pass("C4", d));
    } else {
      json w = dims({{"dim_image", im.dim()}, {"expected_dim", 2 * n + dg}});
      for (const auto& v : im.basis_vectors())
        if (!ex.contains(v)) {
          w["outside"] = vec_json(v);
          break;
        }
      out.push_back(fail("C4", d, w));
    }
  }
  {
    const char* d = "dim W - dim R = dim H2";
    bool ok = c.W.contains(c.R) && c.W.dim() - c.R.dim() == h.h2_ce;
    json w = dims({{"dim_W", c.W.dim()}, {"dim_R", c.R.dim()}, {"dim_H2", h.h2_ce}});
    out.push_back(ok ? pass("C5", d) : fail("C5", d, w));
  }
  {
    const char* d = "dim chi >= 2n + dim g' + dim H2, equality iff R = 0";
    const std::size_t lower = 2 * n + dg + h.h2_ce;
    bool ok = chi.dim() >= lower && ((chi.dim() == lower) == (c.R.dim() == 0));
    json w = dims({{"dim_chi", chi.dim()}, {"lower_bound", lower}, {"dim_R", c.R.dim()}});
    out.push_back(ok ? pass("C6", d) : fail("C6", d, w));
  }
  std::vector<Vector> diffs;
  for (std::size_t i = 0; i < n; ++i) diffs.push_back(c.x(i) - c.psi(i));
  {
    const char* d = "L is generated by the x_i - x_i^psi";
    auto gen = subalgebra_closure(chi, diffs);
    if (gen == c.L)
      out.push_back(pass("C7", d));
    else
      out.push_back(fail("C7", d, dims({{"dim_L", c.L.dim()}, {"dim_generated", gen.dim()}})));
  }
  {
    const char* d = "[x_i, x_j^psi] = [x_i^psi, x_j]";
    std::optional<json> w;
    for (std::size_t i = 0; i < n && !w; ++i)
      for (std::size_t j = 0; j < n && !w; ++j) {
        auto a = chi.bracket(c.x(i), c.psi(j)), b = chi.bracket(c.psi(i), c.x(j));
        if (a != b) w = json{{"i", i}, {"j", j}, {"left", vec_json(a)}, {"right", vec_json(b)}};
      }
    out.push_back(w ? fail("C8", d, *w) : pass("C8", d));
  }
  {
    const char* d = "L = L' + span{x_i - x_i^psi, [x_i,x_j] - [x_i,x_j]^psi}, dim L/L' <= n + C(n,2)";
    auto lv = c.L.basis_vectors();
    std::vector<Vector> brs;
    for (std::size_t a = 0; a < lv.size(); ++a)
      for (std::size_t b = a + 1; b < lv.size(); ++b) brs.push_back(chi.bracket(lv[a], lv[b]));
    auto lprime = subalgebra_closure(chi, brs);
    std::vector<Vector> span = diffs;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        span.push_back(chi.bracket(c.x(i), c.x(j)) - chi.bracket(c.psi(i), c.psi(j)));
    auto total = sum(lprime, Subspace::span(chi.dim(), span));
    const std::size_t bound = n + n * (n - (n > 0)) / 2;
    bool ok = total == c.L && c.L.contains(lprime) && c.L.dim() - lprime.dim() <= bound;
    json w = dims({{"dim_L", c.L.dim()}, {"dim_L_prime", lprime.dim()}, {"dim_spanned", total.dim()}, {"bound", bound}});
    out.push_back(ok ? pass("C9", d) : fail("C9", d, w));
  }
  {
    const char* d = "g generated by two elements implies R = 0";
    if (n - dg > 2) {
      out.push_back(skip("C10", d, "g/g' has dimension " + std::to_string(n - dg)));
    } else if (auto pair = generating_pair(g)) {
      json w = {{"pair", {vec_json(pair->first), vec_json(pair->second)}}, {"dim_R", c.R.dim()}};
      out.push_back(c.R.dim() == 0 ? CheckResult{"C10", d, CheckStatus::Pass, w} : fail("C10", d, w));
    } else {
      out.push_back(skip("C10", d, "no generating pair among candidates"));
    }
  }
  {
    const char* d = "g perfect implies W central and R = 0";
    if (!is_perfect(g)) {
      out.push_back(skip("C11", d, "g is not perfect"));
    } else {
      auto z = nonzero_bracket(chi, c.W, Subspace::full(chi.dim()), false);
      if (z)
        out.push_back(fail("C11", d, *z));
      else if (c.R.dim() != 0)
        out.push_back(fail("C11", d, dims({{"dim_R", c.R.dim()}})));
      else
        out.push_back(pass("C11", d));
    }
  }
  {
    const char* d = "dim chi - dim W = dim Im rho";
    const std::size_t im = rank(c.rho.matrix());
    bool ok = chi.dim() >= c.W.dim() && chi.dim() - c.W.dim() == im;
    json w = dims({{"dim_chi", chi.dim()}, {"dim_W", c.W.dim()}, {"dim_image", im}});
    out.push_back(ok ? pass("C12", d) : fail("C12", d, w));
  }

  rep.all_passed = std::none_of(out.begin(), out.end(), [](const auto& r) { return r.status == CheckStatus::Fail; });
  return rep;
}

}  // namespace wclie
