#include "wclie/lie_algebra.hpp"

#include "wclie/error.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <utility>

namespace wclie {

SparseVector to_sparse(std::span<const Rational> v) {
  SparseVector out;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) out.push_back({k, v[k]});
  return out;
}

Vector to_dense(const SparseVector& v, std::size_t n) {
  Vector out(n);
  for (const auto& t : v) out.at(t.k) = t.c;
  return out;
}

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> labels, std::vector<BracketEntry> brackets)
    : name_(std::move(name)), labels_(std::move(labels)) {
  fill(std::move(brackets));
  if (auto bad = validate(*this))
    throw Error(ErrorKind::InvalidAlgebra, "Jacobi identity fails on basis triple (" + std::to_string(bad->i) + "," +
                                               std::to_string(bad->j) + "," + std::to_string(bad->k) + ")");
}

LieAlgebra LieAlgebra::unchecked(std::string name, std::vector<std::string> labels,
                                 std::vector<BracketEntry> brackets) {
  LieAlgebra g;
  g.name_ = std::move(name);
  g.labels_ = std::move(labels);
  g.fill(std::move(brackets));
  return g;
}

LieAlgebra LieAlgebra::abelian(std::size_t n, std::string name) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
  return unchecked(name.empty() ? "abelian(" + std::to_string(n) + ")" : std::move(name), std::move(labels), {});
}

void LieAlgebra::fill(std::vector<BracketEntry> brackets) {
  const std::size_t n = dim();
  table_.assign(n * n, {});
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto& e : brackets) {
    if (e.i >= e.j || e.j >= n)
      throw Error(ErrorKind::InvalidAlgebra, "bracket entry needs 0 <= i < j < dim, got (" + std::to_string(e.i) +
                                                 "," + std::to_string(e.j) + ")");
    if (!seen.insert({e.i, e.j}).second)
      throw Error(ErrorKind::InvalidAlgebra, "duplicate bracket entry (" + std::to_string(e.i) + "," +
                                                 std::to_string(e.j) + ")");
    Vector dense(n);
    for (const auto& t : e.terms) {
      if (t.k >= n) throw Error(ErrorKind::InvalidAlgebra, "bracket term index out of range");
      dense[t.k] += t.c;
    }
    table_[e.i * n + e.j] = to_sparse(dense);
  }
}

std::vector<BracketEntry> LieAlgebra::brackets() const {
  std::vector<BracketEntry> out;
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!structure(i, j).empty()) out.push_back({i, j, structure(i, j)});
  return out;
}

void LieAlgebra::add_ad(Vector& out, const Rational& a, std::size_t i, std::span<const Rational> v) const {
  const std::size_t n = dim();
  for (std::size_t j = 0; j < n; ++j) {
    if (j == i || v[j].is_zero()) continue;
    const auto& s = i < j ? structure(i, j) : structure(j, i);
    if (s.empty()) continue;
    Rational f = a * v[j];
    if (i > j) f = -f;
    for (const auto& t : s) out[t.k] += f * t.c;
  }
}

Vector LieAlgebra::bracket(std::span<const Rational> u, std::span<const Rational> v) const {
  const std::size_t n = dim();
  if (u.size() != n || v.size() != n) throw Error(ErrorKind::DimensionMismatch, "bracket operand length differs from dim");
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i)
    if (!u[i].is_zero()) add_ad(out, u[i], i, v);
  return out;
}

Vector LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  Vector out(dim());
  if (i == j) return out;
  const auto& s = i < j ? structure(i, j) : structure(j, i);
  for (const auto& t : s) out[t.k] = i < j ? t.c : -t.c;
  return out;
}

LieAlgebra LieAlgebra::renamed(std::string name) const {
  LieAlgebra g = *this;
  g.name_ = std::move(name);
  return g;
}

LieAlgebra LieAlgebra::with_structure_constant(std::size_t i, std::size_t j, std::size_t k, Rational c) const {
  if (i >= j || j >= dim() || k >= dim()) throw Error(ErrorKind::IndexOutOfRange, "structure constant index");
  LieAlgebra g = *this;
  Vector dense = to_dense(structure(i, j), dim());
  dense[k] = std::move(c);
  g.table_[i * dim() + j] = to_sparse(dense);
  return g;
}

namespace {

// Adds a * [t, e_k] for sparse t into scratch, recording touched coordinates.
void accumulate_ad_right(const LieAlgebra& g, const SparseVector& t, std::size_t k, const Rational& a,
                         Vector& scratch, std::vector<std::size_t>& touched) {
  for (const auto& term : t) {
    if (term.k == k) continue;
    const auto& s = term.k < k ? g.structure(term.k, k) : g.structure(k, term.k);
    if (s.empty()) continue;
    Rational f = term.k < k ? a * term.c : -(a * term.c);
    for (const auto& u : s) {
      if (scratch[u.k].is_zero()) touched.push_back(u.k);
      scratch[u.k] += f * u.c;
    }
  }
}

}  // namespace

std::optional<JacobiViolation> validate(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  Vector scratch(n);
  std::vector<std::size_t> touched;
  auto signed_structure = [&](std::size_t a, std::size_t b) -> std::pair<const SparseVector*, int> {
    return a < b ? std::pair{&g.structure(a, b), 1} : std::pair{&g.structure(b, a), -1};
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const auto& ij = g.structure(i, j);
        const auto& jk = g.structure(j, k);
        auto [ki, ki_sign] = signed_structure(k, i);
        if (ij.empty() && jk.empty() && ki->empty()) continue;
        touched.clear();
        accumulate_ad_right(g, ij, k, 1, scratch, touched);
        accumulate_ad_right(g, jk, i, 1, scratch, touched);
        accumulate_ad_right(g, *ki, j, ki_sign, scratch, touched);
        bool clean = true;
        for (auto t : touched)
          if (!scratch[t].is_zero()) clean = false;
        if (!clean) {
          Vector d(n);
          for (auto t : touched) d[t] = scratch[t];
          return JacobiViolation{i, j, k, std::move(d)};
        }
        for (auto t : touched) scratch[t] = 0;
      }
  return std::nullopt;
}

Vector bracket(const LieAlgebra& g, std::span<const Rational> u, std::span<const Rational> v) {
  return g.bracket(u, v);
}

Subspace subalgebra_closure(const LieAlgebra& g, const std::vector<Vector>& seed) {
  EchelonBuilder span(g.dim());
  std::vector<Vector> members;
  std::deque<Vector> pending(seed.begin(), seed.end());
  while (!pending.empty()) {
    Vector v = std::move(pending.front());
    pending.pop_front();
    if (!span.insert(v)) continue;
    for (const auto& m : members) pending.push_back(g.bracket(v, m));
    members.push_back(std::move(v));
  }
  return span.subspace();
}

Subspace ideal_closure(const LieAlgebra& g, const std::vector<Vector>& seed) {
  const std::size_t n = g.dim();
  EchelonBuilder span(n);
  std::deque<Vector> pending(seed.begin(), seed.end());
  while (!pending.empty()) {
    Vector v = std::move(pending.front());
    pending.pop_front();
    if (!span.insert(v)) continue;
    for (std::size_t i = 0; i < n; ++i) {
      Vector w(n);
      g.add_ad(w, 1, i, v);
      if (!is_zero(w)) pending.push_back(std::move(w));
    }
  }
  return span.subspace();
}

bool is_ideal(const LieAlgebra& g, const Subspace& s) {
  for (std::size_t r = 0; r < s.dim(); ++r)
    for (std::size_t i = 0; i < g.dim(); ++i) {
      Vector w(g.dim());
      g.add_ad(w, 1, i, s.basis().row(r));
      if (!s.contains(w)) return false;
    }
  return true;
}

bool is_subalgebra(const LieAlgebra& g, const Subspace& s) {
  for (std::size_t a = 0; a < s.dim(); ++a)
    for (std::size_t b = a + 1; b < s.dim(); ++b)
      if (!s.contains(g.bracket(s.basis().row(a), s.basis().row(b)))) return false;
  return true;
}

Subspace derived_algebra(const LieAlgebra& g) {
  EchelonBuilder span(g.dim());
  for (const auto& e : g.brackets()) span.insert(to_dense(e.terms, g.dim()));
  return span.subspace();
}

Subspace bracket_span(const LieAlgebra& g, const Subspace& s, const Subspace& t) {
  EchelonBuilder span(g.dim());
  for (std::size_t a = 0; a < s.dim(); ++a)
    for (std::size_t b = 0; b < t.dim(); ++b) span.insert(g.bracket(s.basis().row(a), t.basis().row(b)));
  return span.subspace();
}

Subspace center(const LieAlgebra& g) {
  // z is central iff [e_i, z] = 0 for every i: stack the ad(e_i) matrices.
  const std::size_t n = g.dim();
  Matrix m(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto col = g.bracket_basis(i, j);
      for (std::size_t k = 0; k < n; ++k) m(i * n + k, j) = col[k];
    }
  return kernel(m);
}

std::vector<Subspace> lower_central_series(const LieAlgebra& g) {
  std::vector<Subspace> series{Subspace::full(g.dim())};
  for (;;) {
    Subspace next = bracket_span(g, Subspace::full(g.dim()), series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::optional<std::size_t> nilpotency_class(const LieAlgebra& g) {
  auto series = lower_central_series(g);
  if (series.back().dim() != 0) return std::nullopt;
  return series.size() - 1;
}

bool is_abelian(const LieAlgebra& g) { return g.brackets().empty(); }

bool is_perfect(const LieAlgebra& g) { return derived_algebra(g).dim() == g.dim(); }

std::optional<HomViolation> check_homomorphism(const LieAlgebra& domain, const LieAlgebra& codomain,
                                               const Matrix& matrix) {
  const std::size_t n = domain.dim();
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < n; ++j) cols.push_back(matrix.column_vector(j));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector d = matrix.apply(domain.bracket_basis(i, j)) - codomain.bracket(cols[i], cols[j]);
      if (!is_zero(d)) return HomViolation{i, j, std::move(d)};
    }
  return std::nullopt;
}

LieHom::LieHom(LieAlgebra domain, LieAlgebra codomain, Matrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != codomain_.dim() || matrix_.cols() != domain_.dim())
    throw Error(ErrorKind::DimensionMismatch, "homomorphism matrix has wrong shape");
  if (auto bad = check_homomorphism(domain_, codomain_, matrix_))
    throw Error(ErrorKind::NotWellDefined, "matrix does not respect [e_" + std::to_string(bad->i) + ",e_" +
                                               std::to_string(bad->j) + "]");
}

LieHom LieHom::unchecked(LieAlgebra domain, LieAlgebra codomain, Matrix matrix) {
  LieHom h;
  h.domain_ = std::move(domain);
  h.codomain_ = std::move(codomain);
  h.matrix_ = std::move(matrix);
  return h;
}

Quotient quotient(const LieAlgebra& g, const Subspace& ideal, std::string name) {
  if (ideal.ambient_dim() != g.dim()) throw Error(ErrorKind::AmbientMismatch, "ideal lives in a different space");
  if (!is_ideal(g, ideal)) throw Error(ErrorKind::NotAnIdeal, "subspace is not an ideal of " + g.name());
  auto coords = complement_coords(ideal);
  const std::size_t n = g.dim(), q = coords.size();
  auto project = [&](const Vector& v) {
    Vector r = ideal.reduce(v);
    Vector out(q);
    for (std::size_t a = 0; a < q; ++a) out[a] = r[coords[a]];
    return out;
  };
  std::vector<std::string> labels;
  for (auto c : coords) labels.push_back(g.labels()[c]);
  std::vector<BracketEntry> entries;
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = a + 1; b < q; ++b) {
      auto t = to_sparse(project(g.bracket_basis(coords[a], coords[b])));
      if (!t.empty()) entries.push_back({a, b, std::move(t)});
    }
  auto algebra = LieAlgebra::unchecked(name.empty() ? g.name() + "/I" : std::move(name), std::move(labels),
                                       std::move(entries));
  Matrix proj(q, n);
  for (std::size_t j = 0; j < n; ++j) {
    auto col = project(unit_vector(n, j));
    for (std::size_t a = 0; a < q; ++a) proj(a, j) = col[a];
  }
  LieHom projection(g, algebra, std::move(proj));
  return {std::move(algebra), std::move(projection), std::move(coords)};
}

LieAlgebra direct_sum(const std::vector<LieAlgebra>& parts, std::string name) {
  std::vector<std::string> labels;
  std::vector<BracketEntry> entries;
  std::string joined;
  std::size_t offset = 0;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const auto& g = parts[p];
    for (const auto& l : g.labels()) labels.push_back(l + "_" + std::to_string(p + 1));
    for (auto e : g.brackets()) {
      for (auto& t : e.terms) t.k += offset;
      entries.push_back({e.i + offset, e.j + offset, std::move(e.terms)});
    }
    offset += g.dim();
    joined += (p ? "+" : "") + g.name();
  }
  return LieAlgebra::unchecked(name.empty() ? joined : std::move(name), std::move(labels), std::move(entries));
}

LieHom hom_from_generator_images(const LieAlgebra& domain, const std::vector<Vector>& gens,
                                 const std::vector<Vector>& images, const LieAlgebra& codomain) {
  if (gens.size() != images.size()) throw Error(ErrorKind::DimensionMismatch, "generator and image counts differ");
  const std::size_t n = domain.dim(), m = codomain.dim();
  for (std::size_t a = 0; a < gens.size(); ++a)
    if (gens[a].size() != n || images[a].size() != m)
      throw Error(ErrorKind::DimensionMismatch, "generator or image has wrong length");

  // Rows are (u | h(u)); a row whose domain part vanishes must vanish entirely.
  EchelonBuilder graph(n + m);
  auto joined = [&](const Vector& u, const Vector& hu) {
    Vector v(u);
    v.insert(v.end(), hu.begin(), hu.end());
    return v;
  };
  std::deque<std::pair<Vector, Vector>> pending;
  for (std::size_t a = 0; a < gens.size(); ++a) pending.emplace_back(gens[a], images[a]);
  while (!pending.empty()) {
    auto [u, hu] = std::move(pending.front());
    pending.pop_front();
    Vector row = joined(u, hu);
    graph.reduce(row);
    bool domain_zero = std::all_of(row.begin(), row.begin() + n, [](const Rational& x) { return x.is_zero(); });
    if (domain_zero) {
      if (!is_zero(row)) throw Error(ErrorKind::NotWellDefined, "generator images violate a relation of " + domain.name());
      continue;
    }
    graph.insert(std::move(row));
    for (std::size_t a = 0; a < gens.size(); ++a)
      pending.emplace_back(domain.bracket(u, gens[a]), codomain.bracket(hu, images[a]));
  }
  if (graph.dim() < n) throw Error(ErrorKind::NotGenerating, "generators span a proper subalgebra of " + domain.name());

  auto rows = graph.subspace();
  Matrix h(m, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < m; ++r) h(r, i) = rows.basis()(i, n + r);
  return LieHom(domain, codomain, std::move(h));
}

}  // namespace wclie
