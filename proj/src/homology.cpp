#include "wclie/homology.hpp"

#include "wclie/error.hpp"

namespace wclie {

std::vector<std::pair<std::size_t, std::size_t>> wedge2_basis(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

std::size_t wedge2_index(std::size_t n, std::size_t i, std::size_t j) {
  // pairs (a, b) with a < i come first: sum_{a<i} (n-1-a)
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

Vector wedge(std::span<const Rational> u, std::span<const Rational> v) {
  const std::size_t n = u.size();
  if (v.size() != n) throw Error(ErrorKind::DimensionMismatch, "wedge operands differ in length");
  Vector out(n * (n - (n > 0)) / 2);
  for (std::size_t a = 0; a < n; ++a) {
    if (u[a].is_zero()) continue;
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || v[b].is_zero()) continue;
      Rational p = u[a] * v[b];
      if (a < b)
        out[wedge2_index(n, a, b)] += p;
      else
        out[wedge2_index(n, b, a)] -= p;
    }
  }
  return out;
}

Matrix boundary2(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  auto pairs = wedge2_basis(n);
  Matrix m(n, pairs.size());
  for (std::size_t c = 0; c < pairs.size(); ++c)
    for (const auto& t : g.structure(pairs[c].first, pairs[c].second)) m(t.k, c) = t.c;
  return m;
}

Matrix boundary3(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector col = wedge(g.bracket_basis(i, j), unit_vector(n, k));
        axpy(col, -1, wedge(g.bracket_basis(i, k), unit_vector(n, j)));
        axpy(col, 1, wedge(g.bracket_basis(j, k), unit_vector(n, i)));
        cols.push_back(std::move(col));
      }
  return Matrix::from_columns(cols, n * (n - (n > 0)) / 2);
}

std::size_t h1(const LieAlgebra& g) { return g.dim() - derived_algebra(g).dim(); }

H2Ce h2_ce(const LieAlgebra& g) {
  H2Ce out;
  out.cycles = kernel(boundary2(g));
  out.boundaries = image(boundary3(g));
  if (!out.cycles.contains(out.boundaries))
    throw Error(ErrorKind::ConsistencyFailure, "d2 o d3 != 0 on " + g.name());
  EchelonBuilder b(out.boundaries);
  for (auto& v : out.cycles.basis_vectors())
    if (b.insert(v)) out.representatives.push_back(std::move(v));
  out.dim = out.representatives.size();
  return out;
}

namespace {

// g = F/r with F free nilpotent of class c+1 on a minimal generating set.
struct HopfSetup {
  std::vector<Vector> gens;  // chosen generators of g
  std::optional<FreeNilpotentAlgebra> free;
  Matrix pi;                 // F -> g
  Subspace r, fr, n;         // r, [F,r], F' cap r
};

HopfSetup hopf_setup(const LieAlgebra& g, std::optional<std::size_t> budget) {
  auto cls = nilpotency_class(g);
  if (!cls) throw Error(ErrorKind::NotNilpotent, g.name() + " is not nilpotent");
  HopfSetup s;
  const std::size_t dim = g.dim();
  for (auto q : complement_coords(derived_algebra(g))) s.gens.push_back(unit_vector(dim, q));
  if (s.gens.empty()) return s;
  s.free = build_free_nilpotent(s.gens.size(), *cls + 1, budget);
  const auto& f = *s.free;
  std::vector<Vector> cols(f.dim());
  for (std::size_t b = 0; b < f.dim(); ++b) {
    const auto& e = f.basis()[b];
    cols[b] = e.left ? g.bracket(cols[*e.left], cols[*e.right]) : s.gens[e.word[0]];
  }
  s.pi = Matrix::from_columns(cols, dim);
  s.r = kernel(s.pi);
  std::vector<Vector> br;
  for (std::size_t x = 0; x < s.gens.size(); ++x) {
    auto gx = f.generator(x);
    for (const auto& v : s.r.basis_vectors()) br.push_back(f.table().bracket(gx, v));
  }
  s.fr = Subspace::span(f.dim(), br);
  std::vector<Vector> higher;
  for (std::size_t b = f.degree_offsets()[1]; b < f.dim(); ++b) higher.push_back(unit_vector(f.dim(), b));
  s.n = intersect(s.r, Subspace::span(f.dim(), higher));
  return s;
}

}  // namespace

std::size_t h2_hopf(const LieAlgebra& g, std::optional<std::size_t> budget) {
  auto s = hopf_setup(g, budget);
  if (!s.free) return 0;
  if (!s.n.contains(s.fr)) throw Error(ErrorKind::ConsistencyFailure, "[F,r] not inside F' cap r");
  return s.n.dim() - s.fr.dim();
}

ExteriorSquare exterior_square(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  const std::size_t m = n * (n - (n > 0)) / 2;
  std::vector<Vector> rels;
  // [x1,x2] ^ y = [x1,y] ^ x2 + x1 ^ [x2,y]
  // x ^ [y1,y2] = [x,y1] ^ y2 + y1 ^ [x,y2]
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        auto ea = unit_vector(n, a), eb = unit_vector(n, b), ec = unit_vector(n, c);
        Vector r5 = wedge(g.bracket_basis(a, b), ec);
        axpy(r5, -1, wedge(ea, g.bracket_basis(b, c)));
        axpy(r5, 1, wedge(eb, g.bracket_basis(a, c)));
        rels.push_back(std::move(r5));
        Vector r6 = wedge(ec, g.bracket_basis(a, b));
        axpy(r6, -1, wedge(g.bracket_basis(c, a), eb));
        axpy(r6, -1, wedge(ea, g.bracket_basis(c, b)));
        rels.push_back(std::move(r6));
      }
  ExteriorSquare e;
  e.base = g;
  e.relations = Subspace::span(m, rels);
  auto coords = complement_coords(e.relations);
  e.dim = coords.size();
  auto project = [&](const Vector& v) {
    Vector red = e.relations.reduce(v);
    Vector out(coords.size());
    for (std::size_t q = 0; q < coords.size(); ++q) out[q] = red[coords[q]];
    return out;
  };

  Matrix d2 = boundary2(g);
  for (const auto& r : e.relations.basis_vectors()) {
    Vector dr = d2.apply(r);
    if (!is_zero(dr)) throw Error(ErrorKind::ConsistencyFailure, "phi not well defined on the exterior square");
    // [r, v] = d2(r) ^ d2(v) vanishes as d2(r) = 0
  }
  // relation 7 on quotient basis elements
  std::vector<Vector> images(coords.size());
  for (std::size_t q = 0; q < coords.size(); ++q) images[q] = d2.column_vector(coords[q]);
  std::vector<BracketEntry> entries;
  for (std::size_t s = 0; s < coords.size(); ++s)
    for (std::size_t t = s + 1; t < coords.size(); ++t) {
      auto v = to_sparse(project(wedge(images[s], images[t])));
      if (!v.empty()) entries.push_back({s, t, std::move(v)});
    }
  std::vector<std::string> labels;
  for (auto c : coords) {
    auto [i, j] = wedge2_basis(n)[c];
    labels.push_back(g.labels()[i] + "^" + g.labels()[j]);
  }
  e.table = LieAlgebra::unchecked(g.name() + "^" + g.name(), std::move(labels), std::move(entries));
  if (validate(e.table)) throw Error(ErrorKind::ConsistencyFailure, "exterior square bracket fails Jacobi");
  for (std::size_t c = 0; c < m; ++c) e.generators.push_back(project(unit_vector(m, c)));
  Matrix phi = Matrix::from_columns(images, n);
  if (check_homomorphism(e.table, g, phi)) throw Error(ErrorKind::ConsistencyFailure, "phi is not a homomorphism");
  e.phi = LieHom::unchecked(e.table, g, std::move(phi));
  return e;
}

std::size_t schur_via_exterior(const LieAlgebra& g) { return exterior_square(g).phi.kernel().dim(); }

StemExtension stem_extension(const LieAlgebra& g, std::optional<std::size_t> budget) {
  auto s = hopf_setup(g, budget);
  StemExtension out;
  if (!s.free) {
    out.cover = g;
    out.kernel = Subspace::zero(g.dim());
    out.projection = LieHom(g, g, Matrix::identity(g.dim()));
    return out;
  }
  const auto& f = *s.free;
  // a = [F,r] + (complement of N in r), taken from r-basis vectors that
  // enlarge the span in order.
  EchelonBuilder b(s.n);
  std::vector<Vector> a = s.fr.basis_vectors();
  for (auto& v : s.r.basis_vectors())
    if (b.insert(v)) a.push_back(std::move(v));
  auto ideal = Subspace::span(f.dim(), a);
  auto q = quotient(f.table(), ideal, "cover(" + g.name() + ")");
  out.cover = q.algebra;
  std::vector<Vector> zs;
  for (const auto& v : s.r.basis_vectors()) zs.push_back(q.projection(v));
  out.kernel = Subspace::span(out.cover.dim(), zs);

  std::vector<Vector> gen_imgs;
  for (std::size_t x = 0; x < s.gens.size(); ++x) gen_imgs.push_back(q.projection(f.generator(x)));
  out.projection = hom_from_generator_images(out.cover, gen_imgs, s.gens, g);

  const std::size_t h2 = s.n.dim() - s.fr.dim();
  if (out.cover.dim() != g.dim() + h2 || out.kernel.dim() != h2)
    throw Error(ErrorKind::ConsistencyFailure, "stem cover has the wrong dimension");
  if (!center(out.cover).contains(out.kernel) || !derived_algebra(out.cover).contains(out.kernel))
    throw Error(ErrorKind::ConsistencyFailure, "kernel is not inside center and derived algebra");
  if (!(out.projection.kernel() == out.kernel) || out.projection.image().dim() != g.dim())
    throw Error(ErrorKind::ConsistencyFailure, "cover modulo kernel is not g");
  return out;
}

HomologyReport homology_report(const LieAlgebra& g, std::optional<std::size_t> budget) {
  HomologyReport h;
  h.algebra = g.name();
  h.h1 = h1(g);
  h.h2_ce = h2_ce(g).dim;
  if (nilpotency_class(g)) h.h2_hopf = h2_hopf(g, budget);
  h.h2_exterior = schur_via_exterior(g);
  h.agree = (!h.h2_hopf || *h.h2_hopf == h.h2_ce) && (!h.h2_exterior || *h.h2_exterior == h.h2_ce);
  return h;
}

}  // namespace wclie
