#include "wclie/chi.hpp"

#include "wclie/error.hpp"
#include "wclie/homology.hpp"

namespace wclie {

const char* to_string(ChiMethod m) {
  switch (m) {
    case ChiMethod::NilpotentQuotient: return "nilpotent-quotient";
    case ChiMethod::Superperfect: return "superperfect";
    case ChiMethod::AbelianClosedForm: return "abelian-closed-form";
  }
  return "unknown";
}

Presentation chi_presentation(const LieAlgebra& g) {
  if (auto bad = validate(g))
    throw Error(ErrorKind::InvalidAlgebra, g.name() + " fails the Jacobi identity");
  const std::size_t n = g.dim();
  Presentation p;
  p.generators = 2 * n;
  for (const auto& l : g.labels()) p.gen_labels.push_back(l);
  for (const auto& l : g.labels()) p.gen_labels.push_back(l + "^psi");
  using E = BracketExpr;
  for (std::size_t copy = 0; copy < 2; ++copy) {
    const std::size_t off = copy * n;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        std::vector<E> terms{E::br(E::gen(off + i), E::gen(off + j))};
        for (const auto& t : g.structure(i, j)) terms.push_back(E::scale(-t.c, E::gen(off + t.k)));
        p.relators.push_back(E::sum(std::move(terms)));
      }
  }
  for (std::size_t i = 0; i < n; ++i) p.relators.push_back(E::br(E::gen(i), E::gen(n + i)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      p.relators.push_back(E::br(E::gen(i), E::gen(n + j)) + E::br(E::gen(j), E::gen(n + i)));
  return p;
}

std::size_t default_max_class(const LieAlgebra& g) {
  auto c = nilpotency_class(g);
  return 2 * c.value_or(0) + 2;
}

ChiAlgebra assemble_chi(const LieAlgebra& g, LieAlgebra chi, std::vector<Vector> gen_images, ChiMethod method) {
  const std::size_t n = g.dim();
  if (gen_images.size() != 2 * n) throw Error(ErrorKind::DimensionMismatch, "chi needs 2n generator images");
  auto g2 = direct_sum({g, g}, g.name() + "^2");
  auto g3 = direct_sum({g, g, g}, g.name() + "^3");

  std::vector<Vector> to_g, to_g2, to_g3;
  for (std::size_t copy = 0; copy < 2; ++copy)
    for (std::size_t i = 0; i < n; ++i) {
      to_g.push_back(unit_vector(n, i));
      Vector b(2 * n);
      b[copy * n + i] = 1;
      to_g2.push_back(std::move(b));
      Vector r(3 * n);
      r[copy * n + i] = 1;      // x -> (x,x,0), x^psi -> (0,x,x)
      r[(copy + 1) * n + i] = 1;
      to_g3.push_back(std::move(r));
    }

  ChiAlgebra c;
  c.base = g;
  c.alpha = hom_from_generator_images(chi, gen_images, to_g, g);
  c.beta = hom_from_generator_images(chi, gen_images, to_g2, g2);
  c.rho = hom_from_generator_images(chi, gen_images, to_g3, g3);
  c.L = c.alpha.kernel();
  c.D = c.beta.kernel();
  c.W = c.rho.kernel();

  // R = [g, L, g^psi], spanned by [x_i, [l, x_j^psi]].
  std::vector<Vector> seeds;
  for (const auto& l : c.L.basis_vectors())
    for (std::size_t j = 0; j < n; ++j) {
      Vector inner = chi.bracket(l, gen_images[n + j]);
      if (is_zero(inner)) continue;
      for (std::size_t i = 0; i < n; ++i) seeds.push_back(chi.bracket(gen_images[i], inner));
    }
  c.R = ideal_closure(chi, seeds);
  c.chi = std::move(chi);
  c.gen_images = std::move(gen_images);
  c.method = method;
  return c;
}

ChiAlgebra chi_from_presentation(const LieAlgebra& g, const Presentation& p, std::size_t max_class,
                                 std::optional<std::size_t> budget) {
  if (p.generators != 2 * g.dim()) throw Error(ErrorKind::DimensionMismatch, "chi presentation needs 2n generators");
  auto q = stable_quotient(p, max_class, budget);
  if (!q.stabilized)
    throw Error(ErrorKind::NotStabilized, "nilpotent quotient of chi(" + g.name() + ") still growing at class " +
                                              std::to_string(max_class));
  auto chi = q.algebra.renamed("chi(" + g.name() + ")");
  auto c = assemble_chi(g, std::move(chi), std::move(q.generator_images), ChiMethod::NilpotentQuotient);
  c.class_used = q.class_used;
  c.max_class = max_class;
  c.stabilized = true;
  return c;
}

ChiAlgebra compute_chi(const LieAlgebra& g, std::optional<std::size_t> max_class, std::optional<std::size_t> budget) {
  if (!nilpotency_class(g)) throw Error(ErrorKind::NotNilpotent, g.name() + " is not nilpotent");
  auto c = chi_from_presentation(g, chi_presentation(g), max_class.value_or(default_max_class(g)), budget);
  auto h2 = h2_ce(g).dim;
  if (c.W.dim() < c.R.dim() || c.W.dim() - c.R.dim() != h2)
    throw Error(ErrorKind::ConsistencyFailure, "dim W - dim R = " + std::to_string(c.W.dim()) + " - " +
                                                   std::to_string(c.R.dim()) + " but dim H2 = " + std::to_string(h2));
  return c;
}

ChiAlgebra compute_chi_superperfect(const LieAlgebra& g) {
  if (!is_perfect(g)) throw Error(ErrorKind::NotPerfect, g.name() + " is not perfect");
  if (auto h2 = h2_ce(g).dim; h2 != 0)
    throw Error(ErrorKind::NonvanishingH2, g.name() + " has H2 of dimension " + std::to_string(h2));
  const std::size_t n = g.dim();
  auto chi = direct_sum({g, g, g}, "chi(" + g.name() + ")");
  std::vector<Vector> images;
  for (std::size_t copy = 0; copy < 2; ++copy)
    for (std::size_t i = 0; i < n; ++i) {
      Vector v(3 * n);
      v[copy * n + i] = 1;
      v[(copy + 1) * n + i] = 1;
      images.push_back(std::move(v));
    }
  auto c = assemble_chi(g, std::move(chi), std::move(images), ChiMethod::Superperfect);
  return c;
}

ChiAlgebra compute_chi_abelian(const LieAlgebra& g) {
  if (!is_abelian(g)) throw Error(ErrorKind::Unsupported, g.name() + " is not abelian");
  const std::size_t n = g.dim();
  std::vector<std::string> labels;
  for (const auto& l : g.labels()) labels.push_back(l);
  for (const auto& l : g.labels()) labels.push_back(l + "^psi");
  std::vector<BracketEntry> entries;
  std::size_t w = 2 * n;
  // [x_i, x_j^psi] = w_ij and [x_j, x_i^psi] = -w_ij for i < j.
  std::vector<std::vector<std::size_t>> w_index(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      labels.push_back("[" + g.labels()[i] + "," + g.labels()[j] + "^psi]");
      w_index[i][j] = w++;
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      const std::size_t x = a, y = n + b;
      std::size_t idx = a < b ? w_index[a][b] : w_index[b][a];
      Rational c = a < b ? 1 : -1;
      entries.push_back({x, y, {{idx, c}}});
    }
  std::sort(entries.begin(), entries.end(), [](const auto& l, const auto& r) {
    return std::pair(l.i, l.j) < std::pair(r.i, r.j);
  });
  LieAlgebra chi("chi(" + g.name() + ")", std::move(labels), std::move(entries));
  std::vector<Vector> images;
  for (std::size_t k = 0; k < 2 * n; ++k) images.push_back(unit_vector(chi.dim(), k));
  auto c = assemble_chi(g, std::move(chi), std::move(images), ChiMethod::AbelianClosedForm);
  c.class_used = n > 1 ? 2 : 1;
  return c;
}

ChiAlgebra compute_chi_auto(const LieAlgebra& g, std::optional<std::size_t> max_class,
                            std::optional<std::size_t> budget) {
  if (is_abelian(g)) {
    auto c = compute_chi_abelian(g);
    c.max_class = max_class.value_or(default_max_class(g));
    return c;
  }
  if (nilpotency_class(g)) return compute_chi(g, max_class, budget);
  if (is_perfect(g)) {
    try {
      auto c = compute_chi_superperfect(g);
      c.max_class = max_class.value_or(0);
      return c;
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NonvanishingH2)
        throw Error(ErrorKind::Unsupported, "perfect but not superperfect: " + std::string(e.what()));
      throw;
    }
  }
  throw Error(ErrorKind::Unsupported, g.name() + " is neither nilpotent nor perfect");
}

Subspace image_rho_subspace(const ChiAlgebra& c) { return c.rho.image(); }

Subspace expected_image_rho(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  auto derived = derived_algebra(g);
  auto coords = complement_coords(derived);
  // (x,y,z) -> class of x - y + z in g/g'
  Matrix m(coords.size(), 3 * n);
  for (std::size_t j = 0; j < n; ++j) {
    auto r = derived.reduce(unit_vector(n, j));
    for (std::size_t a = 0; a < coords.size(); ++a) {
      m(a, j) = r[coords[a]];
      m(a, n + j) = -r[coords[a]];
      m(a, 2 * n + j) = r[coords[a]];
    }
  }
  return kernel(m);
}

}  // namespace wclie
