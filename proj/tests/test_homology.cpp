#include "oracles.hpp"

#include "wclie/catalog.hpp"
#include "wclie/error.hpp"
#include "wclie/homology.hpp"

#include <gtest/gtest.h>

using namespace wclie;

namespace {

oracle::Table to_table(const LieAlgebra& g) {
  oracle::Table t;
  t.n = g.dim();
  for (const auto& e : g.brackets()) {
    auto& dst = t.sc[{e.i, e.j}];
    for (const auto& term : e.terms) {
      auto num = term.c.numerator(), den = term.c.denominator();
      dst.emplace_back(term.k, oracle::Q(num.convert_to<long long>(), den.convert_to<long long>()));
    }
  }
  return t;
}

std::size_t choose2(std::size_t n) { return n * (n - (n > 0)) / 2; }

}  // namespace

// Hand-entered table, no library code involved.
TEST(Oracle, HeisenbergH2IsTwo) { EXPECT_EQ(oracle::h2_chevalley_eilenberg(oracle::heisenberg3()), 2u); }

TEST(H1, Examples) {
  EXPECT_EQ(h1(LieAlgebra::abelian(4)), 4u);
  EXPECT_EQ(h1(build("heisenberg", {3})), 2u);
  EXPECT_EQ(h1(build("sl2")), 0u);
}

TEST(H2Ce, Examples) {
  for (std::size_t n = 1; n <= 5; ++n) EXPECT_EQ(h2_ce(LieAlgebra::abelian(n)).dim, choose2(n));
  EXPECT_EQ(h2_ce(build("paper_example_1")).dim, 4u);
  EXPECT_EQ(h2_ce(build("free_nilpotent", {3, 2})).dim, 8u);
  EXPECT_EQ(h2_ce(build("sl2")).dim, 0u);
}

TEST(H2Ce, RepresentativesAreIndependentCycles) {
  auto g = build("paper_example_1");
  auto r = h2_ce(g);
  auto d2 = boundary2(g);
  EchelonBuilder b(r.boundaries);
  for (const auto& v : r.representatives) {
    EXPECT_TRUE(is_zero(d2.apply(v)));
    EXPECT_TRUE(b.insert(v));
  }
}

TEST(H2Ce, AgreesWithOracleOnCatalog) {
  for (const auto& inst : standard_instances()) {
    auto g = build(inst.name, inst.params);
    EXPECT_EQ(h2_ce(g).dim, oracle::h2_chevalley_eilenberg(to_table(g))) << g.name();
  }
}

TEST(H2Ce, ChainComplex) {
  for (const auto& inst : standard_instances()) {
    auto g = build(inst.name, inst.params);
    auto m = boundary2(g) * boundary3(g);
    EXPECT_EQ(m, Matrix(m.rows(), m.cols())) << g.name();
  }
}

TEST(H2Ce, NonLieTableIsRejected) {
  auto bad = LieAlgebra::unchecked("bad", {"e1", "e2", "e3"}, {{0, 1, {{2, 1}}}, {0, 2, {{0, 1}}}});
  try {
    h2_ce(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ConsistencyFailure);
  }
}

TEST(Wedge, Basis) {
  EXPECT_EQ(wedge2_index(4, 0, 1), 0u);
  EXPECT_EQ(wedge2_index(4, 0, 3), 2u);
  EXPECT_EQ(wedge2_index(4, 1, 2), 3u);
  EXPECT_EQ(wedge2_index(4, 2, 3), 5u);
  auto pairs = wedge2_basis(5);
  for (std::size_t c = 0; c < pairs.size(); ++c) EXPECT_EQ(wedge2_index(5, pairs[c].first, pairs[c].second), c);
  auto w = wedge(unit_vector(3, 2), unit_vector(3, 0));
  EXPECT_EQ(w, (Vector{0, -1, 0}));
}

TEST(Hopf, Examples) {
  EXPECT_EQ(h2_hopf(LieAlgebra::abelian(2)), 1u);
  EXPECT_EQ(h2_hopf(build("heisenberg", {3})), 2u);
  EXPECT_EQ(h2_hopf(build("paper_example_1")), 4u);
  try {
    h2_hopf(build("sl2"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotNilpotent);
  }
}

TEST(Exterior, Examples) {
  auto a = exterior_square(LieAlgebra::abelian(4));
  EXPECT_EQ(a.dim, 6u);
  EXPECT_EQ(a.phi.matrix(), Matrix(4, 6));
  EXPECT_TRUE(is_abelian(a.table));
  auto s = exterior_square(build("sl2"));
  EXPECT_EQ(s.dim, 3u);
  EXPECT_EQ(s.phi.kernel().dim(), 0u);
  EXPECT_EQ(schur_via_exterior(build("heisenberg", {3})), 2u);
  EXPECT_EQ(schur_via_exterior(LieAlgebra::abelian(3)), 3u);
  EXPECT_EQ(schur_via_exterior(build("free_nilpotent", {3, 2})), 8u);
}

TEST(Exterior, PhiOnGenerators) {
  auto g = build("paper_example_1");
  auto e = exterior_square(g);
  auto pairs = wedge2_basis(g.dim());
  for (std::size_t c = 0; c < pairs.size(); ++c)
    EXPECT_EQ(e.phi(e.generators[c]), g.bracket_basis(pairs[c].first, pairs[c].second));
  // relation 7 on generators
  for (std::size_t a = 0; a < pairs.size(); ++a)
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      auto lhs = e.table.bracket(e.generators[a], e.generators[b]);
      auto x = g.bracket_basis(pairs[a].first, pairs[a].second), y = g.bracket_basis(pairs[b].first, pairs[b].second);
      Vector rhs(e.dim);
      auto w = wedge(x, y);
      for (std::size_t k = 0; k < w.size(); ++k) axpy(rhs, w[k], e.generators[k]);
      EXPECT_EQ(lhs, rhs);
    }
}

TEST(ThreeWay, AgreeOnNilpotentCatalog) {
  for (const auto& inst : standard_instances()) {
    auto g = build(inst.name, inst.params);
    auto r = homology_report(g);
    EXPECT_TRUE(r.agree) << g.name();
    EXPECT_EQ(r.h2_exterior, r.h2_ce) << g.name();
    if (nilpotency_class(g)) {
      EXPECT_EQ(r.h2_hopf, r.h2_ce) << g.name();
    }
  }
}

TEST(Stem, AbelianTwoGivesHeisenberg) {
  auto s = stem_extension(LieAlgebra::abelian(2));
  EXPECT_EQ(s.cover.dim(), 3u);
  EXPECT_EQ(s.kernel.dim(), 1u);
  EXPECT_EQ(nilpotency_class(s.cover), 2u);
}

TEST(Stem, Properties) {
  for (const auto& inst : standard_instances()) {
    auto g = build(inst.name, inst.params);
    if (!nilpotency_class(g)) continue;
    auto s = stem_extension(g);
    SCOPED_TRACE(g.name());
    const std::size_t h2 = h2_ce(g).dim;
    EXPECT_EQ(s.cover.dim(), g.dim() + h2);
    EXPECT_EQ(s.kernel.dim(), h2);
    EXPECT_TRUE(center(s.cover).contains(s.kernel));
    EXPECT_TRUE(derived_algebra(s.cover).contains(s.kernel));
    EXPECT_EQ(s.projection.kernel(), s.kernel);
    EXPECT_EQ(quotient(s.cover, s.kernel).algebra.dim(), g.dim());
  }
  EXPECT_EQ(stem_extension(build("paper_example_1")).cover.dim(), 8u);
}
