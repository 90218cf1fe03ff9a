#include "wclie/catalog.hpp"
#include "wclie/chi.hpp"
#include "wclie/error.hpp"
#include "wclie/homology.hpp"
#include "wclie/serialize.hpp"

#include <gtest/gtest.h>

using namespace wclie;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::Parse;
}

}  // namespace

TEST(Catalog, Examples) {
  auto a = build("abelian", {4});
  EXPECT_EQ(a.dim(), 4u);
  EXPECT_TRUE(a.brackets().empty());
  auto p = build("paper_example_1");
  EXPECT_EQ(p.dim(), 4u);
  ASSERT_EQ(p.brackets().size(), 3u);
  for (const auto& e : p.brackets()) EXPECT_EQ(e.terms, (SparseVector{{3, 1}}));
  auto s = build("sl2");
  // e, h, f
  EXPECT_EQ(s.bracket_basis(1, 0), (Vector{2, 0, 0}));
  EXPECT_EQ(s.bracket_basis(1, 2), (Vector{0, 0, -2}));
  EXPECT_EQ(s.bracket_basis(0, 2), (Vector{0, 1, 0}));
  EXPECT_EQ(build("heisenberg", {5}).dim(), 5u);
  EXPECT_EQ(build("upper_triangular_nil", {4}).dim(), 6u);
  EXPECT_EQ(build("free_nilpotent", {3, 2}).dim(), 6u);
}

TEST(Catalog, Errors) {
  EXPECT_EQ(kind_of([] { build("octonions"); }), ErrorKind::UnknownName);
  EXPECT_EQ(kind_of([] { build("heisenberg", {4}); }), ErrorKind::BadParams);
  EXPECT_EQ(kind_of([] { build("abelian", {}); }), ErrorKind::BadParams);
  EXPECT_EQ(kind_of([] { build("abelian", {0}); }), ErrorKind::BadParams);
  EXPECT_EQ(kind_of([] { build("sl2", {1}); }), ErrorKind::BadParams);
  EXPECT_EQ(kind_of([] { build("free_nilpotent", {2}); }), ErrorKind::BadParams);
}

TEST(Catalog, EntriesValidateAndListingIsComplete) {
  for (const auto& inst : standard_instances()) EXPECT_FALSE(validate(build(inst.name, inst.params)));
  auto j = catalog_listing();
  EXPECT_EQ(j["entries"].size(), catalog_entries().size());
  bool saw = false;
  for (const auto& e : j["entries"])
    if (e["name"] == "free_nilpotent") {
      EXPECT_EQ(e["arity"], 2);
      ASSERT_EQ(e["expected"].size(), 1u);
      EXPECT_EQ(e["expected"][0]["values"]["dim_R"]["value"], 4);
      EXPECT_EQ(e["expected"][0]["values"]["dim_R"]["provenance"], "published");
      saw = true;
    }
  EXPECT_TRUE(saw);
}

TEST(Json, LieAlgebraRoundTrip) {
  for (const auto& inst : standard_instances()) {
    auto g = build(inst.name, inst.params);
    auto j = encode(g);
    auto back = decode_lie_algebra(j);
    EXPECT_EQ(back, g);
    EXPECT_EQ(back.name(), g.name());
    EXPECT_EQ(canonical_dump(encode(back)), canonical_dump(j));
  }
}

TEST(Json, LieAlgebraLayout) {
  auto j = encode(build("heisenberg", {3}));
  EXPECT_EQ(canonical_dump(j),
            "{\n  \"basis\": [\n    \"x\",\n    \"y\",\n    \"z\"\n  ],\n  \"brackets\": [\n    {\n      \"i\": 0,\n"
            "      \"j\": 1,\n      \"terms\": [\n        {\n          \"c\": \"1\",\n          \"k\": 2\n        }\n"
            "      ]\n    }\n  ],\n  \"dim\": 3,\n  \"name\": \"heisenberg(3)\"\n}\n");
}

TEST(Json, DecodeErrors) {
  EXPECT_EQ(kind_of([] { decode_lie_algebra(json::parse(R"({"basis":["a"]})")); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { decode_lie_algebra(json::parse(R"({"dim":2,"brackets":[{"i":1,"j":0,"terms":[]}]})")); }),
            ErrorKind::Parse);
  EXPECT_EQ(kind_of([] {
              decode_lie_algebra(json::parse(R"({"dim":2,"brackets":[{"i":0,"j":1,"terms":[{"k":5,"c":"1"}]}]})"));
            }),
            ErrorKind::Parse);
  EXPECT_EQ(kind_of([] {
              decode_lie_algebra(json::parse(R"({"dim":2,"brackets":[{"i":0,"j":1,"terms":[{"k":1,"c":"x/2"}]}]})"));
            }),
            ErrorKind::Parse);
  auto bad = json::parse(
      R"({"dim":3,"brackets":[{"i":0,"j":1,"terms":[{"k":2,"c":"1"}]},{"i":0,"j":2,"terms":[{"k":0,"c":"1"}]}]})");
  EXPECT_EQ(kind_of([&] { decode_lie_algebra(bad); }), ErrorKind::InvalidAlgebra);
  EXPECT_NO_THROW(decode_lie_algebra(bad, false));
  EXPECT_EQ(kind_of([] { read_json_file("/nonexistent/file.json"); }), ErrorKind::Parse);
}

TEST(Json, RationalCoefficients) {
  auto g = decode_lie_algebra(json::parse(R"({"dim":3,"brackets":[{"i":0,"j":1,"terms":[{"k":2,"c":"-6/4"}]}]})"));
  EXPECT_EQ(g.structure(0, 1), (SparseVector{{2, Rational(-3, 2)}}));
  EXPECT_EQ(encode(g)["brackets"][0]["terms"][0]["c"], "-3/2");
}

TEST(Json, PresentationRoundTrip) {
  auto p = chi_presentation(build("paper_example_1"));
  auto j = encode(p);
  EXPECT_EQ(j["gens"], 8);
  EXPECT_EQ(j["relators"].size(), 22u);
  auto back = decode_presentation(j);
  EXPECT_EQ(canonical_dump(encode(back)), canonical_dump(j));
  EXPECT_EQ(class_quotient(back, 3).algebra.dim(), class_quotient(p, 3).algebra.dim());
}

TEST(Json, ChiBundleAndReports) {
  auto g = build("paper_example_1");
  auto c = compute_chi(g);
  auto j = encode(c);
  EXPECT_EQ(j["chi"]["dim"], 14);
  EXPECT_EQ(j["R"]["dim"], 1);
  EXPECT_EQ(j["method"], "nilpotent-quotient");
  EXPECT_EQ(j["stabilized"], true);
  EXPECT_EQ(j["rho"]["rows"], 12);
  EXPECT_EQ(j["gen_images"].size(), 8u);
  EXPECT_EQ(canonical_dump(j), canonical_dump(encode(compute_chi(g))));

  auto h = encode(homology_report(build("sl2")));
  EXPECT_EQ(canonical_dump(h),
            "{\n  \"agree\": true,\n  \"h1\": 0,\n  \"h2_ce\": 0,\n  \"h2_exterior\": 0,\n  \"h2_hopf\": null\n}\n");
}
