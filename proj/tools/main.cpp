#include "wclie/catalog.hpp"
#include "wclie/chi.hpp"
#include "wclie/error.hpp"
#include "wclie/homology.hpp"
#include "wclie/serialize.hpp"
#include "wclie/verify.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <optional>
#include <sstream>

using namespace wclie;

namespace {

enum Exit { kOk = 0, kInput = 1, kNotStabilized = 2, kUnsupported = 3, kConsistency = 4 };

struct RunConfig {
  std::string input;
  std::vector<std::string> catalog;
  std::optional<std::size_t> max_class;
  std::string output;
  std::string format = "text";
  bool unchecked = false;
};

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse:
    case ErrorKind::UnknownName:
    case ErrorKind::BadParams:
    case ErrorKind::InvalidAlgebra:
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::DimensionMismatch:
      return kInput;
    case ErrorKind::NotStabilized:
    case ErrorKind::BudgetExceeded:
      return kNotStabilized;
    case ErrorKind::Unsupported:
    case ErrorKind::NotNilpotent:
    case ErrorKind::NotPerfect:
    case ErrorKind::NonvanishingH2:
      return kUnsupported;
    default:
      return kConsistency;
  }
}

std::vector<long long> parse_params(const std::vector<std::string>& words) {
  std::vector<long long> out;
  for (std::size_t i = 1; i < words.size(); ++i) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(words[i], &used);
      if (used != words[i].size()) throw std::invalid_argument(words[i]);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::BadParams, "catalog parameter '" + words[i] + "' is not an integer");
    }
  }
  return out;
}

LieAlgebra load(const RunConfig& cfg) {
  if (cfg.input.empty() == cfg.catalog.empty())
    throw Error(ErrorKind::Parse, "give exactly one of --input PATH or --catalog NAME [PARAMS...]");
  if (!cfg.input.empty()) return decode_lie_algebra(read_json_file(cfg.input), !cfg.unchecked);
  return build(cfg.catalog[0], parse_params(cfg.catalog));
}

// JSON goes to --output when given; stdout gets JSON or the text summary.
void emit(const RunConfig& cfg, const json& doc, const std::string& text) {
  if (!cfg.output.empty()) write_text_file(cfg.output, canonical_dump(doc));
  if (cfg.format == "json" && cfg.output.empty())
    std::cout << canonical_dump(doc);
  else
    std::cout << text;
}

std::string opt_str(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "n/a"; }

int cmd_catalog(const RunConfig& cfg) {
  if (!cfg.catalog.empty()) {
    auto g = build(cfg.catalog[0], parse_params(cfg.catalog));
    std::ostringstream t;
    t << g.name() << ": dim " << g.dim() << ", " << g.brackets().size() << " nonzero brackets\n";
    emit(cfg, encode(g), t.str());
    return kOk;
  }
  std::ostringstream t;
  for (const auto& e : catalog_entries()) {
    t << e.name;
    for (const auto& p : e.params) t << " " << p;
    t << "  -  " << e.description << "\n";
  }
  emit(cfg, catalog_listing(), t.str());
  return kOk;
}

int cmd_chi(const RunConfig& cfg) {
  auto g = load(cfg);
  auto c = compute_chi_auto(g, cfg.max_class);
  std::ostringstream t;
  t << c.chi.dim() << " / " << c.L.dim() << " / " << c.D.dim() << " / " << c.W.dim() << " / " << c.R.dim() << "\n";
  emit(cfg, encode(c), t.str());
  return kOk;
}

int cmd_homology(const RunConfig& cfg) {
  auto g = load(cfg);
  auto h = homology_report(g);
  std::ostringstream t;
  t << "h1 = " << h.h1 << ", h2_ce = " << h.h2_ce << ", h2_hopf = " << opt_str(h.h2_hopf)
    << ", h2_exterior = " << opt_str(h.h2_exterior) << ", agree = " << (h.agree ? "yes" : "no") << "\n";
  emit(cfg, encode(h), t.str());
  return h.agree ? kOk : kConsistency;
}

int cmd_verify(const RunConfig& cfg) {
  auto g = load(cfg);
  auto c = compute_chi_auto(g, cfg.max_class);
  auto h = homology_report(g);
  auto r = run_checks(c, h);
  std::ostringstream t;
  for (const auto& ch : r.checks) {
    t << ch.id << " " << to_string(ch.status) << "  " << ch.desc;
    if (ch.status == CheckStatus::Skip && ch.witness.contains("reason"))
      t << " (" << ch.witness["reason"].get<std::string>() << ")";
    t << "\n";
  }
  t << (r.all_passed ? "all checks passed" : "some checks failed") << "\n";
  emit(cfg, encode(r), t.str());
  return r.all_passed ? kOk : kConsistency;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weak commutativity Lie algebras: chi(g), homology and structural checks"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::size_t max_class = 0;

  auto add_common = [&](CLI::App* sub, bool input) {
    if (input) {
      sub->add_option("--input", cfg.input, "Lie algebra JSON file");
      sub->add_option("--max-class", max_class, "largest nilpotency class tried for chi")->check(CLI::PositiveNumber);
      sub->add_flag("--unchecked", cfg.unchecked, "skip the Jacobi check when loading --input");
    }
    sub->add_option("--catalog", cfg.catalog, "catalog entry: NAME [PARAMS...]")->expected(1, -1);
    sub->add_option("--output", cfg.output, "write JSON to this path");
    sub->add_option("--format", cfg.format, "stdout format")->check(CLI::IsMember({"json", "text"}));
  };

  auto* cat = app.add_subcommand("catalog", "list catalog entries or dump one algebra");
  add_common(cat, false);
  auto* chi = app.add_subcommand("chi", "compute chi(g) with L, D, W, R");
  add_common(chi, true);
  auto* hom = app.add_subcommand("homology", "H1 and H2 by three methods");
  add_common(hom, true);
  auto* ver = app.add_subcommand("verify", "run the structural checks C1..C12");
  add_common(ver, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kInput;
  }
  for (auto* sub : {chi, hom, ver})
    if (sub->count("--max-class")) cfg.max_class = max_class;

  try {
    if (*cat) return cmd_catalog(cfg);
    if (*chi) return cmd_chi(cfg);
    if (*hom) return cmd_homology(cfg);
    return cmd_verify(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kConsistency;
  }
}
