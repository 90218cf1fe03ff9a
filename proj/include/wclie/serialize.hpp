#ifndef WCLIE_SERIALIZE_HPP
#define WCLIE_SERIALIZE_HPP

#include "wclie/chi.hpp"
#include "wclie/homology.hpp"
#include "wclie/nilpotent_quotient.hpp"
#include "wclie/verify.hpp"

#include "json.hpp"

#include <string>

namespace wclie {

using nlohmann::json;

json encode(const Rational& r);
json encode(std::span<const Rational> v);
json encode(const Matrix& m);
json encode(const Subspace& s);
json encode(const LieAlgebra& g);
json encode(const BracketExpr& e);
json encode(const Presentation& p);
json encode(const ChiAlgebra& c);
json encode(const HomologyReport& h);
json encode(const VerificationReport& r);
json catalog_listing();

// Decoders throw Error(Parse) on malformed input. A decoded LieAlgebra is
// Jacobi-checked (InvalidAlgebra) unless checked = false.
Rational decode_rational(const json& j);
LieAlgebra decode_lie_algebra(const json& j, bool checked = true);
BracketExpr decode_bracket_expr(const json& j);
Presentation decode_presentation(const json& j);

// Sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const json& j);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace wclie

#endif
