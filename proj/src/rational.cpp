#include "wclie/rational.hpp"

#include "wclie/error.hpp"

#include <ostream>

namespace wclie {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::NotGenerating: return "NotGenerating";
    case ErrorKind::NotWellDefined: return "NotWellDefined";
    case ErrorKind::InvalidAlgebra: return "InvalidAlgebra";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::NotStabilized: return "NotStabilized";
    case ErrorKind::ConsistencyFailure: return "ConsistencyFailure";
    case ErrorKind::NotPerfect: return "NotPerfect";
    case ErrorKind::NonvanishingH2: return "NonvanishingH2";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::InputMismatch: return "InputMismatch";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::Parse, "zero denominator");
  v_ = value_type(num) / value_type(den);
}

Rational Rational::from_integers(const integer_type& num, const integer_type& den) {
  if (den.is_zero()) throw Error(ErrorKind::Parse, "zero denominator");
  return Rational(value_type(num) / value_type(den));
}

namespace {

bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

Rational::integer_type parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) throw Error(ErrorKind::Parse, "bad rational literal '" + std::string(s) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return Rational::integer_type(std::string(s));
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return from_integers(parse_integer(text), 1);
  auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw Error(ErrorKind::Parse, "signed denominator in '" + std::string(text) + "'");
  return from_integers(parse_integer(text.substr(0, slash)), parse_integer(den_text));
}

Rational::integer_type Rational::numerator() const {
  return boost::multiprecision::numerator(v_);
}

Rational::integer_type Rational::denominator() const {
  return boost::multiprecision::denominator(v_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const {
  auto den = denominator();
  if (den == 1) return numerator().str();
  return numerator().str() + "/" + den.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace wclie
