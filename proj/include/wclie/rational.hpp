#ifndef WCLIE_RATIONAL_HPP
#define WCLIE_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace wclie {

// Exact rational number. GMP keeps the value canonical: denominator > 0,
// gcd(num, den) = 1, zero is 0/1.
class Rational {
 public:
  using value_type =
      boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                    boost::multiprecision::et_off>;
  using integer_type =
      boost::multiprecision::number<boost::multiprecision::gmp_int,
                                    boost::multiprecision::et_off>;

  Rational() = default;
  Rational(int v) : v_(v) {}  // NOLINT: implicit from small integers is intended
  Rational(std::int64_t v) : v_(v) {}  // NOLINT
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(value_type v) : v_(std::move(v)) {}

  static Rational from_integers(const integer_type& num, const integer_type& den);

  // Accepts "p" or "p/q" with optional leading sign. Throws Error(Parse).
  static Rational parse(std::string_view text);

  integer_type numerator() const;
  integer_type denominator() const;

  bool is_zero() const { return v_.is_zero(); }
  bool is_one() const { return v_ == 1; }
  int sign() const { return v_.sign(); }

  // "p/q", or "p" when q = 1.
  std::string str() const;

  const value_type& raw() const { return v_; }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
  friend Rational operator-(const Rational& a) { return Rational(value_type(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  value_type v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace wclie

#endif
