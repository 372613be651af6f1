#ifndef MODALWB_RATIONAL_HPP_
#define MODALWB_RATIONAL_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace modalwb {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p/q", "p", optional leading '-'. Throws Error on malformed text or q = 0.
Rational parse_rational(std::string_view text);

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

Integer floor(const Rational& q);

// A real number (a + b*sqrt(d)) / c with integers a, b, c, d; c > 0, d >= 0.
// Rationals are the case b = 0 (stored with d = 0). Numbers built from different
// radicands cannot be combined; mixing is rejected.
class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(const Rational& q);  // NOLINT(google-explicit-constructor)
  QuadraticNumber(const Integer& n) : QuadraticNumber(Rational(n)) {}  // NOLINT
  QuadraticNumber(Integer a, Integer b, Integer c, Integer d);

  static QuadraticNumber sqrt(const Integer& d) { return {0, 1, 1, d}; }

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }
  const Integer& d() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  std::optional<Rational> as_rational() const;

  int sign() const;
  Integer floor() const;
  QuadraticNumber reciprocal() const;
  double approx() const;

  QuadraticNumber operator-() const;
  friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y);
  friend QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) {
    return x + (-y);
  }

  friend std::strong_ordering operator<=>(const QuadraticNumber& x, const QuadraticNumber& y);
  friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
    return (x <=> y) == std::strong_ordering::equal;
  }

  // "p/q" for rationals, otherwise "(a+b*sqrt(d))/c".
  std::string to_string() const;

 private:
  void normalize();

  Integer a_ = 0;
  Integer b_ = 0;
  Integer c_ = 1;
  Integer d_ = 0;
};

// The rational of least denominator in the open interval (lo, hi); hi = nullopt
// means +infinity. Among rationals in an interval this one is also the unique
// element of least depth in the Stern-Brocot tree. Requires lo < hi.
Rational simplest_between(const QuadraticNumber& lo, const std::optional<QuadraticNumber>& hi);

}  // namespace modalwb

#endif  // MODALWB_RATIONAL_HPP_
