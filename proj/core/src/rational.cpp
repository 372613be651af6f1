#include "modalwb/rational.hpp"

#include <cctype>
#include <cmath>

#include "modalwb/error.hpp"

namespace modalwb {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

Integer isqrt(const Integer& n) { return boost::multiprecision::sqrt(n); }

Integer gcd(const Integer& x, const Integer& y) { return boost::multiprecision::gcd(x, y); }

// Floor division for integers, rounding toward negative infinity.
Integer floor_div(const Integer& num, const Integer& den) {
  Integer q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
  }
  Integer n{std::string(num)};
  Integer d{std::string(den)};
  if (d == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) {
  const Integer& n = boost::multiprecision::numerator(q);
  const Integer& d = boost::multiprecision::denominator(q);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

Integer floor(const Rational& q) {
  return floor_div(boost::multiprecision::numerator(q), boost::multiprecision::denominator(q));
}

QuadraticNumber::QuadraticNumber(const Rational& q)
    : a_(boost::multiprecision::numerator(q)), c_(boost::multiprecision::denominator(q)) {}

QuadraticNumber::QuadraticNumber(Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (c_ == 0) throw Error(ErrorKind::DegenerateParameter, "quadratic number with zero denominator");
  if (d_ < 0) throw Error(ErrorKind::Unsupported, "negative radicand");
  normalize();
}

void QuadraticNumber::normalize() {
  if (b_ != 0 && d_ != 0) {
    Integer s = isqrt(d_);
    if (s * s == d_) {
      a_ += b_ * s;
      b_ = 0;
    }
  }
  if (b_ == 0 || d_ == 0) {
    b_ = 0;
    d_ = 0;
  }
  if (c_ < 0) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
  }
  Integer g = gcd(gcd(a_, b_), c_);
  if (g > 1) {
    a_ /= g;
    b_ /= g;
    c_ /= g;
  }
}

std::optional<Rational> QuadraticNumber::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return Rational(a_, c_);
}

int QuadraticNumber::sign() const {
  int sa = a_.sign();
  int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with b^2 d.
  Integer lhs = a_ * a_;
  Integer rhs = b_ * b_ * d_;
  if (lhs > rhs) return sa;
  if (lhs < rhs) return sb;
  return 0;
}

QuadraticNumber QuadraticNumber::operator-() const {
  QuadraticNumber r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
  if (!x.is_rational() && !y.is_rational() && x.d_ != y.d_) {
    throw Error(ErrorKind::Unsupported, "quadratic numbers over different radicands");
  }
  Integer d = x.is_rational() ? y.d_ : x.d_;
  return QuadraticNumber(x.a_ * y.c_ + y.a_ * x.c_, x.b_ * y.c_ + y.b_ * x.c_, x.c_ * y.c_, d);
}

std::strong_ordering operator<=>(const QuadraticNumber& x, const QuadraticNumber& y) {
  int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

QuadraticNumber QuadraticNumber::reciprocal() const {
  if (sign() == 0) throw Error(ErrorKind::DegenerateParameter, "reciprocal of zero");
  if (is_rational()) return QuadraticNumber(Rational(c_, a_));
  // c / (a + b sqrt d) = c (a - b sqrt d) / (a^2 - b^2 d)
  Integer den = a_ * a_ - b_ * b_ * d_;
  return QuadraticNumber(c_ * a_, -(c_ * b_), den, d_);
}

double QuadraticNumber::approx() const {
  double a = static_cast<double>(a_);
  double b = static_cast<double>(b_);
  double c = static_cast<double>(c_);
  double d = static_cast<double>(d_);
  return (a + b * std::sqrt(d)) / c;
}

Integer QuadraticNumber::floor() const {
  if (is_rational()) return floor_div(a_, c_);
  Integer guess(static_cast<long long>(std::floor(approx())));
  while (*this < QuadraticNumber(guess)) --guess;
  while (*this >= QuadraticNumber(Integer(guess + 1))) ++guess;
  return guess;
}

std::string QuadraticNumber::to_string() const {
  if (is_rational()) return modalwb::to_string(Rational(a_, c_));
  std::string s = "(" + a_.str();
  s += b_ < 0 ? "-" : "+";
  Integer mag = b_ < 0 ? Integer(-b_) : b_;
  if (mag != 1) s += mag.str() + "*";
  s += "sqrt(" + d_.str() + "))";
  if (c_ != 1) s += "/" + c_.str();
  return s;
}

Rational simplest_between(const QuadraticNumber& lo, const std::optional<QuadraticNumber>& hi) {
  if (hi && !(lo < *hi)) throw Error(ErrorKind::DegenerateParameter, "empty open interval");
  Integer fl = lo.floor();
  Integer next = fl + 1;
  if (!hi || QuadraticNumber(next) < *hi) return Rational(next);
  // lo and hi sit in [fl, fl + 1]; recurse on the reciprocals of the fractional parts.
  QuadraticNumber lo_frac = lo - QuadraticNumber(fl);
  QuadraticNumber hi_frac = *hi - QuadraticNumber(fl);
  std::optional<QuadraticNumber> upper;
  if (lo_frac.sign() != 0) upper = lo_frac.reciprocal();
  Rational inner = simplest_between(hi_frac.reciprocal(), upper);
  return Rational(fl) + 1 / inner;
}

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CarrierMismatch: return "carrier-mismatch";
    case ErrorKind::AtomlessCarrier: return "atomless-carrier";
    case ErrorKind::MalformedInterval: return "malformed-interval";
    case ErrorKind::EmptyElement: return "empty-element";
    case ErrorKind::DegenerateParameter: return "degenerate-parameter";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::PreconditionFailed: return "precondition-failed";
    case ErrorKind::ContractViolation: return "contract-violation";
    case ErrorKind::CapExceeded: return "cap-exceeded";
    case ErrorKind::Parse: return "parse-error";
    case ErrorKind::Name: return "name-error";
    case ErrorKind::Internal: return "internal-error";
  }
  return "unknown";
}

}  // namespace modalwb
