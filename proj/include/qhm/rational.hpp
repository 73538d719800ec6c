#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <string>
#include <string_view>

#include "qhm/errors.hpp"

namespace qhm {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Exact rational with gcd-reduced numerator and positive denominator.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw MalformedRational("zero denominator");
    v_ = BigRat(num, den);
  }
  Rational(long long n) : v_(n) {}          // NOLINT: implicit by design
  explicit Rational(BigRat v) : v_(std::move(v)) {}

  BigInt num() const { return boost::multiprecision::numerator(v_); }
  BigInt den() const { return boost::multiprecision::denominator(v_); }
  const BigRat& value() const { return v_; }

  /// Canonical representative in [0, 1).
  Rational mod_one() const;

  bool is_integer() const { return den() == 1; }

  /// Text format "p/q", with "/q" omitted when q == 1.
  std::string str() const;

  /// Parses "p" or "p/q" with q > 0. Throws MalformedRational.
  static Rational parse(std::string_view text);

  Rational operator-() const { return Rational(BigRat(-v_)); }
  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(BigRat(a.v_ + b.v_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(BigRat(a.v_ - b.v_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(BigRat(a.v_ * b.v_));
  }
  friend Rational operator*(const BigInt& a, const Rational& b) {
    return Rational(BigRat(a * b.v_));
  }
  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  double to_double() const { return static_cast<double>(v_); }

 private:
  BigRat v_;
};

/// Point of the 2-torus with both coordinates canonical in [0, 1).
struct TorusPoint {
  Rational x;
  Rational y;

  TorusPoint() = default;
  TorusPoint(const Rational& px, const Rational& py)
      : x(px.mod_one()), y(py.mod_one()) {}

  bool is_zero() const { return x == Rational() && y == Rational(); }

  /// Text format "(p/q,r/s)".
  std::string str() const;

  /// Parses "(x,y)" with rational coordinates; reduces mod 1.
  static TorusPoint parse(std::string_view text);

  friend bool operator==(const TorusPoint&, const TorusPoint&) = default;
  friend std::strong_ordering operator<=>(const TorusPoint&,
                                          const TorusPoint&) = default;
};

TorusPoint negate(const TorusPoint& p);
TorusPoint add(const TorusPoint& p, const TorusPoint& q);

}  // namespace qhm
