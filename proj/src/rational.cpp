#include "qhm/rational.hpp"

#include <cctype>

namespace qhm {

namespace {

BigInt floor_div(const BigInt& num, const BigInt& den) {
  // den > 0; cpp_int division truncates toward zero.
  BigInt q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

void skip_spaces(std::string_view s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

BigInt parse_integer(std::string_view s, std::size_t& i) {
  skip_spaces(s, i);
  std::size_t start = i;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  std::size_t digits_start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == digits_start)
    throw MalformedRational("expected integer in '" + std::string(s) + "'");
  return BigInt(std::string(s.substr(start, i - start)));
}

Rational parse_rational_at(std::string_view s, std::size_t& i) {
  BigInt num = parse_integer(s, i);
  skip_spaces(s, i);
  if (i < s.size() && s[i] == '/') {
    ++i;
    skip_spaces(s, i);
    std::size_t digits_start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits_start)
      throw MalformedRational("denominator must be a positive integer");
    BigInt den(std::string(s.substr(digits_start, i - digits_start)));
    if (den == 0) throw MalformedRational("zero denominator");
    return Rational(num, den);
  }
  return Rational(num, 1);
}

}  // namespace

Rational Rational::mod_one() const {
  BigInt f = floor_div(num(), den());
  return Rational(BigRat(v_ - f));
}

std::string Rational::str() const {
  std::string out = num().str();
  if (den() != 1) {
    out += '/';
    out += den().str();
  }
  return out;
}

Rational Rational::parse(std::string_view text) {
  std::size_t i = 0;
  Rational r = parse_rational_at(text, i);
  skip_spaces(text, i);
  if (i != text.size())
    throw MalformedRational("trailing characters in rational '" +
                            std::string(text) + "'");
  return r;
}

std::string TorusPoint::str() const {
  return "(" + x.str() + "," + y.str() + ")";
}

TorusPoint TorusPoint::parse(std::string_view text) {
  std::size_t i = 0;
  skip_spaces(text, i);
  if (i >= text.size() || text[i] != '(')
    throw MalformedRational("point must start with '('");
  ++i;
  Rational px = parse_rational_at(text, i);
  skip_spaces(text, i);
  if (i >= text.size() || text[i] != ',')
    throw MalformedRational("point coordinates must be comma separated");
  ++i;
  Rational py = parse_rational_at(text, i);
  skip_spaces(text, i);
  if (i >= text.size() || text[i] != ')')
    throw MalformedRational("point must end with ')'");
  ++i;
  skip_spaces(text, i);
  if (i != text.size())
    throw MalformedRational("trailing characters in point '" +
                            std::string(text) + "'");
  return TorusPoint(px, py);
}

TorusPoint negate(const TorusPoint& p) { return TorusPoint(-p.x, -p.y); }

TorusPoint add(const TorusPoint& p, const TorusPoint& q) {
  return TorusPoint(p.x + q.x, p.y + q.y);
}

}  // namespace qhm
