#include "qhm/affine.hpp"

#include <cctype>

namespace qhm {

UnimodularMatrix::UnimodularMatrix(BigInt a_, BigInt b_, BigInt c_, BigInt d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
  BigInt det = a * d - b * c;
  if (det != 1 && det != -1)
    throw NonUnimodular("matrix determinant " + det.str() +
                        " is not +1 or -1");
}

std::string UnimodularMatrix::str() const {
  return "[[" + a.str() + "," + b.str() + "],[" + c.str() + "," + d.str() +
         "]]";
}

namespace {

void skip_spaces(std::string_view s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

void expect(std::string_view s, std::size_t& i, char ch) {
  skip_spaces(s, i);
  if (i >= s.size() || s[i] != ch)
    throw MalformedRational(std::string("expected '") + ch + "' in matrix '" +
                            std::string(s) + "'");
  ++i;
}

BigInt parse_int(std::string_view s, std::size_t& i) {
  skip_spaces(s, i);
  std::size_t start = i;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  std::size_t digits = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == digits)
    throw MalformedRational("expected integer in matrix '" + std::string(s) +
                            "'");
  return BigInt(std::string(s.substr(start, i - start)));
}

}  // namespace

UnimodularMatrix UnimodularMatrix::parse(std::string_view text) {
  std::size_t i = 0;
  expect(text, i, '[');
  expect(text, i, '[');
  BigInt a = parse_int(text, i);
  expect(text, i, ',');
  BigInt b = parse_int(text, i);
  expect(text, i, ']');
  expect(text, i, ',');
  expect(text, i, '[');
  BigInt c = parse_int(text, i);
  expect(text, i, ',');
  BigInt d = parse_int(text, i);
  expect(text, i, ']');
  expect(text, i, ']');
  skip_spaces(text, i);
  if (i != text.size())
    throw MalformedRational("trailing characters in matrix '" +
                            std::string(text) + "'");
  return UnimodularMatrix(a, b, c, d);
}

UnimodularMatrix mul(const UnimodularMatrix& m, const UnimodularMatrix& n) {
  return UnimodularMatrix(m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                          m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d);
}

UnimodularMatrix inverse(const UnimodularMatrix& m) {
  BigInt det = m.det();  // +1 or -1, so inverse = adjugate / det = det * adj
  return UnimodularMatrix(det * m.d, det * -m.b, det * -m.c, det * m.a);
}

UnimodularMatrix gen_T() { return UnimodularMatrix(1, 1, 0, 1); }
UnimodularMatrix gen_T_inv() { return UnimodularMatrix(1, -1, 0, 1); }
UnimodularMatrix gen_U() { return UnimodularMatrix(1, 0, 1, 1); }
UnimodularMatrix gen_U_inv() { return UnimodularMatrix(1, 0, -1, 1); }
UnimodularMatrix gen_J() { return UnimodularMatrix(1, 0, 0, -1); }

AffineAuto compose(const AffineAuto& g, const AffineAuto& h) {
  // (g o h)(p) = A_g (A_h p + v_h) + v_g = (A_g A_h) p + (A_g v_h + v_g)
  return AffineAuto(mul(g.linear, h.linear),
                    add(apply(g.linear, h.shift), g.shift));
}

AffineAuto invert(const AffineAuto& h) {
  UnimodularMatrix inv = inverse(h.linear);
  return AffineAuto(inv, negate(apply(inv, h.shift)));
}

TorusPoint apply(const UnimodularMatrix& m, const TorusPoint& p) {
  Rational nx = m.a * p.x + m.b * p.y;
  Rational ny = m.c * p.x + m.d * p.y;
  return TorusPoint(nx, ny);
}

TorusPoint apply(const AffineAuto& h, const TorusPoint& p) {
  TorusPoint lin = apply(h.linear, p);
  return add(lin, h.shift);
}

}  // namespace qhm
