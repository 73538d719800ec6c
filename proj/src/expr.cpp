#include "qhm/expr.hpp"

#include <cctype>
#include <string>

namespace qhm {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  ExprPtr run() {
    ExprPtr e = parse_expr();
    skip_ws();
    if (pos_ != src_.size()) fail("end of input or '(x)'");
    return e;
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& expected) {
    throw SyntaxError(pos_, expected);
  }

  void skip_ws() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }

  bool peek_lit(std::string_view lit) {
    skip_ws();
    return src_.substr(pos_, lit.size()) == lit;
  }

  bool eat_lit(std::string_view lit) {
    if (!peek_lit(lit)) return false;
    pos_ += lit.size();
    return true;
  }

  void expect_lit(std::string_view lit) {
    if (!eat_lit(lit)) fail("'" + std::string(lit) + "'");
  }

  BigInt parse_int() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < src_.size() && (src_[pos_] == '-' || src_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < src_.size() &&
           std::isdigit(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("integer");
    }
    return BigInt(std::string(src_.substr(start, pos_ - start)));
  }

  Rational parse_rational() {
    BigInt num = parse_int();
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == '/') {
      ++pos_;
      skip_ws();
      std::size_t digits = pos_;
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_])))
        ++pos_;
      if (pos_ == digits) fail("positive denominator");
      BigInt den(std::string(src_.substr(digits, pos_ - digits)));
      if (den == 0) throw MalformedRational("zero denominator");
      return Rational(num, den);
    }
    return Rational(num, 1);
  }

  TorusPoint parse_point() {
    expect_lit("(");
    Rational x = parse_rational();
    expect_lit(",");
    Rational y = parse_rational();
    expect_lit(")");
    return TorusPoint(x, y);
  }

  // row "," row, without the enclosing matrix brackets
  UnimodularMatrix parse_rows() {
    expect_lit("[");
    BigInt a = parse_int();
    expect_lit(",");
    BigInt b = parse_int();
    expect_lit("]");
    expect_lit(",");
    expect_lit("[");
    BigInt c = parse_int();
    expect_lit(",");
    BigInt d = parse_int();
    expect_lit("]");
    return UnimodularMatrix(a, b, c, d);
  }

  // payload of A[...]: "id" or rows, each optionally followed by ";" point
  AffineAuto parse_auto_payload() {
    UnimodularMatrix m;
    if (!eat_lit("id")) m = parse_rows();
    TorusPoint shift;
    if (eat_lit(";")) shift = parse_point();
    return AffineAuto(m, shift);
  }

  ExprPtr parse_term() {
    skip_ws();
    if (pos_ >= src_.size()) fail("'M^', 'A[', '~', 'conj(' or '('");
    if (eat_lit("M^")) {
      BigInt c = parse_int();
      return std::make_shared<ExprNode>(ExprNode{LineBundle{std::move(c)}});
    }
    if (eat_lit("A[")) {
      AffineAuto aut = parse_auto_payload();
      expect_lit("]");
      return std::make_shared<ExprNode>(ExprNode{AutoBimodule{std::move(aut)}});
    }
    if (eat_lit("~")) {
      ExprPtr child = parse_term();
      return std::make_shared<ExprNode>(ExprNode{DualExpr{std::move(child)}});
    }
    if (eat_lit("conj(")) {
      UnimodularMatrix m;
      if (!eat_lit("id")) {
        expect_lit("[");
        m = parse_rows();
        expect_lit("]");
      }
      TorusPoint shift;
      if (eat_lit(";")) shift = parse_point();
      expect_lit(",");
      ExprPtr child = parse_expr();
      expect_lit(")");
      return std::make_shared<ExprNode>(ExprNode{
          ConjExpr{AffineAuto(std::move(m), std::move(shift)),
                   std::move(child)}});
    }
    if (eat_lit("(")) {
      ExprPtr inner = parse_expr();
      expect_lit(")");
      return inner;
    }
    fail("'M^', 'A[', '~', 'conj(' or '('");
  }

  ExprPtr parse_expr() {
    ExprPtr left = parse_term();
    while (eat_lit("(x)")) {
      ExprPtr right = parse_term();
      left = std::make_shared<ExprNode>(
          ExprNode{TensorExpr{std::move(left), std::move(right)}});
    }
    return left;
  }
};

}  // namespace

ExprPtr parse(std::string_view text) { return Parser(text).run(); }

PicElement normalize(const ExprNode& e) {
  return std::visit(
      [](const auto& n) -> PicElement {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, LineBundle>) {
          return PicElement(n.twist, AffineAuto::identity());
        } else if constexpr (std::is_same_v<T, AutoBimodule>) {
          return PicElement(0, n.aut);
        } else if constexpr (std::is_same_v<T, DualExpr>) {
          return pic_dual(normalize(*n.child));
        } else if constexpr (std::is_same_v<T, ConjExpr>) {
          return pic_conjugate(n.aut, normalize(*n.child));
        } else {
          return pic_tensor(normalize(*n.left), normalize(*n.right));
        }
      },
      e.node);
}

PicElement normalize(const ExprPtr& e) { return normalize(*e); }

PicElement normalize(std::string_view text) { return normalize(parse(text)); }

}  // namespace qhm
