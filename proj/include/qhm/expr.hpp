#pragma once

#include <memory>
#include <string_view>
#include <variant>

#include "qhm/picard.hpp"

namespace qhm {

/// Symbolic bimodule expression tree.
///
/// Grammar (whitespace-insensitive):
///   expr   := term ("(x)" term)*
///   term   := "M^" int
///           | "A[" auto "]"
///           | "~" term
///           | "conj(" matrix (";" point)? "," expr ")"
///           | "(" expr ")"
///   auto   := "id" (";" point)? | row "," row (";" point)?
///   matrix := "[" row "," row "]"        row := "[" int "," int "]"
///   point  := "(" rational "," rational ")"
struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct LineBundle {
  BigInt twist;
};
struct AutoBimodule {
  AffineAuto aut;
};
struct DualExpr {
  ExprPtr child;
};
struct ConjExpr {
  AffineAuto aut;
  ExprPtr child;
};
struct TensorExpr {
  ExprPtr left;
  ExprPtr right;
};

struct ExprNode {
  std::variant<LineBundle, AutoBimodule, DualExpr, ConjExpr, TensorExpr> node;
};

/// Parses an expression. Throws SyntaxError (with position and expected
/// tokens), NonUnimodular, or MalformedRational; never crashes.
ExprPtr parse(std::string_view text);

/// Folds the tree into the unique Picard normal form.
PicElement normalize(const ExprNode& e);
PicElement normalize(const ExprPtr& e);

/// Convenience: parse then normalize.
PicElement normalize(std::string_view text);

}  // namespace qhm
