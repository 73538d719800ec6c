#pragma once

#include <string>
#include <string_view>

#include "qhm/rational.hpp"

namespace qhm {

/// Integer 2x2 matrix with determinant +1 or -1.
struct UnimodularMatrix {
  BigInt a{1}, b{0}, c{0}, d{1};

  UnimodularMatrix() = default;
  UnimodularMatrix(BigInt a_, BigInt b_, BigInt c_, BigInt d_);

  BigInt det() const { return a * d - b * c; }

  static UnimodularMatrix identity() { return {}; }

  /// Text format "[[a,b],[c,d]]".
  std::string str() const;
  static UnimodularMatrix parse(std::string_view text);

  friend bool operator==(const UnimodularMatrix&,
                         const UnimodularMatrix&) = default;
};

UnimodularMatrix mul(const UnimodularMatrix& m, const UnimodularMatrix& n);
UnimodularMatrix inverse(const UnimodularMatrix& m);

// Generators of GL2(Z) used throughout the orbit machinery.
UnimodularMatrix gen_T();      // [[1,1],[0,1]]
UnimodularMatrix gen_T_inv();  // [[1,-1],[0,1]]
UnimodularMatrix gen_U();      // [[1,0],[1,1]]
UnimodularMatrix gen_U_inv();  // [[1,0],[-1,1]]
UnimodularMatrix gen_J();      // [[1,0],[0,-1]]

/// Affine automorphism of T^2: the point map p -> Ap + v (mod 1).
///
/// The associated algebra automorphism is f -> f o h^{-1}, which makes
/// h -> alpha_h a covariant group homomorphism; all group laws below are
/// stated on point maps.
struct AffineAuto {
  UnimodularMatrix linear;
  TorusPoint shift;

  AffineAuto() = default;
  AffineAuto(UnimodularMatrix m, TorusPoint v)
      : linear(std::move(m)), shift(std::move(v)) {}

  static AffineAuto identity() { return {}; }
  static AffineAuto translation(const TorusPoint& v) {
    return {UnimodularMatrix::identity(), v};
  }

  bool is_identity() const {
    return linear == UnimodularMatrix::identity() && shift.is_zero();
  }
  bool is_translation() const {
    return linear == UnimodularMatrix::identity();
  }

  BigInt det() const { return linear.det(); }

  friend bool operator==(const AffineAuto&, const AffineAuto&) = default;
};

/// Group law: (compose(g,h))(p) = g(h(p)).
AffineAuto compose(const AffineAuto& g, const AffineAuto& h);
AffineAuto invert(const AffineAuto& h);
TorusPoint apply(const AffineAuto& h, const TorusPoint& p);

/// Exact action of the linear part alone, q -> Mq mod 1.
TorusPoint apply(const UnimodularMatrix& m, const TorusPoint& p);

}  // namespace qhm
