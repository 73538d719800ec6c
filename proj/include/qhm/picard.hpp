#pragma once

#include <string>

#include "qhm/affine.hpp"

namespace qhm {

/// Normal form of a Picard class over C(T^2): an integer twist paired with
/// an affine automorphism factor. The pair (c, theta) stands for the class
/// of M^c tensored with A_theta; the decomposition is unique, and the group
/// law is the semidirect product twisted by the determinant character.
struct PicElement {
  BigInt twist{0};
  AffineAuto aut;

  PicElement() = default;
  PicElement(BigInt c, AffineAuto theta)
      : twist(std::move(c)), aut(std::move(theta)) {}

  friend bool operator==(const PicElement&, const PicElement&) = default;
};

PicElement pic_identity();

/// (c1, t1) * (c2, t2) = (c1 + det(t1) c2, t1 o t2).
PicElement pic_tensor(const PicElement& p, const PicElement& q);

/// Group inverse: (-det(t) c, t^{-1}).
PicElement pic_dual(const PicElement& p);

/// Conjugation by an automorphism: (det(a) c, a o t o a^{-1}).
PicElement pic_conjugate(const AffineAuto& alpha, const PicElement& p);

/// Canonical rendering "M^<c> (x) A[...]"; identity auto renders as "A[id]",
/// a zero shift is omitted. The output re-parses to the same element.
std::string render(const PicElement& p);
std::string render(const AffineAuto& aut);

}  // namespace qhm
