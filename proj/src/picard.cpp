#include "qhm/picard.hpp"

namespace qhm {

PicElement pic_identity() { return {}; }

PicElement pic_tensor(const PicElement& p, const PicElement& q) {
  return PicElement(p.twist + p.aut.det() * q.twist,
                    compose(p.aut, q.aut));
}

PicElement pic_dual(const PicElement& p) {
  return PicElement(-p.aut.det() * p.twist, invert(p.aut));
}

PicElement pic_conjugate(const AffineAuto& alpha, const PicElement& p) {
  return PicElement(alpha.det() * p.twist,
                    compose(compose(alpha, p.aut), invert(alpha)));
}

std::string render(const AffineAuto& aut) {
  if (aut.is_identity()) return "A[id]";
  const UnimodularMatrix& m = aut.linear;
  std::string rows = "[" + m.a.str() + "," + m.b.str() + "],[" + m.c.str() +
                     "," + m.d.str() + "]";
  if (aut.shift.is_zero()) return "A[" + rows + "]";
  return "A[" + rows + ";" + aut.shift.str() + "]";
}

std::string render(const PicElement& p) {
  return "M^" + p.twist.str() + " (x) " + render(p.aut);
}

}  // namespace qhm
