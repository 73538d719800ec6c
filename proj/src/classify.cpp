#include "qhm/classify.hpp"

namespace qhm {

PicElement bimodule_of(const QhmSpec& s) {
  TorusPoint doubled(s.mu + s.mu, s.nu + s.nu);
  return PicElement(s.c, AffineAuto::translation(doubled));
}

KClass k_class(const QhmSpec& s) { return KClass{3, s.c}; }

Verdict iso_check(const QhmSpec& s1, const QhmSpec& s2,
                  std::uint64_t node_cap) {
  Verdict v;
  v.k1 = k_class(s1);
  v.k2 = k_class(s2);
  if (s1.c != s2.c) {
    v.kind = Verdict::Kind::NotIsomorphic;
    return v;
  }

  OrbitDecision orbit =
      same_orbit(TorusPoint(s1.mu, s1.nu), TorusPoint(s2.mu, s2.nu), node_cap);
  CpDecision cp = cp_equivalent(bimodule_of(s1), bimodule_of(s2), node_cap);

  if (cp.certificate) {
    v.kind = Verdict::Kind::Isomorphic;
    v.certificate = std::move(cp.certificate);
    if (orbit.same) v.orbit_witness = std::move(orbit.witness);
    return v;
  }
  v.kind = Verdict::Kind::Unknown;
  return v;
}

}  // namespace qhm
