#pragma once

#include <optional>

#include "qhm/cp.hpp"
#include "qhm/orbit.hpp"

namespace qhm {

/// Parameters of a quantum Heisenberg manifold: a positive integer twist
/// and a torus point (mu, nu), canonical mod 1 (the family is periodic in
/// both parameters).
struct QhmSpec {
  BigInt c;
  Rational mu;
  Rational nu;

  QhmSpec(BigInt c_, const Rational& mu_, const Rational& nu_)
      : c(std::move(c_)), mu(mu_.mod_one()), nu(nu_.mod_one()) {
    if (c < 1) throw std::invalid_argument("twist parameter must be >= 1");
  }

  friend bool operator==(const QhmSpec&, const QhmSpec&) = default;
};

/// K_0 invariant: free rank 3 and torsion Z_c.
struct KClass {
  int free_rank = 3;
  BigInt torsion{1};

  friend bool operator==(const KClass&, const KClass&) = default;
};

struct Verdict {
  enum class Kind { Isomorphic, NotIsomorphic, Unknown };
  Kind kind = Kind::Unknown;
  std::optional<CpCertificate> certificate;   // present iff Isomorphic
  std::optional<OrbitWitness> orbit_witness;  // set when the orbit
                                              // hypothesis also holds
  KClass k1, k2;
};

/// The defining bimodule of the crossed product: twist c with the doubled
/// translation (2 mu, 2 nu) mod 1.
PicElement bimodule_of(const QhmSpec& s);

KClass k_class(const QhmSpec& s);

/// Classification: differing c is an obstruction (NotIsomorphic); a
/// replayable cp certificate between the defining bimodules gives
/// Isomorphic; otherwise Unknown. The positive criterion is sufficient
/// only, so Unknown never means non-isomorphic.
Verdict iso_check(const QhmSpec& s1, const QhmSpec& s2,
                  std::uint64_t node_cap = kDefaultNodeCap);

}  // namespace qhm
