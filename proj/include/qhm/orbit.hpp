#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qhm/affine.hpp"

namespace qhm {

/// Rational torus point written over a common denominator: (a/q, b/q).
struct ResiduePoint {
  BigInt a{0};
  BigInt b{0};
  BigInt q{1};

  friend bool operator==(const ResiduePoint&, const ResiduePoint&) = default;
  friend std::strong_ordering operator<=>(const ResiduePoint&,
                                          const ResiduePoint&) = default;
};

ResiduePoint to_residue(const TorusPoint& p);
TorusPoint to_torus_point(const ResiduePoint& r);

/// Exact witness for orbit membership: sigma maps the source point to the
/// target point mod 1, and equals the ordered product of the labelled
/// generators (last applied leftmost).
struct OrbitWitness {
  UnimodularMatrix sigma;
  std::vector<std::string> path;  // labels among T, T^-1, U, U^-1, J
};

struct OrbitDecision {
  bool same = false;
  std::optional<OrbitWitness> witness;
  std::string reason;      // set when same == false
  std::uint64_t orbit_size = 0;  // size of the orbit of the first point
  BigInt invariant_gcd{1};       // gcd(a, b, q) of the first point
};

inline constexpr std::uint64_t kDefaultNodeCap = 4'000'000;

/// Decides whether p and p2 lie in the same GL2(Z) orbit of the torus,
/// acting linearly mod 1. BFS over (Z/q)^2 with the generator order
/// T, T^-1, U, U^-1, J is authoritative; gcd(a,b,q) is only a fast reject.
/// Throws DenominatorTooLarge when q^2 exceeds node_cap.
OrbitDecision same_orbit(const TorusPoint& p, const TorusPoint& p2,
                         std::uint64_t node_cap = kDefaultNodeCap);

/// Full BFS closure of the orbit of p, sorted.
std::vector<ResiduePoint> enumerate_orbit(
    const TorusPoint& p, std::uint64_t node_cap = kDefaultNodeCap);

/// Partition of all of (Z/q)^2 into orbits; deterministic order (each orbit
/// listed from its smallest representative, orbits by first point found).
std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>>
orbit_partition(std::uint64_t q, std::uint64_t node_cap = kDefaultNodeCap);

}  // namespace qhm
