#include "qhm/orbit.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace qhm {

namespace {

BigInt lcm(const BigInt& a, const BigInt& b) {
  return a / boost::multiprecision::gcd(a, b) * b;
}

struct Generator {
  const char* label;
  UnimodularMatrix matrix;
};

const std::array<Generator, 5>& generators() {
  static const std::array<Generator, 5> gens = {
      Generator{"T", gen_T()},     Generator{"T^-1", gen_T_inv()},
      Generator{"U", gen_U()},     Generator{"U^-1", gen_U_inv()},
      Generator{"J", gen_J()}};
  return gens;
}

// Residue action of a generator: (a, b) -> (m00 a + m01 b, m10 a + m11 b)
// mod q, with matrix entries in {-1, 0, 1}.
std::uint64_t step(std::uint64_t state, const UnimodularMatrix& m,
                   std::uint64_t q) {
  std::int64_t a = static_cast<std::int64_t>(state / q);
  std::int64_t b = static_cast<std::int64_t>(state % q);
  auto ent = [](const BigInt& v) { return static_cast<std::int64_t>(v); };
  std::int64_t qi = static_cast<std::int64_t>(q);
  std::int64_t na = ((ent(m.a) * a + ent(m.b) * b) % qi + qi) % qi;
  std::int64_t nb = ((ent(m.c) * a + ent(m.d) * b) % qi + qi) % qi;
  return static_cast<std::uint64_t>(na) * q + static_cast<std::uint64_t>(nb);
}

std::uint64_t checked_q(const BigInt& q, std::uint64_t node_cap) {
  if (q * q > node_cap)
    throw DenominatorTooLarge("orbit state space " + (q * q).str() +
                              " exceeds node cap " +
                              std::to_string(node_cap));
  return static_cast<std::uint64_t>(q);
}

struct BfsResult {
  std::vector<std::uint64_t> visited;            // in visit order
  std::vector<std::int32_t> parent_gen;          // generator index, -1 at root
  std::vector<std::uint64_t> parent_state;
  std::vector<std::uint8_t> seen;
};

BfsResult bfs_from(std::uint64_t start, std::uint64_t q) {
  BfsResult r;
  r.parent_gen.assign(q * q, -1);
  r.parent_state.assign(q * q, 0);
  r.seen.assign(q * q, 0);
  r.seen[start] = 1;
  r.visited.push_back(start);
  for (std::size_t head = 0; head < r.visited.size(); ++head) {
    std::uint64_t s = r.visited[head];
    for (std::size_t gi = 0; gi < generators().size(); ++gi) {
      std::uint64_t t = step(s, generators()[gi].matrix, q);
      if (!r.seen[t]) {
        r.seen[t] = 1;
        r.parent_gen[t] = static_cast<std::int32_t>(gi);
        r.parent_state[t] = s;
        r.visited.push_back(t);
      }
    }
  }
  return r;
}

OrbitWitness witness_from_path(const BfsResult& bfs, std::uint64_t start,
                               std::uint64_t target) {
  std::vector<std::int32_t> rev;
  for (std::uint64_t s = target; s != start;) {
    std::int32_t gi = bfs.parent_gen[s];
    rev.push_back(gi);
    s = bfs.parent_state[s];
  }
  OrbitWitness w;
  w.sigma = UnimodularMatrix::identity();
  for (auto it = rev.rbegin(); it != rev.rend(); ++it) {
    const Generator& g = generators()[static_cast<std::size_t>(*it)];
    w.path.emplace_back(g.label);
    w.sigma = mul(g.matrix, w.sigma);  // next step acts on the left
  }
  return w;
}

BigInt residue_gcd(const ResiduePoint& r) {
  using boost::multiprecision::gcd;
  return gcd(gcd(r.a, r.b), r.q);
}

}  // namespace

ResiduePoint to_residue(const TorusPoint& p) {
  BigInt q = lcm(p.x.den(), p.y.den());
  return ResiduePoint{p.x.num() * (q / p.x.den()),
                      p.y.num() * (q / p.y.den()), q};
}

TorusPoint to_torus_point(const ResiduePoint& r) {
  return TorusPoint(Rational(r.a, r.q), Rational(r.b, r.q));
}

OrbitDecision same_orbit(const TorusPoint& p, const TorusPoint& p2,
                         std::uint64_t node_cap) {
  ResiduePoint r1 = to_residue(p);
  ResiduePoint r2 = to_residue(p2);
  std::uint64_t q = checked_q(r1.q, node_cap);

  OrbitDecision out;
  out.invariant_gcd = residue_gcd(r1);

  std::uint64_t start =
      static_cast<std::uint64_t>(r1.a) * q + static_cast<std::uint64_t>(r1.b);
  BfsResult bfs = bfs_from(start, q);
  out.orbit_size = bfs.visited.size();

  if (r1.q != r2.q) {
    out.reason = "point orders differ";
    return out;
  }
  if (out.invariant_gcd != residue_gcd(r2)) {
    out.reason = "orbit invariant differs";
    return out;
  }

  std::uint64_t target =
      static_cast<std::uint64_t>(r2.a) * q + static_cast<std::uint64_t>(r2.b);
  if (!bfs.seen[target]) {
    out.reason = "exhaustive search: orbits are disjoint";
    return out;
  }

  OrbitWitness w = witness_from_path(bfs, start, target);
  if (apply(AffineAuto(w.sigma, TorusPoint()), p) != p2)
    throw std::logic_error("orbit witness failed exact verification");
  out.same = true;
  out.witness = std::move(w);
  return out;
}

std::vector<ResiduePoint> enumerate_orbit(const TorusPoint& p,
                                          std::uint64_t node_cap) {
  ResiduePoint r = to_residue(p);
  std::uint64_t q = checked_q(r.q, node_cap);
  std::uint64_t start =
      static_cast<std::uint64_t>(r.a) * q + static_cast<std::uint64_t>(r.b);
  BfsResult bfs = bfs_from(start, q);
  std::vector<ResiduePoint> orbit;
  orbit.reserve(bfs.visited.size());
  for (std::uint64_t s : bfs.visited)
    orbit.push_back(ResiduePoint{BigInt(s / q), BigInt(s % q), BigInt(q)});
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>>
orbit_partition(std::uint64_t q, std::uint64_t node_cap) {
  checked_q(BigInt(q), node_cap);
  std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>> parts;
  std::vector<std::uint8_t> assigned(q * q, 0);
  for (std::uint64_t s0 = 0; s0 < q * q; ++s0) {
    if (assigned[s0]) continue;
    BfsResult bfs = bfs_from(s0, q);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> orbit;
    orbit.reserve(bfs.visited.size());
    for (std::uint64_t s : bfs.visited) {
      assigned[s] = 1;
      orbit.emplace_back(s / q, s % q);
    }
    std::sort(orbit.begin(), orbit.end());
    parts.push_back(std::move(orbit));
  }
  return parts;
}

}  // namespace qhm
