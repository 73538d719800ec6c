#include "qhm/cp.hpp"

#include <stdexcept>

namespace qhm {

namespace {

BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

PicElement translation_state(const BigInt& twist, const TorusPoint& v) {
  return PicElement(twist, AffineAuto::translation(v));
}

CpCertificate build(const PicElement& start, const std::vector<CpMove>& moves) {
  CpCertificate cert;
  cert.start = start;
  PicElement state = start;
  for (const CpMove& m : moves) {
    state = apply_move(state, m);
    cert.steps.push_back(CpStep{m, state});
  }
  cert.end = state;
  return cert;
}

}  // namespace

PicElement apply_move(const PicElement& s, const CpMove& m) {
  switch (m.kind) {
    case CpMove::Kind::Dual:
      return pic_dual(s);
    case CpMove::Kind::Conj:
      return pic_conjugate(m.conj, s);
    case CpMove::Kind::TranslationFlip:
      if (!s.aut.is_translation())
        throw FlipOnNonTranslation(
            "translation flip applied to a state with non-identity linear "
            "part");
      return translation_state(s.twist, negate(s.aut.shift));
  }
  throw std::logic_error("unreachable move kind");
}

CpDecision cp_equivalent(const PicElement& s1, const PicElement& s2,
                         std::uint64_t node_cap) {
  if (s1 == s2)
    return {CpCertificate{s1, {}, s2}, ""};

  if (!s1.aut.is_translation() || !s2.aut.is_translation())
    return {std::nullopt, "undecided"};

  if (abs_big(s1.twist) != abs_big(s2.twist))
    return {std::nullopt, "twist magnitudes differ"};

  const TorusPoint v1 = s1.aut.shift;
  const TorusPoint v2 = s2.aut.shift;

  // Short chains first, in the documented shapes.
  if (v2 == negate(v1) && s2.twist == s1.twist)
    return {build(s1, {CpMove::flip()}), ""};
  if (v2 == v1 && s2.twist == -s1.twist)
    return {build(s1, {CpMove::dual(), CpMove::flip()}), ""};
  if (v2 == negate(v1) && s2.twist == -s1.twist)
    return {build(s1, {CpMove::dual()}), ""};

  // General chain: Conj(sigma), then Dual/Flip to fix signs.
  auto finish = [&](const OrbitWitness& w, bool negated_target) -> CpDecision {
    std::vector<CpMove> moves;
    moves.push_back(CpMove::conjugation(AffineAuto(w.sigma, TorusPoint())));
    PicElement state = apply_move(s1, moves.back());
    if (!negated_target) {
      if (state.twist != s2.twist) {
        moves.push_back(CpMove::dual());   // (-c, t_{-v2})
        moves.push_back(CpMove::flip());   // (-c, t_{v2}) = s2
      }
    } else {
      if (state.twist == s2.twist) {
        moves.push_back(CpMove::flip());   // (c, t_{v2}) = s2
      } else {
        moves.push_back(CpMove::dual());   // (c, t_{v2}) = s2
      }
    }
    CpCertificate cert = build(s1, moves);
    if (cert.end != s2 || !verify_certificate(cert))
      throw std::logic_error("constructed certificate failed replay");
    return {std::move(cert), ""};
  };

  OrbitDecision direct = same_orbit(v1, v2, node_cap);
  if (direct.same) return finish(*direct.witness, false);

  OrbitDecision negated = same_orbit(v1, negate(v2), node_cap);
  if (negated.same) return finish(*negated.witness, true);

  return {std::nullopt, "translation vectors lie in disjoint orbits"};
}

std::optional<std::size_t> first_invalid_step(const CpCertificate& cert) {
  PicElement state = cert.start;
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    try {
      state = apply_move(state, cert.steps[i].move);
    } catch (const FlipOnNonTranslation&) {
      return i;
    }
    if (state != cert.steps[i].state_after) return i;
  }
  if (state != cert.end) return cert.steps.size();
  return std::nullopt;
}

bool verify_certificate(const CpCertificate& cert) {
  return !first_invalid_step(cert).has_value();
}

}  // namespace qhm
