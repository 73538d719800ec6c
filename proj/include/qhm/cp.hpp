#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qhm/orbit.hpp"
#include "qhm/picard.hpp"

namespace qhm {

/// One rewriting move that preserves the isomorphism class of the crossed
/// product C(T^2) x_s Z.
struct CpMove {
  enum class Kind { Dual, Conj, TranslationFlip };
  Kind kind = Kind::Dual;
  AffineAuto conj;  // meaningful only for Kind::Conj

  static CpMove dual() { return {Kind::Dual, AffineAuto::identity()}; }
  static CpMove flip() { return {Kind::TranslationFlip, AffineAuto::identity()}; }
  static CpMove conjugation(AffineAuto alpha) {
    return {Kind::Conj, std::move(alpha)};
  }

  friend bool operator==(const CpMove&, const CpMove&) = default;
};

struct CpStep {
  CpMove move;
  PicElement state_after;

  friend bool operator==(const CpStep&, const CpStep&) = default;
};

/// Replayable equivalence chain; stores every intermediate state so that
/// verification needs no search.
struct CpCertificate {
  PicElement start;
  std::vector<CpStep> steps;
  PicElement end;

  friend bool operator==(const CpCertificate&, const CpCertificate&) = default;
};

/// Dual acts as the Picard inverse, Conj as Picard conjugation, and the
/// translation flip sends (c, t_v) to (c, t_{-v}). The flip is only valid
/// on states whose automorphism is a pure translation; anything else
/// throws FlipOnNonTranslation.
PicElement apply_move(const PicElement& s, const CpMove& m);

struct CpDecision {
  std::optional<CpCertificate> certificate;
  std::string reason;  // set when no certificate is produced
};

/// Decides crossed-product equivalence on the translation fragment: both
/// states must have identity linear part (reason "undecided" otherwise).
/// A certificate exists iff the twist magnitudes agree and the translation
/// vectors lie in the same GL2(Z) orbit (the negated target is searched
/// too). Every certificate returned replays successfully.
CpDecision cp_equivalent(const PicElement& s1, const PicElement& s2,
                         std::uint64_t node_cap = kDefaultNodeCap);

bool verify_certificate(const CpCertificate& cert);

/// Replay with diagnostics: returns the index of the first mismatching
/// step, steps.size() for an end-state mismatch, or nullopt when valid.
std::optional<std::size_t> first_invalid_step(const CpCertificate& cert);

}  // namespace qhm
