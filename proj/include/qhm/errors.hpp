#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qhm {

/// Base class for every error thrown by the engine.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- exact algebra -----------------------------------------------------

struct MalformedRational : Error {
  using Error::Error;
};

struct NonUnimodular : Error {
  using Error::Error;
};

// --- expression parser -------------------------------------------------

struct SyntaxError : Error {
  std::size_t position;
  std::string expected;

  SyntaxError(std::size_t pos, std::string expected_tokens)
      : Error("syntax error at position " + std::to_string(pos) +
              ", expected " + expected_tokens),
        position(pos),
        expected(std::move(expected_tokens)) {}
};

// --- orbit engine ------------------------------------------------------

struct DenominatorTooLarge : Error {
  using Error::Error;
};

// --- crossed-product calculus -------------------------------------------

struct FlipOnNonTranslation : Error {
  using Error::Error;
};

// --- numerical lab -----------------------------------------------------

struct TwistMismatch : Error {
  using Error::Error;
};

struct GridMismatch : Error {
  using Error::Error;
};

struct MisalignedShift : Error {
  using Error::Error;
};

struct SingularFiber : Error {
  using Error::Error;
};

struct VanishingSample : Error {
  using Error::Error;
};

struct AliasedPhase : Error {
  using Error::Error;
};

struct RankDeficientSite : Error {
  using Error::Error;
};

struct PlaquettePhaseOverflow : Error {
  using Error::Error;
};

struct GridIncompatibleAuto : Error {
  using Error::Error;
};

struct NotLeftIsometric : Error {
  using Error::Error;
};

struct DegenerateProbes : Error {
  using Error::Error;
};

}  // namespace qhm
