#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace profusion {

enum class Errc {
  NonBijection,
  EnumerationBoundExceeded,
  SubgroupNotContained,
  NotNormal,
  NotPGroup,
  NotPrime,
  ZeroPolynomial,
  DimensionMismatch,
  NonSplitField,
  NotInvariant,
  SupportOutsideCentralizer,
  NotNormalIn,
  NotSubgroup,
  NotPSubgroup,
  NotMaximalPair,
  NotStronglyClosed,
  LiftNotFound,
  BaseMismatch,
  SylowConditionViolated,
  PreconditionViolated,
  SeedIncompatible,
  NoCommonConjugator,
  DepthInsufficient,
  NotInterleavable,
  UnsupportedFamily,
  NotDihedralBase,
  SurjectivityFailure,
  ThinningFailed,
  GeneratorNotInJSquared,
  NotAChain,
  GeneratorsDoNotSpan,
  BadIndex,
  ParseError,
  InternalInvariant,
};

std::string_view errc_name(Errc code) noexcept;

/// Every module reports failures through this exception; `code()` identifies
/// the contract that was violated and `what()` carries the context.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Throws `Error(InternalInvariant)` when a computed object breaks an
/// invariant that the theory guarantees. These are never expected to fire.
inline void ensure(bool condition, const std::string& what) {
  if (!condition) throw Error(Errc::InternalInvariant, what);
}

}  // namespace profusion
