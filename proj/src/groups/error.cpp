#include "profusion/error.hpp"

namespace profusion {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NonBijection: return "NonBijection";
    case Errc::EnumerationBoundExceeded: return "EnumerationBoundExceeded";
    case Errc::SubgroupNotContained: return "SubgroupNotContained";
    case Errc::NotNormal: return "NotNormal";
    case Errc::NotPGroup: return "NotPGroup";
    case Errc::NotPrime: return "NotPrime";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NonSplitField: return "NonSplitField";
    case Errc::NotInvariant: return "NotInvariant";
    case Errc::SupportOutsideCentralizer: return "SupportOutsideCentralizer";
    case Errc::NotNormalIn: return "NotNormalIn";
    case Errc::NotSubgroup: return "NotSubgroup";
    case Errc::NotPSubgroup: return "NotPSubgroup";
    case Errc::NotMaximalPair: return "NotMaximalPair";
    case Errc::NotStronglyClosed: return "NotStronglyClosed";
    case Errc::LiftNotFound: return "LiftNotFound";
    case Errc::BaseMismatch: return "BaseMismatch";
    case Errc::SylowConditionViolated: return "SylowConditionViolated";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::SeedIncompatible: return "SeedIncompatible";
    case Errc::NoCommonConjugator: return "NoCommonConjugator";
    case Errc::DepthInsufficient: return "DepthInsufficient";
    case Errc::NotInterleavable: return "NotInterleavable";
    case Errc::UnsupportedFamily: return "UnsupportedFamily";
    case Errc::NotDihedralBase: return "NotDihedralBase";
    case Errc::SurjectivityFailure: return "SurjectivityFailure";
    case Errc::ThinningFailed: return "ThinningFailed";
    case Errc::GeneratorNotInJSquared: return "GeneratorNotInJSquared";
    case Errc::NotAChain: return "NotAChain";
    case Errc::GeneratorsDoNotSpan: return "GeneratorsDoNotSpan";
    case Errc::BadIndex: return "BadIndex";
    case Errc::ParseError: return "ParseError";
    case Errc::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

}  // namespace profusion
