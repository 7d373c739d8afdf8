#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace permx {

enum class Errc {
  MalformedInput,
  NotABijection,
  EmptyPattern,
  EmptyOperand,
  NotPermutationMatrix,
  ArityMismatch,
  EmptyBlock,
  OutOfRange,
  ResourceLimit,
  ZeroRowWeight,
  PreconditionViolated,
  HypothesisUnverified,
  NotBlockable,
  DenominatorNonpositive,
  BadConstants,
  MissingTableEntry,
};

inline std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::MalformedInput: return "MalformedInput";
    case Errc::NotABijection: return "NotABijection";
    case Errc::EmptyPattern: return "EmptyPattern";
    case Errc::EmptyOperand: return "EmptyOperand";
    case Errc::NotPermutationMatrix: return "NotPermutationMatrix";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::EmptyBlock: return "EmptyBlock";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::ResourceLimit: return "ResourceLimit";
    case Errc::ZeroRowWeight: return "ZeroRowWeight";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::HypothesisUnverified: return "HypothesisUnverified";
    case Errc::NotBlockable: return "NotBlockable";
    case Errc::DenominatorNonpositive: return "DenominatorNonpositive";
    case Errc::BadConstants: return "BadConstants";
    case Errc::MissingTableEntry: return "MissingTableEntry";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace permx
