#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace schemelab {

enum class Errc {
  EmptyPrefix,
  ViolatesA,
  ViolatesB,
  ViolatesC,
  ViolatesD,
  CellMismatch,
  NotIncreasing,
  NotAMember,
  OutOfDomain,
  NotDeltaSystem,
  EqualArguments,
  NotTwoScheme,
  TooFewIndices,
  NotNormal,
  InvalidSeparating,
  OutOfUniverse,
  IncompleteFilter,
  WrongPosetKind,
  ParseError,
};

std::string_view errc_name(Errc code) noexcept;

// Every recoverable failure in the library surfaces as this exception; the
// code identifies the contract that was broken.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace schemelab
