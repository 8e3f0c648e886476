#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace recip {

// Values are part of the C ABI (see recip.h); append only.
enum class ErrorCode : int {
  Ok = 0,
  ZeroInput = 1,
  BadModulus = 2,
  BadPrime = 3,
  Unfactored = 4,
  NotTwoAdicSquare = 5,
  UndefinedSymbol = 6,
  NotQuadraticResidue = 7,
  Domain = 8,
  NotSolvable = 9,
  SearchExhausted = 10,
  NotInDomain = 11,
  NoAlpha2Case = 12,
  F1F2Mismatch = 13,
  NotInKernel = 14,
  UnknownLaw = 15,
  BadSolution = 16,
  BadArgument = 17,
  Internal = 18,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace recip
