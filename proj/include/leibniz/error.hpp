#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace leibniz {

enum class ErrorCode {
  NotAnIdeal,
  NotLeibniz,
  ActionInvalid,
  NotLieAction,
  NotLieXMod,
  NotLieBraiding,
  InvalidBraidedXMod,
  InvalidBraidedCat,
  NotLieCatBraiding,
  InvalidCatAlgebra,
  InvalidLieObject,
  InvalidXMod,
  InvalidXLieLM,
  InvalidTriple,
  InvalidCatLieObjectLM,
  InvalidCatLMBraiding,
  BracketNotWellDefined,
  ActionNotDescending,
  ParseError,
  UnresolvedReference,
  DimensionMismatch,
  UnknownCommand,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace leibniz
