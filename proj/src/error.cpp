#include "leibniz/error.hpp"

namespace leibniz {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::NotLeibniz: return "NotLeibniz";
    case ErrorCode::ActionInvalid: return "ActionInvalid";
    case ErrorCode::NotLieAction: return "NotLieAction";
    case ErrorCode::NotLieXMod: return "NotLieXMod";
    case ErrorCode::NotLieBraiding: return "NotLieBraiding";
    case ErrorCode::InvalidBraidedXMod: return "InvalidBraidedXMod";
    case ErrorCode::InvalidBraidedCat: return "InvalidBraidedCat";
    case ErrorCode::NotLieCatBraiding: return "NotLieCatBraiding";
    case ErrorCode::InvalidCatAlgebra: return "InvalidCatAlgebra";
    case ErrorCode::InvalidLieObject: return "InvalidLieObject";
    case ErrorCode::InvalidXMod: return "InvalidXMod";
    case ErrorCode::InvalidXLieLM: return "InvalidXLieLM";
    case ErrorCode::InvalidTriple: return "InvalidTriple";
    case ErrorCode::InvalidCatLieObjectLM: return "InvalidCatLieObjectLM";
    case ErrorCode::InvalidCatLMBraiding: return "InvalidCatLMBraiding";
    case ErrorCode::BracketNotWellDefined: return "BracketNotWellDefined";
    case ErrorCode::ActionNotDescending: return "ActionNotDescending";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnresolvedReference: return "UnresolvedReference";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::UnknownCommand: return "UnknownCommand";
  }
  return "Unknown";
}

}  // namespace leibniz
