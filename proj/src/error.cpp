#include "antiflag/error.hpp"

#include <utility>

namespace antiflag {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::OutOfBudget: return "OutOfBudget";
    case ErrorCode::InvalidStructure: return "InvalidStructure";
    case ErrorCode::NoParallelClasses: return "NoParallelClasses";
    case ErrorCode::BadL: return "BadL";
    case ErrorCode::NotPg: return "NotPg";
    case ErrorCode::NotGdd: return "NotGdd";
    case ErrorCode::NotDesign: return "NotDesign";
    case ErrorCode::Empty: return "Empty";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::NotPartitionStructure: return "NotPartitionStructure";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::NonConstant: return "NonConstant";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::TNotMu: return "TNotMu";
    case ErrorCode::NotDsrg: return "NotDsrg";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NotFeasible: return "NotFeasible";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

std::string_view to_string(Quantity q) noexcept {
  switch (q) {
    case Quantity::T: return "t";
    case Quantity::Lambda: return "lambda";
    case Quantity::Mu: return "mu";
  }
  return "?";
}

std::string_view to_string(Infeasibility r) noexcept {
  switch (r) {
    case Infeasibility::DeltaNotInteger: return "delta_not_integer";
    case Infeasibility::DeltaNotPositive: return "delta_not_positive";
    case Infeasibility::HalvesNotInteger: return "halves_not_integer";
    case Infeasibility::MultiplicityNotInteger: return "multiplicity_not_integer";
    case Infeasibility::MultiplicityNegative: return "multiplicity_negative";
  }
  return "?";
}

Error::Error(ErrorCode code, const std::string& message, std::vector<std::int64_t> witness)
    : std::runtime_error(message), code_(code), witness_(std::move(witness)) {}

NotPgError::NotPgError(int axiom, const std::string& message, std::vector<std::int64_t> witness)
    : Error(ErrorCode::NotPg, message, std::move(witness)), axiom_(axiom) {}

NonConstantError::NonConstantError(Quantity which, const std::string& message,
                                   std::vector<std::int64_t> witness)
    : Error(ErrorCode::NonConstant, message, std::move(witness)), which_(which) {}

NotFeasibleError::NotFeasibleError(Infeasibility reason, const std::string& detail)
    : Error(ErrorCode::NotFeasible,
            std::string(to_string(reason)) + (detail.empty() ? "" : ": " + detail)),
      reason_(reason),
      detail_(detail) {}

ParseError::ParseError(std::size_t line, const std::string& message)
    : Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + message), line_(line) {}

}  // namespace antiflag
