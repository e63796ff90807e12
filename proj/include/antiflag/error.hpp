#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace antiflag {

enum class ErrorCode {
  InvalidArgument,
  NotPrimePower,
  TooLarge,
  OutOfBudget,
  InvalidStructure,
  NoParallelClasses,
  BadL,
  NotPg,
  NotGdd,
  NotDesign,
  Empty,
  PreconditionFailed,
  NotPartitionStructure,
  InvalidParams,
  NotRegular,
  NonConstant,
  Degenerate,
  TNotMu,
  NotDsrg,
  Overflow,
  NotFeasible,
  SizeMismatch,
  Parse,
};

std::string_view to_string(ErrorCode code) noexcept;

// Base of every error raised by the library. `witness` carries the indices
// (points, blocks, vertices) that exhibit the failure, when there are any.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::vector<std::int64_t> witness = {});

  ErrorCode code() const noexcept { return code_; }
  std::span<const std::int64_t> witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<std::int64_t> witness_;
};

// Partial geometry axiom that failed: 1 = constant line size / replication,
// 2 = two points on at most one line, 3 = anti-flag connection number.
class NotPgError : public Error {
 public:
  NotPgError(int axiom, const std::string& message, std::vector<std::int64_t> witness);
  int axiom() const noexcept { return axiom_; }

 private:
  int axiom_;
};

enum class Quantity { T, Lambda, Mu };
std::string_view to_string(Quantity q) noexcept;

class NonConstantError : public Error {
 public:
  NonConstantError(Quantity which, const std::string& message,
                   std::vector<std::int64_t> witness);
  Quantity which() const noexcept { return which_; }

 private:
  Quantity which_;
};

enum class Infeasibility {
  DeltaNotInteger,
  DeltaNotPositive,
  HalvesNotInteger,
  MultiplicityNotInteger,
  MultiplicityNegative,
};
std::string_view to_string(Infeasibility r) noexcept;

class NotFeasibleError : public Error {
 public:
  NotFeasibleError(Infeasibility reason, const std::string& detail);
  Infeasibility reason() const noexcept { return reason_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  Infeasibility reason_;
  std::string detail_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace antiflag
