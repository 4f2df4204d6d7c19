#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cubeturan {

enum class ErrorKind {
  BadLength,
  BadChar,
  NoStars,
  DimensionMismatch,
  DimensionTooLarge,
  ParseError,
  DuplicateEdge,
  BadRange,
  MissingZEntry,
  NonIntegralResult,
  EnumerationTooLarge,
  CycleDoesNotFit,
  MixedDimensions,
  BadPattern,
  BadTheoremId,
  MissingParam,
  BudgetExceeded,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Largest dimension for which per-vertex or per-edge state is materialized.
inline constexpr int kMaxMaterializedDimension = 30;

// StarVectors pack their cells into 64-bit masks.
inline constexpr int kMaxStarDimension = 64;

}  // namespace cubeturan
