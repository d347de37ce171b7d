#pragma once

#include <stdexcept>
#include <string>

namespace trireg {

enum class ErrorCode {
  InvalidEdge,
  VertexOutOfRange,
  NotAnEdge,
  EmptyGraph,
  EmptyFactor,
  IndivisibleParts,
  UnknownGraph,
  InvalidRecipe,
  ParityError,
  DegreeTooLarge,
  DeskScaleExceeded,
  FormatError,
  GenerationFailed,
};

const char* error_code_name(ErrorCode code);

/// Domain error carrying a machine-readable code (mirrored in CLI JSON output).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  const char* code_name() const noexcept { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace trireg
