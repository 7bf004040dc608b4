#pragma once

#include <stdexcept>
#include <string>

namespace weyl {

enum class ErrorKind {
  UnsupportedOrder,
  AxiomViolation,
  DimensionMismatch,
  AmbientMismatch,
  NotContaining,
  PreconditionViolation,
  TooLarge,
  InvalidSpec,
  NoRoundups,
  NotGrassmann,
  DirectionAmbiguous,
  SeriesDiverged,
  NotTypeI,
  UnrecognizedStructure,
  SearchBudgetExceeded,
  UnsupportedSpec,
  ParseError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace weyl
