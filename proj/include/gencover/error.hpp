#pragma once

#include <stdexcept>
#include <string>

namespace gencover {

enum class Errc {
  NonPrimeCharacteristic,
  DegreeOutOfRange,
  FieldMismatch,
  CharacteristicMismatch,
  NonPrimeBaseField,
  DivisionByZero,
  DimensionMismatch,
  EmptyMatrix,
  PositionOutOfRange,
  LengthMismatch,
  RadiusOutOfRange,
  TOutOfRange,
  DomainError,
  NoSignChange,
  SyndromeSpaceTooLarge,
  SearchTooLarge,
  MethodInfeasible,
  Infeasible,
  ParseError,
  PropertyViolation,
};

const char* errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto a stable exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

  /// True for failures caused by exceeding an enumeration cap.
  bool is_capacity() const noexcept {
    return code_ == Errc::SyndromeSpaceTooLarge || code_ == Errc::SearchTooLarge ||
           code_ == Errc::MethodInfeasible;
  }

 private:
  Errc code_;
};

}  // namespace gencover
