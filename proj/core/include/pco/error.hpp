#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pco {

enum class ErrorCode {
  RangeViolation,
  CompatibilityViolation,
  ConstantFunction,
  CyclicLaws,
  NotEndogenous,
  NotCoFormula,
  InconsistentIntervention,
  SignatureMismatch,
  IllTypedArgument,
  SameVariable,
  FormulaTooLarge,
  EmptyModel,
  NotInNormalForm,
  SupportIncompatible,
  WeightsNotNormalized,
  BudgetTooLarge,
  UnknownSchema,
  UnknownRule,
  SyntaxError,
  UnknownVariable,
  ValueOutOfRange,
  CoFragmentViolation,
  InvalidSignature,
  Overflow,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

/// Byte offsets [start, end) into a parsed text.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
};

/// Error raised by the textual front ends; always carries the offending span.
class ParseError : public Error {
public:
  ParseError(ErrorCode code, const std::string& message, SourceSpan span);
  SourceSpan span() const noexcept { return span_; }
  const std::string& detail() const noexcept { return detail_; }

  /// Message with a caret line under the span, suitable for terminals.
  std::string annotate(std::string_view text) const;

private:
  SourceSpan span_;
  std::string detail_;
};

class CycleError : public Error {
public:
  CycleError(const std::string& message, std::vector<std::string> cycle);
  const std::vector<std::string>& cycle() const noexcept { return cycle_; }

private:
  std::vector<std::string> cycle_;
};

}  // namespace pco
