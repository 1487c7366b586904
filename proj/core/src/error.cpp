#include "pco/error.hpp"

#include <algorithm>
#include <sstream>

namespace pco {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::RangeViolation: return "RangeViolation";
    case ErrorCode::CompatibilityViolation: return "CompatibilityViolation";
    case ErrorCode::ConstantFunction: return "ConstantFunction";
    case ErrorCode::CyclicLaws: return "CyclicLaws";
    case ErrorCode::NotEndogenous: return "NotEndogenous";
    case ErrorCode::NotCoFormula: return "NotCoFormula";
    case ErrorCode::InconsistentIntervention: return "InconsistentIntervention";
    case ErrorCode::SignatureMismatch: return "SignatureMismatch";
    case ErrorCode::IllTypedArgument: return "IllTypedArgument";
    case ErrorCode::SameVariable: return "SameVariable";
    case ErrorCode::FormulaTooLarge: return "FormulaTooLarge";
    case ErrorCode::EmptyModel: return "EmptyModel";
    case ErrorCode::NotInNormalForm: return "NotInNormalForm";
    case ErrorCode::SupportIncompatible: return "SupportIncompatible";
    case ErrorCode::WeightsNotNormalized: return "WeightsNotNormalized";
    case ErrorCode::BudgetTooLarge: return "BudgetTooLarge";
    case ErrorCode::UnknownSchema: return "UnknownSchema";
    case ErrorCode::UnknownRule: return "UnknownRule";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::ValueOutOfRange: return "ValueOutOfRange";
    case ErrorCode::CoFragmentViolation: return "CoFragmentViolation";
    case ErrorCode::InvalidSignature: return "InvalidSignature";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

namespace {

std::string span_message(const std::string& message, SourceSpan span) {
  std::ostringstream out;
  out << message << " (at " << span.start << ".." << span.end << ")";
  return out.str();
}

}  // namespace

ParseError::ParseError(ErrorCode code, const std::string& message, SourceSpan span)
    : Error(code, span_message(message, span)), span_(span), detail_(message) {}

std::string ParseError::annotate(std::string_view text) const {
  // Locate the line containing span.start.
  std::size_t start = std::min(span_.start, text.size());
  std::size_t line_begin = text.rfind('\n', start == 0 ? 0 : start - 1);
  line_begin = (line_begin == std::string_view::npos || start == 0) ? 0 : line_begin + 1;
  if (start > 0 && text[start - 1] == '\n') line_begin = start;
  std::size_t line_end = text.find('\n', start);
  if (line_end == std::string_view::npos) line_end = text.size();
  std::size_t line_no = static_cast<std::size_t>(std::count(text.begin(), text.begin() + line_begin, '\n')) + 1;

  std::ostringstream out;
  out << "error: " << detail_ << " [" << to_string(code()) << "] at line " << line_no << ", bytes "
      << span_.start << ".." << span_.end << "\n";
  out << "  " << text.substr(line_begin, line_end - line_begin) << "\n  ";
  out << std::string(start - line_begin, ' ');
  std::size_t width = std::max<std::size_t>(1, std::min(span_.end, line_end) - std::min(start, line_end));
  out << std::string(width, '^');
  return out.str();
}

CycleError::CycleError(const std::string& message, std::vector<std::string> cycle)
    : Error(ErrorCode::CyclicLaws, message), cycle_(std::move(cycle)) {}

}  // namespace pco
