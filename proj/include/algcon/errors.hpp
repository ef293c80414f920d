#pragma once

#include <stdexcept>
#include <string>

namespace algcon {

/// Failure conditions raised by the library. `Usage` conditions are caused by
/// malformed input (bad syntax, violated preconditions); the rest are
/// mathematical failures of a well-formed job.
enum class Condition {
  kParseError,
  kUnknownVariable,
  kPrecondition,
  kNotFiniteDimensional,
  kNonStabilizing,
  kSocleViolation,
  kDegenerateForm,
  kNotRepresentable,
  kNonCompactSupport,
  kIrrationalExceptionalPoint,
  kNotSquarefree,
  kIsolationFailure,
  kWindingUncertified,
  kZeroFiber,
};

const char* condition_name(Condition c);
bool is_usage_condition(Condition c);

class Error : public std::runtime_error {
 public:
  Error(std::string module, Condition condition, const std::string& message)
      : std::runtime_error(module + ": " + condition_name(condition) + ": " +
                           message),
        module_(std::move(module)),
        condition_(condition) {}

  const std::string& module() const { return module_; }
  Condition condition() const { return condition_; }

 private:
  std::string module_;
  Condition condition_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("polycore", Condition::kParseError,
              "at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace algcon
