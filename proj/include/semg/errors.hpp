#pragma once

#include <stdexcept>
#include <string>

namespace semg {

// Base error for everything the pipeline can throw on bad input or state.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define SEMG_DEFINE_ERROR(NAME)                                  \
  class NAME : public Error {                                    \
   public:                                                       \
    explicit NAME(const std::string& msg) : Error(msg) {}        \
  }

SEMG_DEFINE_ERROR(NoOverlap);
SEMG_DEFINE_ERROR(MalformedStream);
SEMG_DEFINE_ERROR(InvalidCutoff);
SEMG_DEFINE_ERROR(SignalTooShort);
SEMG_DEFINE_ERROR(WindowTooShort);
SEMG_DEFINE_ERROR(ShapeMismatch);
SEMG_DEFINE_ERROR(EmptyInput);
SEMG_DEFINE_ERROR(DegenerateProblem);
SEMG_DEFINE_ERROR(EmptyValidation);
SEMG_DEFINE_ERROR(InvalidWindow);
SEMG_DEFINE_ERROR(EmptySequence);
SEMG_DEFINE_ERROR(UnknownLabel);
SEMG_DEFINE_ERROR(RepetitionCountMismatch);
SEMG_DEFINE_ERROR(MissingAcquisition);
SEMG_DEFINE_ERROR(InsufficientDays);
SEMG_DEFINE_ERROR(ConfigError);

#undef SEMG_DEFINE_ERROR

// Parse failures carry the 1-based line number of the offending row.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, size_t line)
      : Error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
  size_t line() const { return line_; }

 private:
  size_t line_;
};

}  // namespace semg
