#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace precima {

using Activity = std::string;
using Trace = std::vector<Activity>;

/// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  int line;
  ParseError(int line_, const std::string& msg)
      : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

struct InvalidMarkingError : Error { using Error::Error; };
struct NotEnabledError : Error { using Error::Error; };
// State cap hit during exploration; distinct from unboundedness detection.
struct ExplorationOverflowError : Error { using Error::Error; };
struct UnboundedNetError : Error { using Error::Error; };
// A search budget ran out before the question could be answered.
struct UndecidedError : Error { using Error::Error; };
struct NoAlignmentError : Error { using Error::Error; };
struct EnumerationOverflowError : Error { using Error::Error; };
struct PreconditionError : Error { using Error::Error; };
struct UnknownNameError : Error { using Error::Error; };

}  // namespace precima
