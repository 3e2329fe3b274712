#pragma once

#include <stdexcept>
#include <string>

namespace gwadams {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// polyring
class ContextError : public Error { using Error::Error; };
class ExponentError : public Error { using Error::Error; };
class SubstitutionError : public Error { using Error::Error; };
class InvertibilityError : public Error { using Error::Error; };
class OrderError : public Error { using Error::Error; };

// symfunc
class SymmetryError : public Error { using Error::Error; };

// gwring / lambda
class GradingError : public Error { using Error::Error; };

// forms
class IndexError : public Error { using Error::Error; };
class TypeError : public Error { using Error::Error; };
class WitnessError : public Error { using Error::Error; };
class DegeneracyError : public Error { using Error::Error; };

// serialization / cli
class ParseError : public Error { using Error::Error; };

}  // namespace gwadams
