#ifndef TRIGAPPROX_ERROR_HPP
#define TRIGAPPROX_ERROR_HPP

#include <stdexcept>
#include <string>

namespace trigapprox {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (nonpositive bandwidth, p out
/// of range, malformed function id, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The requested evaluation is not available for this function, e.g.
/// complex evaluation of a catalog member without an analytic extension.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature hit max_depth (or its panel budget) before reaching
/// the requested tolerance.
class QuadratureError : public Error {
 public:
  using Error::Error;
};

}  // namespace trigapprox

#endif  // TRIGAPPROX_ERROR_HPP
