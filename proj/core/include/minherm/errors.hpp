#ifndef MINHERM_ERRORS_HPP
#define MINHERM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace minherm {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotHermitian : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

class AmbiguousClustering : public Error {
 public:
  using Error::Error;
};

class NoSuchEigenvalue : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class OrthogonalityViolated : public Error {
 public:
  using Error::Error;
};

class NotUnitary : public Error {
 public:
  using Error::Error;
};

class InvariantViolated : public Error {
 public:
  using Error::Error;
};

}  // namespace minherm

#endif  // MINHERM_ERRORS_HPP
