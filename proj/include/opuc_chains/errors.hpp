#pragma once

#include <stdexcept>
#include <string>

namespace opuc {

/// Base of every error thrown by the library. Each subclass names one
/// failure mode so callers (and tests) can catch precisely.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

class UndefinedRoots : public Error {
 public:
  using Error::Error;
};

class UndersamplingError : public Error {
 public:
  using Error::Error;
};

/// Levinson hit |alpha| >= 1: the moments belong to a trivial (finitely
/// supported) measure, or are not positive definite.
class DegenerateMeasure : public Error {
 public:
  using Error::Error;
};

class NotAChainSequence : public Error {
 public:
  using Error::Error;
};

class HorizonError : public Error {
 public:
  using Error::Error;
};

class SingularityError : public Error {
 public:
  using Error::Error;
};

class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class InconsistentParameters : public Error {
 public:
  using Error::Error;
};

class ExtractionSingular : public Error {
 public:
  using Error::Error;
};

class DegreeCapError : public Error {
 public:
  using Error::Error;
};

class PoleError : public Error {
 public:
  using Error::Error;
};

}  // namespace opuc
