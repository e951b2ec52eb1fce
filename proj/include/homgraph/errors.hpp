#pragma once

#include <stdexcept>
#include <string>

namespace homgraph {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed module spec, invalid presentation or bad argument.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A configured size cap (module order, lattice nodes, spectrum, search) was hit.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Operation needs a local ring (socle, radical generators).
class LocalityRequired : public Error {
 public:
  using Error::Error;
};

/// Two independent computations disagree, or an internal invariant broke.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

class NonConvergence : public Error {
 public:
  using Error::Error;
};

class SearchBudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Raised by checked 64-bit arithmetic; callers retry with big integers.
class ArithmeticOverflow : public Error {
 public:
  ArithmeticOverflow() : Error("64-bit integer overflow") {}
};

}  // namespace homgraph
