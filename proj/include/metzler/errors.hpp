#pragma once

#include <stdexcept>
#include <string>

namespace metzler {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Graph validation errors. Each invariant violation gets its own type so
// callers can tell a malformed document from a structurally bad graph.
class ParseError : public Error {
 public:
  using Error::Error;
};

class SelfLoopError : public Error {
 public:
  using Error::Error;
};

class DuplicateArcError : public Error {
 public:
  using Error::Error;
};

class NonpositiveRateError : public Error {
 public:
  using Error::Error;
};

class DisconnectedError : public Error {
 public:
  using Error::Error;
};

/// Requested operation does not match the graph's structure
/// (e.g. an undirected-only identity on a digraph with unpaired arcs).
class StructureError : public Error {
 public:
  using Error::Error;
};

/// Evaluation point too close to a pole of a rational factor.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Evaluation outside the admissible domain (log-argument crossing zero,
/// singular pencil, negative root argument).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input exceeds a desk-scale guard (matrix dimension, state-space size).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An iterative numeric kernel failed to converge.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Internal invariant violated; indicates a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace metzler
