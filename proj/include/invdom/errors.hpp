#pragma once

#include <stdexcept>
#include <string>

namespace invdom {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for graphs or vertex sets that exceed the 64-vertex cap, and for
/// graph6 output beyond the single-byte size form.
class TooLarge : public Error {
 public:
  using Error::Error;
};

/// Inverse domination is undefined on graphs with isolated vertices.
class HasIsolates : public Error {
 public:
  HasIsolates() : Error("graph has an isolated vertex; inverse domination is undefined") {}
};

/// Caller broke a documented precondition (bad certificate, wrong gamma, ...).
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class NotDominated : public PreconditionViolated {
 public:
  using PreconditionViolated::PreconditionViolated;
};

class VertexNotInD : public PreconditionViolated {
 public:
  using PreconditionViolated::PreconditionViolated;
};

class SeedNotIndependent : public PreconditionViolated {
 public:
  using PreconditionViolated::PreconditionViolated;
};

/// A step that a proven statement guarantees has failed. Either the input
/// slipped past precondition checks or there is a bug; never expected.
class InternalContradiction : public Error {
 public:
  using Error::Error;
};

/// Neither outcome of the optimal-set trichotomy holds: a counterexample.
class LemmaViolated : public Error {
 public:
  using Error::Error;
};

}  // namespace invdom
