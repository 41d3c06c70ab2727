#pragma once

#include <stdexcept>
#include <string>

namespace commgraph {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Group closure did not stop at the expected order.
class ClosureError : public Error {
 public:
  using Error::Error;
};

class PartitionError : public Error {
 public:
  using Error::Error;
};

class NotCliqueJoin : public Error {
 public:
  using Error::Error;
};

class SizeBoundExceeded : public Error {
 public:
  using Error::Error;
};

class StructureMismatch : public Error {
 public:
  using Error::Error;
};

class DegenerateSpectrum : public Error {
 public:
  using Error::Error;
};

class OrthogonalityFailure : public Error {
 public:
  using Error::Error;
};

class NonIntegerMultiplicity : public Error {
 public:
  using Error::Error;
};

class DisconnectedGraph : public Error {
 public:
  using Error::Error;
};

class UnresolvedPair : public Error {
 public:
  using Error::Error;
};

}  // namespace commgraph
