#pragma once

#include <stdexcept>
#include <string>

namespace grsim {

/// Base class for all domain errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Normalizing a vector of (near-)zero length.
class ZeroVector : public Error {
 public:
  using Error::Error;
};

/// Centroid of an empty point set.
class EmptySet : public Error {
 public:
  using Error::Error;
};

/// Bad topology-generation parameters (n < 2, non-positive dimensions).
class InvalidParams : public Error {
 public:
  using Error::Error;
};

/// Two nodes placed at the same position.
class DuplicatePosition : public Error {
 public:
  using Error::Error;
};

/// A node id outside 0..n-1.
class UnknownNode : public Error {
 public:
  using Error::Error;
};

/// Neighborhood statistics requested for a node without neighbors.
class IsolatedNode : public Error {
 public:
  using Error::Error;
};

/// Alignment table depth does not match the routing metric.
class MissingAlignment : public Error {
 public:
  using Error::Error;
};

class SameSrcDst : public Error {
 public:
  using Error::Error;
};

/// Topology has no pair of distinct connected nodes.
class NoConnectedPairs : public Error {
 public:
  using Error::Error;
};

/// Malformed config file or command-line usage.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace grsim
