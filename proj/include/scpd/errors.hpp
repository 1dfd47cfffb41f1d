#pragma once

#include <stdexcept>
#include <string>

namespace scpd {

/// A kernel input exceeded the configured work bound.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A similarity formula was evaluated on two empty representations.
class DegenerateInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An injection roll succeeded but the seed pool has no fragment of the
/// requested scope.
class EmptySeedPool : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Averaging over an empty sample.
class EmptySample : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A robustness ratio is undefined because similarity did not drop.
class Saturated : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid run or mutation configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace scpd
