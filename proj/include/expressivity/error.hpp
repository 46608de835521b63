#pragma once

#include <stdexcept>
#include <string>

namespace expressivity {

/// Dimension or shape mismatch between a network and its inputs.
class ShapeError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Invalid configuration value (sampler, experiment config, construction spec).
class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An activation has no kink, so it cannot emulate a ReLU.
class NoKinkError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Interval bounds on reachable pre-activations are not finite.
class BoundingError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A construction precondition does not hold (width too small, bad weights).
class ConstructionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
public:
  IoError(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(path) {}

  const std::string& path() const noexcept { return path_; }

private:
  std::string path_;
};

}  // namespace expressivity
