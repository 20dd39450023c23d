#pragma once

#include <stdexcept>
#include <string>

namespace hetnet {

/// Base class for every error raised by the simulator.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of a formula (negative distance,
/// non-positive noise variance, CSI quality outside [0,1], ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Rejection sampling could not place a microcell within its attempt budget.
class PlacementInfeasible : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration document or flag value. `key()` names the offender.
class ConfigError : public Error {
 public:
  ConfigError(std::string key, const std::string& reason)
      : Error("config key '" + key + "': " + reason), key_(std::move(key)) {}

  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// Too few samples for a requested statistic.
class InsufficientData : public Error {
 public:
  using Error::Error;
};

}  // namespace hetnet
