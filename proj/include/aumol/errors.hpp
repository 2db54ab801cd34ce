#pragma once

#include <stdexcept>
#include <string>

namespace aumol {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Audio frontend.
class EmptyAudio : public Error {
 public:
  using Error::Error;
};
class InvalidAudio : public Error {
 public:
  using Error::Error;
};
class ShortAudio : public Error {
 public:
  using Error::Error;
};
class InvalidConfig : public Error {
 public:
  using Error::Error;
};

// Numeric engine.
class ShapeError : public Error {
 public:
  using Error::Error;
};
class NumericError : public Error {
 public:
  using Error::Error;
};
class ContractError : public Error {
 public:
  using Error::Error;
};

// Configuration and persistence.
class ConfigError : public Error {
 public:
  using Error::Error;
};
class IoError : public Error {
 public:
  using Error::Error;
};
class IntegrityError : public Error {
 public:
  using Error::Error;
};
class UnsupportedVersion : public Error {
 public:
  using Error::Error;
};

/// Raised by the trainer when a step produces a non-finite value.
class TrainingAborted : public NumericError {
 public:
  TrainingAborted(long step, const std::string& what)
      : NumericError("training aborted at step " + std::to_string(step) + ": " + what), step_(step) {}
  long step() const noexcept { return step_; }

 private:
  long step_;
};

}  // namespace aumol
