#pragma once

#include <stdexcept>
#include <string>

namespace semiflow {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
  using Error::Error;
};

class InvalidWeightError : public Error {
public:
  using Error::Error;
};

class InvalidExponentError : public Error {
public:
  using Error::Error;
};

class InvalidTimeError : public Error {
public:
  using Error::Error;
};

/// lambda outside the resolvent set, or the linear solve broke down.
class ResolventError : public Error {
public:
  using Error::Error;
};

class EulerStepError : public Error {
public:
  EulerStepError(const std::string& msg, int steps) : Error(msg), steps_(steps) {}
  int steps() const noexcept { return steps_; }

private:
  int steps_;
};

class UnsupportedError : public Error {
public:
  using Error::Error;
};

class InvalidKernelError : public Error {
public:
  using Error::Error;
};

class PreconditionError : public Error {
public:
  using Error::Error;
};

class ScenarioError : public Error {
public:
  using Error::Error;
};

}  // namespace semiflow
