#pragma once

#include <stdexcept>
#include <string>

namespace dqw {

// Base class for everything the library throws.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class NonHermitianError : public Error {
  public:
    using Error::Error;
};

class BadTraceError : public Error {
  public:
    using Error::Error;
};

class NotUnitaryError : public Error {
  public:
    using Error::Error;
};

class BadProbabilityError : public Error {
  public:
    using Error::Error;
};

class MixedShiftOpError : public Error {
  public:
    using Error::Error;
};

class NotNormalizedError : public Error {
  public:
    using Error::Error;
};

class BoundaryBreachError : public Error {
  public:
    using Error::Error;
};

class DomainError : public Error {
  public:
    using Error::Error;
};

class GridTooCoarseError : public Error {
  public:
    using Error::Error;
};

class UnphysicalStateError : public Error {
  public:
    using Error::Error;
};

// Configuration / input parsing problems, with a field path in the message.
class ConfigError : public Error {
  public:
    using Error::Error;
};

// Kraus family that fails the completeness sum.  Carries the largest
// deviation found and the relative shift it occurred at.
class IncompleteChannelError : public Error {
  public:
    IncompleteChannelError(double deviation, int shift)
        : Error("incomplete channel: completeness sum deviates by " +
                std::to_string(deviation) + " at relative shift " + std::to_string(shift)),
          deviation_(deviation),
          shift_(shift) {}

    double deviation() const { return deviation_; }
    int shift() const { return shift_; }

  private:
    double deviation_;
    int shift_;
};

}  // namespace dqw
