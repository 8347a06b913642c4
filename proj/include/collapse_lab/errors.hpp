#pragma once

#include <stdexcept>
#include <string>

namespace collapse_lab {

// Precondition violated: letter outside the alphabet, bad subalphabet,
// malformed generator parameters.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A scattered-subword count left the 64-bit unsigned range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

class ColorExhaustion : public DomainError {
 public:
  using DomainError::DomainError;
};

// A well-formed generator could not produce the requested prefix.
class GeneratorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The billiard ball reached a face of dimension < d-1 (two crossings at the
// same instant). Coordinates are 0-based.
class DegenerateTrajectory : public GeneratorError {
 public:
  DegenerateTrajectory(std::size_t first, std::size_t second, std::string time)
      : GeneratorError("degenerate trajectory: coordinates " +
                       std::to_string(first + 1) + " and " +
                       std::to_string(second + 1) +
                       " are crossed simultaneously at t=" + time),
        first_(first),
        second_(second),
        time_(std::move(time)) {}

  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }
  const std::string& time() const noexcept { return time_; }

 private:
  std::size_t first_;
  std::size_t second_;
  std::string time_;
};

class InconsistentProjectionFamily : public std::runtime_error {
 public:
  explicit InconsistentProjectionFamily(const std::string& why)
      : std::runtime_error("inconsistent projection family: " + why) {}
};

}  // namespace collapse_lab
