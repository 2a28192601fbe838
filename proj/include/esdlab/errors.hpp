#pragma once

#include <stdexcept>
#include <string>

namespace esdlab {

/// Subsystem bookkeeping is missing or inconsistent (bad index, dims mismatch).
class StructureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An input violates an operation's precondition (trace, hermiticity, norm, ...).
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A closed form was requested outside the parameter set it exists for.
class UnsupportedParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Population leaked into the top of the truncated Fock space.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, double leak)
      : std::runtime_error(what), leak_(leak) {}
  double leak() const noexcept { return leak_; }

 private:
  double leak_;
};

/// The integrator lost norm or the step is too coarse for the generator.
class StepSizeError : public std::runtime_error {
 public:
  StepSizeError(const std::string& what, double drift)
      : std::runtime_error(what), drift_(drift) {}
  double drift() const noexcept { return drift_; }

 private:
  double drift_;
};

}  // namespace esdlab
