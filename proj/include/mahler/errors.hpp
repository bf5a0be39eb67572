#ifndef MAHLER_ERRORS_HPP
#define MAHLER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mahler {

/// Base class for all library errors.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// An argument lies outside an operation's domain.
class domain_error : public error {
 public:
  explicit domain_error(const std::string& what) : error(what) {}
};

/// A computation was requested at a point where the integral diverges.
/// Carries the offending singularity.
class divergence_error : public error {
 public:
  divergence_error(const std::string& what, double singularity)
      : error(what), singularity_(singularity) {}
  double singularity() const noexcept { return singularity_; }

 private:
  double singularity_;
};

/// A formula was applied to inputs excluded from its validity range
/// (e.g. the shifted series with l >= 2 on an all-equal-moduli tuple).
class validity_error : public error {
 public:
  explicit validity_error(const std::string& what) : error(what) {}
};

/// A numerical estimation procedure failed to stabilize.
class estimation_error : public error {
 public:
  explicit estimation_error(const std::string& what) : error(what) {}
};

/// The working precision cannot absorb the cancellation in a sum;
/// the result would be rounding noise.
class precision_error : public error {
 public:
  explicit precision_error(const std::string& what) : error(what) {}
};

/// Malformed textual input (coefficient/step-length literals).
class parse_error : public error {
 public:
  explicit parse_error(const std::string& what) : error(what) {}
};

/// An internal consistency condition failed; indicates a bug, not bad input.
class internal_error : public error {
 public:
  explicit internal_error(const std::string& what) : error(what) {}
};

}  // namespace mahler

#endif  // MAHLER_ERRORS_HPP
