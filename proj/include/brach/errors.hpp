#ifndef BRACH_ERRORS_HPP
#define BRACH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace brach {

/// Evaluation outside an integrand's open domain (e.g. x <= 0).
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Violated precondition on a caller-supplied argument.
class ArgumentError : public std::invalid_argument {
public:
  explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed input file; carries the offending row (0 = header).
class FormatError : public std::runtime_error {
public:
  FormatError(const std::string& what, long row)
      : std::runtime_error(what + " (row " + std::to_string(row) + ")"), row_(row) {}
  long row() const { return row_; }

private:
  long row_;
};

/// File could not be opened or written.
class IoError : public std::runtime_error {
public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Quadrature failed to settle; carries the last two estimates so the
/// caller can see how far apart they are.
class QuadratureError : public std::runtime_error {
public:
  QuadratureError(const std::string& what, double last, double previous)
      : std::runtime_error(what), last_(last), previous_(previous) {}
  double last_estimate() const { return last_; }
  double previous_estimate() const { return previous_; }

private:
  double last_;
  double previous_;
};

/// An internal consistency check failed; indicates a bug, not bad input.
class InvariantError : public std::logic_error {
public:
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace brach

#endif
