#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

/// Argument outside an operation's mathematical domain (e.g. xi <= 0 for a
/// permittivity query, T >= T_c for a London depth).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Invalid run configuration: bad gap, tolerance, material or geometry.
class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An asymptotic formula was asked to operate outside its validity window.
class ValidityError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// The Matsubara series hit its term cap before meeting the tolerance.
class ConvergenceError : public std::runtime_error {
public:
  ConvergenceError(const std::string& what, double partial_sum, double last_term, long terms)
      : std::runtime_error(what), partial_sum_(partial_sum), last_term_(last_term), terms_(terms) {}

  double partial_sum() const noexcept { return partial_sum_; }
  double last_term() const noexcept { return last_term_; }
  long terms() const noexcept { return terms_; }

private:
  double partial_sum_;
  double last_term_;
  long terms_;
};

/// A direct numeric difference would be swamped by round-off.
class CancellationError : public std::runtime_error {
public:
  CancellationError(const std::string& what, double predicted_relative_change)
      : std::runtime_error(what), predicted_relative_change_(predicted_relative_change) {}

  double predicted_relative_change() const noexcept { return predicted_relative_change_; }

private:
  double predicted_relative_change_;
};

} // namespace casimir
