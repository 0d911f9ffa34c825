#ifndef WILFLAB_ERRORS_HPP
#define WILFLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wilflab {

/// Input violates a mathematical precondition (bad embedding set, size
/// mismatch, non-permutation, ...).
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Textual input could not be parsed.
class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A size guard refused work that would take unreasonably long.
class GuardError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace wilflab

#endif // WILFLAB_ERRORS_HPP
