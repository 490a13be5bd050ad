#ifndef LYAP_ERRORS_HPP
#define LYAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lyap {

// a precondition or invariant of an operation was violated by the caller
struct contract_error : std::invalid_argument {
  explicit contract_error(const std::string& what) : std::invalid_argument(what) {}
};

// a configured cap (word count, Kronecker dimension, state count) was exceeded
struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// a floating-point computation produced non-finite or unusable values
struct numeric_error : std::runtime_error {
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

// user-supplied data is structurally valid but semantically inconsistent
// (e.g. the Markov column-sum validation fails on self-affine input)
struct input_error : std::runtime_error {
  std::string pointer;  // JSON pointer to the offending element, may be empty
  input_error(const std::string& what, std::string ptr = {})
      : std::runtime_error(what), pointer(std::move(ptr)) {}
};

// an internal consistency check failed; indicates a bug, not an input property
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace lyap

#endif
