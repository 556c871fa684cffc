#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace imd {

/// Invalid arguments: out-of-range vertices, malformed models, violated
/// preconditions on instance shape.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed graph6 / edgelist text. `offset` is the byte offset of the
/// offending character within the parsed input.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : InputError(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// A search exceeded its configured node limit or host-size cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called on a value that does not meet its documented
/// precondition (e.g. a lemma check on a non-minimal model).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace imd
