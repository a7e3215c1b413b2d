#pragma once

#include <stdexcept>
#include <string>

namespace hibi {

/// Input is structurally invalid: unknown labels, order cycles, label
/// clashes, sets that fail to be lattices, and similar precondition
/// failures. Maps to CLI exit code 2, like a parse error.
class invalid_input : public std::runtime_error {
 public:
  explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by the parsers for malformed files. Carries a position when known.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, int line = -1, int column = -1)
      : std::runtime_error(what), line(line), column(column) {}
  int line;
  int column;
};

/// A configured enumeration/size bound was hit. Exit code 3.
class bound_exceeded : public std::runtime_error {
 public:
  explicit bound_exceeded(const std::string& what) : std::runtime_error(what) {}
};

/// A cross-check that encodes a proved statement failed on an instance.
/// Exit code 4. The witness is serialized into the message.
class theorem_violated : public std::runtime_error {
 public:
  explicit theorem_violated(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace hibi
