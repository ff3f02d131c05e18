#pragma once

#include <stdexcept>
#include <string>

namespace homquot {

// Malformed input: bad labels, unknown vertices, unparsable files.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A predicate required by an operation does not hold for its arguments.
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A checked identity failed. Always an implementation bug.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace homquot
