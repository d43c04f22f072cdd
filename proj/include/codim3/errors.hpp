// Error types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace codim3 {

// Malformed textual input (polynomials, matrix lines, database files).
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Filesystem trouble, reported with path context.
class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A broken internal invariant: this is a bug, not a user error.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An algebra whose multiplication matches none of the known normal forms.
class unclassifiable_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace codim3
