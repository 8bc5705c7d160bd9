#pragma once

#include <stdexcept>
#include <string>

namespace parv {

/// Invalid user-supplied data: malformed rationals, non-positive-definite
/// forms, dimension mismatches, out-of-range parameters.
class input_error : public std::runtime_error {
public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A condition that no valid input can produce. Signals a defect in the
/// toolkit itself (or a falsified cross-check), never a user mistake.
class internal_error : public std::logic_error {
public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace parv
