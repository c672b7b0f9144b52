#pragma once

#include <stdexcept>
#include <string>

namespace nodal {

// Raised on precondition violations and malformed input. The message is
// surfaced verbatim in CLI error reports.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nodal
