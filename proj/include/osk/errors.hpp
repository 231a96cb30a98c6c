#pragma once

#include <stdexcept>
#include <string>

namespace osk {

// Raised when a computation exceeds a configured enumeration or search
// limit (rank over the Weyl enumeration cap, oracle budget, poset grid).
class limit_error : public std::runtime_error {
 public:
  explicit limit_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace osk
