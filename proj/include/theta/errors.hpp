#pragma once

#include <stdexcept>
#include <string>

namespace theta {

/// Thrown when an input exceeds a configured enumeration or factoring budget.
class resource_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace theta
