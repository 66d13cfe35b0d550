#pragma once

#include <stdexcept>
#include <string>

namespace qtg {

/// Base class for every domain error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qtg
