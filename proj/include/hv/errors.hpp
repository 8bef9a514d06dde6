#pragma once

#include <stdexcept>
#include <string>

namespace hv {

// Error taxonomy mirrors the CLI exit codes: input 1, validation 2, resource 3, internal 4.

struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace hv
