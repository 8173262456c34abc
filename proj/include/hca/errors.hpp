#pragma once

#include <stdexcept>
#include <string>

namespace hca {

// A numerical or structural precondition does not hold (singular closed form,
// guard-band violation, non-solution input, ...). Distinct from bad arguments.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hca
