// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>

namespace maskbench {

// Domain error: the request was well-formed but the physics rejects it
// (non-physical state, empty post-selection, state outside a masker's
// range, ...). Precondition violations throw std::invalid_argument.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace maskbench
