#pragma once

#include <stdexcept>

namespace specgraph {

// thrown when an operation is asked to run beyond its supported scale
struct scale_cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace specgraph
