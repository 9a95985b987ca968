#pragma once

#include <stdexcept>
#include <string>

namespace gridpatrol {

// A policy was asked about an input it has no rule for (e.g. a table with a
// missing entry, or a guard set that no valid grid can produce).
struct policy_undefined_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A policy tried to walk off the environment. Runs abort rather than clamp,
// so buggy policies cannot masquerade as working ones.
struct illegal_step_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A policy returned the all-zero step to a simulator that does not allow
// staying put. Indicates an unreachable/buggy pseudocode path was hit.
struct zero_step_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An exhaustive search exceeded its configured work cap.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace gridpatrol
