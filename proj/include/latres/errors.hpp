#pragma once

#include <stdexcept>
#include <string>

namespace latres {

/// Malformed input: bad labels, relation cycles, non-ideals, unreadable JSON.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct invalid_poset_error : input_error {
    using input_error::input_error;
};

struct invalid_ideal_error : input_error {
    using input_error::input_error;
};

/// A configured size guard was exceeded (enumeration would be too large).
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// API misuse, e.g. asking for the CM type of a not-CM recognition result.
struct usage_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace latres
