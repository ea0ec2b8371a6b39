#pragma once

#include <stdexcept>
#include <string>

namespace heesch {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Precondition violations: invalid cells, transforms, malformed shapes.
class invalid_input : public error {
public:
    using error::error;
};

// Text that does not match a documented format.
class parse_error : public error {
public:
    using error::error;
};

// Transform translation outside the 32-bit packable range.
class range_error : public error {
public:
    using error::error;
};

// Work request beyond a configured limit (enumeration size, etc.).
class resource_error : public error {
public:
    using error::error;
};

// Internal consistency failure (overlapping paint, unsatisfied model).
class integrity_error : public error {
public:
    using error::error;
};

// Input shape has an interior hole and cannot be classified.
class holed_input_error : public invalid_input {
public:
    using invalid_input::invalid_input;
};

} // namespace heesch
