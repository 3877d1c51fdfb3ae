#pragma once

#include <stdexcept>
#include <string>

namespace wsmkit {

// All library errors derive from error so callers can catch one base type.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input file could not be parsed; message carries the line number.
struct parse_error : error {
    int line;
    parse_error(const std::string& msg, int line_)
        : error("parse error at line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// Instance exceeds a configured exact-computation cap.
struct cap_exceeded : error {
    using error::error;
};

// An operation was invoked outside its stated precondition
// (e.g. equivalence machinery on a graph whose rank-width is too small).
struct precondition_violation : error {
    using error::error;
};

// A structurally invalid object was passed (broken bijection, malformed tree, ...).
struct structural_error : error {
    using error::error;
};

// Invalid arguments that are not structural objects (bad vertex ids, bad flags, ...).
struct argument_error : error {
    using error::error;
};

} // namespace wsmkit
