#pragma once

#include <stdexcept>
#include <string>

namespace rt {

// Bad flags or violated option constraints; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unreadable input or unwritable output; maps to exit code 3.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed OBJ content; carries the offending line, maps to exit code 4.
class ObjParseError : public std::runtime_error {
public:
    ObjParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// Thrown by the argument parser when --help is requested.
struct HelpRequested {
    std::string text;
};

}  // namespace rt
