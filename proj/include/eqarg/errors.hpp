#pragma once

#include <stdexcept>
#include <string>

namespace eqarg {

/// Input text could not be parsed; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// A brute-force operation was asked to run above its size cap.
class SizeCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace eqarg
