#pragma once

#include <stdexcept>
#include <string>

namespace spsl {

enum class ErrorKind {
    invalid_argument,  // caller passed values violating a precondition
    construction,      // parameters admit no valid object (e.g. code with k <= 0)
    io,                // filesystem failure
    parse,             // malformed input file
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& msg) {
    throw Error(kind, msg);
}

inline void require(bool cond, ErrorKind kind, const std::string& msg) {
    if (!cond) raise(kind, msg);
}

}  // namespace spsl
