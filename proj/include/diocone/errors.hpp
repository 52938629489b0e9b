#pragma once

#include <stdexcept>
#include <string>

namespace diocone {

// Mathematical precondition violations (non-pointed cone, zero input, ...).
// The `code` is a stable identifier, the message adds context.
class MathError : public std::runtime_error {
public:
    MathError(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& message) : std::runtime_error(message) {}
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

} // namespace diocone
