#pragma once

#include <stdexcept>
#include <string>

namespace mecs {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

class InstanceTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ReconstructionFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace mecs
