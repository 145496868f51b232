#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "mecs/errors.hpp"

namespace mecs {

// Optional wall-clock limit shared by the exponential engines.
class Deadline {
public:
    using Clock = std::chrono::steady_clock;

    Deadline() = default;

    static Deadline after(std::chrono::milliseconds budget) {
        Deadline d;
        d.at_ = Clock::now() + budget;
        return d;
    }

    bool unlimited() const { return !at_.has_value(); }
    bool expired() const { return at_ && Clock::now() >= *at_; }

    void check(const char* where) const {
        if (expired()) throw BudgetExceeded(std::string(where) + ": wall-time budget exhausted");
    }

private:
    std::optional<Clock::time_point> at_;
};

}  // namespace mecs
