#pragma once

#include <cstddef>

#include "hyperops/errors.hpp"
#include "hyperops/natural.hpp"

namespace hyperops {

// Caps on a single operation: max_bits bounds the width of every value the
// operation produces, max_steps bounds recursion unfoldings. Exceeding either
// raises budget_exceeded instead of running unbounded.
struct Budget {
    static constexpr std::size_t default_max_bits = std::size_t{1} << 20;
    static constexpr std::size_t default_max_steps = 1'000'000;

    std::size_t max_bits = default_max_bits;
    std::size_t max_steps = default_max_steps;
};

// Mutable tally of one operation's spend against an immutable Budget.
// Not shared between threads; each top-level call owns its meter.
class BudgetMeter {
public:
    explicit BudgetMeter(const Budget& budget) : budget_(budget) {}

    const Budget& budget() const noexcept { return budget_; }
    std::size_t steps_used() const noexcept { return steps_; }

    void count_steps(std::size_t n = 1) {
        steps_ += n;
        if (steps_ > budget_.max_steps)
            throw budget_exceeded("step budget exhausted");
    }

    void check_bits(std::size_t bits) const {
        if (bits > budget_.max_bits)
            throw budget_exceeded("result width exceeds bit budget");
    }

    void check_magnitude(const Natural& value) const { check_bits(value.bit_length()); }

private:
    Budget budget_;
    std::size_t steps_ = 0;
};

}  // namespace hyperops
