#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "hyperops/budget.hpp"
#include "hyperops/errors.hpp"
#include "hyperops/kernel.hpp"
#include "hyperops/natural.hpp"

namespace hyperops::detail {

inline Natural exp_iter(unsigned n, Natural v, const Natural& w, const Budget& budget) {
    for (unsigned i = 0; i < n; ++i) v = exp_base(v, w, budget);
    return v;
}

inline std::optional<Natural> log_iter(unsigned n, Natural v, const Natural& w) {
    for (unsigned i = 0; i < n; ++i) {
        auto k = log_base(v, w);
        if (!k) return std::nullopt;
        v = std::move(*k);
    }
    return v;
}

// Literal [n:m] on materialized values of the level-n carrier over base w.
// The only primitives are the carrier's successor and predecessor, each one
// exact log/exp round trip; the recursion itself is the five-case scheme.
// Independent of the coordinate conjugation it is used to check, so keep it
// free of hyper(). Steps are capped; oversized values die in the exp gate.
class ValueLevelSystem {
public:
    ValueLevelSystem(unsigned level, Natural base, Budget budget = {},
                     std::size_t max_steps = 500'000)
        : level_(level),
          base_(std::move(base)),
          budget_(budget),
          max_steps_(max_steps),
          zero_(exp_iter(level_, Natural(0), base_, budget_)),
          one_(exp_iter(level_, Natural(1), base_, budget_)) {}

    Natural op(unsigned m, const Natural& va, const Natural& vb) {
        if (++steps_ > max_steps_)
            throw budget_exceeded("value recursion step cap exhausted");
        if (m == 0) return succ(vb);
        if (vb == zero_) {
            if (m == 1) return va;
            if (m == 2) return zero_;
            return one_;
        }
        return op(m - 1, va, op(m, va, pred(vb)));
    }

    const Natural& zero() const noexcept { return zero_; }
    const Natural& one() const noexcept { return one_; }

private:
    Natural shift(const Natural& v, bool up) {
        auto k = log_iter(level_, v, base_);
        if (!k) throw not_in_image("value is outside the level-n carrier");
        if (up)
            ++*k;
        else
            --*k;
        return exp_iter(level_, std::move(*k), base_, budget_);
    }

    Natural succ(const Natural& v) { return shift(v, true); }
    Natural pred(const Natural& v) { return shift(v, false); }

    unsigned level_;
    Natural base_;
    Budget budget_;
    std::size_t max_steps_;
    std::size_t steps_ = 0;
    Natural zero_;
    Natural one_;
};

}  // namespace hyperops::detail
