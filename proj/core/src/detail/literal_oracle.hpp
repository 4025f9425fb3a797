#pragma once

#include <cstddef>
#include <map>
#include <tuple>
#include <vector>

#include "hyperops/errors.hpp"
#include "hyperops/natural.hpp"

namespace hyperops::detail {

// Literal five-case evaluator for the regular hyperoperations, kept as an
// independent oracle against the kernel's native fast paths. The only
// arithmetic primitives here are successor and predecessor; everything else
// is the recursion itself:
//   op(0, a, b) = b+1
//   op(1, a, 0) = a;  op(2, a, 0) = 0;  op(n>=3, a, 0) = 1
//   op(n, a, b) = op(n-1, a, op(n, a, b-1))
// The recursion is driven by an explicit frame stack with memoization on
// (n, a, b): the first descent of op(5, 2, 3) is ~65k calls deep, far past
// the machine stack.
class LevelSystem {
public:
    explicit LevelSystem(std::size_t max_steps = 20'000'000) : max_steps_(max_steps) {}

    Natural op(unsigned n, const Natural& a, const Natural& b) {
        struct Frame {
            unsigned n;
            Natural a;
            Natural b;
            // 0: not yet examined; 1: waiting on op(n, a, b-1);
            // 2: waiting on op(n-1, a, inner).
            int phase = 0;
            Natural inner{0u};
        };

        std::vector<Frame> stack;
        stack.push_back(Frame{n, a, b});
        Natural ret(0u);

        while (!stack.empty()) {
            if (++steps_ > max_steps_)
                throw budget_exceeded("literal evaluation step cap exhausted");
            Frame& f = stack.back();
            if (f.phase == 0) {
                if (f.n == 0) {
                    ret = f.b;
                    ++ret;
                    stack.pop_back();
                    continue;
                }
                if (f.b.is_zero()) {
                    if (f.n == 1)
                        ret = f.a;
                    else if (f.n == 2)
                        ret = Natural(0u);
                    else
                        ret = Natural(1u);
                    stack.pop_back();
                    continue;
                }
                if (auto it = memo_.find(key(f.n, f.a, f.b)); it != memo_.end()) {
                    ret = it->second;
                    stack.pop_back();
                    continue;
                }
                f.phase = 1;
                Natural prev = f.b;
                --prev;
                const unsigned fn = f.n;
                const Natural fa = f.a;
                stack.push_back(Frame{fn, fa, prev});
                continue;
            }
            if (f.phase == 1) {
                f.phase = 2;
                f.inner = ret;
                const unsigned fn = f.n;
                const Natural fa = f.a;
                const Natural fi = f.inner;
                stack.push_back(Frame{fn - 1, fa, fi});
                continue;
            }
            memo_.emplace(key(f.n, f.a, f.b), ret);
            stack.pop_back();
        }
        return ret;
    }

    std::size_t steps_used() const noexcept { return steps_; }

private:
    using Key = std::tuple<unsigned, Integer, Integer>;

    static Key key(unsigned n, const Natural& a, const Natural& b) {
        return {n, a.value(), b.value()};
    }

    std::map<Key, Natural> memo_;
    std::size_t max_steps_;
    std::size_t steps_ = 0;
};

}  // namespace hyperops::detail
