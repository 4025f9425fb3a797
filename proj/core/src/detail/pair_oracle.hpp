#pragma once

#include "detail/value_oracle.hpp"
#include "hyperops/leveled_int.hpp"
#include "hyperops/leveled_nat.hpp"

namespace hyperops::detail {

// Literal class arithmetic on ordered pairs of leveled naturals, written
// straight from the componentwise definitions. Every operation goes through
// the indexed leveled operations; signed coordinates never appear.
struct PairSystem {
    static NatPair add(const NatPair& p, const NatPair& q) {
        unsigned n = p.first.level();
        return NatPair(f_op(n, p.first, q.first), f_op(n, p.second, q.second));
    }

    static NatPair mul(const NatPair& p, const NatPair& q) {
        unsigned n = p.first.level();
        return NatPair(f_op(n, f_op(n + 1, p.first, q.first),
                            f_op(n + 1, p.second, q.second)),
                       f_op(n, f_op(n + 1, p.second, q.first),
                            f_op(n + 1, p.first, q.second)));
    }

    static NatPair neg(const NatPair& p) { return NatPair(p.second, p.first); }

    // Componentwise exponential: each side moves one level up.
    static NatPair exp(const NatPair& p) {
        return NatPair(make(p.first.level() + 1, p.first.coord(), p.first.base()),
                       make(p.second.level() + 1, p.second.coord(), p.second.base()));
    }

    // Cross sums decide the class: (x,y) ~ (u,v) iff x+v and y+u coincide.
    static bool equivalent(const NatPair& p, const NatPair& q) {
        unsigned n = p.first.level();
        return f_op(n, p.first, q.second) == f_op(n, p.second, q.first);
    }

    static bool less(const NatPair& p, const NatPair& q) {
        unsigned n = p.first.level();
        return compare(f_op(n, p.first, q.second), f_op(n, p.second, q.first)) ==
               std::strong_ordering::less;
    }
};

// The same class arithmetic carried out on materialized values. Exact
// exponential and logarithm round trips stand in for every coordinate
// manipulation, so agreement with the canonical route is meaningful.
class ValuePairSystem {
  public:
    struct VPair {
        Natural first;
        Natural second;
    };

    ValuePairSystem(unsigned level, Natural base, Budget budget = {})
        : sys_(level, base, budget), level_(level), base_(std::move(base)),
          budget_(budget) {}

    VPair lift(const Natural& x, const Natural& y) const {
        return {exp_iter(level_, x, base_, budget_),
                exp_iter(level_, y, base_, budget_)};
    }

    VPair add(const VPair& a, const VPair& b) {
        return {sys_.op(1, a.first, b.first), sys_.op(1, a.second, b.second)};
    }

    VPair mul(const VPair& a, const VPair& b) {
        return {sys_.op(1, sys_.op(2, a.first, b.first),
                        sys_.op(2, a.second, b.second)),
                sys_.op(1, sys_.op(2, a.second, b.first),
                        sys_.op(2, a.first, b.second))};
    }

    VPair neg(const VPair& a) { return {a.second, a.first}; }

    VPair exp(const VPair& a) const {
        return {exp_base(a.first, base_, budget_),
                exp_base(a.second, base_, budget_)};
    }

    bool equivalent(const VPair& a, const VPair& b) {
        return sys_.op(1, a.first, b.second) == sys_.op(1, a.second, b.first);
    }

    bool less(const VPair& a, const VPair& b) {
        return sys_.op(1, a.first, b.second) < sys_.op(1, a.second, b.first);
    }

  private:
    ValueLevelSystem sys_;
    unsigned level_;
    Natural base_;
    Budget budget_;
};

}  // namespace hyperops::detail
