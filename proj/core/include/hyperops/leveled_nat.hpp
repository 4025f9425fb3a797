#pragma once

#include <compare>
#include <optional>

#include "hyperops/budget.hpp"
#include "hyperops/natural.hpp"

namespace hyperops {

// Element of the level-n semiring in logarithmic coordinates over a fixed
// base w: the pair (n, k) denotes the value E^n(k) where E(x) = w^x. Values
// at tower scale stay cheap because only the coordinate is stored.
// Equality is coordinate equality; cross-level value equality is a question
// for compare(), not operator==.
class LeveledNat {
public:
    LeveledNat(unsigned level, Natural coord, Natural base);

    unsigned level() const noexcept { return level_; }
    const Natural& coord() const noexcept { return coord_; }
    const Natural& base() const noexcept { return base_; }

    friend bool operator==(const LeveledNat&, const LeveledNat&) = default;

private:
    unsigned level_;
    Natural coord_;
    Natural base_;
};

LeveledNat make(unsigned level, Natural coord, Natural base);

// The denoted value E^level(coord), materialized exactly.
Natural materialize(const LeveledNat& a, const Budget& budget = {});

// Same denoted value one level down: coord becomes w^coord.
LeveledNat lower(const LeveledNat& a, const Budget& budget = {});

// Same denoted value one level up when coord is an exact power of the base;
// empty otherwise.
std::optional<LeveledNat> raise(const LeveledNat& a);

// Coordinate addition at the operands' shared level.
LeveledNat f_add(const LeveledNat& a, const LeveledNat& b);

// Coordinate multiplication at the operands' shared level.
LeveledNat f_mul(const LeveledNat& a, const LeveledNat& b);

// The m-th commutative operation: addition on level-m operands, the same
// operation seen one level down is multiplication on level-(m-1) operands.
// Any other operand level is rejected.
LeveledNat f_op(unsigned m, const LeveledNat& a, const LeveledNat& b);

// Leveled successor: coordinate + 1 at fixed level.
LeveledNat successor_n(const LeveledNat& a);

// Total order on denoted values. Unequal levels align downward by lower()
// first; monotonicity of E makes coordinate order the value order.
std::strong_ordering compare(const LeveledNat& a, const LeveledNat& b,
                             const Budget& budget = {});

}  // namespace hyperops
