#pragma once

#include <compare>

#include "hyperops/leveled_nat.hpp"

namespace hyperops {

// Ordered pair of leveled naturals sharing one frame. Pairs with equal cross
// sums denote the same signed number.
struct NatPair {
    LeveledNat first;
    LeveledNat second;

    NatPair(LeveledNat f, LeveledNat s);
};

// Signed coordinate at a level: the canonical representative of a pair class,
// reduced so that one side of the pair is zero.
class LeveledInt {
  public:
    LeveledInt(unsigned level, Integer coord, Natural base);

    unsigned level() const { return level_; }
    const Integer& coord() const { return coord_; }
    const Natural& base() const { return base_; }

    bool operator==(const LeveledInt&) const = default;

  private:
    unsigned level_;
    Integer coord_;
    Natural base_;
};

LeveledInt make_int(unsigned level, Integer coord, Natural base);

// Collapses a pair to its canonical signed coordinate.
LeveledInt from_pair(const NatPair& p);

// Embeds a leveled natural as a nonnegative signed number.
LeveledInt from_nat(const LeveledNat& a);

// The canonical pair representative: (coord, 0) or (0, -coord).
NatPair to_pair(const LeveledInt& a);

LeveledInt z_add(const LeveledInt& a, const LeveledInt& b);
LeveledInt z_mul(const LeveledInt& a, const LeveledInt& b);
LeveledInt z_neg(const LeveledInt& a);
std::strong_ordering z_compare(const LeveledInt& a, const LeveledInt& b);

// Level shift by one; coordinates carry over unchanged.
LeveledInt z_exp(const LeveledInt& a);
LeveledInt z_log(const LeveledInt& a);

}  // namespace hyperops
