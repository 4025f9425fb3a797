#pragma once

#include <compare>

#include "hyperops/leveled_int.hpp"

namespace hyperops {

// Reduced fraction of signed coordinates at a level. The denominator is
// positive and coprime to the numerator, so each class has one representative.
class LeveledRat {
  public:
    LeveledRat(unsigned level, Integer num, Integer den, Natural base);

    unsigned level() const { return level_; }
    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }
    const Natural& base() const { return base_; }

    bool operator==(const LeveledRat&) const = default;

  private:
    unsigned level_;
    Integer num_;
    Integer den_;
    Natural base_;
};

LeveledRat make_rat(unsigned level, Integer num, Integer den, Natural base);

// Quotient of two signed numbers in one frame.
LeveledRat q_from(const LeveledInt& zn, const LeveledInt& zd);

// Embeds a signed number as a fraction over one.
LeveledRat from_int(const LeveledInt& a);

LeveledRat q_add(const LeveledRat& a, const LeveledRat& b);
LeveledRat q_mul(const LeveledRat& a, const LeveledRat& b);
LeveledRat q_neg(const LeveledRat& a);
LeveledRat q_inv(const LeveledRat& a);
std::strong_ordering q_compare(const LeveledRat& a, const LeveledRat& b);
LeveledRat q_abs(const LeveledRat& a);

// Distance |a - b|; the fraction metric.
LeveledRat q_dist(const LeveledRat& a, const LeveledRat& b);

// Level shift by one; the fraction carries over unchanged.
LeveledRat q_exp(const LeveledRat& a);
LeveledRat q_log(const LeveledRat& a);

}  // namespace hyperops
