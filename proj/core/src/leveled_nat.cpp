#include "hyperops/leveled_nat.hpp"

#include <utility>

#include "hyperops/kernel.hpp"

namespace hyperops {

LeveledNat::LeveledNat(unsigned level, Natural coord, Natural base)
    : level_(level), coord_(std::move(coord)), base_(std::move(base)) {
    if (base_ < Natural(2)) throw invalid_base("leveled base must be at least 2");
}

LeveledNat make(unsigned level, Natural coord, Natural base) {
    return LeveledNat(level, std::move(coord), std::move(base));
}

Natural materialize(const LeveledNat& a, const Budget& budget) {
    Natural t = a.coord();
    for (unsigned i = 0; i < a.level(); ++i) t = exp_base(t, a.base(), budget);
    return t;
}

LeveledNat lower(const LeveledNat& a, const Budget& budget) {
    if (a.level() == 0) throw level_mismatch("cannot lower below level zero");
    return LeveledNat(a.level() - 1, exp_base(a.coord(), a.base(), budget), a.base());
}

std::optional<LeveledNat> raise(const LeveledNat& a) {
    auto k = log_base(a.coord(), a.base());
    if (!k) return std::nullopt;
    return LeveledNat(a.level() + 1, std::move(*k), a.base());
}

namespace {

void require_frame(const LeveledNat& a, const LeveledNat& b) {
    if (a.base() != b.base()) throw base_mismatch("operands use different bases");
    if (a.level() != b.level()) throw level_mismatch("operands sit at different levels");
}

}  // namespace

LeveledNat f_add(const LeveledNat& a, const LeveledNat& b) {
    require_frame(a, b);
    return LeveledNat(a.level(), a.coord() + b.coord(), a.base());
}

LeveledNat f_mul(const LeveledNat& a, const LeveledNat& b) {
    require_frame(a, b);
    return LeveledNat(a.level(), a.coord() * b.coord(), a.base());
}

LeveledNat f_op(unsigned m, const LeveledNat& a, const LeveledNat& b) {
    require_frame(a, b);
    if (a.level() == m) return f_add(a, b);
    if (a.level() + 1 == m) return f_mul(a, b);
    throw level_mismatch("operation index must match the operand level or exceed it by one");
}

LeveledNat successor_n(const LeveledNat& a) {
    Natural next = a.coord();
    ++next;
    return LeveledNat(a.level(), std::move(next), a.base());
}

std::strong_ordering compare(const LeveledNat& a, const LeveledNat& b,
                             const Budget& budget) {
    if (a.base() != b.base()) throw base_mismatch("operands use different bases");
    LeveledNat x = a;
    LeveledNat y = b;
    while (x.level() > y.level()) x = lower(x, budget);
    while (y.level() > x.level()) y = lower(y, budget);
    return x.coord() <=> y.coord();
}

}  // namespace hyperops
