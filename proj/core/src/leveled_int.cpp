#include "hyperops/leveled_int.hpp"

#include <utility>

#include "hyperops/errors.hpp"

namespace hyperops {

namespace {

void require_frame(const LeveledInt& a, const LeveledInt& b) {
    if (a.base() != b.base())
        throw base_mismatch("operands use different bases");
    if (a.level() != b.level())
        throw level_mismatch("operands live at different levels");
}

}  // namespace

NatPair::NatPair(LeveledNat f, LeveledNat s)
    : first(std::move(f)), second(std::move(s)) {
    if (first.base() != second.base())
        throw base_mismatch("pair components use different bases");
    if (first.level() != second.level())
        throw level_mismatch("pair components live at different levels");
}

LeveledInt::LeveledInt(unsigned level, Integer coord, Natural base)
    : level_(level), coord_(std::move(coord)), base_(std::move(base)) {
    if (base_ < Natural(2)) throw invalid_base("base must be at least 2");
}

LeveledInt make_int(unsigned level, Integer coord, Natural base) {
    return LeveledInt(level, std::move(coord), std::move(base));
}

LeveledInt from_pair(const NatPair& p) {
    Integer coord = p.first.coord().value() - p.second.coord().value();
    return LeveledInt(p.first.level(), std::move(coord), p.first.base());
}

LeveledInt from_nat(const LeveledNat& a) {
    return LeveledInt(a.level(), a.coord().value(), a.base());
}

NatPair to_pair(const LeveledInt& a) {
    Natural zero(0);
    if (a.coord() < 0)
        return NatPair(make(a.level(), zero, a.base()),
                       make(a.level(), Natural(-a.coord()), a.base()));
    return NatPair(make(a.level(), Natural(a.coord()), a.base()),
                   make(a.level(), zero, a.base()));
}

LeveledInt z_add(const LeveledInt& a, const LeveledInt& b) {
    require_frame(a, b);
    return LeveledInt(a.level(), a.coord() + b.coord(), a.base());
}

LeveledInt z_mul(const LeveledInt& a, const LeveledInt& b) {
    require_frame(a, b);
    return LeveledInt(a.level(), a.coord() * b.coord(), a.base());
}

LeveledInt z_neg(const LeveledInt& a) {
    return LeveledInt(a.level(), -a.coord(), a.base());
}

std::strong_ordering z_compare(const LeveledInt& a, const LeveledInt& b) {
    require_frame(a, b);
    if (a.coord() < b.coord()) return std::strong_ordering::less;
    if (a.coord() > b.coord()) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

LeveledInt z_exp(const LeveledInt& a) {
    return LeveledInt(a.level() + 1, a.coord(), a.base());
}

LeveledInt z_log(const LeveledInt& a) {
    if (a.level() == 0)
        throw level_mismatch("no level below zero");
    return LeveledInt(a.level() - 1, a.coord(), a.base());
}

}  // namespace hyperops
