#pragma once

#include "hyperops/leveled_int.hpp"

namespace hyperops::detail {

// Literal fraction arithmetic on pairs of signed leveled numbers, written
// straight from the cross-relation definitions. Denominators stay unreduced
// and may be negative; classes are compared by cross products only.
struct FracSystem {
    struct ZPair {
        LeveledInt num;
        LeveledInt den;
    };

    static ZPair add(const ZPair& p, const ZPair& q) {
        return {z_add(z_mul(p.num, q.den), z_mul(p.den, q.num)),
                z_mul(p.den, q.den)};
    }

    static ZPair mul(const ZPair& p, const ZPair& q) {
        return {z_mul(p.num, q.num), z_mul(p.den, q.den)};
    }

    static ZPair neg(const ZPair& p) { return {z_neg(p.num), p.den}; }

    static ZPair inv(const ZPair& p) { return {p.den, p.num}; }

    static ZPair exp(const ZPair& p) { return {z_exp(p.num), z_exp(p.den)}; }

    static bool equivalent(const ZPair& p, const ZPair& q) {
        return z_mul(p.num, q.den) == z_mul(q.num, p.den);
    }

    // Cross-product order after flipping signs so both denominators are
    // positive.
    static bool less(const ZPair& p, const ZPair& q) {
        ZPair a = p.den.coord() < 0 ? ZPair{z_neg(p.num), z_neg(p.den)} : p;
        ZPair b = q.den.coord() < 0 ? ZPair{z_neg(q.num), z_neg(q.den)} : q;
        return z_compare(z_mul(a.num, b.den), z_mul(a.den, b.num)) ==
               std::strong_ordering::less;
    }
};

}  // namespace hyperops::detail
