#include "hyperops/leveled_rat.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <utility>

#include "hyperops/errors.hpp"

namespace hyperops {

namespace {

void require_frame(const LeveledRat& a, const LeveledRat& b) {
    if (a.base() != b.base())
        throw base_mismatch("operands use different bases");
    if (a.level() != b.level())
        throw level_mismatch("operands live at different levels");
}

}  // namespace

LeveledRat::LeveledRat(unsigned level, Integer num, Integer den, Natural base)
    : level_(level), num_(std::move(num)), den_(std::move(den)),
      base_(std::move(base)) {
    if (base_ < Natural(2)) throw invalid_base("base must be at least 2");
    if (den_ == 0) throw zero_denominator("denominator is zero");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Integer g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

LeveledRat make_rat(unsigned level, Integer num, Integer den, Natural base) {
    return LeveledRat(level, std::move(num), std::move(den), std::move(base));
}

LeveledRat q_from(const LeveledInt& zn, const LeveledInt& zd) {
    if (zn.base() != zd.base())
        throw base_mismatch("operands use different bases");
    if (zn.level() != zd.level())
        throw level_mismatch("operands live at different levels");
    return LeveledRat(zn.level(), zn.coord(), zd.coord(), zn.base());
}

LeveledRat from_int(const LeveledInt& a) {
    return LeveledRat(a.level(), a.coord(), 1, a.base());
}

LeveledRat q_add(const LeveledRat& a, const LeveledRat& b) {
    require_frame(a, b);
    return LeveledRat(a.level(), a.num() * b.den() + a.den() * b.num(),
                      a.den() * b.den(), a.base());
}

LeveledRat q_mul(const LeveledRat& a, const LeveledRat& b) {
    require_frame(a, b);
    return LeveledRat(a.level(), a.num() * b.num(), a.den() * b.den(), a.base());
}

LeveledRat q_neg(const LeveledRat& a) {
    return LeveledRat(a.level(), -a.num(), a.den(), a.base());
}

LeveledRat q_inv(const LeveledRat& a) {
    if (a.num() == 0) throw division_by_zero("zero has no reciprocal");
    return LeveledRat(a.level(), a.den(), a.num(), a.base());
}

std::strong_ordering q_compare(const LeveledRat& a, const LeveledRat& b) {
    require_frame(a, b);
    Integer lhs = a.num() * b.den();
    Integer rhs = a.den() * b.num();
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

LeveledRat q_abs(const LeveledRat& a) {
    if (a.num() < 0) return q_neg(a);
    return a;
}

LeveledRat q_dist(const LeveledRat& a, const LeveledRat& b) {
    return q_abs(q_add(a, q_neg(b)));
}

LeveledRat q_exp(const LeveledRat& a) {
    return LeveledRat(a.level() + 1, a.num(), a.den(), a.base());
}

LeveledRat q_log(const LeveledRat& a) {
    if (a.level() == 0)
        throw level_mismatch("no level below zero");
    return LeveledRat(a.level() - 1, a.num(), a.den(), a.base());
}

}  // namespace hyperops
