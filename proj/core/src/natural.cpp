#include "hyperops/natural.hpp"

#include <boost/multiprecision/integer.hpp>

#include <ostream>

namespace hyperops {

namespace mp = boost::multiprecision;

Natural::Natural(std::string_view decimal) {
    if (decimal.empty()) throw domain_error("empty numeral");
    for (char c : decimal)
        if (c < '0' || c > '9') throw domain_error("numeral must be decimal digits");
    n_ = Integer(std::string(decimal));
}

std::size_t Natural::bit_length() const {
    if (n_.is_zero()) return 0;
    return static_cast<std::size_t>(mp::msb(n_)) + 1;
}

std::optional<std::uint64_t> Natural::to_u64() const {
    if (bit_length() > 64) return std::nullopt;
    return n_.convert_to<std::uint64_t>();
}

Natural& Natural::operator--() {
    if (n_.is_zero()) throw domain_error("Natural has no predecessor at zero");
    --n_;
    return *this;
}

Natural& Natural::operator-=(const Natural& o) {
    if (n_ < o.n_) throw domain_error("Natural subtraction underflow");
    n_ -= o.n_;
    return *this;
}

Natural& Natural::operator/=(const Natural& o) {
    if (o.is_zero()) throw division_by_zero("Natural division by zero");
    n_ /= o.n_;
    return *this;
}

Natural& Natural::operator%=(const Natural& o) {
    if (o.is_zero()) throw division_by_zero("Natural modulo by zero");
    n_ %= o.n_;
    return *this;
}

Natural pow(const Natural& base, std::uint64_t exponent) {
    if (exponent == 0) return Natural(1u);
    Integer acc(1);
    Integer sq = base.value();
    std::uint64_t e = exponent;
    while (e != 0) {
        if (e & 1) acc *= sq;
        e >>= 1;
        if (e != 0) sq *= sq;
    }
    return Natural(std::move(acc));
}

std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << n.value(); }

}  // namespace hyperops
