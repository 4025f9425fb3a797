#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "hyperops/errors.hpp"

namespace hyperops {

// Signed arbitrary-precision integer, used for Grothendieck coordinates and
// fraction components.
using Integer = boost::multiprecision::cpp_int;

// Unbounded nonnegative integer. Construction and subtraction enforce the
// sign invariant; everything else defers to the underlying bignum.
class Natural {
public:
    Natural() = default;
    Natural(unsigned v) : n_(v) {}
    Natural(unsigned long v) : n_(v) {}
    Natural(unsigned long long v) : n_(v) {}
    Natural(int v) : n_(check_sign(Integer(v))) {}
    Natural(long v) : n_(check_sign(Integer(v))) {}
    Natural(long long v) : n_(check_sign(Integer(v))) {}
    explicit Natural(Integer v) : n_(check_sign(std::move(v))) {}
    explicit Natural(std::string_view decimal);

    const Integer& value() const noexcept { return n_; }
    bool is_zero() const noexcept { return n_.is_zero(); }
    bool is_one() const { return n_ == 1; }

    // Number of binary digits; zero has none.
    std::size_t bit_length() const;

    std::optional<std::uint64_t> to_u64() const;
    std::string str() const { return n_.str(); }

    Natural& operator+=(const Natural& o) {
        n_ += o.n_;
        return *this;
    }
    // Throws domain_error on underflow.
    Natural& operator-=(const Natural& o);
    Natural& operator*=(const Natural& o) {
        n_ *= o.n_;
        return *this;
    }
    Natural& operator/=(const Natural& o);
    Natural& operator%=(const Natural& o);
    Natural& operator++() {
        ++n_;
        return *this;
    }
    // Predecessor; throws domain_error at zero.
    Natural& operator--();

    friend Natural operator+(Natural a, const Natural& b) { return a += b; }
    friend Natural operator-(Natural a, const Natural& b) { return a -= b; }
    friend Natural operator*(Natural a, const Natural& b) { return a *= b; }
    friend Natural operator/(Natural a, const Natural& b) { return a /= b; }
    friend Natural operator%(Natural a, const Natural& b) { return a %= b; }

    friend bool operator==(const Natural& a, const Natural& b) { return a.n_ == b.n_; }
    friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
        if (a.n_ < b.n_) return std::strong_ordering::less;
        if (a.n_ > b.n_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    static Integer check_sign(Integer v) {
        if (v < 0) throw domain_error("Natural cannot be negative");
        return v;
    }

    Integer n_;
};

// base^exponent by square-and-multiply; 0^0 = 1.
Natural pow(const Natural& base, std::uint64_t exponent);

std::ostream& operator<<(std::ostream& os, const Natural& n);

}  // namespace hyperops
