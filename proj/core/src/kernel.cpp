#include "hyperops/kernel.hpp"

#include <map>
#include <tuple>
#include <utility>

namespace hyperops {

namespace {

using Memo = std::map<std::tuple<unsigned, Integer, Integer>, Natural>;

// a^b gated so the result never outgrows the bit budget. The gate uses
// (bit_length(a)-1)*b <= log2(a^b), an exact lower bound on the result width.
Natural pow_gated(const Natural& a, const Natural& b, BudgetMeter& meter) {
    if (a.is_zero()) return b.is_zero() ? Natural(1u) : Natural(0u);
    if (a.is_one() || b.is_zero()) return Natural(1u);

    const std::size_t max_bits = meter.budget().max_bits;
    const auto b64 = b.to_u64();
    if (!b64 || *b64 > max_bits) throw budget_exceeded("exponent exceeds bit budget");
    const std::size_t low_bits = a.bit_length() - 1;
    if (low_bits > 0 && *b64 > max_bits / low_bits)
        throw budget_exceeded("power exceeds bit budget");

    meter.count_steps();
    Natural r = pow(a, *b64);
    meter.check_magnitude(r);
    return r;
}

Natural hyper_rec(unsigned n, const Natural& a, const Natural& b, BudgetMeter& meter,
                  Memo& memo) {
    switch (n) {
        case 0: {
            meter.count_steps();
            Natural r = b;
            ++r;
            meter.check_magnitude(r);
            return r;
        }
        case 1: {
            meter.count_steps();
            Natural r = a + b;
            meter.check_magnitude(r);
            return r;
        }
        case 2: {
            meter.count_steps();
            meter.check_bits(a.bit_length() + b.bit_length());
            return a * b;
        }
        case 3:
            return pow_gated(a, b, meter);
        default:
            break;
    }

    const auto key = std::make_tuple(n, a.value(), b.value());
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    // H_n(a,b) climbs b rungs of H_{n-1}: t_0 = 1, t_{i+1} = H_{n-1}(a, t_i).
    const auto b64 = b.to_u64();
    if (!b64 || *b64 > meter.budget().max_steps)
        throw budget_exceeded("unfolding count exceeds step budget");
    Natural t(1u);
    for (std::uint64_t i = 0; i < *b64; ++i) {
        meter.count_steps();
        t = hyper_rec(n - 1, a, t, meter, memo);
    }
    memo.emplace(key, t);
    return t;
}

void require_base(const Natural& w0) {
    if (w0 < Natural(2u)) throw domain_error("exponential base must be at least 2");
}

}  // namespace

Natural hyper(unsigned n, const Natural& a, const Natural& b, const Budget& budget) {
    BudgetMeter meter(budget);
    Memo memo;
    return hyper_rec(n, a, b, meter, memo);
}

Natural tetration(const Natural& w, long long h, const Budget& budget) {
    require_base(w);
    if (h < -1) throw domain_error("tetration height below -1");
    if (h == -1) return Natural(0u);
    BudgetMeter meter(budget);
    Natural t(1u);
    for (long long i = 0; i < h; ++i) t = pow_gated(w, t, meter);
    return t;
}

Natural exp_base(const Natural& a, const Natural& w0, const Budget& budget) {
    require_base(w0);
    BudgetMeter meter(budget);
    return pow_gated(w0, a, meter);
}

std::optional<Natural> log_base(const Natural& a, const Natural& w0) {
    require_base(w0);
    if (a.is_zero()) return std::nullopt;
    if (a.is_one()) return Natural(0u);

    // Power-of-two bases reduce to bit positions.
    if ((w0.value() & (w0.value() - 1)) == 0) {
        const std::size_t base_bits = w0.bit_length() - 1;
        const std::size_t a_bits = a.bit_length() - 1;
        if (a.value() != (Integer(1) << a_bits)) return std::nullopt;
        if (a_bits % base_bits != 0) return std::nullopt;
        return Natural(static_cast<unsigned long long>(a_bits / base_bits));
    }

    Natural rest = a;
    Natural k(0u);
    while (!rest.is_one()) {
        if (!(rest % w0).is_zero()) return std::nullopt;
        rest /= w0;
        ++k;
    }
    return k;
}

unsigned filtration_level(const Natural& a, const Natural& w0) {
    require_base(w0);
    unsigned n = 0;
    Natural cur = a;
    while (auto k = log_base(cur, w0)) {
        cur = *k;
        ++n;
    }
    return n;
}

Natural adjoint_op(const UnaryFn& f, const PartialUnaryFn& f_inv, const BinaryFn& op,
                   const Natural& a, const Natural& b) {
    auto x = f_inv(a);
    if (!x) throw not_in_image("left operand has no preimage");
    auto y = f_inv(b);
    if (!y) throw not_in_image("right operand has no preimage");
    return f(op(*x, *y));
}

}  // namespace hyperops
