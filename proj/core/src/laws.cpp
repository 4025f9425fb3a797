#include "hyperops/laws.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <utility>

#include "hyperops/errors.hpp"
#include "hyperops/hereditary.hpp"
#include "hyperops/kernel.hpp"
#include "hyperops/leveled_int.hpp"
#include "hyperops/leveled_nat.hpp"
#include "hyperops/leveled_rat.hpp"
#include "hyperops/path.hpp"
#include "hyperops/real_embedding.hpp"

namespace hyperops::laws {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ull;
    }
    return h;
}

std::string nat_str(const LeveledNat& a) {
    std::ostringstream out;
    out << a.coord() << "@" << a.level();
    return out.str();
}

std::string int_str(const LeveledInt& a) {
    std::ostringstream out;
    out << a.coord() << "@" << a.level();
    return out.str();
}

std::string rat_str(const LeveledRat& a) {
    std::ostringstream out;
    out << a.num() << "/" << a.den() << "@" << a.level();
    return out.str();
}

Natural coord32(std::mt19937_64& rng) {
    return Natural(rng() % (std::uint64_t{1} << 32));
}

Integer signed32(std::mt19937_64& rng) {
    auto hi = static_cast<std::int64_t>(rng() % (std::uint64_t{1} << 32));
    auto lo = static_cast<std::int64_t>(rng() % (std::uint64_t{1} << 32));
    return Integer(hi - lo);
}

std::optional<std::string> fail(std::string msg) { return {std::move(msg)}; }

using SuiteFn = SuiteReport (*)(unsigned, std::uint64_t, std::uint64_t,
                                const Natural&);

// ---------------------------------------------------------------------------
// Leveled semiring laws.

SuiteReport semiring_suite(unsigned n, std::uint64_t seed, std::uint64_t cases,
                           const Natural& w) {
    SuiteReport report{"semiring", n, {}};
    auto at = [n, &w](const Natural& c) { return make(n, c, w); };

    report.laws.push_back(check_law(
        "add-commutative", seed, cases, [&](std::mt19937_64& rng) {
            LeveledNat a = at(coord32(rng)), b = at(coord32(rng));
            if (f_add(a, b) == f_add(b, a)) return std::optional<std::string>{};
            return fail("a=" + nat_str(a) + " b=" + nat_str(b));
        }));
    report.laws.push_back(check_law(
        "add-associative", seed, cases, [&](std::mt19937_64& rng) {
            LeveledNat a = at(coord32(rng)), b = at(coord32(rng)),
                       c = at(coord32(rng));
            if (f_add(f_add(a, b), c) == f_add(a, f_add(b, c)))
                return std::optional<std::string>{};
            return fail("a=" + nat_str(a) + " b=" + nat_str(b) + " c=" + nat_str(c));
        }));
    report.laws.push_back(check_law(
        "mul-commutative", seed, cases, [&](std::mt19937_64& rng) {
            LeveledNat a = at(coord32(rng)), b = at(coord32(rng));
            if (f_mul(a, b) == f_mul(b, a)) return std::optional<std::string>{};
            return fail("a=" + nat_str(a) + " b=" + nat_str(b));
        }));
    report.laws.push_back(check_law(
        "mul-associative", seed, cases, [&](std::mt19937_64& rng) {
            LeveledNat a = at(coord32(rng)), b = at(coord32(rng)),
                       c = at(coord32(rng));
            if (f_mul(f_mul(a, b), c) == f_mul(a, f_mul(b, c)))
                return std::optional<std::string>{};
            return fail("a=" + nat_str(a) + " b=" + nat_str(b) + " c=" + nat_str(c));
        }));
    report.laws.push_back(check_law(
        "distributive", seed, cases, [&](std::mt19937_64& rng) {
            LeveledNat a = at(coord32(rng)), b = at(coord32(rng)),
                       c = at(coord32(rng));
            if (f_mul(a, f_add(b, c)) == f_add(f_mul(a, b), f_mul(a, c)))
                return std::optional<std::string>{};
            return fail("a=" + nat_str(a) + " b=" + nat_str(b) + " c=" + nat_str(c));
        }));
    report.laws.push_back(check_law(
        "identities", seed, cases, [&](std::mt19937_64& rng) {
            LeveledNat a = at(coord32(rng));
            LeveledNat zero = at(Natural(0)), one = at(Natural(1));
            if (f_add(a, zero) == a && f_mul(a, one) == a &&
                f_mul(a, zero) == zero)
                return std::optional<std::string>{};
            return fail("a=" + nat_str(a));
        }));
    report.laws.push_back(check_law(
        "successor-shift", seed, cases, [&](std::mt19937_64& rng) {
            LeveledNat a = at(coord32(rng));
            if (successor_n(a) == f_add(a, at(Natural(1))))
                return std::optional<std::string>{};
            return fail("a=" + nat_str(a));
        }));
    report.laws.push_back(check_law(
        "order-translation", seed, cases, [&](std::mt19937_64& rng) {
            LeveledNat a = at(coord32(rng)), b = at(coord32(rng)),
                       c = at(coord32(rng));
            if (compare(f_add(a, c), f_add(b, c)) == compare(a, b))
                return std::optional<std::string>{};
            return fail("a=" + nat_str(a) + " b=" + nat_str(b) + " c=" + nat_str(c));
        }));
    if (n >= 1)
        report.laws.push_back(check_law(
            "lowering-multiplies", seed, cases, [&](std::mt19937_64& rng) {
                LeveledNat a = at(Natural(rng() % 24)), b = at(Natural(rng() % 24));
                if (lower(f_add(a, b)) == f_mul(lower(a), lower(b)))
                    return std::optional<std::string>{};
                return fail("a=" + nat_str(a) + " b=" + nat_str(b));
            }));
    return report;
}

// ---------------------------------------------------------------------------
// Indexed path laws.

SuiteReport indexed_suite(unsigned n, std::uint64_t seed, std::uint64_t cases,
                          const Natural& w) {
    SuiteReport report{"indexed", n, {}};
    PathIndex root(w);
    PathIndex p = n == 0 ? root : extend_path(root, n);
    auto at = [&p](const Natural& c) { return PathNat(p, c); };
    auto str = [](const PathNat& a) {
        std::ostringstream out;
        out << a.coord() << "@path";
        return out.str();
    };

    report.laws.push_back(check_law(
        "path-add-commutative", seed, cases, [&](std::mt19937_64& rng) {
            PathNat a = at(coord32(rng)), b = at(coord32(rng));
            if (hyper_path(1, a, b) == hyper_path(1, b, a))
                return std::optional<std::string>{};
            return fail("a=" + str(a) + " b=" + str(b));
        }));
    report.laws.push_back(check_law(
        "path-add-associative", seed, cases, [&](std::mt19937_64& rng) {
            PathNat a = at(coord32(rng)), b = at(coord32(rng)), c = at(coord32(rng));
            if (hyper_path(1, hyper_path(1, a, b), c) ==
                hyper_path(1, a, hyper_path(1, b, c)))
                return std::optional<std::string>{};
            return fail("a=" + str(a) + " b=" + str(b) + " c=" + str(c));
        }));
    report.laws.push_back(check_law(
        "path-mul-commutative", seed, cases, [&](std::mt19937_64& rng) {
            PathNat a = at(coord32(rng)), b = at(coord32(rng));
            if (hyper_path(2, a, b) == hyper_path(2, b, a))
                return std::optional<std::string>{};
            return fail("a=" + str(a) + " b=" + str(b));
        }));
    report.laws.push_back(check_law(
        "path-mul-associative", seed, cases, [&](std::mt19937_64& rng) {
            PathNat a = at(coord32(rng)), b = at(coord32(rng)), c = at(coord32(rng));
            if (hyper_path(2, hyper_path(2, a, b), c) ==
                hyper_path(2, a, hyper_path(2, b, c)))
                return std::optional<std::string>{};
            return fail("a=" + str(a) + " b=" + str(b) + " c=" + str(c));
        }));
    report.laws.push_back(check_law(
        "path-distributive", seed, cases, [&](std::mt19937_64& rng) {
            PathNat a = at(coord32(rng)), b = at(coord32(rng)), c = at(coord32(rng));
            if (hyper_path(2, a, hyper_path(1, b, c)) ==
                hyper_path(1, hyper_path(2, a, b), hyper_path(2, a, c)))
                return std::optional<std::string>{};
            return fail("a=" + str(a) + " b=" + str(b) + " c=" + str(c));
        }));
    report.laws.push_back(check_law(
        "path-identities", seed, cases, [&](std::mt19937_64& rng) {
            PathNat a = at(coord32(rng)), b = at(coord32(rng));
            PathNat zero = at(Natural(0)), one = at(Natural(1));
            if (hyper_path(1, a, zero) == a && hyper_path(2, a, one) == a &&
                hyper_path(2, a, zero) == zero &&
                hyper_path(0, a, b) == succ_path(b))
                return std::optional<std::string>{};
            return fail("a=" + str(a) + " b=" + str(b));
        }));
    report.laws.push_back(check_law(
        "path-exp-log", seed, cases, [&](std::mt19937_64& rng) {
            PathNat a = at(Natural(rng() % 24));
            auto back = log_path(exp_path(a));
            if (back && *back == a) return std::optional<std::string>{};
            return fail("a=" + str(a));
        }));
    if (n >= 1)
        report.laws.push_back(check_law(
            "path-lowering", seed, cases, [&](std::mt19937_64& rng) {
                PathNat a = at(Natural(rng() % 4));
                if (materialize(lower_path(a)) == materialize(a))
                    return std::optional<std::string>{};
                return fail("a=" + str(a));
            }));
    return report;
}

// ---------------------------------------------------------------------------
// Signed number laws.

SuiteReport integers_suite(unsigned n, std::uint64_t seed, std::uint64_t cases,
                           const Natural& w) {
    SuiteReport report{"integers", n, {}};
    auto at = [n, &w](Integer c) { return make_int(n, std::move(c), w); };

    report.laws.push_back(check_law(
        "int-abelian-group", seed, cases, [&](std::mt19937_64& rng) {
            LeveledInt a = at(signed32(rng)), b = at(signed32(rng)),
                       c = at(signed32(rng));
            LeveledInt zero = at(0);
            if (z_add(a, b) == z_add(b, a) &&
                z_add(z_add(a, b), c) == z_add(a, z_add(b, c)) &&
                z_add(a, zero) == a && z_add(a, z_neg(a)) == zero)
                return std::optional<std::string>{};
            return fail("a=" + int_str(a) + " b=" + int_str(b) + " c=" + int_str(c));
        }));
    report.laws.push_back(check_law(
        "int-mul-monoid", seed, cases, [&](std::mt19937_64& rng) {
            LeveledInt a = at(signed32(rng)), b = at(signed32(rng)),
                       c = at(signed32(rng));
            if (z_mul(a, b) == z_mul(b, a) &&
                z_mul(z_mul(a, b), c) == z_mul(a, z_mul(b, c)) &&
                z_mul(a, at(1)) == a)
                return std::optional<std::string>{};
            return fail("a=" + int_str(a) + " b=" + int_str(b) + " c=" + int_str(c));
        }));
    report.laws.push_back(check_law(
        "int-distributive", seed, cases, [&](std::mt19937_64& rng) {
            LeveledInt a = at(signed32(rng)), b = at(signed32(rng)),
                       c = at(signed32(rng));
            if (z_mul(a, z_add(b, c)) == z_add(z_mul(a, b), z_mul(a, c)))
                return std::optional<std::string>{};
            return fail("a=" + int_str(a) + " b=" + int_str(b) + " c=" + int_str(c));
        }));
    report.laws.push_back(check_law(
        "int-no-zero-divisors", seed, cases, [&](std::mt19937_64& rng) {
            LeveledInt a = at(signed32(rng)), b = at(signed32(rng));
            LeveledInt zero = at(0);
            if (a == zero || b == zero || z_mul(a, b) != zero)
                return std::optional<std::string>{};
            return fail("a=" + int_str(a) + " b=" + int_str(b));
        }));
    report.laws.push_back(check_law(
        "int-negation", seed, cases, [&](std::mt19937_64& rng) {
            LeveledInt a = at(signed32(rng)), b = at(signed32(rng));
            if (z_neg(z_neg(a)) == a &&
                z_add(z_neg(a), z_neg(b)) == z_neg(z_add(a, b)) &&
                z_mul(z_neg(a), b) == z_neg(z_mul(a, b)) &&
                z_mul(z_neg(a), b) == z_mul(a, z_neg(b)) &&
                z_mul(z_neg(a), z_neg(b)) == z_mul(a, b))
                return std::optional<std::string>{};
            return fail("a=" + int_str(a) + " b=" + int_str(b));
        }));
    report.laws.push_back(check_law(
        "int-sign-rule", seed, cases, [&](std::mt19937_64& rng) {
            LeveledInt a = at(signed32(rng));
            if (z_neg(a) == z_mul(at(-1), a)) return std::optional<std::string>{};
            return fail("a=" + int_str(a));
        }));
    if (n >= 1)
        report.laws.push_back(check_law(
            "int-level-shift", seed, cases, [&](std::mt19937_64& rng) {
                LeveledInt a = at(signed32(rng)), b = at(signed32(rng));
                if (z_add(a, b) == z_exp(z_add(z_log(a), z_log(b))) &&
                    z_mul(a, b) == z_exp(z_mul(z_log(a), z_log(b))))
                    return std::optional<std::string>{};
                return fail("a=" + int_str(a) + " b=" + int_str(b));
            }));
    return report;
}

// ---------------------------------------------------------------------------
// Field laws.

SuiteReport fields_suite(unsigned n, std::uint64_t seed, std::uint64_t cases,
                         const Natural& w) {
    SuiteReport report{"fields", n, {}};
    auto at = [n, &w](Integer num, Integer den) {
        return make_rat(n, std::move(num), std::move(den), w);
    };
    auto draw = [&](std::mt19937_64& rng) {
        auto num = static_cast<std::int64_t>(rng() % 65536) -
                   static_cast<std::int64_t>(rng() % 65536);
        auto den = static_cast<std::int64_t>(1 + rng() % 65535);
        return at(Integer(num), Integer(den));
    };

    report.laws.push_back(check_law(
        "rat-add-group", seed, cases, [&](std::mt19937_64& rng) {
            LeveledRat a = draw(rng), b = draw(rng), c = draw(rng);
            LeveledRat zero = at(0, 1);
            if (q_add(a, b) == q_add(b, a) &&
                q_add(q_add(a, b), c) == q_add(a, q_add(b, c)) &&
                q_add(a, zero) == a && q_add(a, q_neg(a)) == zero)
                return std::optional<std::string>{};
            return fail("a=" + rat_str(a) + " b=" + rat_str(b) + " c=" + rat_str(c));
        }));
    report.laws.push_back(check_law(
        "rat-mul-group", seed, cases, [&](std::mt19937_64& rng) {
            LeveledRat a = draw(rng), b = draw(rng), c = draw(rng);
            LeveledRat zero = at(0, 1), one = at(1, 1);
            bool ok = q_mul(a, b) == q_mul(b, a) &&
                      q_mul(q_mul(a, b), c) == q_mul(a, q_mul(b, c)) &&
                      q_mul(a, one) == a;
            if (ok && a != zero) ok = q_mul(a, q_inv(a)) == one;
            if (ok) return std::optional<std::string>{};
            return fail("a=" + rat_str(a) + " b=" + rat_str(b) + " c=" + rat_str(c));
        }));
    report.laws.push_back(check_law(
        "rat-distributive", seed, cases, [&](std::mt19937_64& rng) {
            LeveledRat a = draw(rng), b = draw(rng), c = draw(rng);
            if (q_mul(a, q_add(b, c)) == q_add(q_mul(a, b), q_mul(a, c)))
                return std::optional<std::string>{};
            return fail("a=" + rat_str(a) + " b=" + rat_str(b) + " c=" + rat_str(c));
        }));
    report.laws.push_back(check_law(
        "rat-involutions", seed, cases, [&](std::mt19937_64& rng) {
            LeveledRat a = draw(rng), b = draw(rng);
            LeveledRat zero = at(0, 1);
            bool ok = q_neg(q_neg(a)) == a;
            if (ok && a != zero) ok = q_inv(q_inv(a)) == a;
            if (ok && a != zero && b != zero)
                ok = q_inv(q_mul(a, b)) == q_mul(q_inv(a), q_inv(b));
            if (ok) return std::optional<std::string>{};
            return fail("a=" + rat_str(a) + " b=" + rat_str(b));
        }));
    report.laws.push_back(check_law(
        "rat-order", seed, cases, [&](std::mt19937_64& rng) {
            LeveledRat a = draw(rng), b = draw(rng), c = draw(rng);
            LeveledRat zero = at(0, 1);
            auto ord = q_compare(a, b);
            bool ok = (ord == std::strong_ordering::equal) == (a == b);
            if (ok && ord == std::strong_ordering::less) {
                ok = q_compare(q_add(a, c), q_add(b, c)) == std::strong_ordering::less;
                LeveledRat p = q_abs(c);
                if (ok && p != zero)
                    ok = q_compare(q_mul(a, p), q_mul(b, p)) ==
                         std::strong_ordering::less;
            }
            if (ok) return std::optional<std::string>{};
            return fail("a=" + rat_str(a) + " b=" + rat_str(b) + " c=" + rat_str(c));
        }));
    report.laws.push_back(check_law(
        "rat-metric", seed, cases, [&](std::mt19937_64& rng) {
            LeveledRat a = draw(rng), b = draw(rng), c = draw(rng);
            LeveledRat zero = at(0, 1);
            if (q_dist(a, a) == zero && q_dist(a, b) == q_dist(b, a) &&
                q_compare(q_add(q_dist(a, b), q_dist(b, c)), q_dist(a, c)) !=
                    std::strong_ordering::less)
                return std::optional<std::string>{};
            return fail("a=" + rat_str(a) + " b=" + rat_str(b) + " c=" + rat_str(c));
        }));
    if (n >= 1)
        report.laws.push_back(check_law(
            "rat-level-shift", seed, cases, [&](std::mt19937_64& rng) {
                LeveledRat a = draw(rng), b = draw(rng);
                if (q_add(a, b) == q_exp(q_add(q_log(a), q_log(b))) &&
                    q_mul(a, b) == q_exp(q_mul(q_log(a), q_log(b))))
                    return std::optional<std::string>{};
                return fail("a=" + rat_str(a) + " b=" + rat_str(b));
            }));
    return report;
}

// ---------------------------------------------------------------------------
// Floating-point embedding laws.

SuiteReport embedding_suite(unsigned n, std::uint64_t seed, std::uint64_t cases,
                            const Natural& w) {
    SuiteReport report{"embedding", std::min(n, 2u), {}};
    unsigned eff = std::min(n, 2u);
    auto w64 = w.to_u64();
    if (!w64) throw overflow_error("base does not fit a floating-point check");
    double omega = static_cast<double>(*w64);
    auto rel_ok = [](double u, double v, double tol) {
        double scale = std::max({1.0, std::fabs(u), std::fabs(v)});
        return std::fabs(u - v) <= tol * scale;
    };

    report.laws.push_back(check_law(
        "embed-add", seed, cases, [&, eff](std::mt19937_64& rng) {
            unsigned cap = eff == 2 ? 4 : 20;
            LeveledNat a = make(eff, rng() % (cap + 1), w);
            LeveledNat b = make(eff, rng() % (cap + 1), w);
            double lhs = embed_nat(f_add(a, b));
            double rhs = bullet(static_cast<int>(eff), embed_nat(a), embed_nat(b),
                                omega);
            if (rel_ok(lhs, rhs, 1e-9)) return std::optional<std::string>{};
            return fail("a=" + nat_str(a) + " b=" + nat_str(b));
        }));
    report.laws.push_back(check_law(
        "embed-mul", seed, cases, [&, eff](std::mt19937_64& rng) {
            unsigned cap = eff == 2 ? 3 : 20;
            LeveledNat a = make(eff, rng() % (cap + 1), w);
            LeveledNat b = make(eff, rng() % (cap + 1), w);
            double lhs = embed_nat(f_mul(a, b));
            double rhs = bullet(static_cast<int>(eff) + 1, embed_nat(a),
                                embed_nat(b), omega);
            if (rel_ok(lhs, rhs, 1e-9)) return std::optional<std::string>{};
            return fail("a=" + nat_str(a) + " b=" + nat_str(b));
        }));
    report.laws.push_back(check_law(
        "embed-exp-commutes", seed, cases, [&](std::mt19937_64& rng) {
            unsigned m = rng() % 2;
            unsigned k = rng() % 6;
            LeveledNat a = make(m, k, w);
            if (rel_ok(embed_nat(make(m + 1, k, w)), exp_omega(embed_nat(a), omega),
                       1e-9))
                return std::optional<std::string>{};
            return fail("a=" + nat_str(a));
        }));
    report.laws.push_back(check_law(
        "embed-negation", seed, cases, [&, eff](std::mt19937_64& rng) {
            unsigned m = rng() % (eff + 1);
            auto num = static_cast<long>(rng() % 13) - 6;
            auto den = static_cast<long>(1 + rng() % 6);
            LeveledRat r = make_rat(m, num, den, w);
            if (rel_ok(embed_rat(q_neg(r)),
                       real_additive_inverse(static_cast<int>(m), embed_rat(r),
                                             omega),
                       1e-9))
                return std::optional<std::string>{};
            return fail("r=" + rat_str(r));
        }));
    report.laws.push_back(check_law(
        "embed-reciprocal", seed, cases, [&, eff](std::mt19937_64& rng) {
            unsigned m = rng() % (eff + 1);
            auto num = static_cast<long>(1 + rng() % 6);
            auto den = static_cast<long>(1 + rng() % 6);
            if (rng() % 2) num = -num;
            LeveledRat r = make_rat(m, num, den, w);
            if (rel_ok(embed_rat(q_inv(r)),
                       real_multiplicative_inverse(static_cast<int>(m),
                                                   embed_rat(r), omega),
                       1e-9))
                return std::optional<std::string>{};
            return fail("r=" + rat_str(r));
        }));
    report.laws.push_back(check_law(
        "tropical-max", seed, cases, [&](std::mt19937_64& rng) {
            double big = std::exp(100.0);
            double a = static_cast<double>(static_cast<long>(rng() % 2001) - 1000) /
                       100.0;
            double b = static_cast<double>(static_cast<long>(rng() % 2001) - 1000) /
                       100.0;
            if (std::fabs(bullet(-1, a, b, big) - std::max(a, b)) <= 0.01)
                return std::optional<std::string>{};
            std::ostringstream out;
            out << "a=" << a << " b=" << b;
            return fail(out.str());
        }));
    report.laws.push_back(check_law(
        "tower-fixed-point", seed, cases, [&](std::mt19937_64& rng) {
            double x = 0.08 + static_cast<double>(rng() % 1200) / 1000.0;
            if (x == 1.0) x = 1.25;
            auto r = power_tower(x, 1e-12, 200000);
            if (r.status == TowerStatus::Converged &&
                std::fabs(exp_omega(r.value, x) - r.value) <= 1e-9)
                return std::optional<std::string>{};
            std::ostringstream out;
            out << "x=" << x;
            return fail(out.str());
        }));
    return report;
}

// ---------------------------------------------------------------------------
// Hereditary representation laws.

SuiteReport hereditary_suite(unsigned n, std::uint64_t seed, std::uint64_t cases,
                             const Natural& w) {
    SuiteReport report{"hereditary", n, {}};

    struct Walk {
        const Natural* w;
        bool ok = true;
        void visit(const HereditaryTerm& t) {
            const Natural* prev = nullptr;
            bool prev_set = false;
            for (const auto& e : t.entries()) {
                if (e.digit == Natural(0) || !(e.digit < *w)) ok = false;
                if (const auto* lit = std::get_if<Natural>(&e.scale)) {
                    if (!(*lit < *w)) ok = false;
                    if (prev_set && !(*prev < *lit)) ok = false;
                    prev = lit;
                    prev_set = true;
                } else {
                    const auto& sub =
                        *std::get<std::shared_ptr<const HereditaryTerm>>(e.scale);
                    if (sub.level() != t.level() + 1) ok = false;
                    prev_set = false;
                    visit(sub);
                }
            }
        }
    };

    report.laws.push_back(check_law(
        "digits-roundtrip", seed, cases, [&](std::mt19937_64& rng) {
            LeveledNat a = make(n, Natural(rng() % (std::uint64_t{1} << 20)), w);
            LeveledNat back = decode(encode(a), w);
            if (back == a) return std::optional<std::string>{};
            return fail("a=" + nat_str(a));
        }));
    report.laws.push_back(check_law(
        "structure-bounds", seed, cases, [&](std::mt19937_64& rng) {
            LeveledNat a = make(n, Natural(rng() % (std::uint64_t{1} << 20)), w);
            Walk walk{&w};
            walk.visit(encode(a));
            if (walk.ok) return std::optional<std::string>{};
            return fail("a=" + nat_str(a));
        }));
    report.laws.push_back(check_law(
        "json-roundtrip", seed, cases, [&](std::mt19937_64& rng) {
            LeveledNat a = make(n, Natural(rng() % (std::uint64_t{1} << 20)), w);
            HereditaryTerm t = encode(a);
            std::string wire = to_json_string(t);
            HereditaryTerm back = term_from_json(wire);
            if (back == t && to_json_string(back) == wire)
                return std::optional<std::string>{};
            return fail("a=" + nat_str(a));
        }));
    return report;
}

}  // namespace

bool SuiteReport::passed() const {
    return std::all_of(laws.begin(), laws.end(),
                       [](const LawResult& l) { return l.passed(); });
}

LawResult check_law(const std::string& name, std::uint64_t seed,
                    std::uint64_t cases, const CaseFn& fn) {
    LawResult result;
    result.name = name;
    result.cases = cases;
    std::uint64_t law_hash = fnv1a(name);
    for (std::uint64_t i = 0; i < cases; ++i) {
        std::mt19937_64 rng(splitmix64(seed ^ splitmix64(law_hash ^ splitmix64(i))));
        try {
            auto why = fn(rng);
            if (why) {
                ++result.failures;
                if (!result.first_counterexample)
                    result.first_counterexample =
                        "case " + std::to_string(i) + ": " + *why;
            }
        } catch (const budget_exceeded&) {
            ++result.skipped;
        } catch (const error& e) {
            ++result.failures;
            if (!result.first_counterexample)
                result.first_counterexample =
                    "case " + std::to_string(i) + ": threw " + e.what();
        }
    }
    return result;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "semiring", "indexed", "integers", "fields", "embedding", "hereditary"};
    return names;
}

std::vector<SuiteReport> run_suite(const std::string& name, unsigned level,
                                   std::uint64_t seed, std::uint64_t cases,
                                   const Natural& base) {
    static const std::pair<const char*, SuiteFn> table[] = {
        {"semiring", semiring_suite},   {"indexed", indexed_suite},
        {"integers", integers_suite},   {"fields", fields_suite},
        {"embedding", embedding_suite}, {"hereditary", hereditary_suite},
    };
    std::vector<SuiteReport> reports;
    if (name == "all") {
        for (const auto& [nm, fn] : table)
            reports.push_back(fn(level, seed, cases, base));
        return reports;
    }
    for (const auto& [nm, fn] : table)
        if (name == nm) {
            reports.push_back(fn(level, seed, cases, base));
            return reports;
        }
    throw type_error("unknown suite: " + name);
}

}  // namespace hyperops::laws
