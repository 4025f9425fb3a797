#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "detail/frac_oracle.hpp"
#include "hyperops/leveled_rat.hpp"

using hyperops::Integer;
using hyperops::LeveledInt;
using hyperops::LeveledRat;
using hyperops::Natural;
using hyperops::make_int;
using hyperops::make_rat;
using hyperops::q_abs;
using hyperops::q_add;
using hyperops::q_compare;
using hyperops::q_dist;
using hyperops::q_exp;
using hyperops::q_from;
using hyperops::q_inv;
using hyperops::q_log;
using hyperops::q_mul;
using hyperops::q_neg;
using FracSys = hyperops::detail::FracSystem;
using ZPair = FracSys::ZPair;

namespace {

LeveledRat rat(unsigned level, long num, long den) {
    return make_rat(level, num, den, Natural(2));
}

LeveledRat rand_rat(std::mt19937_64& rng, unsigned level) {
    auto num = static_cast<std::int64_t>(rng() % 65536) -
               static_cast<std::int64_t>(rng() % 65536);
    auto den = static_cast<std::int64_t>(1 + rng() % 65535);
    return make_rat(level, Integer(num), Integer(den), Natural(2));
}

ZPair zpair(unsigned level, long num, long den) {
    return {make_int(level, num, Natural(2)), make_int(level, den, Natural(2))};
}

ZPair as_pair(const LeveledRat& r) {
    return {make_int(r.level(), r.num(), r.base()),
            make_int(r.level(), r.den(), r.base())};
}

}  // namespace

TEST_SUITE("fraction_construction") {
    TEST_CASE("reduction and sign normalization") {
        LeveledRat r = q_from(make_int(0, 4, Natural(2)), make_int(0, -6, Natural(2)));
        CHECK_EQ(r, rat(0, -2, 3));
        CHECK_EQ(r.num(), Integer(-2));
        CHECK_EQ(r.den(), Integer(3));
        CHECK_EQ(rat(1, 12, 8), rat(1, 3, 2));
        CHECK_EQ(rat(0, 0, -7), rat(0, 0, 1));
        CHECK_EQ(q_from(make_int(2, 9, Natural(2)), make_int(2, 1, Natural(2))),
                 rat(2, 9, 1));
        CHECK_EQ(hyperops::from_int(make_int(1, -4, Natural(3))),
                 make_rat(1, -4, 1, Natural(3)));
    }

    TEST_CASE("guards") {
        CHECK_THROWS_AS(rat(0, 1, 0), hyperops::zero_denominator);
        CHECK_THROWS_AS(q_from(make_int(0, 1, Natural(2)), make_int(0, 0, Natural(2))),
                        hyperops::zero_denominator);
        CHECK_THROWS_AS(make_rat(0, 1, 2, Natural(1)), hyperops::invalid_base);
        CHECK_THROWS_AS(q_from(make_int(0, 1, Natural(2)), make_int(1, 1, Natural(2))),
                        hyperops::level_mismatch);
        CHECK_THROWS_AS(q_add(rat(0, 1, 2), rat(1, 1, 2)), hyperops::level_mismatch);
        CHECK_THROWS_AS(q_mul(rat(0, 1, 2), make_rat(0, 1, 2, Natural(3))),
                        hyperops::base_mismatch);
        CHECK_THROWS_AS(q_inv(rat(0, 0, 1)), hyperops::division_by_zero);
        CHECK_THROWS_AS(q_log(rat(0, 2, 3)), hyperops::level_mismatch);
    }
}

TEST_SUITE("fraction_arithmetic") {
    TEST_CASE("pinned results") {
        CHECK_EQ(q_add(rat(0, 1, 2), rat(0, 1, 3)), rat(0, 5, 6));
        CHECK_EQ(q_mul(rat(0, 2, 3), rat(0, 9, 4)), rat(0, 3, 2));
        CHECK_EQ(q_neg(rat(1, 2, 3)), rat(1, -2, 3));
        CHECK_EQ(q_inv(rat(0, -2, 3)), rat(0, -3, 2));
        CHECK_EQ(q_compare(rat(0, 1, 2), rat(0, 2, 3)), std::strong_ordering::less);
        CHECK_EQ(q_abs(rat(1, -3, 2)), rat(1, 3, 2));
        CHECK_EQ(q_abs(rat(1, 3, 2)), rat(1, 3, 2));
        CHECK_EQ(q_abs(rat(1, 0, 1)), rat(1, 0, 1));
        CHECK_EQ(q_dist(rat(0, 1, 2), rat(0, 2, 1)), rat(0, 3, 2));
        CHECK_EQ(q_exp(rat(0, 2, 3)), rat(1, 2, 3));
        CHECK_EQ(q_log(q_exp(rat(2, -7, 4))), rat(2, -7, 4));
    }

    TEST_CASE("field laws") {
        std::mt19937_64 rng(0x5EED10u);
        for (unsigned n = 0; n <= 3; ++n)
            for (int i = 0; i < 250; ++i) {
                LeveledRat a = rand_rat(rng, n);
                LeveledRat b = rand_rat(rng, n);
                LeveledRat c = rand_rat(rng, n);
                LeveledRat zero = rat(n, 0, 1);
                LeveledRat one = rat(n, 1, 1);
                CHECK_EQ(q_add(a, b), q_add(b, a));
                CHECK_EQ(q_add(q_add(a, b), c), q_add(a, q_add(b, c)));
                CHECK_EQ(q_add(a, zero), a);
                CHECK_EQ(q_add(a, q_neg(a)), zero);
                CHECK_EQ(q_mul(a, b), q_mul(b, a));
                CHECK_EQ(q_mul(q_mul(a, b), c), q_mul(a, q_mul(b, c)));
                CHECK_EQ(q_mul(a, one), a);
                if (a != zero) CHECK_EQ(q_mul(a, q_inv(a)), one);
                CHECK_EQ(q_mul(a, q_add(b, c)), q_add(q_mul(a, b), q_mul(a, c)));
            }
    }

    TEST_CASE("involution interaction") {
        std::mt19937_64 rng(0x5EED11u);
        for (int i = 0; i < 500; ++i) {
            unsigned n = static_cast<unsigned>(rng() % 4);
            LeveledRat a = rand_rat(rng, n);
            LeveledRat b = rand_rat(rng, n);
            CHECK_EQ(q_neg(q_neg(a)), a);
            if (a.num() != 0) {
                CHECK_EQ(q_inv(q_inv(a)), a);
                if (b.num() != 0)
                    CHECK_EQ(q_inv(q_mul(a, b)), q_mul(q_inv(a), q_inv(b)));
            }
        }
    }

    TEST_CASE("order properties") {
        std::mt19937_64 rng(0x5EED12u);
        LeveledRat zero = rat(0, 0, 1);
        for (int i = 0; i < 500; ++i) {
            LeveledRat a = rand_rat(rng, 0);
            LeveledRat b = rand_rat(rng, 0);
            LeveledRat c = rand_rat(rng, 0);
            auto ord = q_compare(a, b);
            CHECK_EQ(ord == std::strong_ordering::equal, a == b);
            if (ord == std::strong_ordering::less) {
                CHECK_EQ(q_compare(b, a), std::strong_ordering::greater);
                CHECK_EQ(q_compare(q_add(a, c), q_add(b, c)),
                         std::strong_ordering::less);
                LeveledRat p = q_abs(c);
                if (p != zero)
                    CHECK_EQ(q_compare(q_mul(a, p), q_mul(b, p)),
                             std::strong_ordering::less);
            }
        }
    }

    TEST_CASE("metric axioms") {
        std::mt19937_64 rng(0x5EED13u);
        LeveledRat zero = rat(1, 0, 1);
        for (int i = 0; i < 1000; ++i) {
            LeveledRat a = rand_rat(rng, 1);
            LeveledRat b = rand_rat(rng, 1);
            LeveledRat c = rand_rat(rng, 1);
            CHECK_EQ(q_dist(a, a), zero);
            CHECK_EQ(q_dist(a, b) == zero, a == b);
            CHECK_EQ(q_dist(a, b), q_dist(b, a));
            CHECK_NE(q_compare(q_add(q_dist(a, b), q_dist(b, c)), q_dist(a, c)),
                     std::strong_ordering::less);
        }
    }

    TEST_CASE("level shifts transport the field structure") {
        std::mt19937_64 rng(0x5EED14u);
        for (int i = 0; i < 500; ++i) {
            unsigned n = 1 + static_cast<unsigned>(rng() % 3);
            LeveledRat a = rand_rat(rng, n);
            LeveledRat b = rand_rat(rng, n);
            CHECK_EQ(q_add(a, b), q_exp(q_add(q_log(a), q_log(b))));
            CHECK_EQ(q_mul(a, b), q_exp(q_mul(q_log(a), q_log(b))));
            CHECK_EQ(q_exp(q_add(a, b)), q_add(q_exp(a), q_exp(b)));
            CHECK_EQ(q_exp(q_mul(a, b)), q_mul(q_exp(a), q_exp(b)));
        }
        LeveledRat x = rat(0, 5, 3);
        CHECK_EQ(q_exp(x).level(), 1u);
        CHECK_NE(q_exp(x), x);
    }
}

TEST_SUITE("fraction_oracle") {
    TEST_CASE("canonical route matches literal pair arithmetic") {
        for (unsigned n = 0; n <= 2; ++n) {
            int checked = 0;
            for (long x = -5; x <= 5; ++x)
                for (long y = -5; y <= 5; ++y) {
                    if (y == 0) continue;
                    for (long u = -5; u <= 5; ++u)
                        for (long v = -5; v <= 5; ++v) {
                            if (v == 0) continue;
                            ZPair p = zpair(n, x, y);
                            ZPair q = zpair(n, u, v);
                            LeveledRat a = q_from(p.num, p.den);
                            LeveledRat b = q_from(q.num, q.den);
                            CHECK(FracSys::equivalent(p, as_pair(a)));
                            CHECK_EQ(FracSys::equivalent(p, q), a == b);
                            CHECK(FracSys::equivalent(FracSys::add(p, q),
                                                      as_pair(q_add(a, b))));
                            CHECK(FracSys::equivalent(FracSys::mul(p, q),
                                                      as_pair(q_mul(a, b))));
                            CHECK(FracSys::equivalent(FracSys::neg(p),
                                                      as_pair(q_neg(a))));
                            if (x != 0)
                                CHECK(FracSys::equivalent(FracSys::inv(p),
                                                          as_pair(q_inv(a))));
                            CHECK_EQ(FracSys::less(p, q),
                                     q_compare(a, b) == std::strong_ordering::less);
                            CHECK(FracSys::equivalent(FracSys::exp(p),
                                                      as_pair(q_exp(a))));
                            ++checked;
                        }
                }
            CHECK_EQ(checked, 12100);
        }
    }

    TEST_CASE("cross-relation is a congruence") {
        std::vector<ZPair> pairs;
        for (long x = -4; x <= 4; ++x)
            for (long y = -4; y <= 4; ++y)
                if (y != 0) pairs.push_back(zpair(0, x, y));

        std::vector<std::pair<std::size_t, std::size_t>> related;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            for (std::size_t j = 0; j < pairs.size(); ++j)
                if (FracSys::equivalent(pairs[i], pairs[j])) related.emplace_back(i, j);

        // Transitivity through every related middle element.
        for (auto [i, j] : related)
            for (std::size_t k = 0; k < pairs.size(); ++k)
                if (FracSys::equivalent(pairs[j], pairs[k]))
                    CHECK(FracSys::equivalent(pairs[i], pairs[k]));

        // Compatibility with both operations across representatives.
        int checked = 0;
        for (auto [i, j] : related)
            for (auto [k, l] : related) {
                CHECK(FracSys::equivalent(FracSys::add(pairs[i], pairs[k]),
                                          FracSys::add(pairs[j], pairs[l])));
                CHECK(FracSys::equivalent(FracSys::mul(pairs[i], pairs[k]),
                                          FracSys::mul(pairs[j], pairs[l])));
                ++checked;
            }
        CHECK_GE(checked, 10000);
    }
}
