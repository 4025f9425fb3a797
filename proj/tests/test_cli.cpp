#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "json.hpp"

#include "cli_eval.hpp"
#include "cli_expr.hpp"
#include "hyperops/errors.hpp"
#include "hyperops/hereditary.hpp"

using namespace hyperops;
using namespace hyperops::cli;

namespace {

EvalConfig config_with_base(unsigned base) {
    EvalConfig config;
    config.base = Natural(base);
    return config;
}

std::string eval_text(const std::string& src, unsigned base = 2) {
    EvalConfig config = config_with_base(base);
    return render_value(eval(parse(src), config), config);
}

std::string eval_json(const std::string& src, unsigned base = 2) {
    EvalConfig config = config_with_base(base);
    return value_to_json(eval(parse(src), config), config);
}

std::size_t parse_offset(const std::string& src) {
    try {
        parse(src);
    } catch (const parse_error& e) {
        return e.offset();
    }
    return static_cast<std::size_t>(-1);
}

// Canonical concrete syntax: render(parse(s)) must reproduce s byte for byte.
const std::vector<std::string> kCorpus = {
    "0",
    "1",
    "2",
    "42",
    "2@0",
    "3@1",
    "15@1",
    "2@2",
    "7@3",
    "2@10",
    "1000000000000000000000000@1",
    "2/3",
    "2/3@0",
    "-2/3@0",
    "-1/2@2",
    "0/5@1",
    "-10/7",
    "123456789/987654321@2",
    "H[0](2, 3)",
    "H[1](2, 3)",
    "H[2](5, 5)",
    "H[3](2, 3)",
    "H[4](2, 3)",
    "H[5](2, 2)",
    "H[2](0, 7)",
    "H[3](H[1](1, 1), 3)",
    "F[1](2@1, 3@1)",
    "F[2](3@1, 5@1)",
    "F[3](2@2, 2@2)",
    "F[4](2@3, 3@3)",
    "F[2](F[1](1@1, 2@1), 4@1)",
    "F[1](S(2@1), E(2@0))",
    "OP[1:2](1@p, 2@p)",
    "OP[1,1:2](2@p, 3@p)",
    "OP[2:3](1@p, 2@p)",
    "OP[1,2,1:1](0@p, 4@p)",
    "OP[1:1](10@p, 20@p)",
    "OP[3:4](2@p, 2@p)",
    "E(3@1)",
    "E(2)",
    "E(E(2@0))",
    "L(8@0)",
    "L(3@2)",
    "L(L(2@2))",
    "L(E(5@0))",
    "S(0)",
    "S(2@2)",
    "S(S(S(0)))",
    "S(F[1](1@0, 2@0))",
    "NEG(5@1)",
    "NEG(2/3@0)",
    "NEG(NEG(7@0))",
    "INV(-2/3@0)",
    "INV(INV(2/3@0))",
    "ABS(-4/9@1)",
    "ABS(NEG(3@1))",
    "DIST(1/2@0, 2/1@0)",
    "DIST(ABS(-1/2@0), 1/3@0)",
    "EMBED(2/1@1)",
    "EMBED(3@1)",
    "EMBED(NEG(1/2@1))",
    "EMBED(0/1@0)",
    "TOWER(1/1@0)",
    "TOWER(2/3@0)",
};

}  // namespace

TEST_SUITE("expression_parsing") {
    TEST_CASE("round trip is the identity on the corpus") {
        CHECK_GE(kCorpus.size(), 50);
        for (const auto& src : kCorpus) {
            CAPTURE(src);
            CHECK_EQ(render(parse(src)), src);
        }
    }

    TEST_CASE("whitespace and level forms normalize") {
        CHECK_EQ(render(parse("  H[3]( 2 ,3 )")), "H[3](2, 3)");
        CHECK_EQ(render(parse("F[ 2 ](3@1,5@1)")), "F[2](3@1, 5@1)");
        // A bare numeral and its level-zero form stay distinct spellings.
        CHECK_EQ(render(parse("2")), "2");
        CHECK_EQ(render(parse("2@0")), "2@0");
    }

    TEST_CASE("malformed input is rejected with a position") {
        CHECK_THROWS_AS(parse(""), parse_error);
        CHECK_THROWS_AS(parse("   "), parse_error);
        CHECK_THROWS_AS(parse("H[3](2,"), parse_error);
        CHECK_EQ(parse_offset("H[3](2,"), 7);
        CHECK_THROWS_AS(parse("-2@0"), parse_error);
        CHECK_EQ(parse_offset("-2@0"), 2);
        CHECK_THROWS_AS(parse("-2"), parse_error);
        CHECK_THROWS_AS(parse("2@q"), parse_error);
        CHECK_THROWS_AS(parse("2@"), parse_error);
        CHECK_THROWS_AS(parse("H[1,2](2,3)"), parse_error);
        CHECK_THROWS_AS(parse("Q(2)"), parse_error);
        CHECK_THROWS_AS(parse("H[](2,3)"), parse_error);
        CHECK_THROWS_AS(parse("H[3](2,3) extra"), parse_error);
        CHECK_THROWS_AS(parse("2/"), parse_error);
        CHECK_THROWS_AS(parse("/3"), parse_error);
        CHECK_THROWS_AS(parse("2/3@p"), parse_error);
        CHECK_THROWS_AS(parse("H[3]2,3)"), parse_error);
        CHECK_THROWS_AS(parse("()"), parse_error);
    }
}

TEST_SUITE("expression_eval") {
    TEST_CASE("pinned results") {
        CHECK_EQ(eval_text("H[3](2, 3)"), "8");
        CHECK_EQ(eval_text("H[4](2, 3)"), "16");
        CHECK_EQ(eval_text("H[0](9, 4)"), "5");
        CHECK_EQ(eval_text("F[2](3@1, 5@1)"), "15@1 (= 32768)");
        CHECK_EQ(eval_text("F[1](2@1, 3@1)"), "5@1 (= 32)");
        CHECK_EQ(eval_text("OP[1:2](1@p, 2@p)"), "2@p (= 4)");
        CHECK_EQ(eval_text("E(3@1)"), "3@2 (= 256)");
        CHECK_EQ(eval_text("E(2)"), "2@1 (= 4)");
        CHECK_EQ(eval_text("L(8@0)"), "3");
        CHECK_EQ(eval_text("L(3@2)"), "3@1 (= 8)");
        CHECK_EQ(eval_text("S(0)"), "1");
        CHECK_EQ(eval_text("S(2@2)"), "3@2 (= 256)");
        CHECK_EQ(eval_text("NEG(2@0)"), "-2");
        CHECK_EQ(eval_text("NEG(2@1)"), "-2@1");
        CHECK_EQ(eval_text("NEG(NEG(7@0))"), "7");
        CHECK_EQ(eval_text("INV(-2/3@0)"), "-3/2@0");
        CHECK_EQ(eval_text("ABS(NEG(3@1))"), "3@1 (= 8)");
        CHECK_EQ(eval_text("ABS(-4/9@1)"), "4/9@1");
        CHECK_EQ(eval_text("DIST(1/2@0, 2/1@0)"), "3/2@0");
        CHECK_EQ(eval_text("EMBED(3@1)"), "8.0");
        CHECK_EQ(eval_text("EMBED(2/1@1)", 4), "16.0");
        CHECK_EQ(eval_text("EMBED(NEG(1/2@1))", 4), "0.5");
        CHECK_EQ(eval_text("TOWER(1/1@0)"), "1.0");
        CHECK_EQ(eval_text("TOWER(3/2@0)"), "diverged");
    }

    TEST_CASE("mixed exact operands widen to the signed or fractional carrier") {
        CHECK_EQ(eval_text("F[1](2@1, NEG(3@1))"), "-1@1");
        CHECK_EQ(eval_text("F[1](2@0, NEG(3@0))"), "-6");
        CHECK_EQ(eval_text("F[0](1/2@0, 2@0)"), "5/2@0");
        CHECK_EQ(eval_text("F[2](3@1, INV(2/1@1))"), "3/2@1");
    }

    TEST_CASE("evaluation is deterministic across runs") {
        for (const auto& src : kCorpus) {
            CAPTURE(src);
            auto once = [&src]() {
                EvalConfig config = config_with_base(2);
                try {
                    return render_value(eval(parse(src), config), config);
                } catch (const error& e) {
                    return std::string("error: ") + e.what();
                }
            };
            CHECK_EQ(once(), once());
        }
    }

    TEST_CASE("type errors name the offending column") {
        CHECK_THROWS_AS(eval_text("H(2, 3)"), type_error);
        CHECK_THROWS_AS(eval_text("H[3](2@1, 3)"), type_error);
        CHECK_THROWS_AS(eval_text("H[3](2/1@0, 3)"), type_error);
        CHECK_THROWS_AS(eval_text("E[2](3@1)"), type_error);
        CHECK_THROWS_AS(eval_text("E(2, 3)"), type_error);
        CHECK_THROWS_AS(eval_text("OP[1:2](1@p, 2)"), type_error);
        CHECK_THROWS_AS(eval_text("OP(1@p, 2@p)"), type_error);
        CHECK_THROWS_AS(eval_text("1@p"), type_error);
        CHECK_THROWS_AS(eval_text("S(EMBED(2@0))"), type_error);
        CHECK_THROWS_AS(eval_text("NEG(EMBED(2@0))"), type_error);
        CHECK_THROWS_AS(eval_text("TOWER(OP[1:1](1@p, 1@p))"), type_error);
        try {
            eval_text("F[1](2@1, 1@p)");
            FAIL("expected a type error");
        } catch (const type_error& e) {
            CHECK(std::string(e.what()).find("column 11") != std::string::npos);
        }
    }

    TEST_CASE("domain errors propagate from the library") {
        CHECK_THROWS_AS(eval_text("F[5](3@1, 5@1)"), level_mismatch);
        CHECK_THROWS_AS(eval_text("F[1](2@1, 3@2)"), level_mismatch);
        CHECK_THROWS_AS(eval_text("INV(0/1@0)"), division_by_zero);
        CHECK_THROWS_AS(eval_text("L(3@0)"), not_in_image);
        CHECK_THROWS_AS(eval_text("L(0/1@0)"), level_mismatch);
        CHECK_THROWS_AS(eval_text("2/0@0"), zero_denominator);
        CHECK_THROWS_AS(eval_text("L(OP[1:1](1@p, 2@p))"), not_in_image);
    }

    TEST_CASE("real operands pass through the exponential pair") {
        CHECK_EQ(eval_text("E(EMBED(3@0))"), "8.0");
        CHECK_EQ(eval_text("L(EMBED(16/1@0))", 4), "2.0");
    }
}

TEST_SUITE("value_json") {
    TEST_CASE("exact kinds carry decimal-string components") {
        auto nat = nlohmann::json::parse(eval_json("F[2](3@1, 5@1)"));
        CHECK_EQ(nat["kind"], "nat");
        CHECK_EQ(nat["level"], 1);
        CHECK_EQ(nat["coord"], "15");
        CHECK_EQ(nat["value"], "32768");
        CHECK_EQ(nat["base"], "2");

        auto rat = nlohmann::json::parse(eval_json("INV(-2/3@0)"));
        CHECK_EQ(rat["kind"], "rat");
        CHECK_EQ(rat["num"], "-3");
        CHECK_EQ(rat["den"], "2");
        CHECK_EQ(rat["level"], 0);

        auto sig = nlohmann::json::parse(eval_json("NEG(2@1)"));
        CHECK_EQ(sig["kind"], "int");
        CHECK_EQ(sig["coord"], "-2");
        CHECK(!sig.contains("value"));
    }

    TEST_CASE("path, real, and tower kinds") {
        auto path = nlohmann::json::parse(eval_json("OP[1:2](1@p, 2@p)"));
        CHECK_EQ(path["kind"], "path");
        CHECK_EQ(path["coord"], "2");
        CHECK_EQ(path["value"], "4");
        CHECK_EQ(path["steps"], nlohmann::json::array({1}));
        CHECK_EQ(path["base_coords"], nlohmann::json::array({"2", "2"}));

        auto real = nlohmann::json::parse(eval_json("EMBED(2/1@1)", 4));
        CHECK_EQ(real["kind"], "real");
        CHECK_EQ(real["value"], 16.0);

        auto tower = nlohmann::json::parse(eval_json("TOWER(3/2@0)"));
        CHECK_EQ(tower["kind"], "tower");
        CHECK_EQ(tower["status"], "diverged");
        CHECK_GT(tower["iterations"].get<std::uint64_t>(), 0);
    }

    // The encode/decode pipeline the subcommands drive, minus the process
    // plumbing: value -> term -> wire JSON -> term -> value.
    TEST_CASE("hereditary wire round-trip below 2048") {
        for (unsigned w : {2u, 3u, 5u}) {
            const Natural base(w);
            for (unsigned a = 0; a < 2048; ++a) {
                LeveledNat v = make(0, a, base);
                std::string wire = to_json_string(encode(v));
                CHECK_EQ(decode(term_from_json(wire), base), v);
            }
        }
    }
}

TEST_SUITE("verify_plumbing") {
    TEST_CASE("exit codes follow the error family") {
        CHECK_EQ(exit_code_for(parse_error("x", 0)), 1);
        CHECK_EQ(exit_code_for(type_error("x")), 1);
        CHECK_EQ(exit_code_for(not_in_image("x")), 2);
        CHECK_EQ(exit_code_for(level_mismatch("x")), 2);
        CHECK_EQ(exit_code_for(division_by_zero("x")), 2);
        CHECK_EQ(exit_code_for(overflow_error("x")), 2);
        CHECK_EQ(exit_code_for(budget_exceeded("x")), 3);
    }

    TEST_CASE("a corrupted operation turns into a failed suite") {
        // Stands in for a buggy library operation feeding the law runner.
        auto broken = laws::check_law("broken-mul", 3, 100, [](std::mt19937_64& rng) {
            auto a = rng() % 50, b = rng() % 50;
            if (a * b == a + b) return std::optional<std::string>{};
            return std::optional<std::string>{"a=" + std::to_string(a) +
                                              " b=" + std::to_string(b)};
        });
        laws::SuiteReport report{"semiring", 0, {broken}};
        CHECK_FALSE(report.passed());
        CHECK_EQ(verify_exit({report}), 4);
        REQUIRE(broken.first_counterexample.has_value());

        std::string text = format_reports({report});
        CHECK(text.find("FAIL") != std::string::npos);
        CHECK(text.find("first counterexample") != std::string::npos);
        CHECK(text.find("broken-mul") != std::string::npos);

        auto j = nlohmann::json::parse(reports_to_json({report}));
        CHECK_EQ(j[0]["suite"], "semiring");
        CHECK_GT(j[0]["laws"][0]["failures"].get<std::uint64_t>(), 0);
        CHECK(j[0]["laws"][0].contains("counterexample"));
    }

    TEST_CASE("clean reports exit zero and format without FAIL") {
        auto reports = laws::run_suite("integers", 1, 21, 40);
        CHECK_EQ(verify_exit(reports), 0);
        std::string text = format_reports(reports);
        CHECK(text.find("suite integers") != std::string::npos);
        CHECK_EQ(text.find("FAIL"), std::string::npos);
    }
}
