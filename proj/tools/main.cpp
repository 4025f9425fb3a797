#include <cctype>
#include <cstddef>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cli_eval.hpp"
#include "cli_expr.hpp"
#include "hyperops/hereditary.hpp"
#include "hyperops/laws.hpp"

using namespace hyperops;

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for iterated-exponential number systems"};
    app.require_subcommand(1);

    unsigned long long base = 2;
    std::size_t budget_bits = Budget::default_max_bits;
    bool json = false;
    app.add_option("-w,--base", base, "exponential base (at least 2)");
    app.add_option("--budget-bits", budget_bits,
                   "bit ceiling for any materialized value");
    app.add_flag("--json", json, "emit JSON instead of text");

    std::string eval_text;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate an expression");
    eval_cmd->fallthrough();
    eval_cmd->add_option("expr", eval_text, "expression text")->required();

    unsigned encode_level = 0;
    std::string encode_value;
    auto* encode_cmd =
        app.add_subcommand("encode", "hereditary representation of a coordinate");
    encode_cmd->fallthrough();
    encode_cmd->add_option("--base", base, "digit base");
    encode_cmd->add_option("--level", encode_level, "carrier level of the coordinate");
    encode_cmd->add_option("value", encode_value, "coordinate, in decimal")->required();

    auto* decode_cmd =
        app.add_subcommand("decode", "decode a hereditary term from standard input");
    decode_cmd->fallthrough();
    decode_cmd->add_option("--base", base, "digit base");

    std::string suite = "all";
    unsigned suite_level = 0;
    unsigned long long seed = 42;
    unsigned long long cases = 250;
    auto* verify_cmd = app.add_subcommand("verify", "run the algebraic law suites");
    verify_cmd->fallthrough();
    verify_cmd->add_option("--suite", suite,
                           "semiring, indexed, integers, fields, embedding, "
                           "hereditary, or all");
    verify_cmd->add_option("--level", suite_level, "carrier level under test");
    verify_cmd->add_option("--seed", seed, "generator seed");
    verify_cmd->add_option("--cases", cases, "randomized cases per law");

    unsigned long long omega = 2;
    std::string embed_text;
    auto* embed_cmd =
        app.add_subcommand("embed", "map an exact value into floating point");
    embed_cmd->fallthrough();
    auto* omega_opt = embed_cmd->add_option("--omega", omega, "embedding base");
    embed_cmd->add_option("expr", embed_text, "expression text")->required();

    double tower_x = 0;
    auto* tower_cmd =
        app.add_subcommand("tower", "iterate x^x^x... and report the limit");
    tower_cmd->fallthrough();
    tower_cmd->add_option("x", tower_x, "tower base")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (omega_opt->count() > 0) base = omega;
        cli::EvalConfig config;
        config.base = Natural(base);
        config.budget.max_bits = budget_bits;

        if (app.got_subcommand(eval_cmd)) {
            cli::Value value = cli::eval(cli::parse(eval_text), config);
            std::cout << (json ? cli::value_to_json(value, config)
                               : cli::render_value(value, config))
                      << "\n";
            return 0;
        }
        if (app.got_subcommand(encode_cmd)) {
            for (std::size_t i = 0; i < encode_value.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(encode_value[i])))
                    throw parse_error("value must be a decimal numeral", i);
            LeveledNat a =
                make(encode_level, Natural(std::string_view(encode_value)), config.base);
            std::cout << to_json_string(encode(a), json ? -1 : 2) << "\n";
            return 0;
        }
        if (app.got_subcommand(decode_cmd)) {
            std::ostringstream in;
            in << std::cin.rdbuf();
            LeveledNat a = decode(term_from_json(in.str()), config.base, config.budget);
            cli::Value value = a;
            std::cout << (json ? cli::value_to_json(value, config)
                               : cli::render_value(value, config))
                      << "\n";
            return 0;
        }
        if (app.got_subcommand(verify_cmd)) {
            auto reports = laws::run_suite(suite, suite_level, seed, cases, config.base);
            if (json)
                std::cout << cli::reports_to_json(reports) << "\n";
            else
                std::cout << cli::format_reports(reports);
            return cli::verify_exit(reports);
        }
        if (app.got_subcommand(embed_cmd)) {
            cli::Value value = cli::eval(cli::parse(embed_text), config);
            cli::Value real = cli::to_real(value, config);
            std::cout << (json ? cli::value_to_json(real, config)
                               : cli::render_value(real, config))
                      << "\n";
            return 0;
        }
        if (app.got_subcommand(tower_cmd)) {
            cli::Value value = power_tower(tower_x);
            std::cout << (json ? cli::value_to_json(value, config)
                               : cli::render_value(value, config))
                      << "\n";
            return 0;
        }
    } catch (const parse_error& e) {
        std::cerr << "parse error at column " << e.offset() + 1 << ": " << e.what()
                  << "\n";
        return 1;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
