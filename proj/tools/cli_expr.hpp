#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hyperops/natural.hpp"

namespace hyperops::cli {

struct Expr;

// `2`, `3@1`, `1@p`. A missing level is a bare numeral (level zero); on_path
// marks the `@p` form, which only means something inside an OP argument.
struct NatLit {
    Natural coord;
    std::optional<unsigned> level;
    bool on_path = false;
};

// `-2/3@0`. A missing level again means level zero.
struct RatLit {
    Integer num;
    Natural den;
    std::optional<unsigned> level;
};

// `H[3](2,3)`, `OP[1,2:3](1@p, 2@p)`, `E(3@1)`. H and F carry their operation
// number in index with steps empty; OP carries the path in steps and the
// operation number in index; the plain functions carry neither.
struct Call {
    std::string name;
    std::vector<unsigned> steps;
    std::optional<unsigned> index;
    std::vector<Expr> args;
};

struct Expr {
    std::variant<NatLit, RatLit, Call> node;
    std::size_t offset = 0;
};

// Grammar:
//   expr    := literal | call
//   literal := NAT ["@" (NAT | "p")] | ["-"] NAT "/" NAT ["@" NAT]
//   call    := NAME ["[" NAT {"," NAT} [":" NAT] "]"] "(" expr {"," expr} ")"
// Throws parse_error carrying the byte offset of the offending token.
Expr parse(std::string_view src);

// Canonical text for an expression; parse(render(e)) reproduces e.
std::string render(const Expr& e);

}  // namespace hyperops::cli
