#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hyperops/budget.hpp"
#include "hyperops/leveled_nat.hpp"
#include "hyperops/natural.hpp"

namespace hyperops {

class HereditaryTerm;

// One power-series entry: digit times the base raised to a scale. A scale
// stays a literal coordinate while it is below the base and becomes a full
// term one level up once it reaches the base.
struct HereditaryEntry {
    Natural digit;
    std::variant<Natural, std::shared_ptr<const HereditaryTerm>> scale;
};

bool operator==(const HereditaryEntry& a, const HereditaryEntry& b);

// Hereditary power series for a leveled value: entries in strictly
// increasing scale order, no zero digits. Construction does not validate;
// decode() is where malformed structure is rejected.
class HereditaryTerm {
public:
    HereditaryTerm(unsigned level, std::vector<HereditaryEntry> entries)
        : level_(level), entries_(std::move(entries)) {}

    unsigned level() const noexcept { return level_; }
    const std::vector<HereditaryEntry>& entries() const noexcept { return entries_; }

private:
    unsigned level_;
    std::vector<HereditaryEntry> entries_;
};

bool operator==(const HereditaryTerm& a, const HereditaryTerm& b);

// Least-significant-first base-w digits, no trailing zeros; empty for zero.
std::vector<Natural> digits(const Natural& a, const Natural& w);

// Power series of a's coordinate over a's base, scales expanded recursively
// one level up until every scale is a literal below the base.
HereditaryTerm encode(const LeveledNat& a);

// Folds the entries back into a coordinate via the leveled semiring
// operations. Throws malformed_term when the structure breaks an invariant:
// digits outside (0,w), literal scales reaching the base, nested scales
// below it, non-increasing scales, or a nested level that is not parent+1.
LeveledNat decode(const HereditaryTerm& t, const Natural& w, const Budget& budget = {});

// Wire format: {"level": n, "entries": [{"digit": d, "scale": s}, ...]}
// where s is an integer or a nested term object. Numbers that do not fit
// 64 bits travel as decimal strings. indent < 0 emits the canonical compact
// form.
std::string to_json_string(const HereditaryTerm& t, int indent = -1);
HereditaryTerm term_from_json(std::string_view text);

}  // namespace hyperops
