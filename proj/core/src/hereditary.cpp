#include "hyperops/hereditary.hpp"

#include <optional>
#include <utility>

#include "hyperops/kernel.hpp"

namespace hyperops {

bool operator==(const HereditaryEntry& a, const HereditaryEntry& b) {
    if (a.digit != b.digit) return false;
    if (a.scale.index() != b.scale.index()) return false;
    if (a.scale.index() == 0) return std::get<0>(a.scale) == std::get<0>(b.scale);
    return *std::get<1>(a.scale) == *std::get<1>(b.scale);
}

bool operator==(const HereditaryTerm& a, const HereditaryTerm& b) {
    return a.level() == b.level() && a.entries() == b.entries();
}

std::vector<Natural> digits(const Natural& a, const Natural& w) {
    if (w < Natural(2)) throw invalid_base("digit base must be at least 2");
    std::vector<Natural> out;
    Natural rest = a;
    while (!rest.is_zero()) {
        out.push_back(rest % w);
        rest /= w;
    }
    return out;
}

HereditaryTerm encode(const LeveledNat& a) {
    const Natural& w = a.base();
    std::vector<HereditaryEntry> entries;
    std::vector<Natural> ds = digits(a.coord(), w);
    for (std::size_t k = 0; k < ds.size(); ++k) {
        if (ds[k].is_zero()) continue;
        Natural pos(static_cast<unsigned long long>(k));
        if (pos < w) {
            entries.push_back({std::move(ds[k]), std::move(pos)});
        } else {
            auto nested = std::make_shared<const HereditaryTerm>(
                encode(make(a.level() + 1, std::move(pos), w)));
            entries.push_back({std::move(ds[k]), std::move(nested)});
        }
    }
    return HereditaryTerm(a.level(), std::move(entries));
}

LeveledNat decode(const HereditaryTerm& t, const Natural& w, const Budget& budget) {
    if (w < Natural(2)) throw invalid_base("digit base must be at least 2");
    LeveledNat acc = make(t.level(), 0, w);
    std::optional<Natural> prev;
    for (const auto& e : t.entries()) {
        if (e.digit.is_zero() || e.digit >= w)
            throw malformed_term("digit must lie strictly between 0 and the base");
        Natural k(0);
        if (const Natural* lit = std::get_if<Natural>(&e.scale)) {
            if (*lit >= w) throw malformed_term("literal scale reaches the base");
            k = *lit;
        } else {
            const HereditaryTerm& nested = *std::get<1>(e.scale);
            if (nested.level() != t.level() + 1)
                throw malformed_term("nested scale must sit one level above its term");
            k = decode(nested, w, budget).coord();
            if (k < w) throw malformed_term("nested scale below the base");
        }
        if (prev && *prev >= k) throw malformed_term("scales must strictly increase");
        LeveledNat weight = lower(make(t.level() + 1, k, w), budget);
        acc = f_add(acc, f_mul(make(t.level(), e.digit, w), weight));
        prev = std::move(k);
    }
    return acc;
}

}  // namespace hyperops
