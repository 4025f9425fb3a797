#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hyperops/natural.hpp"

namespace hyperops::laws {

struct LawResult {
    std::string name;
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    std::uint64_t skipped = 0;
    std::optional<std::string> first_counterexample;

    bool passed() const { return failures == 0; }
    std::uint64_t tested() const { return cases - skipped; }
};

struct SuiteReport {
    std::string suite;
    unsigned level = 0;
    std::vector<LawResult> laws;

    bool passed() const;
};

// A case draws its inputs from the generator and returns a description of the
// violation, or nothing when the law holds. Budget exhaustion skips the case;
// any other library error counts as a failure.
using CaseFn = std::function<std::optional<std::string>(std::mt19937_64&)>;

// Runs one law for the given number of cases. Case k always sees the same
// generator state for a given seed and law name, independent of other laws.
LawResult check_law(const std::string& name, std::uint64_t seed,
                    std::uint64_t cases, const CaseFn& fn);

// The individual suite names, in execution order; "all" runs every one.
const std::vector<std::string>& suite_names();

std::vector<SuiteReport> run_suite(const std::string& name, unsigned level,
                                   std::uint64_t seed, std::uint64_t cases,
                                   const Natural& base = Natural(2));

}  // namespace hyperops::laws
