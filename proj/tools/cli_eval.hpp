#pragma once

#include <string>
#include <variant>
#include <vector>

#include "cli_expr.hpp"
#include "hyperops/budget.hpp"
#include "hyperops/errors.hpp"
#include "hyperops/laws.hpp"
#include "hyperops/leveled_int.hpp"
#include "hyperops/leveled_nat.hpp"
#include "hyperops/leveled_rat.hpp"
#include "hyperops/path.hpp"
#include "hyperops/real_embedding.hpp"

namespace hyperops::cli {

using Value =
    std::variant<LeveledNat, LeveledInt, LeveledRat, PathNat, double, TowerResult>;

struct EvalConfig {
    Natural base = Natural(2);
    Budget budget;
};

// Evaluates a parsed expression. Type errors carry the column of the node
// that failed to check; everything else propagates from the library.
Value eval(const Expr& e, const EvalConfig& config);

// The value under the embedding: exact values map through their level,
// reals pass through. Path and tower results are rejected.
double to_real(const Value& v, const EvalConfig& config);

// `8`, `15@1 (= 32768)`, `-2/3@0`, `2@p (= 4)`, `16.0`, `diverged`. The
// materialized decimal is attached when it fits the budget.
std::string render_value(const Value& v, const EvalConfig& config);
std::string value_to_json(const Value& v, const EvalConfig& config);

std::string format_reports(const std::vector<laws::SuiteReport>& reports);
std::string reports_to_json(const std::vector<laws::SuiteReport>& reports);

// 0 when every law in every report passed, otherwise the suite-failure code.
int verify_exit(const std::vector<laws::SuiteReport>& reports);

// Exit-code contract: parse/type 1, domain 2, budget 3.
int exit_code_for(const error& e);

}  // namespace hyperops::cli
