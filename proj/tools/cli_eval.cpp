#include "cli_eval.hpp"

#include <cstdio>
#include <optional>
#include <sstream>
#include <utility>

#include "json.hpp"

#include "hyperops/kernel.hpp"

namespace hyperops::cli {

namespace {

[[noreturn]] void type_fail(const Expr& e, const std::string& what) {
    throw type_error("column " + std::to_string(e.offset + 1) + ": " + what);
}

double omega_of(const EvalConfig& config) {
    auto w = config.base.to_u64();
    if (!w) throw overflow_error("base does not fit a floating-point exponential");
    return static_cast<double>(*w);
}

struct Evaluator {
    const EvalConfig& config;
    const PathIndex* path = nullptr;

    LeveledInt widen(const LeveledNat& a) const { return from_nat(a); }

    LeveledRat widen_rat(const Value& v, const Expr& e) const {
        if (const auto* nat = std::get_if<LeveledNat>(&v)) return from_int(from_nat(*nat));
        if (const auto* sig = std::get_if<LeveledInt>(&v)) return from_int(*sig);
        if (const auto* rat = std::get_if<LeveledRat>(&v)) return *rat;
        type_fail(e, "expected an exact number");
    }

    Value run(const Expr& e) {
        if (const auto* nat = std::get_if<NatLit>(&e.node)) {
            if (nat->on_path) {
                if (!path)
                    type_fail(e, "'@p' only names a coordinate inside a path operation");
                return PathNat(*path, nat->coord);
            }
            return make(nat->level.value_or(0), nat->coord, config.base);
        }
        if (const auto* rat = std::get_if<RatLit>(&e.node))
            return make_rat(rat->level.value_or(0), rat->num, Integer(rat->den.value()),
                            config.base);
        return run_call(e, std::get<Call>(e.node));
    }

    void need_args(const Expr& e, const Call& call, std::size_t count) {
        if (call.args.size() != count)
            type_fail(e, call.name + " takes " + std::to_string(count) +
                             (count == 1 ? " argument" : " arguments"));
    }

    void need_plain(const Expr& e, const Call& call) {
        if (call.index || !call.steps.empty())
            type_fail(e, call.name + " takes no operation number");
    }

    Value run_call(const Expr& e, const Call& call) {
        if (call.name == "H") return run_hyper(e, call);
        if (call.name == "F") return run_leveled(e, call);
        if (call.name == "OP") return run_path(e, call);
        need_plain(e, call);
        if (call.name == "DIST") {
            need_args(e, call, 2);
            Value a = run(call.args[0]), b = run(call.args[1]);
            return q_dist(widen_rat(a, call.args[0]), widen_rat(b, call.args[1]));
        }
        need_args(e, call, 1);
        Value v = run(call.args[0]);
        const Expr& arg = call.args[0];
        if (call.name == "E") return run_exp(arg, v);
        if (call.name == "L") return run_log(arg, v);
        if (call.name == "S") return run_succ(arg, v);
        if (call.name == "NEG") {
            if (const auto* nat = std::get_if<LeveledNat>(&v)) return z_neg(widen(*nat));
            if (const auto* sig = std::get_if<LeveledInt>(&v)) return z_neg(*sig);
            if (const auto* rat = std::get_if<LeveledRat>(&v)) return q_neg(*rat);
            type_fail(arg, "NEG expects an exact number");
        }
        if (call.name == "INV") return q_inv(widen_rat(v, arg));
        if (call.name == "ABS") {
            if (const auto* nat = std::get_if<LeveledNat>(&v)) return *nat;
            if (const auto* sig = std::get_if<LeveledInt>(&v))
                return z_compare(*sig, make_int(sig->level(), 0, sig->base())) ==
                               std::strong_ordering::less
                           ? z_neg(*sig)
                           : *sig;
            if (const auto* rat = std::get_if<LeveledRat>(&v)) return q_abs(*rat);
            type_fail(arg, "ABS expects an exact number");
        }
        if (call.name == "EMBED") return to_real(v, config);
        if (call.name == "TOWER") return power_tower(to_real(v, config));
        type_fail(e, "unhandled operation " + call.name);
    }

    Value run_hyper(const Expr& e, const Call& call) {
        if (!call.index || !call.steps.empty())
            type_fail(e, "H needs a single operation number, as in H[3]");
        need_args(e, call, 2);
        Value a = run(call.args[0]), b = run(call.args[1]);
        const auto* na = std::get_if<LeveledNat>(&a);
        const auto* nb = std::get_if<LeveledNat>(&b);
        if (!na || na->level() != 0) type_fail(call.args[0], "H operates on plain naturals");
        if (!nb || nb->level() != 0) type_fail(call.args[1], "H operates on plain naturals");
        return make(0, hyper(*call.index, na->coord(), nb->coord(), config.budget),
                    config.base);
    }

    Value run_leveled(const Expr& e, const Call& call) {
        if (!call.index || !call.steps.empty())
            type_fail(e, "F needs a single operation number, as in F[2]");
        need_args(e, call, 2);
        Value a = run(call.args[0]), b = run(call.args[1]);
        bool rat = std::holds_alternative<LeveledRat>(a) ||
                   std::holds_alternative<LeveledRat>(b);
        bool sig = std::holds_alternative<LeveledInt>(a) ||
                   std::holds_alternative<LeveledInt>(b);
        unsigned m = *call.index;
        if (rat) {
            LeveledRat qa = widen_rat(a, call.args[0]), qb = widen_rat(b, call.args[1]);
            if (m == qa.level()) return q_add(qa, qb);
            if (m == qa.level() + 1) return q_mul(qa, qb);
            throw level_mismatch("operation " + std::to_string(m) +
                                 " is not defined at level " + std::to_string(qa.level()));
        }
        if (sig) {
            auto widen_int = [&](const Value& v, const Expr& where) {
                if (const auto* nat = std::get_if<LeveledNat>(&v)) return from_nat(*nat);
                if (const auto* s = std::get_if<LeveledInt>(&v)) return *s;
                type_fail(where, "expected an exact number");
            };
            LeveledInt za = widen_int(a, call.args[0]), zb = widen_int(b, call.args[1]);
            if (m == za.level()) return z_add(za, zb);
            if (m == za.level() + 1) return z_mul(za, zb);
            throw level_mismatch("operation " + std::to_string(m) +
                                 " is not defined at level " + std::to_string(za.level()));
        }
        const auto* na = std::get_if<LeveledNat>(&a);
        const auto* nb = std::get_if<LeveledNat>(&b);
        if (!na) type_fail(call.args[0], "F expects leveled operands");
        if (!nb) type_fail(call.args[1], "F expects leveled operands");
        return f_op(m, *na, *nb);
    }

    Value run_path(const Expr& e, const Call& call) {
        if (call.steps.empty() || !call.index)
            type_fail(e, "OP needs a path and an operation number, as in OP[1,2:3]");
        need_args(e, call, 2);
        PathIndex built(config.base);
        for (unsigned step : call.steps) built = extend_path(built, step);
        Evaluator inner{config, &built};
        Value a = inner.run(call.args[0]), b = inner.run(call.args[1]);
        const auto* pa = std::get_if<PathNat>(&a);
        const auto* pb = std::get_if<PathNat>(&b);
        if (!pa) type_fail(call.args[0], "path operands carry '@p'");
        if (!pb) type_fail(call.args[1], "path operands carry '@p'");
        return hyper_path(*call.index, *pa, *pb, config.budget);
    }

    Value run_exp(const Expr& arg, const Value& v) {
        if (const auto* nat = std::get_if<LeveledNat>(&v))
            return make(nat->level() + 1, nat->coord(), nat->base());
        if (const auto* sig = std::get_if<LeveledInt>(&v)) return z_exp(*sig);
        if (const auto* rat = std::get_if<LeveledRat>(&v)) return q_exp(*rat);
        if (const auto* pn = std::get_if<PathNat>(&v)) return exp_path(*pn, config.budget);
        if (const auto* x = std::get_if<double>(&v))
            return exp_omega(*x, omega_of(config));
        type_fail(arg, "E expects a number");
    }

    Value run_log(const Expr& arg, const Value& v) {
        if (const auto* nat = std::get_if<LeveledNat>(&v)) {
            if (nat->level() > 0)
                return make(nat->level() - 1, nat->coord(), nat->base());
            auto k = log_base(nat->coord(), nat->base());
            if (!k) throw not_in_image("the value is not an exact power of the base");
            return make(0, *k, nat->base());
        }
        if (const auto* sig = std::get_if<LeveledInt>(&v)) return z_log(*sig);
        if (const auto* rat = std::get_if<LeveledRat>(&v)) return q_log(*rat);
        if (const auto* pn = std::get_if<PathNat>(&v)) {
            auto back = log_path(*pn);
            if (!back)
                throw not_in_image("the coordinate is not an exact power of the top base");
            return *back;
        }
        if (const auto* x = std::get_if<double>(&v))
            return ln_omega(*x, omega_of(config));
        type_fail(arg, "L expects a number");
    }

    Value run_succ(const Expr& arg, const Value& v) {
        if (const auto* nat = std::get_if<LeveledNat>(&v)) return successor_n(*nat);
        if (const auto* sig = std::get_if<LeveledInt>(&v))
            return z_add(*sig, make_int(sig->level(), 1, sig->base()));
        if (const auto* rat = std::get_if<LeveledRat>(&v))
            return q_add(*rat, make_rat(rat->level(), 1, 1, rat->base()));
        if (const auto* pn = std::get_if<PathNat>(&v)) return succ_path(*pn);
        type_fail(arg, "S expects an exact number");
    }
};

std::string fmt_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    std::string s(buf);
    if (s.find_first_of(".eEni") == std::string::npos) s += ".0";
    return s;
}

std::optional<Natural> try_materialize(const LeveledNat& a, const Budget& budget) {
    try {
        return materialize(a, budget);
    } catch (const budget_exceeded&) {
        return std::nullopt;
    }
}

std::optional<Natural> try_materialize(const PathNat& a, const Budget& budget) {
    try {
        return materialize(a, budget);
    } catch (const budget_exceeded&) {
        return std::nullopt;
    }
}

}  // namespace

Value eval(const Expr& e, const EvalConfig& config) {
    Evaluator ev{config, nullptr};
    return ev.run(e);
}

double to_real(const Value& v, [[maybe_unused]] const EvalConfig& config) {
    if (const auto* nat = std::get_if<LeveledNat>(&v)) return embed_nat(*nat);
    if (const auto* sig = std::get_if<LeveledInt>(&v)) return embed_int(*sig);
    if (const auto* rat = std::get_if<LeveledRat>(&v)) return embed_rat(*rat);
    if (const auto* x = std::get_if<double>(&v)) return *x;
    throw type_error("only exact numbers and reals embed");
}

std::string render_value(const Value& v, const EvalConfig& config) {
    std::ostringstream out;
    if (const auto* nat = std::get_if<LeveledNat>(&v)) {
        if (nat->level() == 0) {
            out << nat->coord();
            return out.str();
        }
        out << nat->coord() << "@" << nat->level();
        if (auto d = try_materialize(*nat, config.budget)) out << " (= " << *d << ")";
        return out.str();
    }
    if (const auto* sig = std::get_if<LeveledInt>(&v)) {
        if (sig->level() == 0) {
            out << sig->coord();
            return out.str();
        }
        out << sig->coord() << "@" << sig->level();
        if (sig->coord() >= 0) {
            LeveledNat back = make(sig->level(), Natural(sig->coord()), sig->base());
            if (auto d = try_materialize(back, config.budget)) out << " (= " << *d << ")";
        }
        return out.str();
    }
    if (const auto* rat = std::get_if<LeveledRat>(&v)) {
        out << rat->num() << "/" << rat->den() << "@" << rat->level();
        return out.str();
    }
    if (const auto* pn = std::get_if<PathNat>(&v)) {
        out << pn->coord() << "@p";
        if (auto d = try_materialize(*pn, config.budget)) out << " (= " << *d << ")";
        return out.str();
    }
    if (const auto* x = std::get_if<double>(&v)) return fmt_real(*x);
    const auto& tower = std::get<TowerResult>(v);
    if (tower.status == TowerStatus::Diverged) return "diverged";
    return fmt_real(tower.value);
}

std::string value_to_json(const Value& v, const EvalConfig& config) {
    nlohmann::json j;
    if (const auto* nat = std::get_if<LeveledNat>(&v)) {
        j = {{"kind", "nat"},
             {"level", nat->level()},
             {"base", nat->base().str()},
             {"coord", nat->coord().str()}};
        if (auto d = try_materialize(*nat, config.budget)) j["value"] = d->str();
    } else if (const auto* sig = std::get_if<LeveledInt>(&v)) {
        j = {{"kind", "int"},
             {"level", sig->level()},
             {"base", sig->base().str()},
             {"coord", sig->coord().str()}};
        if (sig->coord() >= 0) {
            LeveledNat back = make(sig->level(), Natural(sig->coord()), sig->base());
            if (auto d = try_materialize(back, config.budget)) j["value"] = d->str();
        }
    } else if (const auto* rat = std::get_if<LeveledRat>(&v)) {
        j = {{"kind", "rat"},
             {"level", rat->level()},
             {"base", rat->base().str()},
             {"num", rat->num().str()},
             {"den", rat->den().str()}};
    } else if (const auto* pn = std::get_if<PathNat>(&v)) {
        j = {{"kind", "path"}, {"coord", pn->coord().str()}};
        j["steps"] = pn->path().steps();
        auto& bases = j["base_coords"] = nlohmann::json::array();
        for (const auto& b : pn->path().base_coords()) bases.push_back(b.str());
        if (auto d = try_materialize(*pn, config.budget)) j["value"] = d->str();
    } else if (const auto* x = std::get_if<double>(&v)) {
        j = {{"kind", "real"}, {"value", *x}};
    } else {
        const auto& tower = std::get<TowerResult>(v);
        j = {{"kind", "tower"},
             {"status", tower.status == TowerStatus::Converged ? "converged" : "diverged"},
             {"value", tower.value},
             {"iterations", tower.iterations}};
    }
    return j.dump();
}

std::string format_reports(const std::vector<laws::SuiteReport>& reports) {
    std::ostringstream out;
    for (const auto& report : reports) {
        out << "suite " << report.suite << "  level " << report.level << "\n";
        for (const auto& law : report.laws) {
            out << (law.passed() ? "  pass  " : "  FAIL  ") << law.name << "  cases "
                << law.cases << "  failures " << law.failures << "  skipped "
                << law.skipped << "\n";
            if (law.first_counterexample)
                out << "        first counterexample: " << *law.first_counterexample
                    << "\n";
        }
    }
    return out.str();
}

std::string reports_to_json(const std::vector<laws::SuiteReport>& reports) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& report : reports) {
        nlohmann::json suite{{"suite", report.suite}, {"level", report.level}};
        auto& items = suite["laws"] = nlohmann::json::array();
        for (const auto& law : report.laws) {
            nlohmann::json item{{"name", law.name},
                                {"cases", law.cases},
                                {"failures", law.failures},
                                {"skipped", law.skipped}};
            if (law.first_counterexample)
                item["counterexample"] = *law.first_counterexample;
            items.push_back(std::move(item));
        }
        out.push_back(std::move(suite));
    }
    return out.dump();
}

int verify_exit(const std::vector<laws::SuiteReport>& reports) {
    for (const auto& report : reports)
        if (!report.passed()) return 4;
    return 0;
}

int exit_code_for(const error& e) {
    if (dynamic_cast<const parse_error*>(&e)) return 1;
    if (dynamic_cast<const type_error*>(&e)) return 1;
    if (dynamic_cast<const budget_exceeded*>(&e)) return 3;
    return 2;
}

}  // namespace hyperops::cli
