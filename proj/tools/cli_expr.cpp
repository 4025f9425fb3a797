#include "cli_expr.hpp"

#include <cctype>
#include <sstream>
#include <utility>

#include "hyperops/errors.hpp"

namespace hyperops::cli {

namespace {

const char* const kNames[] = {"H",   "F",   "OP",  "E",     "L",     "S",
                              "NEG", "INV", "ABS", "DIST",  "EMBED", "TOWER"};

bool known_name(const std::string& s) {
    for (const char* n : kNames)
        if (s == n) return true;
    return false;
}

struct Token {
    enum Kind { Number, Name, Punct, End } kind;
    std::string text;
    std::size_t offset;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        if (pos_ >= src_.size()) {
            current_ = {Token::End, "", src_.size()};
            return;
        }
        std::size_t start = pos_;
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < src_.size() &&
                   std::isdigit(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
            current_ = {Token::Number, std::string(src_.substr(start, pos_ - start)),
                        start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (pos_ < src_.size() &&
                   std::isalpha(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
            current_ = {Token::Name, std::string(src_.substr(start, pos_ - start)),
                        start};
            return;
        }
        ++pos_;
        current_ = {Token::Punct, std::string(1, c), start};
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    Token current_;
};

class Parser {
public:
    explicit Parser(std::string_view src) : lex_(src) {}

    Expr parse_all() {
        if (lex_.peek().kind == Token::End)
            throw parse_error("empty expression", 0);
        Expr e = parse_expr();
        if (lex_.peek().kind != Token::End)
            throw parse_error("unexpected trailing input", lex_.peek().offset);
        return e;
    }

private:
    [[noreturn]] void reject(const std::string& what) {
        throw parse_error(what, lex_.peek().offset);
    }

    bool at_punct(char c) const {
        return lex_.peek().kind == Token::Punct && lex_.peek().text[0] == c;
    }

    void expect_punct(char c, const char* what) {
        if (!at_punct(c)) reject(what);
        lex_.take();
    }

    Natural take_natural() {
        if (lex_.peek().kind != Token::Number) reject("expected a numeral");
        return Natural(std::string_view(lex_.take().text));
    }

    unsigned take_small(const char* what) {
        std::size_t off = lex_.peek().offset;
        auto v = take_natural().to_u64();
        if (!v || *v > 0xFFFFFFFFull) throw parse_error(what, off);
        return static_cast<unsigned>(*v);
    }

    Expr parse_expr() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Number || at_punct('-')) return parse_literal();
        if (t.kind == Token::Name) return parse_call();
        reject("expected an expression");
    }

    Expr parse_literal() {
        std::size_t start = lex_.peek().offset;
        bool negative = false;
        if (at_punct('-')) {
            negative = true;
            lex_.take();
            if (lex_.peek().kind != Token::Number)
                reject("expected a numeral after '-'");
        }
        Natural first = take_natural();
        if (at_punct('/')) {
            lex_.take();
            Natural den = take_natural();
            RatLit lit{Integer(first.value()), std::move(den), {}};
            if (negative) lit.num = -lit.num;
            if (at_punct('@')) {
                lex_.take();
                lit.level = take_small("level does not fit");
            }
            return Expr{std::move(lit), start};
        }
        if (negative)
            reject("negative values are written as fractions (numerator/denominator)");
        NatLit lit{std::move(first), {}, false};
        if (at_punct('@')) {
            lex_.take();
            if (lex_.peek().kind == Token::Name && lex_.peek().text == "p") {
                lex_.take();
                lit.on_path = true;
            } else {
                lit.level = take_small("level does not fit");
            }
        }
        return Expr{std::move(lit), start};
    }

    Expr parse_call() {
        std::size_t start = lex_.peek().offset;
        Token name = lex_.take();
        if (!known_name(name.text))
            throw parse_error("unknown operation name", name.offset);
        Call call{name.text, {}, {}, {}};
        if (at_punct('[')) {
            lex_.take();
            std::vector<unsigned> nums{take_small("operation number does not fit")};
            while (at_punct(',')) {
                lex_.take();
                nums.push_back(take_small("operation number does not fit"));
            }
            if (at_punct(':')) {
                lex_.take();
                call.index = take_small("operation number does not fit");
                call.steps = std::move(nums);
            } else {
                if (nums.size() != 1)
                    reject("expected ':' before the operation number");
                call.index = nums[0];
            }
            expect_punct(']', "expected ']'");
        }
        expect_punct('(', "expected '('");
        call.args.push_back(parse_expr());
        while (at_punct(',')) {
            lex_.take();
            call.args.push_back(parse_expr());
        }
        expect_punct(')', "expected ')' or ','");
        return Expr{std::move(call), start};
    }

    Lexer lex_;
};

void render_expr(const Expr& e, std::ostringstream& out) {
    if (const auto* nat = std::get_if<NatLit>(&e.node)) {
        out << nat->coord;
        if (nat->on_path)
            out << "@p";
        else if (nat->level)
            out << "@" << *nat->level;
        return;
    }
    if (const auto* rat = std::get_if<RatLit>(&e.node)) {
        out << rat->num << "/" << rat->den;
        if (rat->level) out << "@" << *rat->level;
        return;
    }
    const auto& call = std::get<Call>(e.node);
    out << call.name;
    if (!call.steps.empty()) {
        out << "[";
        for (std::size_t i = 0; i < call.steps.size(); ++i)
            out << (i ? "," : "") << call.steps[i];
        out << ":" << *call.index << "]";
    } else if (call.index) {
        out << "[" << *call.index << "]";
    }
    out << "(";
    for (std::size_t i = 0; i < call.args.size(); ++i) {
        if (i) out << ", ";
        render_expr(call.args[i], out);
    }
    out << ")";
}

}  // namespace

Expr parse(std::string_view src) { return Parser(src).parse_all(); }

std::string render(const Expr& e) {
    std::ostringstream out;
    render_expr(e, out);
    return out.str();
}

}  // namespace hyperops::cli
