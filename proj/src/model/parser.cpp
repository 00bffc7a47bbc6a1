// ============================================================================
// parser.cpp: hand-written lexer and recursive-descent parser
// ============================================================================

#include "ptsynth/parser.hpp"
#include "ptsynth/transform.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace ptsynth {

namespace {

enum class Tok { Ident, Number, Symbol, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    std::size_t line = 0, column = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : src_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_space();
            Token t;
            t.line = line_;
            t.column = col_;
            if (pos_ >= src_.size()) {
                t.kind = Tok::End;
                out.push_back(t);
                return out;
            }
            char c = src_[pos_];
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                t.kind = Tok::Ident;
                while (pos_ < src_.size() &&
                       (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                    t.text += advance();
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                // Decimal points and fractions are lexed so the parser can
                // reject them with a useful message.
                t.kind = Tok::Number;
                while (pos_ < src_.size() &&
                       (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.' ||
                        src_[pos_] == '/'))
                    t.text += advance();
            } else {
                t.kind = Tok::Symbol;
                static const char* two[] = {"->", "&&", "<=", ">="};
                bool matched = false;
                for (const char* s : two) {
                    if (src_.compare(pos_, 2, s) == 0) {
                        t.text += advance();
                        t.text += advance();
                        matched = true;
                        break;
                    }
                }
                if (!matched) t.text += advance();
            }
            out.push_back(std::move(t));
        }
    }

private:
    const std::string& src_;
    std::size_t pos_ = 0, line_ = 1, col_ = 1;

    char advance() {
        char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_space() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else {
                break;
            }
        }
    }
};

struct SyntaxError {
    Diagnostic diag;
};

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Pta parse_model() {
        Pta pta;
        expect_keyword("clocks");
        pta.clocks = ident_list(";");
        expect(";");
        expect_keyword("params");
        pta.params = ident_list(";");
        expect(";");
        expect_keyword("actions");
        pta.actions = ident_list(";");
        expect(";");
        pta.global_clock.assign(pta.clocks.size(), false);
        check_declarations(pta);

        while (is_keyword("global")) {
            next();
            Token id = expect_ident();
            expect(";");
            auto c = pta.find_clock(id.text);
            if (!c) semantic(id, "'" + id.text + "' is not a declared clock");
            else pta.global_clock[*c] = true;
        }

        bool have_init = false;
        while (is_keyword("init") || is_keyword("urgent") || is_keyword("loc")) {
            Token start = peek();
            bool init = false, urgent = false;
            if (is_keyword("init")) {
                next();
                init = true;
            }
            if (is_keyword("urgent")) {
                next();
                urgent = true;
            }
            expect_keyword("loc");
            Token id = expect_ident();
            Location loc;
            loc.name = id.text;
            loc.urgent = urgent;
            if (is_keyword("inv")) {
                next();
                loc.invariant = guard(pta);
            }
            expect(";");
            if (pta.find_location(loc.name)) semantic(id, "duplicate location '" + loc.name + "'");
            if (init) {
                if (have_init) semantic(start, "more than one initial location");
                have_init = true;
                pta.initial = pta.locations.size();
            }
            pta.locations.push_back(std::move(loc));
        }
        if (pta.locations.empty()) syntax(peek(), "expected at least one 'loc' declaration");
        if (!have_init) semantic(toks_.front(), "no location is marked 'init'");

        while (is_keyword("edge")) {
            next();
            Edge e;
            Token src = expect_ident();
            expect("->");
            Token dst = expect_ident();
            auto s = pta.find_location(src.text), d = pta.find_location(dst.text);
            if (!s) semantic(src, "undeclared location '" + src.text + "'");
            if (!d) semantic(dst, "undeclared location '" + dst.text + "'");
            e.source = s.value_or(0);
            e.target = d.value_or(0);
            if (is_keyword("when")) {
                next();
                e.guard = guard(pta);
            }
            if (is_keyword("act")) {
                next();
                Token a = expect_ident();
                e.action = pta.find_action(a.text);
                if (!e.action) semantic(a, "undeclared action '" + a.text + "'");
            }
            if (is_keyword("reset")) {
                next();
                expect("{");
                std::vector<Token> ids;
                ids.push_back(expect_ident());
                while (is_symbol(",")) {
                    next();
                    ids.push_back(expect_ident());
                }
                expect("}");
                for (const auto& t : ids) {
                    auto c = pta.find_clock(t.text);
                    if (!c) semantic(t, "'" + t.text + "' is not a declared clock");
                    else e.resets.push_back(*c);
                }
                std::sort(e.resets.begin(), e.resets.end());
                e.resets.erase(std::unique(e.resets.begin(), e.resets.end()), e.resets.end());
            }
            expect(";");
            pta.edges.push_back(std::move(e));
        }
        if (peek().kind != Tok::End) syntax(peek(), "unexpected '" + peek().text + "'");
        if (!errors_.empty()) throw ModelError(std::move(errors_));
        return pta;
    }

    Property parse_property() {
        Property prop;
        expect_keyword("targets");
        expect("{");
        prop.targets.push_back(expect_ident().text);
        while (is_symbol(",")) {
            next();
            prop.targets.push_back(expect_ident().text);
        }
        expect("}");
        if (is_symbol(";")) next();
        if (is_keyword("minimize")) {
            next();
            prop.minimize = expect_ident().text;
            if (is_symbol(";")) next();
        }
        if (peek().kind != Tok::End) syntax(peek(), "unexpected '" + peek().text + "'");
        return prop;
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::vector<Diagnostic> errors_;

    const Token& peek() const { return toks_[pos_]; }
    const Token& next() {
        const Token& t = toks_[pos_];
        if (t.kind != Tok::End) ++pos_;
        return t;
    }

    [[noreturn]] void syntax(const Token& t, std::string msg) {
        throw SyntaxError{Diagnostic{t.line, t.column, std::move(msg)}};
    }
    void semantic(const Token& t, std::string msg) {
        errors_.push_back(Diagnostic{t.line, t.column, std::move(msg)});
    }

    bool is_keyword(const char* kw) const { return peek().kind == Tok::Ident && peek().text == kw; }
    bool is_symbol(const char* s) const { return peek().kind == Tok::Symbol && peek().text == s; }

    void expect_keyword(const char* kw) {
        if (!is_keyword(kw)) syntax(peek(), std::string("expected '") + kw + "'" + found());
        next();
    }
    void expect(const char* s) {
        if (!is_symbol(s)) syntax(peek(), std::string("expected '") + s + "'" + found());
        next();
    }
    Token expect_ident() {
        if (peek().kind != Tok::Ident) syntax(peek(), "expected identifier" + found());
        return next();
    }
    std::string found() const {
        if (peek().kind == Tok::End) return " but reached end of input";
        return " but found '" + peek().text + "'";
    }

    std::vector<std::string> ident_list(const char* terminator) {
        std::vector<std::string> out;
        if (is_symbol(terminator)) return out;
        out.push_back(expect_ident().text);
        while (is_symbol(",")) {
            next();
            out.push_back(expect_ident().text);
        }
        return out;
    }

    void check_declarations(const Pta& pta) {
        std::set<std::string> seen;
        auto scan = [&](const std::vector<std::string>& names) {
            for (const auto& n : names)
                if (!seen.insert(n).second)
                    errors_.push_back(Diagnostic{toks_.front().line, toks_.front().column,
                                                 "identifier '" + n + "' declared twice"});
        };
        scan(pta.clocks);
        scan(pta.params);
    }

    CmpOp op() {
        const Token& t = peek();
        if (t.kind == Tok::Symbol) {
            if (t.text == "<") return next(), CmpOp::Lt;
            if (t.text == "<=") return next(), CmpOp::Le;
            if (t.text == "=") return next(), CmpOp::Eq;
            if (t.text == ">=") return next(), CmpOp::Ge;
            if (t.text == ">") return next(), CmpOp::Gt;
        }
        syntax(t, "expected comparison operator" + found());
    }

    Guard guard(const Pta& pta) {
        Guard g;
        g.push_back(atom(pta));
        while (is_symbol("&&")) {
            next();
            g.push_back(atom(pta));
        }
        return g;
    }

    Atom atom(const Pta& pta) {
        Atom a;
        Token lhs = expect_ident();
        a.op = op();
        auto clock = pta.find_clock(lhs.text);
        const bool lhs_param = !clock && pta.find_param(lhs.text);
        if (!clock && !lhs_param) semantic(lhs, "undeclared clock '" + lhs.text + "'");
        a.clock = clock.value_or(0);

        const Token& rhs = peek();
        if (rhs.kind == Tok::Number) {
            next();
            if (rhs.text.find_first_of("./") != std::string::npos) {
                semantic(rhs, "constant " + rhs.text +
                                  " is not a natural number; rescale the model to integer constants");
            } else {
                a.constant = Rational(rhs.text);
            }
        } else if (rhs.kind == Tok::Ident) {
            next();
            a.param = pta.find_param(rhs.text);
            if (!a.param) {
                if (pta.find_clock(rhs.text))
                    semantic(rhs, "clock-clock comparison '" + lhs.text + " " + to_string(a.op) + " " + rhs.text +
                                      "' is outside the guard grammar");
                else
                    semantic(rhs, "undeclared parameter '" + rhs.text + "'");
                a.param = 0;
            } else if (lhs_param) {
                semantic(lhs, "parameter-parameter comparison '" + lhs.text + " " + to_string(a.op) + " " +
                                  rhs.text + "' is outside the guard grammar");
                return a;
            }
            if (lhs_param) semantic(lhs, "left side of an atom must be a clock, found parameter '" + lhs.text + "'");
        } else if (rhs.kind == Tok::Symbol && rhs.text == "-") {
            semantic(rhs, "negative constants are not allowed");
            next();
            if (peek().kind == Tok::Number) next();
        } else {
            syntax(rhs, "expected constant or parameter" + found());
        }
        if (rhs.kind == Tok::Number && lhs_param)
            semantic(lhs, "left side of an atom must be a clock, found parameter '" + lhs.text + "'");
        return a;
    }
};

template <class F>
auto with_diagnostics(const std::string& text, F&& body) {
    try {
        Parser p(Lexer(text).run());
        return body(p);
    } catch (const SyntaxError& e) {
        throw ModelError(std::vector<Diagnostic>{e.diag});
    }
}

}  // namespace

Pta parse_model(const std::string& text) {
    Pta pta = with_diagnostics(text, [](Parser& p) { return p.parse_model(); });
    pta = encode_urgency(pta);
    validate(pta);
    return pta;
}

Property parse_property(const std::string& text) {
    return with_diagnostics(text, [](Parser& p) { return p.parse_property(); });
}

std::vector<std::size_t> resolve_targets(const Pta& pta, const std::vector<std::string>& names) {
    if (names.empty()) throw ModelError("no target locations given");
    std::vector<std::size_t> out;
    std::vector<Diagnostic> errs;
    for (const auto& n : names) {
        auto l = pta.find_location(n);
        if (!l) errs.push_back(Diagnostic{0, 0, "unknown target location '" + n + "'"});
        else out.push_back(*l);
    }
    if (!errs.empty()) throw ModelError(std::move(errs));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace ptsynth
