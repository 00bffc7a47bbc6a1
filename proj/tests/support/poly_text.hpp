// Test helper: builds polyhedra from text such as "x >= 2 && 1 < p2 < 2".
#pragma once

#include "ptsynth/polyhedron.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

namespace ptsynth::testing {

class PolyText {
public:
    PolyText(std::vector<std::string> names, const std::string& text) : names_(std::move(names)), s_(text) {}

    std::vector<Inequality> parse() {
        std::vector<Inequality> out;
        if (trimmed() == "true") return out;
        for (;;) {
            LinearTerm lhs = term();
            bool any = false;
            while (auto op = cmp()) {
                LinearTerm rhs = term();
                out.push_back(Inequality::make(lhs, *op, rhs));
                lhs = rhs;
                any = true;
            }
            if (!any) throw std::invalid_argument("poly_text: expected comparison in '" + s_ + "'");
            skip();
            if (pos_ >= s_.size()) break;
            if (s_.compare(pos_, 2, "&&") != 0) throw std::invalid_argument("poly_text: expected && in '" + s_ + "'");
            pos_ += 2;
        }
        return out;
    }

private:
    std::vector<std::string> names_;
    std::string s_;
    std::size_t pos_ = 0;

    std::string trimmed() const {
        auto b = s_.find_first_not_of(' '), e = s_.find_last_not_of(' ');
        return b == std::string::npos ? "" : s_.substr(b, e - b + 1);
    }
    void skip() {
        while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
    }
    std::optional<CmpOp> cmp() {
        skip();
        if (pos_ >= s_.size()) return std::nullopt;
        auto two = s_.substr(pos_, 2);
        if (two == "<=") return pos_ += 2, CmpOp::Le;
        if (two == ">=") return pos_ += 2, CmpOp::Ge;
        if (two == "&&") return std::nullopt;
        char c = s_[pos_];
        if (c == '<') return ++pos_, CmpOp::Lt;
        if (c == '>') return ++pos_, CmpOp::Gt;
        if (c == '=') return ++pos_, CmpOp::Eq;
        return std::nullopt;
    }
    LinearTerm term() {
        LinearTerm t(names_.size());
        Rational sign = 1;
        bool first = true;
        for (;;) {
            skip();
            if (!first) {
                if (pos_ < s_.size() && s_[pos_] == '+') sign = 1;
                else if (pos_ < s_.size() && s_[pos_] == '-') sign = -1;
                else return t;
                ++pos_;
                skip();
            } else if (pos_ < s_.size() && s_[pos_] == '-') {
                sign = -1;
                ++pos_;
                skip();
            }
            first = false;
            Rational coef = 1;
            bool have_num = false;
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                std::size_t b = pos_;
                while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
                coef = Rational(s_.substr(b, pos_ - b));
                coef.canonicalize();
                have_num = true;
                skip();
                if (pos_ < s_.size() && s_[pos_] == '*') {
                    ++pos_;
                    skip();
                    have_num = false;
                }
            }
            if (have_num) {
                t.constant += sign * coef;
                continue;
            }
            std::size_t b = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string id = s_.substr(b, pos_ - b);
            std::size_t k = 0;
            while (k < names_.size() && names_[k] != id) ++k;
            if (k == names_.size()) throw std::invalid_argument("poly_text: unknown variable '" + id + "'");
            t.coeffs[k] += sign * coef;
        }
    }
};

inline Polyhedron poly(const std::vector<std::string>& names, const std::string& text) {
    return Polyhedron::from_constraints(names.size(), PolyText(names, text).parse());
}

}  // namespace ptsynth::testing
