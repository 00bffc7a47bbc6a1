// ============================================================================
// linear.cpp: linear terms, inequalities, integer-normalized rendering
// ============================================================================

#include "ptsynth/linear.hpp"

#include <sstream>
#include <stdexcept>

namespace ptsynth {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        std::size_t frac = text.size() - dot - 1;
        Integer num;
        if (num.set_str(digits, 10) != 0)
            throw std::invalid_argument("malformed rational: " + text);
        Integer den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    Rational q;
    if (q.set_str(text, 10) != 0 || q.get_den() == 0)
        throw std::invalid_argument("malformed rational: " + text);
    q.canonicalize();
    return q;
}

const char* to_string(CmpOp op) {
    switch (op) {
        case CmpOp::Lt: return "<";
        case CmpOp::Le: return "<=";
        case CmpOp::Eq: return "=";
        case CmpOp::Ge: return ">=";
        case CmpOp::Gt: return ">";
    }
    return "?";
}

// ============================================================================
// LinearTerm
// ============================================================================

LinearTerm LinearTerm::variable(std::size_t dim, VarIndex v) {
    LinearTerm t(dim);
    t.coeffs.at(v) = 1;
    return t;
}

LinearTerm LinearTerm::constant_term(std::size_t dim, const Rational& c) {
    LinearTerm t(dim);
    t.constant = c;
    return t;
}

bool LinearTerm::is_constant() const {
    for (const auto& c : coeffs)
        if (sgn(c) != 0) return false;
    return true;
}

Rational LinearTerm::evaluate(std::span<const Rational> point) const {
    Rational acc = constant;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (sgn(coeffs[i]) != 0) acc += coeffs[i] * point[i];
    return acc;
}

LinearTerm& LinearTerm::operator+=(const LinearTerm& o) {
    if (coeffs.size() < o.coeffs.size()) coeffs.resize(o.coeffs.size());
    for (std::size_t i = 0; i < o.coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
    constant += o.constant;
    return *this;
}

LinearTerm& LinearTerm::operator-=(const LinearTerm& o) {
    if (coeffs.size() < o.coeffs.size()) coeffs.resize(o.coeffs.size());
    for (std::size_t i = 0; i < o.coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
    constant -= o.constant;
    return *this;
}

LinearTerm& LinearTerm::operator*=(const Rational& k) {
    for (auto& c : coeffs) c *= k;
    constant *= k;
    return *this;
}

LinearTerm LinearTerm::operator-() const {
    LinearTerm t = *this;
    t *= Rational(-1);
    return t;
}

// ============================================================================
// Inequality
// ============================================================================

Inequality Inequality::make(const LinearTerm& lhs, CmpOp op, const LinearTerm& rhs) {
    Inequality q;
    switch (op) {
        case CmpOp::Lt: q.term = lhs - rhs; q.rel = Rel::Lt; break;
        case CmpOp::Le: q.term = lhs - rhs; q.rel = Rel::Le; break;
        case CmpOp::Eq: q.term = lhs - rhs; q.rel = Rel::Eq; break;
        case CmpOp::Ge: q.term = rhs - lhs; q.rel = Rel::Le; break;
        case CmpOp::Gt: q.term = rhs - lhs; q.rel = Rel::Lt; break;
    }
    return q;
}

bool Inequality::satisfied_by(std::span<const Rational> point) const {
    int s = sgn(term.evaluate(point));
    switch (rel) {
        case Rel::Lt: return s < 0;
        case Rel::Le: return s <= 0;
        case Rel::Eq: return s == 0;
    }
    return false;
}

void Inequality::normalize() {
    Integer den_lcm = 1;
    auto fold_den = [&](const Rational& q) {
        if (sgn(q) != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
    };
    for (const auto& c : term.coeffs) fold_den(c);
    fold_den(term.constant);

    Integer num_gcd = 0;
    auto fold_num = [&](const Rational& q) {
        if (sgn(q) == 0) return;
        Integer n = q.get_num() * (den_lcm / q.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    };
    for (const auto& c : term.coeffs) fold_num(c);
    fold_num(term.constant);
    if (num_gcd == 0) return;

    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (rel == Rel::Eq) {
        for (const auto& c : term.coeffs) {
            if (sgn(c) != 0) {
                if (sgn(c) < 0) scale = -scale;
                break;
            }
        }
    }
    if (scale != 1) term *= scale;
}

std::string render(const Inequality& ineq, std::span<const std::string> names) {
    Inequality q = ineq;
    q.normalize();
    CmpOp op = q.rel == Rel::Lt ? CmpOp::Lt : q.rel == Rel::Le ? CmpOp::Le : CmpOp::Eq;
    for (const auto& c : q.term.coeffs) {
        if (sgn(c) == 0) continue;
        if (sgn(c) < 0) {
            q.term = -q.term;
            if (op == CmpOp::Lt) op = CmpOp::Gt;
            else if (op == CmpOp::Le) op = CmpOp::Ge;
        }
        break;
    }

    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < q.term.coeffs.size(); ++i) {
        const Rational& c = q.term.coeffs[i];
        if (sgn(c) == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) out << '-';
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
        }
        if (mag != 1) out << mag.get_str() << '*';
        out << (i < names.size() ? names[i] : "v" + std::to_string(i));
        first = false;
    }
    if (first) out << "0";
    Rational rhs = -q.term.constant;
    out << ' ' << to_string(op) << ' ' << rhs.get_str();
    return out.str();
}

}  // namespace ptsynth
