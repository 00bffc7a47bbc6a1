// ============================================================================
// ptsynth/linear.hpp: exact rationals, linear terms and inequalities
// ============================================================================
//
// Variables are addressed by dense index.  A polyhedron over n variables
// stores every term as a length-n coefficient vector plus a constant, so a
// constraint reads  sum_i coeffs[i] * v_i + constant  REL  0.
//
// ============================================================================

#ifndef PTSYNTH_LINEAR_HPP
#define PTSYNTH_LINEAR_HPP

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ptsynth {

using Rational = mpq_class;
using Integer = mpz_class;
using VarIndex = std::size_t;

std::string to_string(const Rational& q);

/// Parses "3", "-7/2" or "0.25" into an exact rational.  Throws
/// std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

// ── Relation ────────────────────────────────────────────────────────────────
// Normalized relations: ">" and ">=" are expressed by negating the term.

enum class Rel : std::uint8_t { Lt, Le, Eq };

// User-facing comparison operators (guards, builders, rendering).
enum class CmpOp : std::uint8_t { Lt, Le, Eq, Ge, Gt };

const char* to_string(CmpOp op);

// ── LinearTerm ──────────────────────────────────────────────────────────────

struct LinearTerm {
    std::vector<Rational> coeffs;
    Rational constant;

    LinearTerm() = default;
    explicit LinearTerm(std::size_t dim) : coeffs(dim) {}

    static LinearTerm variable(std::size_t dim, VarIndex v);
    static LinearTerm constant_term(std::size_t dim, const Rational& c);

    std::size_t dim() const { return coeffs.size(); }
    bool is_constant() const;
    Rational evaluate(std::span<const Rational> point) const;

    LinearTerm& operator+=(const LinearTerm& o);
    LinearTerm& operator-=(const LinearTerm& o);
    LinearTerm& operator*=(const Rational& k);
    LinearTerm operator-() const;

    friend LinearTerm operator+(LinearTerm a, const LinearTerm& b) { return a += b; }
    friend LinearTerm operator-(LinearTerm a, const LinearTerm& b) { return a -= b; }
    friend LinearTerm operator*(LinearTerm a, const Rational& k) { return a *= k; }
    friend LinearTerm operator*(const Rational& k, LinearTerm a) { return a *= k; }
    friend LinearTerm operator+(LinearTerm a, const Rational& c) {
        a.constant += c;
        return a;
    }
    friend LinearTerm operator-(LinearTerm a, const Rational& c) {
        a.constant -= c;
        return a;
    }

    bool operator==(const LinearTerm&) const = default;
};

// ── Inequality ──────────────────────────────────────────────────────────────

struct Inequality {
    LinearTerm term;
    Rel rel = Rel::Le;

    /// Builds  lhs OP rhs, normalized to  term REL 0.
    static Inequality make(const LinearTerm& lhs, CmpOp op, const LinearTerm& rhs);

    std::size_t dim() const { return term.dim(); }
    bool satisfied_by(std::span<const Rational> point) const;

    /// Scales to coprime integer coefficients; equalities additionally get a
    /// positive leading coefficient.  Relation is unchanged.
    void normalize();

    bool operator==(const Inequality&) const = default;
};

/// Renders a constraint as "lhs op rhs" with integer coefficients, variable
/// terms on the left, and a positive leading coefficient.
std::string render(const Inequality& ineq, std::span<const std::string> names);

}  // namespace ptsynth

#endif  // PTSYNTH_LINEAR_HPP
