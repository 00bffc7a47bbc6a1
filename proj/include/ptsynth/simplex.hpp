// ============================================================================
// ptsynth/simplex.hpp: exact incremental simplex over Q(δ) for mixed strict
// constraints
// ============================================================================
//
// General-form simplex in the style of Dutertre & de Moura: every constraint
// row gets a slack variable, constraints become bounds on slacks, and strict
// bounds are shifted by an infinitesimal δ.  All arithmetic is exact, so
// feasibility with strict inequalities is decided without tolerances, and
// the optimum over Q(δ) tells whether an infimum is attained (δ-coefficient
// zero) or only approached.
//
// Rows can be added at any time; bound changes made after push() are undone
// by pop(), so one tableau serves a sequence of related queries.  Bland's
// rule is used for both the feasibility loop and the optimizer.
//
// ============================================================================

#ifndef PTSYNTH_SIMPLEX_HPP
#define PTSYNTH_SIMPLEX_HPP

#include "ptsynth/detail/fast_rational.hpp"
#include "ptsynth/linear.hpp"

#include <optional>
#include <vector>

namespace ptsynth {

/// real + delta * δ, with δ a positive infinitesimal.
struct DeltaRational {
    Rational real;
    Rational delta;
};

class DeltaSimplex {
public:
    explicit DeltaSimplex(std::size_t num_vars);

    /// Adds a row for the linear part of `term` and returns its slack
    /// variable; the constant is ignored.
    std::size_t add_row(const LinearTerm& term);

    /// Asserts  term REL 0  (or its negation) on the slack of a row made
    /// from the same term.
    void assert_constraint(std::size_t slack, const Inequality& ineq, bool negated = false);

    /// Drops both bounds of a variable.
    void relax(std::size_t var);

    /// add_row + assert_constraint.  Returns the slack.
    std::size_t add(const Inequality& ineq);

    void push();
    void pop();

    /// Decides feasibility of the current bounds.
    bool check();

    /// Minimizes an objective over the feasible set (check() must have
    /// returned true).  Returns nullopt when unbounded below.
    std::optional<DeltaRational> minimize(const LinearTerm& objective);

    /// A concrete rational point satisfying every asserted bound (valid
    /// after a successful check() or minimize()).
    std::vector<Rational> witness() const;

private:
    using Q = detail::FastRational;
    struct DQ {
        Q real;
        Q delta;
    };
    using Row = std::vector<Q>;
    struct Saved {
        std::size_t var;
        std::optional<DQ> lower;
        std::optional<DQ> upper;
    };

    std::size_t num_vars_;
    std::vector<std::optional<DQ>> lower_;
    std::vector<std::optional<DQ>> upper_;
    std::vector<DQ> value_;
    std::vector<long> row_of_;          // -1 if nonbasic
    std::vector<std::size_t> basic_;    // basic variable of each row
    std::vector<Row> rows_;             // basic = sum rows_[r][j] * x_j
    std::vector<Saved> trail_;
    std::vector<std::size_t> marks_;
    bool trivially_false_ = false;
    std::vector<bool> false_marks_;

    std::size_t total() const { return value_.size(); }
    void save(std::size_t v);
    void set_lower(std::size_t v, DQ b);
    void set_upper(std::size_t v, DQ b);
    bool below_upper(std::size_t v) const;
    bool above_lower(std::size_t v) const;
    void pivot(std::size_t r, std::size_t entering);
    void update_nonbasic(std::size_t j, const DQ& shift);
    void pivot_and_update(std::size_t r, std::size_t entering, const DQ& target);

    static bool less(const DQ& a, const DQ& b);
    static DQ add(const DQ& a, const DQ& b);
    static DQ sub(const DQ& a, const DQ& b);
    static DQ scale(const DQ& a, const Q& k);
};

}  // namespace ptsynth

#endif  // PTSYNTH_SIMPLEX_HPP
