// ============================================================================
// ptsynth/polyhedron.hpp: exact NNC convex polyhedra in constraint form
// ============================================================================
//
// A Polyhedron is an immutable conjunction of rational linear constraints
// (strict, non-strict, equalities) over a fixed number of variables.  Every
// constructor canonicalizes:
//
//   - equalities (explicit and implicit) are kept in reduced row-echelon
//     form, and their pivot variables are substituted out of inequalities;
//   - inequalities are integer-normalized and redundant ones removed by
//     exact entailment tests;
//   - an unsatisfiable system collapses to the empty polyhedron.
//
// The canonical form is not guaranteed to be syntactically unique, so
// equality is semantic (mutual inclusion).
//
// Projection uses Fourier–Motzkin: combining a strict bound with any bound
// yields a strict bound.
//
// ============================================================================

#ifndef PTSYNTH_POLYHEDRON_HPP
#define PTSYNTH_POLYHEDRON_HPP

#include "ptsynth/linear.hpp"
#include "ptsynth/minimum.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ptsynth {

class Polyhedron {
public:
    /// Zero-dimensional universe.
    Polyhedron() = default;

    static Polyhedron universe(std::size_t dim);
    static Polyhedron empty(std::size_t dim);
    static Polyhedron from_constraints(std::size_t dim, std::vector<Inequality> constraints);

    std::size_t dim() const { return dim_; }
    bool is_empty() const { return empty_; }
    bool is_satisfiable() const { return !empty_; }
    bool is_universe() const { return !empty_ && constraints_.empty(); }
    const std::vector<Inequality>& constraints() const { return constraints_; }

    /// Intersection.  Throws std::invalid_argument on dimension mismatch.
    Polyhedron conjoin(const Polyhedron& other) const;
    Polyhedron conjoin(const Inequality& ineq) const;

    /// Lets every variable in `clocks` advance by the same amount d >= 0.
    Polyhedron time_elapse(std::span<const VarIndex> clocks) const;

    /// Forgets the listed variables and then pins each of them to 0.
    Polyhedron reset(std::span<const VarIndex> clocks) const;

    /// Existentially quantifies the listed variables; dimension unchanged.
    Polyhedron eliminate(std::span<const VarIndex> vars) const;

    /// Shadow onto `keep` (ascending order), as a polyhedron of dimension
    /// keep.size() whose variable i is keep[i].
    Polyhedron project(std::span<const VarIndex> keep) const;

    /// Relaxes strict inequalities.
    Polyhedron closure() const;

    /// Substitutes the trailing values.size() variables by the given values
    /// and drops those dimensions.
    Polyhedron substitute_params(std::span<const Rational> values) const;

    /// Appends `count` unconstrained variables.
    Polyhedron add_dimensions(std::size_t count) const;

    /// Infimum of a variable, with attainment.  Infinity for the empty
    /// polyhedron.  Throws std::domain_error if unbounded below.
    Minimum get_min(VarIndex v) const;
    Minimum get_min(const LinearTerm& objective) const;

    bool contains(std::span<const Rational> point) const;
    bool entails(const Inequality& ineq) const;

    /// Some point of the polyhedron (nullopt when empty).
    std::optional<std::vector<Rational>> sample() const;

    /// "&&"-joined constraints; "true" for the universe, "false" when empty.
    std::string to_string(std::span<const std::string> names) const;

private:
    std::size_t dim_ = 0;
    bool empty_ = false;
    std::vector<Inequality> constraints_;
    std::vector<Rational> witness_;

    Polyhedron(std::size_t dim, std::vector<Inequality> constraints, bool canonical);
    void canonicalize();
    void mark_empty();
};

/// Constraint system kept in a cheap normal form (equalities substituted,
/// parallel constraints deduplicated) for chains of operations whose
/// intermediate results need not be canonical.  Only is_satisfiable() and
/// canonical() solve linear programs.
class RawSystem {
public:
    explicit RawSystem(const Polyhedron& p);
    RawSystem(std::size_t dim, std::vector<Inequality> constraints);

    std::size_t dim() const { return dim_; }
    /// Emptiness found without linear programming.
    bool is_trivially_empty() const { return empty_; }
    const std::vector<Inequality>& constraints() const { return cs_; }

    RawSystem& conjoin(const Polyhedron& p);
    RawSystem& eliminate(std::span<const VarIndex> vars);
    RawSystem& reset(std::span<const VarIndex> clocks);
    RawSystem& time_elapse(std::span<const VarIndex> clocks);

    bool is_satisfiable() const;
    Polyhedron canonical() const;

private:
    std::size_t dim_ = 0;
    bool empty_ = false;
    std::vector<Inequality> cs_;

    void simplify();
    void eliminate_one(VarIndex v);
};

/// inner ⊆ outer as point sets.
bool includes(const Polyhedron& outer, const Polyhedron& inner);

/// Mutual inclusion.
bool equals(const Polyhedron& a, const Polyhedron& b);
inline bool operator==(const Polyhedron& a, const Polyhedron& b) { return equals(a, b); }

/// The convex hull of a ∪ b when that union is itself convex; nullopt
/// otherwise.
std::optional<Polyhedron> try_convex_merge(const Polyhedron& a, const Polyhedron& b);

/// Negation of a single non-equality constraint.
Inequality negate(const Inequality& ineq);

/// True iff p ⊆ union of `cover`.
bool covered_by(const Polyhedron& p, std::span<const Polyhedron> cover);

}  // namespace ptsynth

#endif  // PTSYNTH_POLYHEDRON_HPP
