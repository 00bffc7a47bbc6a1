// ============================================================================
// ptsynth/disjunctive.hpp: finite unions of parameter polyhedra
// ============================================================================

#ifndef PTSYNTH_DISJUNCTIVE_HPP
#define PTSYNTH_DISJUNCTIVE_HPP

#include "ptsynth/polyhedron.hpp"

#include <span>
#include <string>
#include <vector>

namespace ptsynth {

using EdgePath = std::vector<std::size_t>;

struct Disjunct {
    Polyhedron constraint;
    /// Discrete paths from the initial location to a target; each valuation
    /// of the disjunct is realized by at least one of them.
    std::vector<EdgePath> witnesses;
};

class DisjunctiveConstraint {
public:
    explicit DisjunctiveConstraint(std::size_t dim = 0) : dim_(dim) {}

    static DisjunctiveConstraint universe(std::size_t dim);

    std::size_t dim() const { return dim_; }
    bool is_false() const { return parts_.empty(); }
    std::size_t size() const { return parts_.size(); }
    const std::vector<Disjunct>& disjuncts() const { return parts_; }

    /// Adds a disjunct unless it is empty or included in an existing one;
    /// existing disjuncts included in the new one are dropped.
    void add(Polyhedron p, std::vector<EdgePath> witnesses = {});
    void clear() { parts_.clear(); }

    bool contains(std::span<const Rational> point) const;

    /// Each disjunct projected on the first `keep` parameters.
    DisjunctiveConstraint project_prefix(std::size_t keep) const;

    /// Rendered disjuncts, sorted; "false" when empty.
    std::vector<std::string> rendered(std::span<const std::string> names) const;
    /// " or "-joined, parenthesized when there is more than one disjunct.
    std::string to_string(std::span<const std::string> names) const;

private:
    std::size_t dim_;
    std::vector<Disjunct> parts_;
};

/// Same set of valuations.
bool equivalent(const DisjunctiveConstraint& a, const DisjunctiveConstraint& b);

/// Every valuation of `inner` belongs to `outer`.
bool includes(const DisjunctiveConstraint& outer, const DisjunctiveConstraint& inner);

}  // namespace ptsynth

#endif  // PTSYNTH_DISJUNCTIVE_HPP
