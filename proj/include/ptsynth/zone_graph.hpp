// ============================================================================
// ptsynth/zone_graph.hpp: successors in the parametric zone graph
// ============================================================================

#ifndef PTSYNTH_ZONE_GRAPH_HPP
#define PTSYNTH_ZONE_GRAPH_HPP

#include "ptsynth/polyhedron.hpp"
#include "ptsynth/pta.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace ptsynth {

struct SymbolicState {
    std::size_t location = 0;
    Polyhedron zone;
};

/// Caches guard and invariant polyhedra of one Pta.  The Pta must outlive
/// the graph.
class ZoneGraph {
public:
    explicit ZoneGraph(const Pta& pta);

    const Pta& pta() const { return *pta_; }
    std::size_t dim() const { return pta_->dim(); }

    /// (all clocks = 0 && I(init) && vars >= 0) elapsed, then && I(init).
    /// Throws ModelError when the initial invariant excludes time zero.
    SymbolicState initial() const;

    /// ((C && g)[R] && I(l')) elapsed && I(l'); nullopt when empty.
    std::optional<SymbolicState> succ_edge(const SymbolicState& s, std::size_t edge) const;

    /// Non-empty successors by edge declaration order.
    std::vector<std::pair<std::size_t, SymbolicState>> succ(const SymbolicState& s) const;

    /// C projected on the parameters (dimension = number of parameters).
    Polyhedron parameter_projection(const Polyhedron& zone) const;

    const std::vector<std::size_t>& outgoing(std::size_t location) const { return outgoing_[location]; }

private:
    const Pta* pta_;
    std::vector<VarIndex> clocks_, params_;
    std::vector<Polyhedron> invariants_, guards_;
    std::vector<std::vector<std::size_t>> outgoing_;
};

SymbolicState initial_symbolic_state(const Pta& pta);
std::optional<SymbolicState> succ_edge(const Pta& pta, const SymbolicState& s, std::size_t edge);
std::vector<std::pair<std::size_t, SymbolicState>> succ(const Pta& pta, const SymbolicState& s);

}  // namespace ptsynth

#endif  // PTSYNTH_ZONE_GRAPH_HPP
