#include "ptsynth/zone_graph.hpp"

namespace ptsynth {

ZoneGraph::ZoneGraph(const Pta& pta)
    : pta_(&pta), clocks_(pta.clock_vars()), params_(pta.param_vars()), outgoing_(pta.locations.size()) {
    for (const auto& l : pta.locations) invariants_.push_back(guard_polyhedron(pta, l.invariant));
    for (std::size_t i = 0; i < pta.edges.size(); ++i) {
        guards_.push_back(guard_polyhedron(pta, pta.edges[i].guard));
        outgoing_[pta.edges[i].source].push_back(i);
    }
}

SymbolicState ZoneGraph::initial() const {
    const std::size_t n = dim();
    std::vector<Inequality> zero;
    for (VarIndex x : clocks_) zero.push_back(Inequality::make(LinearTerm::variable(n, x), CmpOp::Eq, LinearTerm(n)));
    Polyhedron start = Polyhedron::from_constraints(n, std::move(zero))
                           .conjoin(nonnegativity(*pta_))
                           .conjoin(invariants_[pta_->initial]);
    if (start.is_empty())
        throw ModelError("invariant of initial location '" + pta_->locations[pta_->initial].name +
                         "' does not hold when all clocks are zero");
    return SymbolicState{pta_->initial, start.time_elapse(clocks_).conjoin(invariants_[pta_->initial])};
}

std::optional<SymbolicState> ZoneGraph::succ_edge(const SymbolicState& s, std::size_t edge) const {
    const Edge& e = pta_->edges[edge];
    if (e.source != s.location) return std::nullopt;
    // Intermediate systems stay raw; only the result is canonicalized.
    RawSystem c(s.zone);
    c.conjoin(guards_[edge]);
    if (c.is_trivially_empty() || !c.is_satisfiable()) return std::nullopt;
    c.reset(e.resets).conjoin(invariants_[e.target]);
    c.time_elapse(clocks_).conjoin(invariants_[e.target]);
    Polyhedron zone = c.canonical();
    if (zone.is_empty()) return std::nullopt;
    return SymbolicState{e.target, std::move(zone)};
}

std::vector<std::pair<std::size_t, SymbolicState>> ZoneGraph::succ(const SymbolicState& s) const {
    std::vector<std::pair<std::size_t, SymbolicState>> out;
    for (std::size_t e : outgoing_[s.location])
        if (auto t = succ_edge(s, e)) out.emplace_back(e, std::move(*t));
    return out;
}

Polyhedron ZoneGraph::parameter_projection(const Polyhedron& zone) const { return zone.project(params_); }

SymbolicState initial_symbolic_state(const Pta& pta) { return ZoneGraph(pta).initial(); }

std::optional<SymbolicState> succ_edge(const Pta& pta, const SymbolicState& s, std::size_t edge) {
    return ZoneGraph(pta).succ_edge(s, edge);
}

std::vector<std::pair<std::size_t, SymbolicState>> succ(const Pta& pta, const SymbolicState& s) {
    return ZoneGraph(pta).succ(s);
}

}  // namespace ptsynth
