#include "ptsynth/concrete.hpp"
#include "ptsynth/simplex.hpp"

#include <algorithm>

namespace ptsynth {

Rational Run::duration() const {
    Rational d = 0;
    for (const auto& s : steps) d += s.delay;
    return d;
}

std::vector<std::size_t> Run::edges() const {
    std::vector<std::size_t> out;
    for (const auto& s : steps) out.push_back(s.edge);
    return out;
}

namespace {

const Rational& bound_of(const Atom& a, std::span<const Rational> valuation) {
    return a.param ? valuation[*a.param] : a.constant;
}

bool compare(const Rational& lhs, CmpOp op, const Rational& rhs) {
    switch (op) {
        case CmpOp::Lt: return lhs < rhs;
        case CmpOp::Le: return lhs <= rhs;
        case CmpOp::Eq: return lhs == rhs;
        case CmpOp::Ge: return lhs >= rhs;
        case CmpOp::Gt: return lhs > rhs;
    }
    return false;
}

void check_valuation(const Pta& pta, std::span<const Rational> valuation) {
    if (valuation.size() != pta.params.size()) throw SemanticsError("valuation size does not match parameter count");
}

}  // namespace

ConcreteState initial_concrete_state(const Pta& pta) {
    return ConcreteState{pta.initial, std::vector<Rational>(pta.clocks.size(), Rational(0))};
}

bool satisfies(const Pta&, const Guard& g, std::span<const Rational> clocks, std::span<const Rational> valuation) {
    return std::all_of(g.begin(), g.end(),
                       [&](const Atom& a) { return compare(clocks[a.clock], a.op, bound_of(a, valuation)); });
}

ConcreteState concrete_step(const Pta& pta, const ConcreteState& s, const Rational& delay, std::size_t edge,
                            std::span<const Rational> valuation) {
    check_valuation(pta, valuation);
    if (edge >= pta.edges.size()) throw SemanticsError("edge index out of range");
    const Edge& e = pta.edges[edge];
    if (e.source != s.location) throw SemanticsError("edge does not leave the current location");
    if (sgn(delay) < 0) throw SemanticsError("negative delay");
    const Guard& inv = pta.locations[s.location].invariant;
    if (!satisfies(pta, inv, s.clocks, valuation)) throw SemanticsError("invariant violated before the delay");
    ConcreteState t = s;
    for (auto& c : t.clocks) c += delay;
    if (!satisfies(pta, inv, t.clocks, valuation)) throw SemanticsError("invariant violated by the delay");
    if (!satisfies(pta, e.guard, t.clocks, valuation)) throw SemanticsError("guard violated");
    for (auto r : e.resets) t.clocks[r] = 0;
    t.location = e.target;
    if (!satisfies(pta, pta.locations[e.target].invariant, t.clocks, valuation))
        throw SemanticsError("target invariant violated");
    return t;
}

namespace {

// Linear program over the delays d_0..d_{n-1} of a discrete sequence.
struct DelayProgram {
    std::size_t n;
    std::vector<Inequality> constraints;
    bool structurally_valid = true;
};

DelayProgram build_program(const Pta& pta, std::span<const std::size_t> edges, std::span<const Rational> valuation) {
    DelayProgram prog{edges.size(), {}, true};
    const std::size_t n = edges.size();
    std::vector<LinearTerm> clock(pta.clocks.size(), LinearTerm(n));
    auto impose = [&](const Guard& g) {
        for (const auto& a : g)
            prog.constraints.push_back(
                Inequality::make(clock[a.clock], a.op, LinearTerm::constant_term(n, bound_of(a, valuation))));
    };
    std::size_t loc = pta.initial;
    impose(pta.locations[loc].invariant);
    for (std::size_t j = 0; j < n; ++j) {
        const Edge& e = pta.edges[edges[j]];
        if (e.source != loc) {
            prog.structurally_valid = false;
            return prog;
        }
        prog.constraints.push_back(
            Inequality::make(LinearTerm::variable(n, j), CmpOp::Ge, LinearTerm(n)));
        for (auto& c : clock) c.coeffs[j] += 1;
        impose(pta.locations[loc].invariant);
        impose(e.guard);
        for (auto r : e.resets) clock[r] = LinearTerm(n);
        loc = e.target;
        impose(pta.locations[loc].invariant);
    }
    return prog;
}

LinearTerm total_delay(std::size_t n) {
    LinearTerm t(n);
    for (auto& c : t.coeffs) c = 1;
    return t;
}

}  // namespace

std::optional<Run> replay(const Pta& pta, std::span<const std::size_t> edges, std::span<const Rational> valuation,
                          ReplayDelays mode) {
    check_valuation(pta, valuation);
    for (auto e : edges)
        if (e >= pta.edges.size()) throw SemanticsError("edge index out of range");
    DelayProgram prog = build_program(pta, edges, valuation);
    if (!prog.structurally_valid) return std::nullopt;

    DeltaSimplex lp(prog.n);
    for (const auto& c : prog.constraints) lp.add(c);
    if (!lp.check()) return std::nullopt;
    if (mode == ReplayDelays::Shortest && prog.n > 0) lp.minimize(total_delay(prog.n));
    std::vector<Rational> delays = lp.witness();

    Run run;
    run.start = initial_concrete_state(pta);
    ConcreteState cur = run.start;
    for (std::size_t j = 0; j < edges.size(); ++j) {
        // concrete_step re-validates every constraint independently of the LP.
        cur = concrete_step(pta, cur, delays[j], edges[j], valuation);
        run.steps.push_back(RunStep{delays[j], edges[j], cur});
    }
    return run;
}

Minimum replay_min_duration(const Pta& pta, std::span<const std::size_t> edges,
                            std::span<const Rational> valuation) {
    check_valuation(pta, valuation);
    DelayProgram prog = build_program(pta, edges, valuation);
    if (!prog.structurally_valid) return Minimum::infinity();
    DeltaSimplex lp(prog.n);
    for (const auto& c : prog.constraints) lp.add(c);
    if (!lp.check()) return Minimum::infinity();
    if (prog.n == 0) return Minimum::attained(0);
    auto best = lp.minimize(total_delay(prog.n));
    if (sgn(best->delta) == 0) return Minimum::attained(best->real);
    return Minimum::infimum(best->real);
}

}  // namespace ptsynth
