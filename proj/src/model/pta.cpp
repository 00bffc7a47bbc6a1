#include "ptsynth/pta.hpp"

#include <algorithm>
#include <sstream>

namespace ptsynth {

namespace {

template <class Names>
std::optional<std::size_t> index_of(const Names& names, const std::string& name) {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names.begin());
}

std::string join(const std::vector<std::string>& items, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) out += sep;
        out += items[i];
    }
    return out;
}

}  // namespace

std::optional<std::size_t> Pta::find_location(const std::string& name) const {
    for (std::size_t i = 0; i < locations.size(); ++i)
        if (locations[i].name == name) return i;
    return std::nullopt;
}

std::optional<std::size_t> Pta::find_clock(const std::string& name) const { return index_of(clocks, name); }
std::optional<std::size_t> Pta::find_param(const std::string& name) const { return index_of(params, name); }
std::optional<std::size_t> Pta::find_action(const std::string& name) const { return index_of(actions, name); }

std::vector<std::string> Pta::variable_names() const {
    std::vector<std::string> names = clocks;
    names.insert(names.end(), params.begin(), params.end());
    return names;
}

std::vector<VarIndex> Pta::clock_vars() const {
    std::vector<VarIndex> v(clocks.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = clock_var(i);
    return v;
}

std::vector<VarIndex> Pta::param_vars() const {
    std::vector<VarIndex> v(params.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = param_var(i);
    return v;
}

bool Pta::is_reset_anywhere(std::size_t clock) const {
    for (const auto& e : edges)
        if (std::find(e.resets.begin(), e.resets.end(), clock) != e.resets.end()) return true;
    return false;
}

// ── errors ──────────────────────────────────────────────────────────────────

ModelError::ModelError(std::vector<Diagnostic> diags)
    : std::runtime_error(summarize(diags)), diags_(std::move(diags)) {}

ModelError::ModelError(const std::string& message)
    : std::runtime_error(message), diags_{Diagnostic{0, 0, message}} {}

std::string ModelError::summarize(const std::vector<Diagnostic>& diags) {
    std::ostringstream os;
    for (std::size_t i = 0; i < diags.size(); ++i) {
        if (i > 0) os << '\n';
        if (diags[i].line > 0) os << diags[i].line << ':' << diags[i].column << ": ";
        os << diags[i].message;
    }
    return os.str();
}

// ── validation ──────────────────────────────────────────────────────────────

void validate(const Pta& pta) {
    std::vector<Diagnostic> errs;
    auto fail = [&](std::string msg) { errs.push_back(Diagnostic{0, 0, std::move(msg)}); };

    if (pta.locations.empty()) fail("model has no locations");
    else if (pta.initial >= pta.locations.size()) fail("initial location out of range");
    if (pta.global_clock.size() != pta.clocks.size()) fail("global-clock flags do not match clock count");

    auto check_guard = [&](const Guard& g, const std::string& where) {
        for (const auto& a : g) {
            if (a.clock >= pta.clocks.size()) fail(where + ": clock index out of range");
            if (a.param) {
                if (*a.param >= pta.params.size()) fail(where + ": parameter index out of range");
            } else if (sgn(a.constant) < 0 || a.constant.get_den() != 1) {
                fail(where + ": constant " + to_string(a.constant) + " is not a natural number");
            }
        }
    };
    for (const auto& l : pta.locations) {
        check_guard(l.invariant, "invariant of " + l.name);
        if (l.urgent) fail("location " + l.name + " is still marked urgent");
    }
    for (std::size_t i = 0; i < pta.edges.size(); ++i) {
        const Edge& e = pta.edges[i];
        std::string where = "edge " + std::to_string(i);
        if (e.source >= pta.locations.size() || e.target >= pta.locations.size())
            fail(where + ": endpoint out of range");
        if (e.action && *e.action >= pta.actions.size()) fail(where + ": action out of range");
        for (auto r : e.resets)
            if (r >= pta.clocks.size()) fail(where + ": reset clock out of range");
        check_guard(e.guard, where);
    }
    if (!errs.empty()) throw ModelError(std::move(errs));
}

// ── constraints ─────────────────────────────────────────────────────────────

Inequality atom_constraint(const Pta& pta, const Atom& atom) {
    const std::size_t n = pta.dim();
    LinearTerm lhs = LinearTerm::variable(n, pta.clock_var(atom.clock));
    LinearTerm rhs = atom.param ? LinearTerm::variable(n, pta.param_var(*atom.param))
                                : LinearTerm::constant_term(n, atom.constant);
    return Inequality::make(lhs, atom.op, rhs);
}

Polyhedron guard_polyhedron(const Pta& pta, const Guard& guard) {
    std::vector<Inequality> cs;
    cs.reserve(guard.size());
    for (const auto& a : guard) cs.push_back(atom_constraint(pta, a));
    return Polyhedron::from_constraints(pta.dim(), std::move(cs));
}

Polyhedron nonnegativity(const Pta& pta) {
    const std::size_t n = pta.dim();
    std::vector<Inequality> cs;
    for (VarIndex v = 0; v < n; ++v)
        cs.push_back(Inequality::make(LinearTerm::variable(n, v), CmpOp::Ge, LinearTerm(n)));
    return Polyhedron::from_constraints(n, std::move(cs));
}

// ── printing ────────────────────────────────────────────────────────────────

std::string render_atom(const Pta& pta, const Atom& atom) {
    std::string rhs = atom.param ? pta.params[*atom.param] : to_string(atom.constant);
    return pta.clocks[atom.clock] + " " + to_string(atom.op) + " " + rhs;
}

std::string render_guard(const Pta& pta, const Guard& guard) {
    if (guard.empty()) return "true";
    std::vector<std::string> parts;
    for (const auto& a : guard) parts.push_back(render_atom(pta, a));
    return join(parts, " && ");
}

std::string print(const Pta& pta) {
    std::ostringstream os;
    os << "clocks " << join(pta.clocks, ", ") << ";\n";
    os << "params" << (pta.params.empty() ? "" : " ") << join(pta.params, ", ") << ";\n";
    os << "actions" << (pta.actions.empty() ? "" : " ") << join(pta.actions, ", ") << ";\n";
    for (std::size_t c = 0; c < pta.clocks.size(); ++c)
        if (c < pta.global_clock.size() && pta.global_clock[c]) os << "global " << pta.clocks[c] << ";\n";
    os << '\n';
    for (std::size_t i = 0; i < pta.locations.size(); ++i) {
        const Location& l = pta.locations[i];
        if (i == pta.initial) os << "init ";
        if (l.urgent) os << "urgent ";
        os << "loc " << l.name;
        if (!l.invariant.empty()) os << " inv " << render_guard(pta, l.invariant);
        os << ";\n";
    }
    if (!pta.edges.empty()) os << '\n';
    for (const auto& e : pta.edges) {
        os << "edge " << pta.locations[e.source].name << " -> " << pta.locations[e.target].name;
        if (!e.guard.empty()) os << " when " << render_guard(pta, e.guard);
        if (e.action) os << " act " << pta.actions[*e.action];
        if (!e.resets.empty()) {
            std::vector<std::string> names;
            for (auto r : e.resets) names.push_back(pta.clocks[r]);
            os << " reset {" << join(names, ", ") << "}";
        }
        os << ";\n";
    }
    return os.str();
}

}  // namespace ptsynth
