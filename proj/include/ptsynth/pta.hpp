// ============================================================================
// ptsynth/pta.hpp: parametric timed automata
// ============================================================================
//
// Variable layout shared by every polyhedron built from a Pta:
//   [0, clocks.size())                      clocks, declaration order
//   [clocks.size(), clocks.size()+params)   parameters, declaration order
//
// ============================================================================

#ifndef PTSYNTH_PTA_HPP
#define PTSYNTH_PTA_HPP

#include "ptsynth/linear.hpp"
#include "ptsynth/polyhedron.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ptsynth {

/// clock OP constant  or  clock OP parameter.
struct Atom {
    std::size_t clock = 0;
    CmpOp op = CmpOp::Le;
    std::optional<std::size_t> param;  // set: right-hand side is a parameter
    Rational constant;                 // used when param is empty

    bool operator==(const Atom&) const = default;
};

using Guard = std::vector<Atom>;

struct Location {
    std::string name;
    Guard invariant;
    bool urgent = false;

    bool operator==(const Location&) const = default;
};

struct Edge {
    std::size_t source = 0;
    std::size_t target = 0;
    Guard guard;
    std::optional<std::size_t> action;
    std::vector<std::size_t> resets;  // sorted, unique

    bool operator==(const Edge&) const = default;
};

struct Pta {
    std::vector<std::string> clocks;
    std::vector<std::string> params;
    std::vector<std::string> actions;
    std::vector<bool> global_clock;  // per clock: declared "global"
    std::vector<Location> locations;
    std::size_t initial = 0;
    std::vector<Edge> edges;

    std::size_t dim() const { return clocks.size() + params.size(); }
    VarIndex clock_var(std::size_t c) const { return c; }
    VarIndex param_var(std::size_t p) const { return clocks.size() + p; }

    std::optional<std::size_t> find_location(const std::string& name) const;
    std::optional<std::size_t> find_clock(const std::string& name) const;
    std::optional<std::size_t> find_param(const std::string& name) const;
    std::optional<std::size_t> find_action(const std::string& name) const;

    /// Clock names followed by parameter names.
    std::vector<std::string> variable_names() const;
    std::vector<VarIndex> clock_vars() const;
    std::vector<VarIndex> param_vars() const;

    bool is_reset_anywhere(std::size_t clock) const;

    bool operator==(const Pta&) const = default;
};

struct Diagnostic {
    std::size_t line = 0;
    std::size_t column = 0;
    std::string message;
};

class ModelError : public std::runtime_error {
public:
    explicit ModelError(std::vector<Diagnostic> diags);
    explicit ModelError(const std::string& message);
    const std::vector<Diagnostic>& diagnostics() const { return diags_; }

private:
    std::vector<Diagnostic> diags_;
    static std::string summarize(const std::vector<Diagnostic>& diags);
};

/// Structural checks: initial and edge endpoints exist, indices in range,
/// constants are natural numbers, no urgent flag left undesugared.
void validate(const Pta& pta);

Inequality atom_constraint(const Pta& pta, const Atom& atom);
Polyhedron guard_polyhedron(const Pta& pta, const Guard& guard);

/// clock >= 0 and param >= 0 for every variable.
Polyhedron nonnegativity(const Pta& pta);

/// Renders an atom as "x <= 3" / "x < p".
std::string render_atom(const Pta& pta, const Atom& atom);
std::string render_guard(const Pta& pta, const Guard& guard);

/// Source text accepted by parse_model.
std::string print(const Pta& pta);

}  // namespace ptsynth

#endif  // PTSYNTH_PTA_HPP
