// ============================================================================
// ptsynth/parser.hpp: model and property files
// ============================================================================
//
//   model    := header decl* loc+ edge*
//   header   := "clocks" ids ";" "params" [ids] ";" "actions" [ids] ";"
//   decl     := "global" ident ";"
//   loc      := ["init"] ["urgent"] "loc" ident ["inv" guard] ";"
//   edge     := "edge" ident "->" ident ["when" guard] ["act" ident]
//               ["reset" "{" ids "}"] ";"
//   guard    := atom ("&&" atom)*
//   atom     := ident op (nat | ident)
//
// "//" starts a comment running to end of line.  Urgent locations are
// desugared on the fly (see encode_urgency).
//
// Property file:  "targets" "{" ids "}" [";"] ["minimize" ident [";"]]
//
// ============================================================================

#ifndef PTSYNTH_PARSER_HPP
#define PTSYNTH_PARSER_HPP

#include "ptsynth/pta.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ptsynth {

/// Throws ModelError carrying positioned diagnostics.
Pta parse_model(const std::string& text);

struct Property {
    std::vector<std::string> targets;
    std::optional<std::string> minimize;
};

Property parse_property(const std::string& text);

/// Resolves target names against the model.  Throws ModelError on unknown
/// names or an empty list.
std::vector<std::size_t> resolve_targets(const Pta& pta, const std::vector<std::string>& names);

std::string read_file(const std::string& path);

}  // namespace ptsynth

#endif  // PTSYNTH_PARSER_HPP
