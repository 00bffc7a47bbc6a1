#include "ptsynth/transform.hpp"

#include <algorithm>

namespace ptsynth {

const char* to_string(Polarity p) {
    switch (p) {
        case Polarity::Unused: return "unused";
        case Polarity::Lower: return "lower";
        case Polarity::Upper: return "upper";
        case Polarity::Both: return "both";
    }
    return "?";
}

namespace {

Polarity atom_polarity(CmpOp op) {
    switch (op) {
        case CmpOp::Lt:
        case CmpOp::Le: return Polarity::Upper;
        case CmpOp::Gt:
        case CmpOp::Ge: return Polarity::Lower;
        case CmpOp::Eq: return Polarity::Both;
    }
    return Polarity::Both;
}

Polarity join(Polarity a, Polarity b) {
    if (a == Polarity::Unused) return b;
    if (b == Polarity::Unused || a == b) return a;
    return Polarity::Both;
}

template <class F>
void for_each_guard(Pta& pta, F&& f) {
    for (auto& l : pta.locations) f(l.invariant);
    for (auto& e : pta.edges) f(e.guard);
}

template <class F>
void for_each_guard(const Pta& pta, F&& f) {
    for (const auto& l : pta.locations) f(l.invariant);
    for (const auto& e : pta.edges) f(e.guard);
}

bool name_taken(const Pta& pta, const std::string& n) {
    return pta.find_clock(n) || pta.find_param(n) || pta.find_action(n) || pta.find_location(n);
}

std::size_t add_clock(Pta& pta, const std::string& base, bool global) {
    pta.clocks.push_back(fresh_name(pta, base));
    pta.global_clock.push_back(global);
    return pta.clocks.size() - 1;
}

}  // namespace

std::string fresh_name(const Pta& pta, const std::string& base) {
    if (!name_taken(pta, base)) return base;
    for (std::size_t i = 1;; ++i) {
        std::string n = base + "_" + std::to_string(i);
        if (!name_taken(pta, n)) return n;
    }
}

LuClassification classify_lu(const Pta& pta) {
    LuClassification out;
    out.polarity.assign(pta.params.size(), Polarity::Unused);
    for_each_guard(pta, [&](const Guard& g) {
        for (const auto& a : g)
            if (a.param) out.polarity[*a.param] = join(out.polarity[*a.param], atom_polarity(a.op));
    });
    out.is_lu = std::none_of(out.polarity.begin(), out.polarity.end(),
                             [](Polarity p) { return p == Polarity::Both; });
    return out;
}

Instrumented instrument_global_clock(const Pta& pta, const std::string& name) {
    for (std::size_t c = 0; c < pta.clocks.size(); ++c)
        if (pta.global_clock[c] && !pta.is_reset_anywhere(c)) return {pta, c};
    Instrumented out{pta, 0};
    out.index = add_clock(out.pta, name, true);
    return out;
}

Instrumented instrument_min_time_as_param(const Pta& pta, std::span<const std::size_t> targets,
                                          std::size_t global_clock, const std::string& name) {
    if (targets.empty()) throw ModelError("time-as-parameter instrumentation needs at least one target");
    if (global_clock >= pta.clocks.size()) throw ModelError("global clock index out of range");
    if (pta.is_reset_anywhere(global_clock))
        throw ModelError("clock '" + pta.clocks[global_clock] + "' is reset and cannot measure global time");
    Instrumented out{pta, 0};
    out.pta.params.push_back(fresh_name(pta, name));
    out.index = out.pta.params.size() - 1;
    for (auto& e : out.pta.edges) {
        if (std::find(targets.begin(), targets.end(), e.target) == targets.end()) continue;
        Atom a;
        a.clock = global_clock;
        a.op = CmpOp::Eq;
        a.param = out.index;
        e.guard.push_back(a);
    }
    return out;
}

Pta zero_infinity_substitution(const Pta& pta) {
    LuClassification lu = classify_lu(pta);
    if (!lu.is_lu) {
        std::string both;
        for (std::size_t p = 0; p < pta.params.size(); ++p)
            if (lu.polarity[p] == Polarity::Both) both += (both.empty() ? "" : ", ") + pta.params[p];
        throw ModelError("model is not an L/U-PTA: parameter(s) " + both + " used as both bounds");
    }
    Pta out = pta;
    for_each_guard(out, [](Guard& g) {
        Guard kept;
        for (auto a : g) {
            if (a.param) {
                if (atom_polarity(a.op) == Polarity::Upper) continue;  // x < inf holds
                a.param.reset();
                a.constant = 0;
            }
            kept.push_back(a);
        }
        g = std::move(kept);
    });
    out.params.clear();
    return out;
}

Pta instantiate(const Pta& pta, std::span<const Rational> valuation) {
    if (valuation.size() != pta.params.size()) throw ModelError("valuation size does not match parameter count");
    Pta out = pta;
    for_each_guard(out, [&](Guard& g) {
        for (auto& a : g) {
            if (!a.param) continue;
            a.constant = valuation[*a.param];
            a.param.reset();
        }
    });
    out.params.clear();
    return out;
}

Pta encode_urgency(const Pta& pta) {
    bool any = std::any_of(pta.locations.begin(), pta.locations.end(), [](const Location& l) { return l.urgent; });
    if (!any) return pta;
    Pta out = pta;
    std::size_t u = add_clock(out, "urgent_clock", false);
    for (auto& l : out.locations) {
        if (!l.urgent) continue;
        l.invariant.push_back(Atom{u, CmpOp::Le, std::nullopt, Rational(0)});
        l.urgent = false;
    }
    for (auto& e : out.edges) {
        if (!pta.locations[e.target].urgent) continue;
        e.resets.push_back(u);
        std::sort(e.resets.begin(), e.resets.end());
    }
    return out;
}

}  // namespace ptsynth
