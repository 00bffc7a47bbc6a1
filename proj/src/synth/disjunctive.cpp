#include "ptsynth/disjunctive.hpp"

#include <algorithm>
#include <stdexcept>

namespace ptsynth {

namespace {

constexpr std::size_t kWitnessCap = 64;

void absorb(std::vector<EdgePath>& into, std::vector<EdgePath>& from) {
    for (auto& w : from) {
        if (into.size() >= kWitnessCap) return;
        if (std::find(into.begin(), into.end(), w) == into.end()) into.push_back(std::move(w));
    }
}

}  // namespace

DisjunctiveConstraint DisjunctiveConstraint::universe(std::size_t dim) {
    DisjunctiveConstraint k(dim);
    k.add(Polyhedron::universe(dim));
    return k;
}

void DisjunctiveConstraint::add(Polyhedron p, std::vector<EdgePath> witnesses) {
    if (p.dim() != dim_) throw std::invalid_argument("DisjunctiveConstraint: dimension mismatch");
    if (p.is_empty()) return;
    for (auto& d : parts_) {
        if (includes(d.constraint, p)) {
            absorb(d.witnesses, witnesses);
            return;
        }
    }
    std::vector<Disjunct> kept;
    for (auto& d : parts_) {
        if (includes(p, d.constraint)) {
            absorb(witnesses, d.witnesses);
        } else {
            kept.push_back(std::move(d));
        }
    }
    kept.push_back(Disjunct{std::move(p), std::move(witnesses)});
    parts_ = std::move(kept);
}

bool DisjunctiveConstraint::contains(std::span<const Rational> point) const {
    return std::any_of(parts_.begin(), parts_.end(), [&](const Disjunct& d) { return d.constraint.contains(point); });
}

DisjunctiveConstraint DisjunctiveConstraint::project_prefix(std::size_t keep) const {
    if (keep > dim_) throw std::invalid_argument("project_prefix: too many dimensions");
    std::vector<VarIndex> vars(keep);
    for (std::size_t i = 0; i < keep; ++i) vars[i] = i;
    DisjunctiveConstraint out(keep);
    for (const auto& d : parts_) out.add(d.constraint.project(vars), d.witnesses);
    return out;
}

std::vector<std::string> DisjunctiveConstraint::rendered(std::span<const std::string> names) const {
    std::vector<std::string> out;
    for (const auto& d : parts_) out.push_back(d.constraint.to_string(names));
    std::sort(out.begin(), out.end());
    return out;
}

std::string DisjunctiveConstraint::to_string(std::span<const std::string> names) const {
    if (parts_.empty()) return "false";
    auto parts = rendered(names);
    if (parts.size() == 1) return parts.front();
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += " or ";
        out += "(" + parts[i] + ")";
    }
    return out;
}

namespace {

std::vector<Polyhedron> pieces(const DisjunctiveConstraint& k) {
    std::vector<Polyhedron> out;
    for (const auto& d : k.disjuncts()) out.push_back(d.constraint);
    return out;
}

}  // namespace

bool includes(const DisjunctiveConstraint& outer, const DisjunctiveConstraint& inner) {
    if (outer.dim() != inner.dim()) return false;
    auto cover = pieces(outer);
    for (const auto& d : inner.disjuncts())
        if (!covered_by(d.constraint, cover)) return false;
    return true;
}

bool equivalent(const DisjunctiveConstraint& a, const DisjunctiveConstraint& b) {
    return includes(a, b) && includes(b, a);
}

}  // namespace ptsynth
