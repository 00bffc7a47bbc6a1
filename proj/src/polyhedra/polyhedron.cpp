// ============================================================================
// polyhedron.cpp: canonicalization, Fourier–Motzkin, inclusion, merging
// ============================================================================

#include "ptsynth/polyhedron.hpp"
#include "ptsynth/simplex.hpp"

#include <algorithm>
#include <stdexcept>

namespace ptsynth {

namespace {

// ── LP helpers ──────────────────────────────────────────────────────────────

struct Feasibility {
    bool sat = false;
    std::vector<Rational> point;
};

Feasibility solve(std::size_t dim, std::span<const Inequality> a,
                  std::span<const Inequality> b = {}, const Inequality* extra = nullptr,
                  long skip = -1) {
    DeltaSimplex lp(dim);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (static_cast<long>(i) != skip) lp.add(a[i]);
    for (const auto& c : b) lp.add(c);
    if (extra) lp.add(*extra);
    Feasibility f;
    f.sat = lp.check();
    if (f.sat) f.point = lp.witness();
    return f;
}

std::size_t leading_index(const Inequality& c) {
    for (std::size_t i = 0; i < c.term.coeffs.size(); ++i)
        if (sgn(c.term.coeffs[i]) != 0) return i;
    return c.term.coeffs.size();
}

int compare_coeffs(const LinearTerm& a, const LinearTerm& b) {
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        int c = cmp(a.coeffs[i], b.coeffs[i]);
        if (c != 0) return c;
    }
    return 0;
}

bool render_order(const Inequality& a, const Inequality& b) {
    std::size_t la = leading_index(a), lb = leading_index(b);
    if (la != lb) return la < lb;
    int c = compare_coeffs(a.term, b.term);
    if (c != 0) return c < 0;
    if (a.rel != b.rel) return static_cast<int>(a.rel) > static_cast<int>(b.rel);
    return a.term.constant < b.term.constant;
}

bool constant_holds(const Inequality& c) {
    int s = sgn(c.term.constant);
    switch (c.rel) {
        case Rel::Lt: return s < 0;
        case Rel::Le: return s <= 0;
        case Rel::Eq: return s == 0;
    }
    return false;
}

// Gauss–Jordan on the equality rows; false if inconsistent.
bool reduce_equalities(std::vector<Inequality>& eqs, std::size_t dim) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < dim && rank < eqs.size(); ++col) {
        std::size_t piv = rank;
        while (piv < eqs.size() && sgn(eqs[piv].term.coeffs[col]) == 0) ++piv;
        if (piv == eqs.size()) continue;
        std::swap(eqs[rank], eqs[piv]);
        Rational inv = 1 / eqs[rank].term.coeffs[col];
        eqs[rank].term *= inv;
        for (std::size_t r = 0; r < eqs.size(); ++r) {
            if (r == rank || sgn(eqs[r].term.coeffs[col]) == 0) continue;
            Rational f = eqs[r].term.coeffs[col];
            eqs[r].term -= eqs[rank].term * f;
        }
        ++rank;
    }
    for (std::size_t r = rank; r < eqs.size(); ++r)
        if (sgn(eqs[r].term.constant) != 0) return false;
    eqs.resize(rank);
    for (auto& e : eqs) e.normalize();
    return true;
}

void substitute_equalities(Inequality& c, const std::vector<Inequality>& eqs) {
    for (const auto& e : eqs) {
        std::size_t p = leading_index(e);
        if (p < c.term.coeffs.size() && sgn(c.term.coeffs[p]) != 0) {
            Rational f = c.term.coeffs[p] / e.term.coeffs[p];
            c.term -= e.term * f;
        }
    }
}

// Keeps the tightest of inequalities with identical coefficient vectors.
void dedupe_parallel(std::vector<Inequality>& ineqs) {
    std::sort(ineqs.begin(), ineqs.end(), [](const Inequality& a, const Inequality& b) {
        int c = compare_coeffs(a.term, b.term);
        if (c != 0) return c < 0;
        // Tighter first: larger constant, then strict.
        if (a.term.constant != b.term.constant) return a.term.constant > b.term.constant;
        return a.rel == Rel::Lt && b.rel != Rel::Lt;
    });
    std::vector<Inequality> out;
    for (auto& c : ineqs) {
        if (!out.empty() && compare_coeffs(out.back().term, c.term) == 0) continue;
        out.push_back(std::move(c));
    }
    ineqs = std::move(out);
}

bool strictly_inside(const Inequality& c, std::span<const Rational> point) {
    return sgn(c.term.evaluate(point)) < 0;
}

}  // namespace

Inequality negate(const Inequality& ineq) {
    Inequality n;
    n.term = -ineq.term;
    switch (ineq.rel) {
        case Rel::Le: n.rel = Rel::Lt; break;
        case Rel::Lt: n.rel = Rel::Le; break;
        case Rel::Eq: throw std::invalid_argument("negate: equality has no convex negation");
    }
    return n;
}

// ============================================================================
// Construction and canonical form
// ============================================================================

Polyhedron::Polyhedron(std::size_t dim, std::vector<Inequality> constraints, bool canonical)
    : dim_(dim), constraints_(std::move(constraints)) {
    for (const auto& c : constraints_)
        if (c.dim() != dim_) throw std::invalid_argument("Polyhedron: constraint dimension mismatch");
    if (!canonical) canonicalize();
}

Polyhedron Polyhedron::universe(std::size_t dim) {
    Polyhedron p;
    p.dim_ = dim;
    p.witness_.assign(dim, Rational(0));
    return p;
}

Polyhedron Polyhedron::empty(std::size_t dim) {
    Polyhedron p;
    p.dim_ = dim;
    p.mark_empty();
    return p;
}

Polyhedron Polyhedron::from_constraints(std::size_t dim, std::vector<Inequality> constraints) {
    return Polyhedron(dim, std::move(constraints), false);
}

void Polyhedron::mark_empty() {
    empty_ = true;
    constraints_.clear();
    witness_.clear();
}

void Polyhedron::canonicalize() {
    if (empty_) return;
    std::vector<Inequality> eqs, ineqs;
    for (auto& c : constraints_) {
        c.normalize();
        if (c.term.is_constant()) {
            if (!constant_holds(c)) {
                mark_empty();
                return;
            }
            continue;
        }
        (c.rel == Rel::Eq ? eqs : ineqs).push_back(std::move(c));
    }
    constraints_.clear();

    // Points of the polyhedron found so far; they certify slack constraints.
    std::vector<std::vector<Rational>> known_points;
    for (;;) {
        if (!reduce_equalities(eqs, dim_)) {
            mark_empty();
            return;
        }
        std::vector<Inequality> kept;
        for (auto& c : ineqs) {
            substitute_equalities(c, eqs);
            c.normalize();
            if (c.term.is_constant()) {
                if (!constant_holds(c)) {
                    mark_empty();
                    return;
                }
                continue;
            }
            kept.push_back(std::move(c));
        }
        ineqs = std::move(kept);
        dedupe_parallel(ineqs);

        DeltaSimplex lp(dim_);
        for (const auto& e : eqs) lp.add(e);
        std::vector<std::size_t> slack(ineqs.size());
        for (std::size_t i = 0; i < ineqs.size(); ++i) slack[i] = lp.add(ineqs[i]);
        if (known_points.empty()) {
            if (!lp.check()) {
                mark_empty();
                return;
            }
            witness_ = lp.witness();
            known_points.push_back(witness_);
        }

        // Implicit equalities: non-strict constraints that are tight everywhere.
        bool moved = false;
        std::vector<Inequality> rest;
        for (std::size_t i = 0; i < ineqs.size(); ++i) {
            const Inequality& c = ineqs[i];
            bool tight = false;
            if (c.rel == Rel::Le && std::none_of(known_points.begin(), known_points.end(),
                                                 [&](const auto& pt) { return strictly_inside(c, pt); })) {
                Inequality strict = c;
                strict.rel = Rel::Lt;
                lp.push();
                lp.assert_constraint(slack[i], strict);
                if (lp.check()) known_points.push_back(lp.witness());
                else tight = true;
                lp.pop();
            }
            if (tight) {
                Inequality eq = c;
                eq.rel = Rel::Eq;
                eqs.push_back(std::move(eq));
                moved = true;
            } else {
                rest.push_back(c);
            }
        }
        ineqs = std::move(rest);
        if (moved) continue;

        // Redundancy: drop any inequality entailed by the remaining system.
        std::vector<bool> removed(ineqs.size(), false);
        for (std::size_t i = 0; i < ineqs.size(); ++i) {
            lp.push();
            lp.relax(slack[i]);
            lp.assert_constraint(slack[i], ineqs[i], true);
            bool needed = lp.check();
            lp.pop();
            if (!needed) {
                removed[i] = true;
                lp.relax(slack[i]);
            }
        }
        for (auto& e : eqs) constraints_.push_back(std::move(e));
        for (std::size_t i = 0; i < ineqs.size(); ++i)
            if (!removed[i]) constraints_.push_back(std::move(ineqs[i]));
        break;
    }
    std::sort(constraints_.begin(), constraints_.end(), render_order);
}

// ============================================================================
// Operations
// ============================================================================

Polyhedron Polyhedron::conjoin(const Polyhedron& other) const {
    if (other.dim_ != dim_) throw std::invalid_argument("conjoin: dimension mismatch");
    if (empty_ || other.empty_) return empty(dim_);
    std::vector<Inequality> all = constraints_;
    all.insert(all.end(), other.constraints_.begin(), other.constraints_.end());
    return Polyhedron(dim_, std::move(all), false);
}

Polyhedron Polyhedron::conjoin(const Inequality& ineq) const {
    if (ineq.dim() != dim_) throw std::invalid_argument("conjoin: dimension mismatch");
    if (empty_) return *this;
    std::vector<Inequality> all = constraints_;
    all.push_back(ineq);
    return Polyhedron(dim_, std::move(all), false);
}

Polyhedron Polyhedron::eliminate(std::span<const VarIndex> vars) const {
    for (VarIndex v : vars)
        if (v >= dim_) throw std::out_of_range("eliminate: variable index out of range");
    if (empty_) return *this;
    return RawSystem(*this).eliminate(vars).canonical();
}

Polyhedron Polyhedron::project(std::span<const VarIndex> keep) const {
    std::vector<bool> kept(dim_, false);
    for (VarIndex v : keep) {
        if (v >= dim_) throw std::out_of_range("project: variable index out of range");
        kept[v] = true;
    }
    std::vector<VarIndex> order(keep.begin(), keep.end());
    std::sort(order.begin(), order.end());
    order.erase(std::unique(order.begin(), order.end()), order.end());

    std::vector<VarIndex> drop;
    for (VarIndex v = 0; v < dim_; ++v)
        if (!kept[v]) drop.push_back(v);
    Polyhedron shadow = eliminate(drop);
    if (shadow.empty_) return empty(order.size());

    std::vector<Inequality> mapped;
    for (const auto& c : shadow.constraints_) {
        Inequality r;
        r.rel = c.rel;
        r.term = LinearTerm(order.size());
        r.term.constant = c.term.constant;
        for (std::size_t i = 0; i < order.size(); ++i) r.term.coeffs[i] = c.term.coeffs[order[i]];
        mapped.push_back(std::move(r));
    }
    return Polyhedron(order.size(), std::move(mapped), false);
}

Polyhedron Polyhedron::time_elapse(std::span<const VarIndex> clocks) const {
    for (VarIndex x : clocks)
        if (x >= dim_) throw std::out_of_range("time_elapse: clock index out of range");
    if (empty_) return *this;
    return RawSystem(*this).time_elapse(clocks).canonical();
}

Polyhedron Polyhedron::reset(std::span<const VarIndex> clocks) const {
    for (VarIndex x : clocks)
        if (x >= dim_) throw std::out_of_range("reset: clock index out of range");
    if (empty_ || clocks.empty()) return *this;
    return RawSystem(*this).reset(clocks).canonical();
}

Polyhedron Polyhedron::closure() const {
    if (empty_) return *this;
    std::vector<Inequality> relaxed = constraints_;
    for (auto& c : relaxed)
        if (c.rel == Rel::Lt) c.rel = Rel::Le;
    return Polyhedron(dim_, std::move(relaxed), false);
}

Polyhedron Polyhedron::substitute_params(std::span<const Rational> values) const {
    if (values.size() > dim_) throw std::invalid_argument("substitute_params: too many values");
    const std::size_t keep = dim_ - values.size();
    if (empty_) return empty(keep);
    std::vector<Inequality> out;
    for (const auto& c : constraints_) {
        Inequality r = c;
        for (std::size_t i = 0; i < values.size(); ++i) r.term.constant += c.term.coeffs[keep + i] * values[i];
        r.term.coeffs.resize(keep);
        out.push_back(std::move(r));
    }
    return Polyhedron(keep, std::move(out), false);
}

Polyhedron Polyhedron::add_dimensions(std::size_t count) const {
    if (empty_) return empty(dim_ + count);
    std::vector<Inequality> out = constraints_;
    for (auto& c : out) c.term.coeffs.resize(dim_ + count);
    Polyhedron p(dim_ + count, std::move(out), true);
    p.witness_ = witness_;
    p.witness_.resize(dim_ + count);
    return p;
}

Minimum Polyhedron::get_min(VarIndex v) const {
    if (v >= dim_) throw std::out_of_range("get_min: variable index out of range");
    return get_min(LinearTerm::variable(dim_, v));
}

Minimum Polyhedron::get_min(const LinearTerm& objective) const {
    if (empty_) return Minimum::infinity();
    DeltaSimplex lp(dim_);
    for (const auto& c : constraints_) lp.add(c);
    if (!lp.check()) throw std::logic_error("get_min: canonical polyhedron reported infeasible");
    auto best = lp.minimize(objective);
    if (!best) throw std::domain_error("get_min: objective unbounded below");
    if (sgn(best->delta) == 0) return Minimum::attained(best->real);
    return Minimum::infimum(best->real);
}

bool Polyhedron::contains(std::span<const Rational> point) const {
    if (empty_) return false;
    if (point.size() != dim_) throw std::invalid_argument("contains: dimension mismatch");
    return std::all_of(constraints_.begin(), constraints_.end(),
                       [&](const Inequality& c) { return c.satisfied_by(point); });
}

namespace {

// One tableau for a polyhedron, queried with many candidate constraints.
class EntailmentOracle {
public:
    explicit EntailmentOracle(const Polyhedron& p) : p_(p), lp_(p.dim()) {
        for (const auto& c : p.constraints()) lp_.add(c);
        if (!p.is_empty()) lp_.check();
    }

    bool entails(const Inequality& ineq) {
        if (p_.is_empty()) return true;
        auto w = p_.sample();
        if (w && !ineq.satisfied_by(*w)) return false;
        if (ineq.term.is_constant()) return constant_holds(ineq);
        const auto& own = p_.constraints();
        if (std::find(own.begin(), own.end(), ineq) != own.end()) return true;
        std::size_t slack = lp_.add_row(ineq.term);
        if (ineq.rel == Rel::Eq) {
            Inequality lo = ineq;
            lo.rel = Rel::Le;
            Inequality hi;
            hi.term = -ineq.term;
            hi.rel = Rel::Le;
            if (violable(slack, lo)) return false;
            std::size_t neg = lp_.add_row(hi.term);
            return !violable(neg, hi);
        }
        return !violable(slack, ineq);
    }

private:
    const Polyhedron& p_;
    DeltaSimplex lp_;

    bool violable(std::size_t slack, const Inequality& ineq) {
        lp_.push();
        lp_.assert_constraint(slack, ineq, true);
        bool sat = lp_.check();
        lp_.pop();
        return sat;
    }
};

}  // namespace

bool Polyhedron::entails(const Inequality& ineq) const {
    if (ineq.dim() != dim_) throw std::invalid_argument("entails: dimension mismatch");
    return EntailmentOracle(*this).entails(ineq);
}

std::optional<std::vector<Rational>> Polyhedron::sample() const {
    if (empty_) return std::nullopt;
    return witness_;
}

std::string Polyhedron::to_string(std::span<const std::string> names) const {
    if (empty_) return "false";
    if (constraints_.empty()) return "true";
    std::string out;
    for (std::size_t i = 0; i < constraints_.size(); ++i) {
        if (i > 0) out += " && ";
        out += render(constraints_[i], names);
    }
    return out;
}

// ============================================================================
// RawSystem
// ============================================================================

namespace {

// Above this many constraints an elimination step is followed by a full
// canonicalization to keep Fourier–Motzkin products small.
constexpr std::size_t kRawLimit = 40;

}  // namespace

RawSystem::RawSystem(const Polyhedron& p) : dim_(p.dim()), empty_(p.is_empty()), cs_(p.constraints()) {}

RawSystem::RawSystem(std::size_t dim, std::vector<Inequality> constraints) : dim_(dim), cs_(std::move(constraints)) {
    for (const auto& c : cs_)
        if (c.dim() != dim_) throw std::invalid_argument("RawSystem: constraint dimension mismatch");
    simplify();
}

void RawSystem::simplify() {
    if (empty_) return;
    std::vector<Inequality> eqs, ineqs;
    for (auto& c : cs_) {
        c.normalize();
        if (c.term.is_constant()) {
            if (!constant_holds(c)) {
                empty_ = true;
                cs_.clear();
                return;
            }
            continue;
        }
        (c.rel == Rel::Eq ? eqs : ineqs).push_back(std::move(c));
    }
    cs_.clear();
    if (!reduce_equalities(eqs, dim_)) {
        empty_ = true;
        return;
    }
    std::vector<Inequality> kept;
    for (auto& c : ineqs) {
        substitute_equalities(c, eqs);
        c.normalize();
        if (c.term.is_constant()) {
            if (!constant_holds(c)) {
                empty_ = true;
                return;
            }
            continue;
        }
        kept.push_back(std::move(c));
    }
    dedupe_parallel(kept);
    cs_ = std::move(eqs);
    for (auto& c : kept) cs_.push_back(std::move(c));
}

RawSystem& RawSystem::conjoin(const Polyhedron& p) {
    if (p.dim() != dim_) throw std::invalid_argument("RawSystem::conjoin: dimension mismatch");
    if (empty_) return *this;
    if (p.is_empty()) {
        empty_ = true;
        cs_.clear();
        return *this;
    }
    cs_.insert(cs_.end(), p.constraints().begin(), p.constraints().end());
    simplify();
    return *this;
}

void RawSystem::eliminate_one(VarIndex v) {
    const Inequality* pivot = nullptr;
    for (const auto& c : cs_)
        if (c.rel == Rel::Eq && sgn(c.term.coeffs[v]) != 0) {
            pivot = &c;
            break;
        }

    std::vector<Inequality> out;
    if (pivot) {
        for (const auto& c : cs_) {
            if (&c == pivot) continue;
            if (sgn(c.term.coeffs[v]) == 0) {
                out.push_back(c);
                continue;
            }
            Inequality r = c;
            r.term -= pivot->term * (c.term.coeffs[v] / pivot->term.coeffs[v]);
            out.push_back(std::move(r));
        }
    } else {
        std::vector<const Inequality*> pos, neg;
        for (const auto& c : cs_) {
            int s = sgn(c.term.coeffs[v]);
            if (s > 0) pos.push_back(&c);
            else if (s < 0) neg.push_back(&c);
            else out.push_back(c);
        }
        for (const Inequality* p : pos) {
            for (const Inequality* n : neg) {
                Inequality r;
                r.term = p->term * Rational(-n->term.coeffs[v]) + n->term * p->term.coeffs[v];
                r.rel = (p->rel == Rel::Lt || n->rel == Rel::Lt) ? Rel::Lt : Rel::Le;
                out.push_back(std::move(r));
            }
        }
    }
    cs_ = std::move(out);
    simplify();
    if (!empty_ && cs_.size() > kRawLimit) *this = RawSystem(canonical());
}

RawSystem& RawSystem::eliminate(std::span<const VarIndex> vars) {
    for (VarIndex v : vars)
        if (v >= dim_) throw std::out_of_range("eliminate: variable index out of range");
    std::vector<VarIndex> todo(vars.begin(), vars.end());
    std::sort(todo.begin(), todo.end());
    todo.erase(std::unique(todo.begin(), todo.end()), todo.end());

    while (!todo.empty() && !empty_) {
        // Cheapest first: equality substitution, then the smallest FM product.
        std::size_t best = 0;
        std::size_t best_cost = static_cast<std::size_t>(-1);
        for (std::size_t k = 0; k < todo.size(); ++k) {
            std::size_t pos = 0, neg = 0;
            bool has_eq = false;
            for (const auto& c : cs_) {
                int s = sgn(c.term.coeffs[todo[k]]);
                if (s == 0) continue;
                if (c.rel == Rel::Eq) has_eq = true;
                else if (s > 0) ++pos;
                else ++neg;
            }
            std::size_t cost = has_eq ? 0 : pos * neg + 1;
            if (cost < best_cost) {
                best_cost = cost;
                best = k;
            }
        }
        eliminate_one(todo[best]);
        todo.erase(todo.begin() + static_cast<long>(best));
    }
    return *this;
}

RawSystem& RawSystem::reset(std::span<const VarIndex> clocks) {
    if (empty_ || clocks.empty()) return *this;
    eliminate(clocks);
    if (empty_) return *this;
    for (VarIndex x : clocks) {
        Inequality z;
        z.term = LinearTerm::variable(dim_, x);
        z.rel = Rel::Eq;
        cs_.push_back(std::move(z));
    }
    simplify();
    return *this;
}

RawSystem& RawSystem::time_elapse(std::span<const VarIndex> clocks) {
    for (VarIndex x : clocks)
        if (x >= dim_) throw std::out_of_range("time_elapse: clock index out of range");
    if (empty_) return *this;
    // Fresh delay variable d at index dim_: each clock x is replaced by x - d.
    const std::size_t d = dim_;
    std::vector<Inequality> lifted;
    for (const auto& c : cs_) {
        Inequality r = c;
        r.term.coeffs.resize(dim_ + 1);
        Rational sum = 0;
        for (VarIndex x : clocks) sum += c.term.coeffs[x];
        r.term.coeffs[d] = -sum;
        lifted.push_back(std::move(r));
    }
    Inequality nonneg;
    nonneg.term = -LinearTerm::variable(dim_ + 1, d);
    nonneg.rel = Rel::Le;
    lifted.push_back(std::move(nonneg));

    RawSystem wide(dim_ + 1, std::move(lifted));
    const VarIndex dv[] = {d};
    wide.eliminate(dv);
    if (wide.empty_) {
        empty_ = true;
        cs_.clear();
        return *this;
    }
    cs_.clear();
    for (auto c : wide.cs_) {
        c.term.coeffs.resize(dim_);
        cs_.push_back(std::move(c));
    }
    simplify();
    return *this;
}

bool RawSystem::is_satisfiable() const {
    if (empty_) return false;
    return solve(dim_, cs_).sat;
}

Polyhedron RawSystem::canonical() const {
    if (empty_) return Polyhedron::empty(dim_);
    return Polyhedron::from_constraints(dim_, cs_);
}

// ============================================================================
// Set relations
// ============================================================================

bool includes(const Polyhedron& outer, const Polyhedron& inner) {
    if (outer.dim() != inner.dim()) throw std::invalid_argument("includes: dimension mismatch");
    if (inner.is_empty()) return true;
    if (outer.is_empty()) return false;
    if (auto w = inner.sample(); w && !outer.contains(*w)) return false;
    EntailmentOracle oracle(inner);
    for (const auto& c : outer.constraints())
        if (!oracle.entails(c)) return false;
    return true;
}

bool equals(const Polyhedron& a, const Polyhedron& b) {
    if (a.dim() != b.dim()) return false;
    if (a.is_empty() || b.is_empty()) return a.is_empty() == b.is_empty();
    if (a.constraints() == b.constraints()) return true;
    return includes(a, b) && includes(b, a);
}

namespace {

// Equalities are split into their two non-strict halves.
std::vector<Inequality> halves(const Polyhedron& p) {
    std::vector<Inequality> out;
    for (const auto& c : p.constraints()) {
        if (c.rel != Rel::Eq) {
            out.push_back(c);
            continue;
        }
        Inequality a = c, b;
        a.rel = Rel::Le;
        b.term = -c.term;
        b.rel = Rel::Le;
        out.push_back(std::move(a));
        out.push_back(std::move(b));
    }
    return out;
}

}  // namespace

std::optional<Polyhedron> try_convex_merge(const Polyhedron& a, const Polyhedron& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("try_convex_merge: dimension mismatch");
    if (a.is_empty()) return b;
    if (b.is_empty()) return a;
    if (includes(a, b)) return a;
    if (includes(b, a)) return b;

    // Envelope: constraints of either side that hold on the other side.
    std::vector<Inequality> env, a_rest;
    EntailmentOracle in_a(a), in_b(b);
    for (auto& c : halves(a)) {
        if (in_b.entails(c)) env.push_back(std::move(c));
        else a_rest.push_back(std::move(c));
    }
    for (auto& c : halves(b))
        if (in_a.entails(c)) env.push_back(std::move(c));

    Polyhedron hull = Polyhedron::from_constraints(a.dim(), std::move(env));
    // hull ⊆ a ∪ b  iff  every piece hull ∧ ¬c (c a constraint of a) lies in b.
    for (const auto& c : a_rest) {
        Polyhedron piece = hull.conjoin(negate(c));
        if (!includes(b, piece)) return std::nullopt;
    }
    return hull;
}

bool covered_by(const Polyhedron& p, std::span<const Polyhedron> cover) {
    if (p.is_empty()) return true;
    if (cover.empty()) return false;
    const Polyhedron& q = cover.front();
    auto rest = cover.subspan(1);
    if (includes(q, p)) return true;
    Polyhedron meet = p.conjoin(q);
    if (meet.is_empty()) return covered_by(p, rest);
    // p \ q = union over constraints c of q of (p ∧ c_1 ∧ ... ∧ c_{i-1} ∧ ¬c_i).
    Polyhedron prefix = p;
    for (const auto& c : halves(q)) {
        Polyhedron piece = prefix.conjoin(negate(c));
        if (!covered_by(piece, rest)) return false;
        prefix = prefix.conjoin(c);
        if (prefix.is_empty()) break;
    }
    return true;
}

}  // namespace ptsynth
