// ============================================================================
// simplex.cpp: exact incremental general-form simplex over Q(δ)
// ============================================================================

#include "ptsynth/simplex.hpp"

#include <stdexcept>

namespace ptsynth {

bool DeltaSimplex::less(const DQ& a, const DQ& b) {
    int c = compare(a.real, b.real);
    return c < 0 || (c == 0 && a.delta < b.delta);
}
DeltaSimplex::DQ DeltaSimplex::add(const DQ& a, const DQ& b) { return {a.real + b.real, a.delta + b.delta}; }
DeltaSimplex::DQ DeltaSimplex::sub(const DQ& a, const DQ& b) { return {a.real - b.real, a.delta - b.delta}; }
DeltaSimplex::DQ DeltaSimplex::scale(const DQ& a, const Q& k) { return {a.real * k, a.delta * k}; }

DeltaSimplex::DeltaSimplex(std::size_t num_vars)
    : num_vars_(num_vars), lower_(num_vars), upper_(num_vars), value_(num_vars), row_of_(num_vars, -1) {}

std::size_t DeltaSimplex::add_row(const LinearTerm& term) {
    if (term.dim() != num_vars_) throw std::invalid_argument("DeltaSimplex: dimension mismatch");
    const std::size_t slack = total();
    lower_.emplace_back();
    upper_.emplace_back();
    value_.emplace_back();
    row_of_.push_back(static_cast<long>(rows_.size()));
    basic_.push_back(slack);
    for (auto& row : rows_) row.resize(total());

    // Express the term over the current nonbasic variables.
    Row row(total());
    for (std::size_t i = 0; i < num_vars_; ++i) {
        if (sgn(term.coeffs[i]) == 0) continue;
        Q c(term.coeffs[i]);
        if (row_of_[i] < 0) {
            row[i] += c;
        } else {
            const Row& def = rows_[static_cast<std::size_t>(row_of_[i])];
            for (std::size_t k = 0; k < def.size(); ++k)
                if (!def[k].is_zero()) row[k] += c * def[k];
        }
    }
    DQ val;
    for (std::size_t k = 0; k < row.size(); ++k)
        if (!row[k].is_zero()) val = add(val, scale(value_[k], row[k]));
    value_[slack] = std::move(val);
    rows_.push_back(std::move(row));
    return slack;
}

void DeltaSimplex::save(std::size_t v) {
    if (!marks_.empty()) trail_.push_back(Saved{v, lower_[v], upper_[v]});
}

void DeltaSimplex::set_lower(std::size_t v, DQ b) {
    if (lower_[v] && !less(*lower_[v], b)) return;
    save(v);
    lower_[v] = b;
    if (row_of_[v] < 0 && less(value_[v], b)) update_nonbasic(v, sub(b, value_[v]));
}

void DeltaSimplex::set_upper(std::size_t v, DQ b) {
    if (upper_[v] && !less(b, *upper_[v])) return;
    save(v);
    upper_[v] = b;
    if (row_of_[v] < 0 && less(b, value_[v])) update_nonbasic(v, sub(b, value_[v]));
}

void DeltaSimplex::relax(std::size_t v) {
    save(v);
    lower_[v].reset();
    upper_[v].reset();
}

void DeltaSimplex::assert_constraint(std::size_t slack, const Inequality& ineq, bool negated) {
    // slack = linear part, so  term REL 0  is  slack REL -constant.
    Q bound(Rational(-ineq.term.constant));
    switch (ineq.rel) {
        case Rel::Eq:
            if (negated) throw std::invalid_argument("DeltaSimplex: cannot negate an equality");
            set_lower(slack, DQ{bound, Q()});
            set_upper(slack, DQ{bound, Q()});
            break;
        case Rel::Le:
            if (negated) set_lower(slack, DQ{bound, Q(1)});
            else set_upper(slack, DQ{bound, Q()});
            break;
        case Rel::Lt:
            if (negated) set_lower(slack, DQ{bound, Q()});
            else set_upper(slack, DQ{bound, Q(-1)});
            break;
    }
}

std::size_t DeltaSimplex::add(const Inequality& ineq) {
    if (ineq.dim() != num_vars_) throw std::invalid_argument("DeltaSimplex: dimension mismatch");
    if (ineq.term.is_constant()) {
        int s = sgn(ineq.term.constant);
        bool ok = ineq.rel == Rel::Lt ? s < 0 : ineq.rel == Rel::Le ? s <= 0 : s == 0;
        if (!ok) trivially_false_ = true;
    }
    std::size_t slack = add_row(ineq.term);
    assert_constraint(slack, ineq);
    return slack;
}

void DeltaSimplex::push() {
    marks_.push_back(trail_.size());
    false_marks_.push_back(trivially_false_);
}

void DeltaSimplex::pop() {
    if (marks_.empty()) throw std::logic_error("DeltaSimplex::pop without push");
    std::size_t mark = marks_.back();
    marks_.pop_back();
    while (trail_.size() > mark) {
        Saved& s = trail_.back();
        lower_[s.var] = std::move(s.lower);
        upper_[s.var] = std::move(s.upper);
        trail_.pop_back();
    }
    trivially_false_ = false_marks_.back();
    false_marks_.pop_back();
}

bool DeltaSimplex::below_upper(std::size_t v) const { return !upper_[v] || less(value_[v], *upper_[v]); }

bool DeltaSimplex::above_lower(std::size_t v) const { return !lower_[v] || less(*lower_[v], value_[v]); }

void DeltaSimplex::pivot(std::size_t r, std::size_t entering) {
    const std::size_t n = total();
    std::size_t leaving = basic_[r];
    Row& row = rows_[r];
    // leaving = a*entering + rest  =>  entering = (leaving - rest) / a
    Q inv = Q(1) / row[entering];
    for (std::size_t k = 0; k < n; ++k) {
        if (k == entering || row[k].is_zero()) continue;
        row[k] = -(row[k] * inv);
    }
    row[entering] = Q();
    row[leaving] = inv;

    for (std::size_t q = 0; q < rows_.size(); ++q) {
        if (q == r) continue;
        Row& other = rows_[q];
        if (other[entering].is_zero()) continue;
        Q f = other[entering];
        other[entering] = Q();
        for (std::size_t k = 0; k < n; ++k)
            if (!row[k].is_zero()) other[k] += f * row[k];
    }
    basic_[r] = entering;
    row_of_[entering] = static_cast<long>(r);
    row_of_[leaving] = -1;
}

void DeltaSimplex::update_nonbasic(std::size_t j, const DQ& shift) {
    value_[j] = add(value_[j], shift);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Row& row = rows_[r];
        if (!row[j].is_zero()) value_[basic_[r]] = add(value_[basic_[r]], scale(shift, row[j]));
    }
}

void DeltaSimplex::pivot_and_update(std::size_t r, std::size_t entering, const DQ& target) {
    std::size_t leaving = basic_[r];
    DQ diff = sub(target, value_[leaving]);
    Q a = rows_[r][entering];
    DQ theta{diff.real / a, diff.delta / a};
    update_nonbasic(entering, theta);
    value_[leaving] = target;
    pivot(r, entering);
}

bool DeltaSimplex::check() {
    if (trivially_false_) return false;
    const std::size_t n = total();
    for (std::size_t v = 0; v < n; ++v)
        if (lower_[v] && upper_[v] && less(*upper_[v], *lower_[v])) return false;

    for (;;) {
        // Bland: smallest violating basic variable.
        long pick_row = -1;
        std::size_t pick_var = n;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            std::size_t b = basic_[r];
            bool bad = (lower_[b] && less(value_[b], *lower_[b])) || (upper_[b] && less(*upper_[b], value_[b]));
            if (bad && b < pick_var) {
                pick_var = b;
                pick_row = static_cast<long>(r);
            }
        }
        if (pick_row < 0) return true;
        std::size_t r = static_cast<std::size_t>(pick_row);
        const Row& row = rows_[r];
        bool increase = lower_[pick_var] && less(value_[pick_var], *lower_[pick_var]);

        std::size_t entering = n;
        for (std::size_t j = 0; j < n; ++j) {
            if (row_of_[j] >= 0 || row[j].is_zero()) continue;
            bool pos = row[j].sign() > 0;
            bool ok = increase ? (pos ? below_upper(j) : above_lower(j)) : (pos ? above_lower(j) : below_upper(j));
            if (ok) {
                entering = j;
                break;
            }
        }
        if (entering == n) return false;
        pivot_and_update(r, entering, increase ? *lower_[pick_var] : *upper_[pick_var]);
    }
}

std::optional<DeltaRational> DeltaSimplex::minimize(const LinearTerm& objective) {
    if (!check()) throw std::logic_error("DeltaSimplex::minimize on infeasible system");
    const std::size_t n = total();
    std::vector<Q> obj(num_vars_);
    for (std::size_t v = 0; v < num_vars_; ++v) obj[v] = Q(objective.coeffs[v]);

    for (;;) {
        // Objective expressed over the current nonbasic variables.
        Row z(n);
        for (std::size_t v = 0; v < num_vars_; ++v) {
            if (obj[v].is_zero()) continue;
            if (row_of_[v] < 0) {
                z[v] += obj[v];
            } else {
                const Row& row = rows_[static_cast<std::size_t>(row_of_[v])];
                for (std::size_t k = 0; k < n; ++k)
                    if (!row[k].is_zero()) z[k] += obj[v] * row[k];
            }
        }

        std::size_t entering = n;
        int dir = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (row_of_[j] >= 0 || z[j].is_zero()) continue;
            if (z[j].sign() < 0 && below_upper(j)) {
                entering = j;
                dir = 1;
                break;
            }
            if (z[j].sign() > 0 && above_lower(j)) {
                entering = j;
                dir = -1;
                break;
            }
        }
        if (entering == n) {
            DQ acc{Q(Rational(objective.constant)), Q()};
            for (std::size_t v = 0; v < num_vars_; ++v)
                if (!obj[v].is_zero()) acc = add(acc, scale(value_[v], obj[v]));
            return DeltaRational{acc.real.to_mpq(), acc.delta.to_mpq()};
        }

        // Ratio test; ties broken by smallest variable index.
        std::optional<DQ> best;
        std::size_t best_var = n;
        long best_row = -1;
        auto consider = [&](const DQ& step, std::size_t var, long row) {
            if (!best || less(step, *best) || (!less(*best, step) && var < best_var)) {
                best = step;
                best_var = var;
                best_row = row;
            }
        };
        if (dir > 0 && upper_[entering]) consider(sub(*upper_[entering], value_[entering]), entering, -1);
        if (dir < 0 && lower_[entering]) consider(sub(value_[entering], *lower_[entering]), entering, -1);
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Q& a = rows_[r][entering];
            if (a.is_zero()) continue;
            std::size_t b = basic_[r];
            int rate = a.sign() * dir;
            Q mag = a.sign() < 0 ? -a : a;
            if (rate > 0 && upper_[b]) {
                DQ gap = sub(*upper_[b], value_[b]);
                consider(DQ{gap.real / mag, gap.delta / mag}, b, static_cast<long>(r));
            }
            if (rate < 0 && lower_[b]) {
                DQ gap = sub(value_[b], *lower_[b]);
                consider(DQ{gap.real / mag, gap.delta / mag}, b, static_cast<long>(r));
            }
        }
        if (!best) return std::nullopt;

        if (best_row < 0) {
            update_nonbasic(entering, dir > 0 ? *best : DQ{-best->real, -best->delta});
        } else {
            std::size_t r = static_cast<std::size_t>(best_row);
            std::size_t b = basic_[r];
            int rate = rows_[r][entering].sign() * dir;
            pivot_and_update(r, entering, rate > 0 ? *upper_[b] : *lower_[b]);
        }
    }
}

std::vector<Rational> DeltaSimplex::witness() const {
    // Largest δ (capped at 1) keeping every bound satisfied.
    Q delta(1);
    auto limit = [&](const DQ& lo, const DQ& hi) {
        // need lo.real + lo.delta*δ <= hi.real + hi.delta*δ
        Q dd = lo.delta - hi.delta;
        if (dd.sign() > 0) {
            Q cap = (hi.real - lo.real) / dd;
            if (cap < delta) delta = cap;
        }
    };
    for (std::size_t v = 0; v < total(); ++v) {
        if (lower_[v]) limit(*lower_[v], value_[v]);
        if (upper_[v]) limit(value_[v], *upper_[v]);
    }
    std::vector<Rational> point(num_vars_);
    for (std::size_t v = 0; v < num_vars_; ++v) point[v] = (value_[v].real + value_[v].delta * delta).to_mpq();
    return point;
}

}  // namespace ptsynth
