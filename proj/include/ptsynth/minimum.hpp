// ============================================================================
// ptsynth/minimum.hpp: extended lower bounds (c, =), (c, >) and infinity
// ============================================================================

#ifndef PTSYNTH_MINIMUM_HPP
#define PTSYNTH_MINIMUM_HPP

#include "ptsynth/linear.hpp"

#include <compare>
#include <string>

namespace ptsynth {

enum class Strictness : std::uint8_t {
    Attained,  // "=": the infimum belongs to the set
    Infimum,   // ">": approached but never reached
};

/// A minimum over a set of nonnegative rationals: either a finite infimum
/// tagged with whether it is attained, or infinity for the empty set.
///
/// Ordering: (c,=) < (c,>) < (c',.) for c < c', and every finite value is
/// below infinity.
class Minimum {
public:
    Minimum() = default;  // infinity

    static Minimum infinity() { return Minimum(); }
    static Minimum attained(Rational value) { return Minimum(std::move(value), Strictness::Attained); }
    static Minimum infimum(Rational value) { return Minimum(std::move(value), Strictness::Infimum); }

    bool is_infinite() const { return infinite_; }
    bool is_finite() const { return !infinite_; }
    const Rational& value() const;
    Strictness strictness() const;

    std::strong_ordering operator<=>(const Minimum& other) const;
    bool operator==(const Minimum& other) const { return (*this <=> other) == 0; }

    /// "(2, =)", "(1/2, >)" or "infinity".
    std::string to_string() const;

private:
    Minimum(Rational v, Strictness s) : infinite_(false), value_(std::move(v)), strictness_(s) {}

    bool infinite_ = true;
    Rational value_;
    Strictness strictness_ = Strictness::Attained;
};

/// Three-way comparison returning -1, 0 or 1.
int compare_minimum(const Minimum& a, const Minimum& b);

}  // namespace ptsynth

#endif  // PTSYNTH_MINIMUM_HPP
