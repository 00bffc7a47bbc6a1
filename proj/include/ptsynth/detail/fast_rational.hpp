// ============================================================================
// ptsynth/detail/fast_rational.hpp: exact rational with an int64 fast path
// ============================================================================
//
// Values whose reduced numerator and denominator fit in int64 are kept
// inline; anything larger is promoted to a heap-allocated mpq_class.  All
// results are exact.
//
// ============================================================================

#ifndef PTSYNTH_DETAIL_FAST_RATIONAL_HPP
#define PTSYNTH_DETAIL_FAST_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <memory>

namespace ptsynth::detail {

class FastRational {
public:
    FastRational() = default;
    FastRational(std::int64_t n) : n_(n) {}  // NOLINT(google-explicit-constructor)
    explicit FastRational(const mpq_class& q) { assign(q); }

    FastRational(const FastRational& o) : n_(o.n_), d_(o.d_) {
        if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
    }
    FastRational(FastRational&&) noexcept = default;
    FastRational& operator=(const FastRational& o) {
        if (this != &o) {
            n_ = o.n_;
            d_ = o.d_;
            big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    FastRational& operator=(FastRational&&) noexcept = default;

    mpq_class to_mpq() const;
    int sign() const;
    bool is_zero() const { return !big_ && n_ == 0; }

    friend FastRational operator+(const FastRational& a, const FastRational& b);
    friend FastRational operator-(const FastRational& a, const FastRational& b);
    friend FastRational operator*(const FastRational& a, const FastRational& b);
    friend FastRational operator/(const FastRational& a, const FastRational& b);
    FastRational operator-() const;
    FastRational& operator+=(const FastRational& o) { return *this = *this + o; }
    FastRational& operator-=(const FastRational& o) { return *this = *this - o; }

    friend int compare(const FastRational& a, const FastRational& b);
    friend bool operator==(const FastRational& a, const FastRational& b) { return compare(a, b) == 0; }
    friend bool operator<(const FastRational& a, const FastRational& b) { return compare(a, b) < 0; }

private:
    std::int64_t n_ = 0;
    std::int64_t d_ = 1;
    std::unique_ptr<mpq_class> big_;

    void assign(const mpq_class& q);
    static FastRational from_wide(__int128 n, __int128 d);
};

}  // namespace ptsynth::detail

#endif  // PTSYNTH_DETAIL_FAST_RATIONAL_HPP
