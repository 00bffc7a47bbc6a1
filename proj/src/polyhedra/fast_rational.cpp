#include "ptsynth/detail/fast_rational.hpp"

#include <limits>
#include <numeric>

namespace ptsynth::detail {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr i128 kMax = std::numeric_limits<std::int64_t>::max();
constexpr i128 kMin = -kMax;  // keeps negation safe

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

mpz_class to_mpz(i128 v) {
    bool neg = v < 0;
    u128 u = abs128(v);
    mpz_class hi(static_cast<unsigned long>(u >> 64));
    mpz_class out = (hi << 64) + mpz_class(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
    return neg ? mpz_class(-out) : out;
}

}  // namespace

void FastRational::assign(const mpq_class& q) {
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p() && q.get_num() > std::numeric_limits<long>::min()) {
        n_ = q.get_num().get_si();
        d_ = q.get_den().get_si();
        big_.reset();
    } else {
        big_ = std::make_unique<mpq_class>(q);
        n_ = 0;
        d_ = 1;
    }
}

mpq_class FastRational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(n_)), mpz_class(static_cast<long>(d_)));
}

int FastRational::sign() const {
    if (big_) return sgn(*big_);
    return (n_ > 0) - (n_ < 0);
}

FastRational FastRational::from_wide(i128 n, i128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    u128 g = gcd128(abs128(n), static_cast<u128>(d));
    if (g > 1) {
        n /= static_cast<i128>(g);
        d /= static_cast<i128>(g);
    }
    FastRational r;
    if (n >= kMin && n <= kMax && d <= kMax) {
        r.n_ = static_cast<std::int64_t>(n);
        r.d_ = static_cast<std::int64_t>(d);
    } else {
        r.assign(mpq_class(to_mpz(n), to_mpz(d)));
    }
    return r;
}

FastRational FastRational::operator-() const {
    if (big_) return FastRational(mpq_class(-*big_));
    FastRational r;
    r.n_ = -n_;
    r.d_ = d_;
    return r;
}

FastRational operator+(const FastRational& a, const FastRational& b) {
    if (a.big_ || b.big_) return FastRational(mpq_class(a.to_mpq() + b.to_mpq()));
    if (a.d_ == b.d_) return FastRational::from_wide(static_cast<i128>(a.n_) + b.n_, a.d_);
    return FastRational::from_wide(static_cast<i128>(a.n_) * b.d_ + static_cast<i128>(b.n_) * a.d_,
                                   static_cast<i128>(a.d_) * b.d_);
}

FastRational operator-(const FastRational& a, const FastRational& b) { return a + (-b); }

FastRational operator*(const FastRational& a, const FastRational& b) {
    if (a.big_ || b.big_) return FastRational(mpq_class(a.to_mpq() * b.to_mpq()));
    if (a.n_ == 0 || b.n_ == 0) return FastRational();
    return FastRational::from_wide(static_cast<i128>(a.n_) * b.n_, static_cast<i128>(a.d_) * b.d_);
}

FastRational operator/(const FastRational& a, const FastRational& b) {
    if (a.big_ || b.big_) return FastRational(mpq_class(a.to_mpq() / b.to_mpq()));
    return FastRational::from_wide(static_cast<i128>(a.n_) * b.d_, static_cast<i128>(a.d_) * b.n_);
}

int compare(const FastRational& a, const FastRational& b) {
    if (a.big_ || b.big_) return cmp(a.to_mpq(), b.to_mpq());
    i128 l = static_cast<i128>(a.n_) * b.d_;
    i128 r = static_cast<i128>(b.n_) * a.d_;
    return (l > r) - (l < r);
}

}  // namespace ptsynth::detail
